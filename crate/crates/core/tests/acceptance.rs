//! Acceptance run. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any fails.

use std::collections::HashSet;
use std::panic::{self, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::Instant;

use idomlab::bounds::{self, BoundId, BoundVerdict};
use idomlab::families::{self, product_witness, FamilyKind, FamilySpec, ProductFamily};
use idomlab::generate;
use idomlab::invariants::{independent_domination_number, maximal_independent_sets};
use idomlab::io::{graph6, parse_pattern, print_pattern, read_bundle, verify_certificate, write_bundle, Verdict};
use idomlab::labelling::{check_legal, formula_value, minimize_weight, pattern_labelling, table_pattern, PathOrCycle};
use idomlab::reproduce;
use idomlab::{direct_product, Graph, SolveOptions, VertexSet, VERIFY_CAP};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const PATHS: [usize; 10] = [3, 4, 4, 5, 6, 6, 7, 8, 8, 9];
const CYCLES: [usize; 10] = [3, 4, 5, 4, 5, 6, 6, 7, 8, 8];

// ---- oracle: adjacency as u128 rows, orders up to 128 ----

type Adj = Vec<u128>;

fn adj(g: &Graph) -> Adj {
    let n = g.order();
    assert!(n <= 128);
    (0..n)
        .map(|v| (0..n).filter(|&u| g.has_edge(u, v)).fold(0u128, |m, u| m | 1 << u))
        .collect()
}

fn full(n: usize) -> u128 {
    if n == 128 {
        u128::MAX
    } else {
        (1u128 << n) - 1
    }
}

/// Tensor product built from the factor adjacency, vertex (g, h) at g·n(H) + h.
fn tensor(a: &Adj, b: &Adj) -> Adj {
    let (na, nb) = (a.len(), b.len());
    assert!(na * nb <= 128);
    let mut out = vec![0u128; na * nb];
    for g in 0..na {
        for h in 0..nb {
            for g2 in (0..na).filter(|&x| a[g] >> x & 1 == 1) {
                for h2 in (0..nb).filter(|&y| b[h] >> y & 1 == 1) {
                    out[g * nb + h] |= 1 << (g2 * nb + h2);
                }
            }
        }
    }
    out
}

/// Minimum maximal independent set: the lowest undominated vertex must be
/// dominated by some still-free vertex of its closed neighbourhood.
fn oracle_i(a: &Adj) -> usize {
    fn go(a: &Adj, all: u128, dominated: u128, count: usize, best: &mut usize) {
        if dominated == all {
            *best = (*best).min(count);
            return;
        }
        if count + 1 >= *best {
            return;
        }
        let v = (!dominated & all).trailing_zeros() as usize;
        let mut cand = (a[v] | 1 << v) & !dominated;
        while cand != 0 {
            let u = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            go(a, all, dominated | a[u] | 1 << u, count + 1, best);
        }
    }
    let mut best = a.len() + 1;
    go(a, full(a.len()), 0, 0, &mut best);
    best
}

/// Every maximal independent set, as masks.
fn oracle_mis(a: &Adj) -> HashSet<u128> {
    fn go(a: &Adj, all: u128, dominated: u128, set: u128, out: &mut HashSet<u128>) {
        if dominated == all {
            out.insert(set);
            return;
        }
        let v = (!dominated & all).trailing_zeros() as usize;
        let mut cand = (a[v] | 1 << v) & !dominated;
        while cand != 0 {
            let u = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            go(a, all, dominated | a[u] | 1 << u, set | 1 << u, out);
        }
    }
    let mut out = HashSet::new();
    go(a, full(a.len()), 0, 0, &mut out);
    out
}

fn subset_min(a: &Adj, pred: impl Fn(u128) -> bool) -> Option<usize> {
    assert!(a.len() <= 16);
    (0..1u128 << a.len()).filter(|&s| pred(s)).map(|s| s.count_ones() as usize).min()
}

fn subset_max(a: &Adj, pred: impl Fn(u128) -> bool) -> usize {
    assert!(a.len() <= 16);
    (0..1u128 << a.len()).filter(|&s| pred(s)).map(|s| s.count_ones() as usize).max().unwrap()
}

fn members(s: u128) -> impl Iterator<Item = usize> {
    (0..128).filter(move |&v| s >> v & 1 == 1)
}

fn dominating(a: &Adj, s: u128) -> bool {
    (0..a.len()).all(|v| s >> v & 1 == 1 || a[v] & s != 0)
}

fn brute_gamma(a: &Adj) -> usize {
    subset_min(a, |s| dominating(a, s)).unwrap()
}

fn brute_gamma_t(a: &Adj) -> usize {
    subset_min(a, |s| (0..a.len()).all(|v| a[v] & s != 0)).unwrap()
}

fn brute_rho(a: &Adj) -> usize {
    subset_max(a, |s| {
        let m: Vec<usize> = members(s).collect();
        m.iter()
            .enumerate()
            .all(|(i, &u)| m[i + 1..].iter().all(|&v| (a[u] | 1 << u) & (a[v] | 1 << v) == 0))
    })
}

/// Maximal independence of a set of pairs in G×H, checked through the
/// factors so the product never has to be built.
fn is_mis_in_product(g: &Graph, h: &Graph, set: &[(usize, usize)]) -> bool {
    let nh = h.order();
    for (i, &(g1, h1)) in set.iter().enumerate() {
        for &(g2, h2) in &set[i + 1..] {
            if g.has_edge(g1, g2) && h.has_edge(h1, h2) {
                return false;
            }
        }
    }
    let mut covered = vec![false; g.order() * nh];
    for &(g1, h1) in set {
        covered[g1 * nh + h1] = true;
        for g2 in (0..g.order()).filter(|&x| g.has_edge(g1, x)) {
            for h2 in (0..nh).filter(|&y| h.has_edge(h1, y)) {
                covered[g2 * nh + h2] = true;
            }
        }
    }
    covered.into_iter().all(|c| c)
}

fn pairs(s: &VertexSet, nh: usize) -> Vec<(usize, usize)> {
    s.iter().map(|v| (v / nh, v % nh)).collect()
}

fn opts() -> SolveOptions {
    SolveOptions::default().with_cap(64)
}

fn family(kind: FamilyKind, p: &[usize]) -> Graph {
    FamilySpec::new(kind, p).build().unwrap().graph
}

fn path_or_cycle(f: PathOrCycle, m: usize) -> Graph {
    match f {
        PathOrCycle::Path => families::path(m),
        PathOrCycle::Cycle => families::cycle(m),
    }
}

// ---- criteria ----

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($arg:tt)+) => {
        if !$cond {
            return Err(format!($($arg)+));
        }
    };
}

fn table1() -> Outcome {
    let k3 = adj(&families::complete(3));
    for (family, expected) in [(PathOrCycle::Path, PATHS), (PathOrCycle::Cycle, CYCLES)] {
        for (m, &want) in (3..=12).zip(expected.iter()) {
            let g = path_or_cycle(family, m);
            let brute = oracle_i(&tensor(&adj(&g), &k3));
            let labelled = minimize_weight(&g, 3, &opts()).map_err(|e| e.to_string())?.weight();
            ensure!(brute == want && labelled == want, "{family} m={m}: product {brute}, labelling {labelled}, table {want}");
        }
    }
    Ok("20 entries, product search and labelling both match".into())
}

fn prop34() -> Outcome {
    let mut solves = 0;
    for family in [PathOrCycle::Path, PathOrCycle::Cycle] {
        for n in 2..=4 {
            let kn = adj(&families::complete(n));
            for m in 3..=12 {
                let exact = oracle_i(&tensor(&adj(&path_or_cycle(family, m)), &kn));
                let f = formula_value(family, m, n).map_err(|e| e.to_string())?;
                ensure!(exact == f, "{family} m={m} n={n}: exact {exact}, formula {f}");
                solves += 1;
            }
            for m in (3..=40).filter(|_| n >= 3) {
                let g = path_or_cycle(family, m);
                let l = pattern_labelling(family, m, n).map_err(|e| e.to_string())?;
                let f = formula_value(family, m, n).unwrap();
                ensure!(l.weight() == f, "{family} m={m} n={n}: pattern weight {}", l.weight());
                ensure!(check_legal(&g, &l).unwrap().legal(), "{family} m={m} n={n}: pattern not legal");
                // The encoded set is maximal independent in the product.
                let set = idomlab::labelling::to_independent_set(&g, &l).unwrap();
                ensure!(
                    is_mis_in_product(&g, &families::complete(n), &pairs(&set, n)),
                    "{family} m={m} n={n}: encoded set not maximal independent"
                );
            }
        }
    }
    Ok(format!("{solves} exact solves, 152 patterns legal for n = 3, 4"))
}

fn thm32() -> Outcome {
    let k2 = adj(&families::complete(2));
    let mut rng = ChaCha8Rng::seed_from_u64(32);
    for trial in 0..500 {
        let n = rng.gen_range(2..=10);
        let p = rng.gen_range(0.1..0.7);
        let g = generate::isolate_free(n, p, &mut rng);
        let a = adj(&g);
        let (gt, mid, ig) = (brute_gamma_t(&a), oracle_i(&tensor(&a, &k2)), oracle_i(&a));
        ensure!(gt <= mid && mid <= (2 * ig).min(n), "trial {trial}: {gt} <= {mid} <= min(2*{ig}, {n}) fails");
        let [lo, hi] = bounds::k2_sandwich(&g, &opts()).map_err(|e| e.to_string())?;
        ensure!(lo.lhs == Some(mid) && lo.rhs == Some(gt) && hi.rhs == Some((2 * ig).min(n)), "trial {trial}: report disagrees");
    }
    let star = adj(&families::complete_bipartite(1, 4));
    let (gt, mid) = (brute_gamma_t(&star), oracle_i(&tensor(&star, &k2)));
    ensure!(gt == mid, "star: {gt} != {mid}");
    let k33 = adj(&families::complete_bipartite(3, 3));
    let (mid, ig) = (oracle_i(&tensor(&k33, &k2)), oracle_i(&k33));
    ensure!(mid == (2 * ig).min(6) && mid == 6, "K3,3: {mid}");
    Ok("500 graphs hold; K1,4 meets the lower end at 2, K3,3 the upper at 6".into())
}

fn random_pair(id: BoundId, rng: &mut ChaCha8Rng) -> (Graph, Graph) {
    loop {
        let a = rng.gen_range(2..=9);
        let b = rng.gen_range(2..=(36 / a).min(9));
        let mut one = |n: usize| match id {
            BoundId::ClawFree => {
                // Line graphs of small connected graphs, trimmed to order n.
                let base = generate::connected(rng.gen_range(3..=7), rng.gen_range(0.0..0.5), rng);
                let l = generate::line_graph(&base);
                (l.order() == n).then_some(l)
            }
            BoundId::Bipartite => {
                let left = rng.gen_range(1..n);
                Some(generate::connected_bipartite(left, n - left, rng.gen_range(0.0..0.6), rng))
            }
            BoundId::DegreeRatio => Some(generate::connected(n, rng.gen_range(0.0..0.6), rng)),
            _ => Some(generate::isolate_free(n, rng.gen_range(0.1..0.7), rng)),
        };
        if let (Some(g), Some(h)) = (one(a), one(b)) {
            return (g, h);
        }
    }
}

fn bounds4() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let ids = [BoundId::PackingTotal, BoundId::ClawFree, BoundId::DegreeRatio, BoundId::Bipartite];
    for id in ids {
        for trial in 0..500 {
            let (g, h) = random_pair(id, &mut rng);
            let (ag, ah) = (adj(&g), adj(&h));
            let exact = oracle_i(&tensor(&ag, &ah));
            let (ng, nh) = (g.order(), h.order());
            let rhs = match id {
                BoundId::PackingTotal => (brute_rho(&ag) * brute_gamma_t(&ah)).max(brute_rho(&ah) * brute_gamma_t(&ag)),
                BoundId::ClawFree => oracle_i(&ag).max(oracle_i(&ah)),
                BoundId::DegreeRatio => {
                    let dg = ag.iter().map(|r| r.count_ones() as usize).max().unwrap();
                    let dh = ah.iter().map(|r| r.count_ones() as usize).max().unwrap();
                    (nh * brute_gamma(&ag)).div_ceil(dh + 1).max((ng * brute_gamma(&ah)).div_ceil(dg + 1))
                }
                BoundId::Bipartite => 2 * brute_gamma(&ag).max(brute_gamma(&ah)),
                _ => unreachable!(),
            };
            ensure!(exact >= rhs, "{id} trial {trial}: i = {exact} < {rhs}");
            let r = match id {
                BoundId::PackingTotal => bounds::packing_total_bound(&g, &h, &opts()),
                BoundId::ClawFree => bounds::clawfree_bound(&g, &h, &opts()),
                BoundId::DegreeRatio => bounds::degree_ratio_bound(&g, &h, &opts()),
                _ => bounds::bipartite_bound(&g, &h, &opts()),
            }
            .map_err(|e| e.to_string())?;
            ensure!(
                r.applicable && r.lhs == Some(exact) && r.rhs == Some(rhs) && r.verdict == BoundVerdict::Holds,
                "{id} trial {trial}: report {r:?}, expected lhs {exact} rhs {rhs}"
            );
        }
    }
    Ok("500 applicable pairs for each of the four bounds".into())
}

fn conjecture() -> Outcome {
    let x3 = family(FamilyKind::X, &[3]);
    let h3 = family(FamilyKind::Cocktail, &[3]);
    let (ix, ih) = (oracle_i(&adj(&x3)), oracle_i(&adj(&h3)));
    ensure!(ix == 5 && ih == 2, "i(X3) = {ix}, i(H3) = {ih}");
    let (_, w) = product_witness(ProductFamily::XCocktail { m: 3, r: 3 }).map_err(|e| e.to_string())?;
    ensure!(w.len() == 8 && is_mis_in_product(&x3, &h3, &pairs(&w, 6)), "X3 x H3 witness rejected");
    ensure!(w.len() < ix * ih, "8 !< 10");
    let x7 = family(FamilyKind::X, &[7]);
    let ix7 = oracle_i(&adj(&x7));
    let (_, w7) = product_witness(ProductFamily::XCocktail { m: 7, r: 3 }).map_err(|e| e.to_string())?;
    ensure!(is_mis_in_product(&x7, &h3, &pairs(&w7, 6)), "X7 x H3 witness rejected");
    ensure!(ix7 == 9 && w7.len() == 8, "i(X7) = {ix7}, witness {}", w7.len());
    Ok(format!("8 < {} = i(X3)i(H3); X7 x H3 has a maximal independent set of size 8 < 9 = i(X7)", ix * ih))
}

fn thm12() -> Outcome {
    for n in [3, 4] {
        let (g, h) = (family(FamilyKind::Gn, &[n]), family(FamilyKind::Hn, &[n]));
        let (ig, ih) = (oracle_i(&adj(&g)), oracle_i(&adj(&h)));
        ensure!(ig == n + 2 && ih == n + 2, "n={n}: i(G) = {ig}, i(H) = {ih}");
    }
    let wide = SolveOptions::default().with_cap(VERIFY_CAP);
    let mut detail = String::new();
    for n in [3, 11] {
        let (g, h) = (family(FamilyKind::Gn, &[n]), family(FamilyKind::Hn, &[n]));
        let (p, d) = product_witness(ProductFamily::GnHn { n }).map_err(|e| e.to_string())?;
        ensure!(p.graph().order() == g.order() * h.order(), "n={n}: product order");
        ensure!(d.len() == 12 && is_mis_in_product(&g, &h, &pairs(&d, h.order())), "n={n}: witness D rejected");
        if n == 11 {
            let (ig, ih) = (oracle_i(&adj(&g)), oracle_i(&adj(&h)));
            let lib = independent_domination_number(&g, &wide).map_err(|e| e.to_string())?.value;
            ensure!(lib == ig, "n=11: solver {lib}, oracle {ig}");
            ensure!(ig.min(ih) == 13 && d.len() < 13, "n=11: min = {}", ig.min(ih));
            detail = format!("i(G11 x H11) <= 12 < 13 = min{{i(G11), i(H11)}} on {} vertices", p.graph().order());
        }
    }
    Ok(detail)
}

fn oracle_equivalence() -> Outcome {
    let graphs = generate::connected_graphs_up_to(6);
    let counts: Vec<usize> = (1..=6).map(|k| graphs.iter().filter(|g| g.order() == k).count()).collect();
    ensure!(counts == [1, 1, 2, 6, 21, 112], "connected graph counts {counts:?}");
    for g in &graphs {
        for n in [2, 3] {
            let w = minimize_weight(g, n, &opts()).map_err(|e| e.to_string())?.weight();
            let i = oracle_i(&tensor(&adj(g), &adj(&families::complete(n))));
            ensure!(w == i, "{}: n={n} weight {w}, i {i}", graph6::encode(g));
        }
    }
    Ok(format!("{} connected graphs (112 of order 6), n = 2, 3", graphs.len()))
}

fn layers() -> Outcome {
    let mut sets = 0;
    for g in generate::connected_graphs_up_to(5) {
        for n in 2..=4 {
            let mis = oracle_mis(&tensor(&adj(&g), &adj(&families::complete(n))));
            let p = direct_product(&g, &families::complete(n)).unwrap();
            let lib = maximal_independent_sets(p.graph(), &opts()).map_err(|e| e.to_string())?;
            ensure!(lib.len() == mis.len(), "{} n={n}: {} vs {} sets", graph6::encode(&g), lib.len(), mis.len());
            for s in &mis {
                for v in 0..g.order() {
                    let k = (s >> (v * n) & full(n)).count_ones() as usize;
                    ensure!(k <= 1 || k == n, "{} n={n}: layer {v} meets {k}", graph6::encode(&g));
                }
            }
            sets += mis.len();
        }
    }
    Ok(format!("{sets} maximal independent sets over 30 graphs"))
}

fn round_trips() -> Outcome {
    let corpus = include_str!("data/graph6_corpus.txt");
    let mut codes = 0;
    for line in corpus.lines().filter(|l| !l.starts_with('#') && !l.trim().is_empty()) {
        let (spec, code) = line.split_once(' ').unwrap();
        let g = spec.parse::<FamilySpec>().unwrap().build().unwrap().graph;
        let back = graph6::decode(code).map_err(|e| e.to_string())?;
        ensure!(graph6::encode(&g) == code && graph6::encode(&back) == code, "{spec}");
        let edges = |x: &Graph| x.edges().collect::<Vec<_>>();
        ensure!(back.order() == g.order() && edges(&back) == edges(&g), "{spec}: decoded edges differ");
        codes += 1;
    }
    for family in [PathOrCycle::Path, PathOrCycle::Cycle] {
        for m in 3..=40 {
            let l = pattern_labelling(family, m, 3).unwrap();
            let text = print_pattern(&l, Some(family));
            ensure!(text == table_pattern(family, m).unwrap().to_string(), "{family} {m}: printed {text}");
            ensure!(parse_pattern(&text, m, 3).map_err(|e| e.to_string())? == l, "{family} {m}: parse");
        }
    }
    let wide = SolveOptions::default().with_cap(VERIFY_CAP);
    let mut certs = reproduce::thm12_bundle(11, &wide).map_err(|e| e.to_string())?;
    certs.extend(reproduce::conj_bundle(&wide).map_err(|e| e.to_string())?);
    let text = write_bundle(&certs);
    let back = read_bundle(&text).map_err(|e| e.to_string())?;
    ensure!(back == certs && write_bundle(&back) == text, "bundle changed on reread");
    for c in &back {
        let v = verify_certificate(c, &wide).map_err(|e| e.to_string())?.verdict;
        ensure!(v == c.verdict && v == Verdict::Verified, "{}: {v:?}", c.subject.graph);
    }
    Ok(format!("{codes} graph6 codes, 76 patterns, {} certificates", certs.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("table1", table1),
        ("formulas", prop34),
        ("k2 sandwich", thm32),
        ("product bounds", bounds4),
        ("conjecture refutation", conjecture),
        ("block-design counterexample", thm12),
        ("labelling equivalence", oracle_equivalence),
        ("layer intersections", layers),
        ("format round trips", round_trips),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (k, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = panic::catch_unwind(AssertUnwindSafe(f))
            .unwrap_or_else(|e| Err(e.downcast_ref::<String>().cloned().unwrap_or_else(|| "panicked".into())));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {} {name}: {detail} ({secs:.1}s)", k + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {} {name}: {why} ({secs:.1}s)", k + 1);
            }
        }
    }
    println!("{}/9 criteria pass", 9 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
