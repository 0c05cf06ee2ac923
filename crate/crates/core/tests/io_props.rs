mod common;

use std::collections::BTreeSet;

use common::graphs;
use idomlab::families::{product_witness, FamilyKind, FamilySpec, ProductFamily};
use idomlab::invariants::{self, greedy_maximal_independent_set};
use idomlab::bounds::BoundId;
use idomlab::io::{
    self, edgelist, graph6, parse_pattern, print_pattern, read_bundle, verify_certificate, write_bundle,
    write_certificate, Certificate, Claim, Pattern, Relation, Subject, Verdict,
};
use idomlab::labelling::{minimize_weight, pattern_labelling, table_pattern, Label, Labelling, PathOrCycle};
use idomlab::{Graph, Invariant, SolveOptions, VERIFY_CAP};
use petgraph::graph::UnGraph;
use petgraph::graph6::{from_graph6_representation, ToGraph6};
use proptest::prelude::*;

const CORPUS: &str = include_str!("data/graph6_corpus.txt");

fn corpus() -> Vec<(FamilySpec, &'static str)> {
    CORPUS
        .lines()
        .filter(|l| !l.starts_with('#') && !l.trim().is_empty())
        .map(|l| {
            let (spec, code) = l.split_once(' ').unwrap();
            (spec.parse().unwrap(), code)
        })
        .collect()
}

fn to_petgraph(g: &Graph) -> UnGraph<(), ()> {
    let mut pg = UnGraph::with_capacity(g.order(), g.edge_count());
    let nodes: Vec<_> = (0..g.order()).map(|_| pg.add_node(())).collect();
    for (u, v) in g.edges() {
        pg.add_edge(nodes[u], nodes[v], ());
    }
    pg
}

fn edge_set(edges: impl IntoIterator<Item = (usize, usize)>) -> BTreeSet<(usize, usize)> {
    edges.into_iter().map(|(u, v)| (u.min(v), u.max(v))).collect()
}

#[test]
fn pinned_graph6_corpus() {
    for (spec, code) in corpus() {
        let g = spec.build().unwrap().graph;
        assert_eq!(graph6::encode(&g), code, "{spec}");
        let back = graph6::decode(code).unwrap();
        assert_eq!(graph6::encode(&back), code);
        assert_eq!(edge_set(back.edges()), edge_set(g.edges()));
        assert_eq!(to_petgraph(&g).graph6_string(), code, "{spec} against petgraph");
        let (n, edges) = from_graph6_representation::<usize>(code.to_string());
        assert_eq!(n, g.order());
        assert_eq!(edge_set(edges), edge_set(g.edges()));
    }
}

#[test]
fn larger_orders_use_the_long_header() {
    for n in [62, 63, 100, 300] {
        let g = idomlab::families::cycle(n);
        let code = graph6::encode(&g);
        assert_eq!(code, to_petgraph(&g).graph6_string(), "C{n}");
        assert_eq!(code.starts_with('~'), n > 62);
        assert_eq!(graph6::decode(&code).unwrap(), g);
    }
}

proptest! {
    #[test]
    fn graph6_round_trips_and_matches_petgraph(g in graphs(1, 20)) {
        let code = graph6::encode(&g);
        prop_assert_eq!(&code, &to_petgraph(&g).graph6_string());
        prop_assert_eq!(graph6::decode(&code).unwrap(), g);
    }

    #[test]
    fn edge_list_round_trips(g in graphs(1, 20)) {
        prop_assert_eq!(edgelist::parse(&edgelist::write(&g)).unwrap(), g.clone());
        prop_assert_eq!(io::read_graph(&io::write_graph(&g, io::GraphFormat::Graph6), io::GraphFormat::Graph6).unwrap(), g);
    }

    #[test]
    fn compressed_patterns_round_trip(tags in proptest::collection::vec(0u32..=4, 1..30)) {
        let n = 3;
        let labels: Vec<Label> = tags.iter().map(|&t| match t {
            0 => Label::Zero,
            4 => Label::Full,
            k => Label::Class(k),
        }).collect();
        let p = Pattern::compress(&labels);
        prop_assert_eq!(p.expand(), labels.clone());
        let text = p.to_string();
        prop_assert_eq!(text.parse::<Pattern>().unwrap().expand(), labels.clone());
        let l = parse_pattern(&text, labels.len(), n).unwrap();
        prop_assert_eq!(l.labels(), labels);
    }
}

#[test]
fn table_patterns_round_trip() {
    for family in [PathOrCycle::Path, PathOrCycle::Cycle] {
        for m in 3..=40 {
            let l = pattern_labelling(family, m, 3).unwrap();
            let text = print_pattern(&l, Some(family));
            assert_eq!(text, table_pattern(family, m).unwrap().to_string(), "{family} {m}");
            assert_eq!(parse_pattern(&text, m, 3).unwrap(), l);
        }
    }
}

fn sample_certificates() -> Vec<Certificate> {
    let opts = SolveOptions::default().with_cap(VERIFY_CAP);
    let fam = |s: &str| Subject::family(&s.parse().unwrap());
    let mut out = Vec::new();

    let c5 = idomlab::families::cycle(5);
    for inv in Invariant::ALL {
        let r = invariants::compute(&c5, inv, &opts).unwrap();
        out.push(
            Certificate::new(Claim::InvariantValue, Subject::inline(&c5), r.value, "small cycle")
                .with_invariant(inv)
                .with_witness(&r.witness),
        );
    }
    let mut wrong = out[0].clone();
    wrong.value += 1;
    out.push(wrong);

    let x5 = FamilySpec::new(FamilyKind::X, &[5]).build().unwrap();
    out.push(
        Certificate::new(Claim::UpperBoundWitness, fam("X:5"), x5.witnesses[0].set.len(), "packaged witness")
            .with_invariant(Invariant::IndependentDomination)
            .with_witness(&greedy_maximal_independent_set(&x5.graph)),
    );

    let c16 = idomlab::families::cycle(16);
    let l = minimize_weight(&c16, 3, &opts).unwrap();
    out.push(Certificate::new(Claim::Legality, fam("cycle:16"), l.weight(), "labelling").with_labelling(&l));
    let bad = Labelling::from_labels(3, &[Label::Class(1); 16]).unwrap();
    out.push(Certificate::new(Claim::Legality, fam("cycle:16"), 16, "labelling").with_labelling(&bad));

    for (id, pair, rhs) in [
        (BoundId::ClawFree, ("cycle:5", "cycle:7"), 3),
        (BoundId::Bipartite, ("path:4", "path:4"), 4),
        (BoundId::DegreeRatio, ("cycle:6", "cycle:6"), 4),
        (BoundId::Bipartite, ("cycle:5", "path:4"), 4),
    ] {
        out.push(Certificate::new(Claim::LowerBoundFormula, fam(pair.0).times(fam(pair.1)), rhs, "bound").with_bound(id));
    }
    out.push(Certificate::new(Claim::LowerBoundFormula, fam("path:6"), 4, "bound").with_bound(BoundId::K2Lower));

    let (_, w) = product_witness(ProductFamily::XCocktail { m: 3, r: 3 }).unwrap();
    out.push(
        Certificate::new(Claim::Refutation, fam("X:3").times(fam("cocktail:3")), 8, "refutation")
            .with_witness(&w)
            .with_relation(Relation::ProductOfFactors, 10),
    );
    out.push(
        Certificate::new(Claim::Refutation, fam("X:3").times(fam("cocktail:3")), 8, "refutation")
            .with_witness(&w)
            .with_relation(Relation::MinOfFactors, 2),
    );
    let big = Certificate::new(Claim::InvariantValue, fam("Gn:11").times(fam("Hn:11")), 12, "too large")
        .with_invariant(Invariant::IndependentDomination)
        .with_witness(&product_witness(ProductFamily::GnHn { n: 11 }).unwrap().1);
    out.push(big);

    out.into_iter().map(|c| c.sealed(&opts).unwrap()).collect()
}

#[test]
fn certificates_verify_to_their_verdicts_after_writing() {
    let opts = SolveOptions::default().with_cap(VERIFY_CAP);
    let certs = sample_certificates();
    let verdicts: BTreeSet<Verdict> = certs.iter().map(|c| c.verdict).collect();
    assert_eq!(verdicts.len(), 3, "samples cover every verdict");
    for c in &certs {
        let text = write_certificate(c);
        let back = read_bundle(&text).unwrap();
        assert_eq!(back.len(), 1);
        assert_eq!(&back[0], c);
        assert_eq!(write_certificate(&back[0]), text);
        assert_eq!(verify_certificate(&back[0], &opts).unwrap().verdict, c.verdict, "{text}");
    }
    let bundle = write_bundle(&certs);
    assert_eq!(read_bundle(&bundle).unwrap(), certs);
}

fn check_canonical(v: &serde_json::Value) {
    match v {
        serde_json::Value::Object(map) => {
            let keys: Vec<&String> = map.keys().collect();
            assert!(keys.windows(2).all(|w| w[0] < w[1]), "{keys:?}");
            map.values().for_each(check_canonical);
        }
        serde_json::Value::Array(items) => items.iter().for_each(check_canonical),
        serde_json::Value::Number(n) => assert!(n.is_u64(), "{n}"),
        _ => {}
    }
}

#[test]
fn written_json_has_sorted_keys_and_integers_only() {
    for c in sample_certificates() {
        let text = write_certificate(&c);
        check_canonical(&serde_json::from_str(&text).unwrap());
        let keys: Vec<&str> = text.lines().filter(|l| l.starts_with("  \"")).map(|l| l.split('"').nth(1).unwrap()).collect();
        let mut sorted = keys.clone();
        sorted.sort_unstable();
        assert_eq!(keys, sorted);
    }
}
