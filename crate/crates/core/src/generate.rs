//! Graph sources for exhaustive and randomised checks.
//!
//! Connected graphs of a given order come from adding one vertex, joined to
//! every nonempty subset, to each connected graph one order smaller; each
//! connected graph has a non-cut vertex, so nothing is missed. Duplicates
//! are removed with a canonical form: colour refinement by degree, then the
//! lexicographically largest adjacency code over orderings that respect the
//! colour classes.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::graph::Graph;

/// Largest order [`connected_graphs`] accepts.
pub const MAX_ENUMERATION_ORDER: usize = 10;

fn refine(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let mut colour: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    loop {
        let sig: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut ns: Vec<usize> = g.neighbor_iter(v).map(|u| colour[u]).collect();
                ns.sort_unstable();
                (colour[v], ns)
            })
            .collect();
        let mut ranks: BTreeMap<&(usize, Vec<usize>), usize> = BTreeMap::new();
        for s in &sig {
            ranks.insert(s, 0);
        }
        for (i, r) in ranks.values_mut().enumerate() {
            *r = i;
        }
        let next: Vec<usize> = sig.iter().map(|s| ranks[s]).collect();
        let classes = |c: &[usize]| c.iter().collect::<std::collections::BTreeSet<_>>().len();
        if classes(&next) == classes(&colour) {
            return next;
        }
        colour = next;
    }
}

struct Canon<'a> {
    g: &'a Graph,
    /// Colour class required at each position.
    slot: Vec<usize>,
    colour: Vec<usize>,
    order: Vec<usize>,
    used: Vec<bool>,
    best: Option<(u64, Vec<usize>)>,
}

impl Canon<'_> {
    fn column(&self, v: usize) -> u64 {
        self.order
            .iter()
            .fold(0u64, |acc, &u| (acc << 1) | self.g.has_edge(u, v) as u64)
    }

    fn search(&mut self, code: u64, bits: u32) {
        let n = self.g.order();
        let k = self.order.len();
        if k == n {
            if self.best.as_ref().is_none_or(|(b, _)| code > *b) {
                self.best = Some((code, self.order.clone()));
            }
            return;
        }
        for v in 0..n {
            if self.used[v] || self.colour[v] != self.slot[k] {
                continue;
            }
            let col = self.column(v);
            let next = (code << k) | col;
            let nbits = bits + k as u32;
            if let Some((best, _)) = &self.best {
                let total = (n * (n - 1) / 2) as u32;
                if next < best >> (total - nbits) {
                    continue;
                }
            }
            self.used[v] = true;
            self.order.push(v);
            self.search(next, nbits);
            self.order.pop();
            self.used[v] = false;
        }
    }
}

/// The canonical code of `g` and an ordering of its vertices attaining it.
/// Two graphs of the same order are isomorphic exactly when their codes
/// match. Orders above [`MAX_ENUMERATION_ORDER`] are refused.
pub fn canonical_code(g: &Graph) -> (u64, Vec<usize>) {
    let n = g.order();
    assert!(n <= MAX_ENUMERATION_ORDER, "canonical form supports order at most {MAX_ENUMERATION_ORDER}");
    let colour = refine(g);
    let mut slot = colour.clone();
    slot.sort_unstable();
    let mut c = Canon {
        g,
        slot,
        colour,
        order: Vec::with_capacity(n),
        used: vec![false; n],
        best: None,
    };
    c.search(0, 0);
    c.best.expect("some ordering exists")
}

/// `g` relabelled into its canonical ordering.
pub fn canonical_form(g: &Graph) -> Graph {
    let (_, order) = canonical_code(g);
    let mut pos = vec![0; g.order()];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let edges: Vec<(usize, usize)> = g.edges().map(|(u, v)| (pos[u], pos[v])).collect();
    Graph::new(g.order(), &edges).expect("relabelling keeps edges valid")
}

/// All connected graphs of order `n` up to isomorphism, in canonical form,
/// sorted by canonical code.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    assert!(n <= MAX_ENUMERATION_ORDER, "enumeration supports order at most {MAX_ENUMERATION_ORDER}");
    if n == 0 {
        return Vec::new();
    }
    let mut level = vec![Graph::empty(1)];
    for k in 2..=n {
        let mut seen: BTreeMap<u64, Graph> = BTreeMap::new();
        for g in &level {
            let base: Vec<(usize, usize)> = g.edges().collect();
            for mask in 1u32..(1 << (k - 1)) {
                let mut edges = base.clone();
                edges.extend((0..k - 1).filter(|&u| mask >> u & 1 == 1).map(|u| (u, k - 1)));
                let h = Graph::new(k, &edges).expect("valid edges");
                let (code, _) = canonical_code(&h);
                seen.entry(code).or_insert_with(|| canonical_form(&h));
            }
        }
        level = seen.into_values().collect();
    }
    level
}

/// Connected graphs of every order from 1 to `n`.
pub fn connected_graphs_up_to(n: usize) -> Vec<Graph> {
    (1..=n).flat_map(connected_graphs).collect()
}

/// Uniform G(n, p).
pub fn gnp<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut edges = Vec::new();
    for v in 1..n {
        for u in 0..v {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges).expect("valid edges")
}

/// G(n, p) with each isolated vertex then joined to a random other vertex.
/// Needs `n ≥ 2`.
pub fn isolate_free<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    assert!(n >= 2, "an isolate-free graph needs two vertices");
    let g = gnp(n, p, rng);
    let mut edges: Vec<(usize, usize)> = g.edges().collect();
    for v in 0..n {
        if g.degree(v) == 0 {
            let mut u = rng.gen_range(0..n - 1);
            if u >= v {
                u += 1;
            }
            edges.push((u, v));
        }
    }
    Graph::new(n, &edges).expect("valid edges")
}

/// A random spanning tree plus independent extra edges with probability
/// `p`.
pub fn connected<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut edges: Vec<(usize, usize)> = gnp(n, p, rng).edges().collect();
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    for i in 1..n {
        let j = rng.gen_range(0..i);
        edges.push((perm[j], perm[i]));
    }
    Graph::new(n, &edges).expect("valid edges")
}

/// A connected bipartite graph with parts of sizes `a` and `b`, both at
/// least 1: a random spanning tree across the parts plus cross edges with
/// probability `p`.
pub fn connected_bipartite<R: Rng>(a: usize, b: usize, p: f64, rng: &mut R) -> Graph {
    assert!(a >= 1 && b >= 1, "both parts must be nonempty");
    let n = a + b;
    let mut edges = Vec::new();
    for u in 0..a {
        for v in a..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    // Grow a tree, always joining a new vertex to one on the other side.
    let mut left: Vec<usize> = vec![0];
    let mut right: Vec<usize> = Vec::new();
    let mut rest: Vec<usize> = (1..n).collect();
    rest.shuffle(rng);
    let first_right = rest.iter().position(|&v| v >= a).expect("b >= 1");
    let r0 = rest.remove(first_right);
    edges.push((0, r0));
    right.push(r0);
    for v in rest {
        if v < a {
            edges.push((v, *right.choose(rng).expect("nonempty")));
            left.push(v);
        } else {
            edges.push((*left.choose(rng).expect("nonempty"), v));
            right.push(v);
        }
    }
    Graph::new(n, &edges).expect("valid edges")
}

/// The line graph of `g`: one vertex per edge, adjacent when the edges share
/// an endpoint. Line graphs are claw-free.
pub fn line_graph(g: &Graph) -> Graph {
    let es: Vec<(usize, usize)> = g.edges().collect();
    let mut edges = Vec::new();
    for i in 0..es.len() {
        for j in i + 1..es.len() {
            let (a, b) = es[i];
            let (c, d) = es[j];
            if a == c || a == d || b == c || b == d {
                edges.push((i, j));
            }
        }
    }
    Graph::new(es.len(), &edges).expect("valid edges")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete_bipartite, cycle, path};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn counts_of_connected_graphs() {
        let counts: Vec<usize> = (1..=7).map(|n| connected_graphs(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 21, 112, 853]);
    }

    #[test]
    fn enumerated_graphs_are_connected_and_canonical() {
        for g in connected_graphs(5) {
            assert!(g.is_connected());
            assert_eq!(canonical_form(&g), g);
        }
    }

    #[test]
    fn canonical_code_is_invariant_under_relabelling() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let g = gnp(8, 0.4, &mut rng);
            let mut perm: Vec<usize> = (0..8).collect();
            perm.shuffle(&mut rng);
            let edges: Vec<(usize, usize)> = g.edges().map(|(u, v)| (perm[u], perm[v])).collect();
            let h = Graph::new(8, &edges).unwrap();
            assert_eq!(canonical_code(&g).0, canonical_code(&h).0);
        }
        assert_ne!(canonical_code(&path(4)).0, canonical_code(&complete_bipartite(1, 3)).0);
    }

    #[test]
    fn random_generators() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..50 {
            assert!(!isolate_free(7, 0.2, &mut rng).has_isolated_vertex());
            assert!(connected(9, 0.1, &mut rng).is_connected());
            let b = connected_bipartite(3, 4, 0.3, &mut rng);
            assert!(b.is_connected() && b.is_bipartite());
        }
        assert_eq!(canonical_code(&line_graph(&cycle(5))).0, canonical_code(&cycle(5)).0);
        assert!(line_graph(&complete_bipartite(2, 3)).is_claw_free());
        assert_eq!(line_graph(&complete_bipartite(1, 3)).edge_count(), 3);
    }
}
