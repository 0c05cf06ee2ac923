//! Brute-force oracles over subsets, independent of the library solvers.
#![allow(dead_code)]

use idomlab::Graph;
use proptest::prelude::*;

/// Adjacency rows as bitmasks. Orders up to 20.
pub fn masks(g: &Graph) -> Vec<u32> {
    let n = g.order();
    assert!(n <= 20);
    (0..n)
        .map(|v| (0..n).filter(|&u| g.has_edge(u, v)).fold(0, |m, u| m | 1 << u))
        .collect()
}

fn independent(a: &[u32], s: u32) -> bool {
    (0..a.len()).all(|v| s >> v & 1 == 0 || a[v] & s == 0)
}

fn dominating(a: &[u32], s: u32) -> bool {
    (0..a.len()).all(|v| s >> v & 1 == 1 || a[v] & s != 0)
}

fn total_dominating(a: &[u32], s: u32) -> bool {
    (0..a.len()).all(|v| a[v] & s != 0)
}

fn two_packing(a: &[u32], s: u32) -> bool {
    let closed = |v: usize| a[v] | 1 << v;
    let members: Vec<usize> = (0..a.len()).filter(|&v| s >> v & 1 == 1).collect();
    members
        .iter()
        .enumerate()
        .all(|(i, &u)| members[i + 1..].iter().all(|&v| closed(u) & closed(v) == 0))
}

fn best(a: &[u32], pred: impl Fn(&[u32], u32) -> bool, minimum: bool) -> Option<usize> {
    let n = a.len();
    let sizes = (0..1u32 << n).filter(|&s| pred(a, s)).map(|s| s.count_ones() as usize);
    if minimum {
        sizes.min()
    } else {
        sizes.max()
    }
}

pub fn brute_i(g: &Graph) -> usize {
    best(&masks(g), |a, s| independent(a, s) && dominating(a, s), true).unwrap()
}

pub fn brute_alpha(g: &Graph) -> usize {
    best(&masks(g), independent, false).unwrap()
}

pub fn brute_gamma(g: &Graph) -> usize {
    best(&masks(g), dominating, true).unwrap()
}

pub fn brute_gamma_t(g: &Graph) -> Option<usize> {
    best(&masks(g), total_dominating, true)
}

pub fn brute_rho(g: &Graph) -> usize {
    best(&masks(g), two_packing, false).unwrap()
}

/// Every maximal independent set as a bitmask.
pub fn brute_maximal_independent_sets(g: &Graph) -> Vec<u32> {
    let a = masks(g);
    (0..1u32 << a.len())
        .filter(|&s| independent(&a, s) && dominating(&a, s))
        .collect()
}

pub fn graph_from_bits(n: usize, bits: &[bool]) -> Graph {
    let mut edges = Vec::new();
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            if bits[k] {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    Graph::new(n, &edges).unwrap()
}

/// Uniform labelled graphs with order in `lo..=hi`.
pub fn graphs(lo: usize, hi: usize) -> impl Strategy<Value = Graph> {
    (lo..=hi).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |b| graph_from_bits(n, &b))
    })
}

/// As [`graphs`], with each isolated vertex joined to its successor.
pub fn isolate_free_graphs(lo: usize, hi: usize) -> impl Strategy<Value = Graph> {
    assert!(lo >= 2);
    graphs(lo, hi).prop_map(|g| {
        let n = g.order();
        let mut edges: Vec<(usize, usize)> = g.edges().collect();
        for v in 0..n {
            if g.degree(v) == 0 {
                edges.push((v, (v + 1) % n));
            }
        }
        edges.sort_unstable_by_key(|&(u, v)| (u.min(v), u.max(v)));
        edges.dedup_by_key(|&mut (u, v)| (u.min(v), u.max(v)));
        Graph::new(n, &edges).unwrap()
    })
}
