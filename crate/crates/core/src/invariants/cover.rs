//! Branch-and-bound for the minimum covering problems behind i, γ and γ_t.
//!
//! Every vertex must end up covered. A chosen vertex `u` covers `cover[u]`
//! (its closed neighbourhood for i and γ, its open one for γ_t) and removes
//! `block[u]` from the candidate pool (`N[u]` for i, so the chosen set stays
//! independent; just `{u}` otherwise). The search repeatedly takes the
//! uncovered vertex with the fewest remaining coverers and branches on which
//! of them joins the set; earlier siblings are forbidden in later branches,
//! so each set is generated at most once.

use std::sync::atomic::{AtomicBool, AtomicUsize, Ordering};

use rayon::prelude::*;

use crate::bitset::{self, VertexSet};
use crate::graph::Graph;
use crate::options::{Deadline, SolveError, SolveOptions};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum CoverKind {
    IndependentDominating,
    Dominating,
    TotalDominating,
}

pub(crate) struct CoverProblem {
    n: usize,
    w: usize,
    cover: Vec<u64>,
    block: Vec<u64>,
}

#[derive(Clone)]
struct Node {
    chosen: Vec<u64>,
    size: usize,
    uncovered: Vec<u64>,
    cand: Vec<u64>,
}

impl CoverProblem {
    pub(crate) fn new(g: &Graph, kind: CoverKind) -> Self {
        let n = g.order();
        let w = g.words();
        let mut cover = Vec::with_capacity(n * w);
        let mut block = vec![0u64; n * w];
        for v in 0..n {
            let start = cover.len();
            cover.extend_from_slice(g.row(v));
            if kind != CoverKind::TotalDominating {
                bitset::set(&mut cover[start..], v);
            }
            let b = &mut block[v * w..(v + 1) * w];
            bitset::set(b, v);
            if kind == CoverKind::IndependentDominating {
                bitset::or_assign(b, g.row(v));
            }
        }
        CoverProblem {
            n,
            w,
            cover,
            block,
        }
    }

    #[inline]
    fn cover(&self, v: usize) -> &[u64] {
        &self.cover[v * self.w..(v + 1) * self.w]
    }

    #[inline]
    fn block(&self, v: usize) -> &[u64] {
        &self.block[v * self.w..(v + 1) * self.w]
    }

    /// Root node with `include` forced in and `forbid` kept out. Returns
    /// `None` when `include` already violates independence.
    fn root(&self, include: &VertexSet, forbid: &VertexSet) -> Option<Node> {
        let full = VertexSet::full(self.n);
        let mut node = Node {
            chosen: vec![0; self.w],
            size: 0,
            uncovered: full.words().to_vec(),
            cand: full.words().to_vec(),
        };
        bitset::and_not_assign(&mut node.cand, forbid.words());
        for u in include {
            if !bitset::test(&node.cand, u) {
                return None;
            }
            self.apply(&mut node, u);
        }
        Some(node)
    }

    #[inline]
    fn apply(&self, node: &mut Node, u: usize) {
        bitset::set(&mut node.chosen, u);
        node.size += 1;
        bitset::and_not_assign(&mut node.uncovered, self.cover(u));
        bitset::and_not_assign(&mut node.cand, self.block(u));
    }

    /// Fewest additional picks that could cover everything still uncovered,
    /// from the sorted per-candidate coverage counts. `usize::MAX` when even
    /// all candidates together cannot finish the cover.
    fn lower_bound(&self, node: &Node) -> usize {
        let need = bitset::count(&node.uncovered);
        if need == 0 {
            return 0;
        }
        let mut hist = vec![0usize; self.n + 2];
        let mut top = 0;
        for u in bitset::ones(&node.cand) {
            let c = bitset::and_count(self.cover(u), &node.uncovered);
            if c > 0 {
                hist[c] += 1;
                top = top.max(c);
            }
        }
        let mut covered = 0;
        let mut picks = 0;
        for c in (1..=top).rev() {
            let k = hist[c];
            if k == 0 {
                continue;
            }
            let missing = need - covered;
            let take = missing.div_ceil(c);
            if take <= k {
                return picks + take;
            }
            picks += k;
            covered += k * c;
        }
        usize::MAX
    }

    /// The uncovered vertex with the fewest candidate coverers, and those
    /// coverers. An empty coverer set means the node is dead.
    fn branch_vertex(&self, node: &Node) -> Option<Vec<u64>> {
        let mut best: Option<(usize, usize)> = None;
        for v in bitset::ones(&node.uncovered) {
            let c = bitset::and_count(self.cover(v), &node.cand);
            if c == 0 {
                return None;
            }
            if best.is_none_or(|(bc, _)| c < bc) {
                best = Some((c, v));
                if c == 1 {
                    break;
                }
            }
        }
        let (_, v) = best?;
        let mut opts = self.cover(v).to_vec();
        for (o, c) in opts.iter_mut().zip(&node.cand) {
            *o &= c;
        }
        Some(opts)
    }

    /// Children of `node` in branching order, each with its earlier
    /// siblings forbidden.
    fn children(&self, node: &Node) -> Vec<Node> {
        let Some(opts) = self.branch_vertex(node) else {
            return Vec::new();
        };
        let mut cand = node.cand.clone();
        let mut out = Vec::new();
        for u in bitset::ones(&opts) {
            let mut child = Node {
                chosen: node.chosen.clone(),
                size: node.size,
                uncovered: node.uncovered.clone(),
                cand: cand.clone(),
            };
            self.apply(&mut child, u);
            out.push(child);
            bitset::unset(&mut cand, u);
        }
        out
    }

    fn greedy(&self, node: &Node) -> Option<Node> {
        let mut node = node.clone();
        while !bitset::is_zero(&node.uncovered) {
            let mut best: Option<(usize, usize)> = None;
            for u in bitset::ones(&node.cand) {
                let c = bitset::and_count(self.cover(u), &node.uncovered);
                if c > 0 && best.is_none_or(|(bc, _)| c > bc) {
                    best = Some((c, u));
                }
            }
            let (_, u) = best?;
            self.apply(&mut node, u);
        }
        Some(node)
    }
}

struct Search<'a> {
    p: &'a CoverProblem,
    deadline: &'a Deadline,
    shared: &'a AtomicUsize,
    stop: &'a AtomicBool,
    first_only: bool,
    best_size: usize,
    best: Option<Vec<u64>>,
}

impl Search<'_> {
    fn bound(&self) -> usize {
        self.best_size.min(self.shared.load(Ordering::Relaxed))
    }

    fn dfs(&mut self, node: &Node) {
        if self.stop.load(Ordering::Relaxed) || self.deadline.expired() {
            return;
        }
        let bound = self.bound();
        if node.size >= bound {
            return;
        }
        if bitset::is_zero(&node.uncovered) {
            self.best_size = node.size;
            self.best = Some(node.chosen.clone());
            self.shared.fetch_min(node.size, Ordering::Relaxed);
            if self.first_only {
                self.stop.store(true, Ordering::Relaxed);
            }
            return;
        }
        let lb = self.p.lower_bound(node);
        if lb == usize::MAX || node.size + lb >= bound {
            return;
        }
        let Some(opts) = self.p.branch_vertex(node) else {
            return;
        };
        let mut cand = node.cand.clone();
        for u in bitset::ones(&opts) {
            let mut child = Node {
                chosen: node.chosen.clone(),
                size: node.size,
                uncovered: node.uncovered.clone(),
                cand: cand.clone(),
            };
            self.p.apply(&mut child, u);
            self.dfs(&child);
            bitset::unset(&mut cand, u);
            if node.size + 1 >= self.bound() {
                return;
            }
        }
    }
}

/// Smallest cover of size `< limit` reachable from `root`, if any.
fn run(
    p: &CoverProblem,
    root: Node,
    limit: usize,
    first_only: bool,
    opts: &SolveOptions,
    deadline: &Deadline,
) -> Result<Option<(usize, Vec<u64>)>, SolveError> {
    let shared = AtomicUsize::new(limit);
    let stop = AtomicBool::new(false);
    let mut incumbent: Option<(usize, Vec<u64>)> = None;
    if let Some(done) = p.greedy(&root) {
        if done.size < limit {
            shared.store(done.size, Ordering::Relaxed);
            incumbent = Some((done.size, done.chosen));
            if first_only {
                return Ok(incumbent);
            }
        }
    }
    let new_search = |best_size: usize| Search {
        p,
        deadline,
        shared: &shared,
        stop: &stop,
        first_only,
        best_size,
        best: None,
    };
    let found: Vec<(usize, Vec<u64>)> = if opts.parallel() {
        // Split two levels deep so the pool has enough independent subtrees.
        let mut frontier = Vec::new();
        for child in p.children(&root) {
            if bitset::is_zero(&child.uncovered) {
                frontier.push(child);
            } else {
                frontier.extend(p.children(&child));
            }
        }
        opts.install(|| {
            frontier
                .par_iter()
                .filter_map(|node| {
                    let mut s = new_search(limit);
                    s.dfs(node);
                    s.best.map(|b| (s.best_size, b))
                })
                .collect()
        })
    } else {
        let mut s = new_search(limit);
        s.dfs(&root);
        s.best.map(|b| (s.best_size, b)).into_iter().collect()
    };
    deadline.result()?;
    for (size, bits) in found {
        if incumbent.as_ref().is_none_or(|(s, _)| size < *s) {
            incumbent = Some((size, bits));
        }
    }
    Ok(incumbent)
}

/// Minimum cover size with some optimal witness.
pub(crate) fn minimum(
    g: &Graph,
    kind: CoverKind,
    opts: &SolveOptions,
    deadline: &Deadline,
) -> Result<Option<(usize, VertexSet)>, SolveError> {
    let p = CoverProblem::new(g, kind);
    let n = g.order();
    let root = p
        .root(&VertexSet::new(n), &VertexSet::new(n))
        .expect("empty include is consistent");
    let res = run(&p, root, n + 1, false, opts, deadline)?;
    Ok(res.map(|(size, bits)| (size, VertexSet::from_words(n, bits))))
}

/// A cover of size at most `k` containing `include` and avoiding `forbid`.
pub(crate) fn feasible(
    g: &Graph,
    kind: CoverKind,
    include: &VertexSet,
    forbid: &VertexSet,
    k: usize,
    deadline: &Deadline,
) -> Result<Option<VertexSet>, SolveError> {
    let p = CoverProblem::new(g, kind);
    let Some(root) = p.root(include, forbid) else {
        return Ok(None);
    };
    let seq = SolveOptions::default();
    let res = run(&p, root, k + 1, true, &seq, deadline)?;
    Ok(res.map(|(_, bits)| VertexSet::from_words(g.order(), bits)))
}

/// The lexicographically least optimal cover, given the optimum `k`.
pub(crate) fn canonical(
    g: &Graph,
    kind: CoverKind,
    k: usize,
    deadline: &Deadline,
) -> Result<VertexSet, SolveError> {
    let n = g.order();
    let p = CoverProblem::new(g, kind);
    let mut include = VertexSet::new(n);
    let mut forbid = VertexSet::new(n);
    let seq = SolveOptions::default();
    for v in 0..n {
        if include.len() == k {
            break;
        }
        if kind == CoverKind::IndependentDominating && g.neighbor_iter(v).any(|u| include.contains(u)) {
            continue;
        }
        include.insert(v);
        let ok = match p.root(&include, &forbid) {
            Some(root) => run(&p, root, k + 1, true, &seq, deadline)?.is_some(),
            None => false,
        };
        if !ok {
            include.remove(v);
            forbid.insert(v);
        }
    }
    Ok(include)
}
