//! Maximum independent set by branch-and-bound with a greedy clique-cover
//! bound: an independent set meets every clique at most once, so the number
//! of cliques in any cover of the candidate pool bounds what it can add.

use crate::bitset::{self, VertexSet};
use crate::graph::Graph;
use crate::options::{Deadline, SolveError};

struct Search<'a> {
    g: &'a Graph,
    deadline: &'a Deadline,
    /// Only sets strictly larger than this are recorded.
    best_size: usize,
    best: Option<Vec<u64>>,
    first_only: bool,
    done: bool,
}

impl Search<'_> {
    fn clique_cover(&self, pool: &[u64]) -> usize {
        let mut rest = pool.to_vec();
        let mut cliques = 0;
        while let Some(v) = bitset::ones(&rest).next() {
            bitset::unset(&mut rest, v);
            let mut ext: Vec<u64> = rest.iter().zip(self.g.row(v)).map(|(a, b)| a & b).collect();
            while let Some(u) = bitset::ones(&ext).next() {
                bitset::unset(&mut rest, u);
                for (e, r) in ext.iter_mut().zip(self.g.row(u)) {
                    *e &= r;
                }
            }
            cliques += 1;
        }
        cliques
    }

    fn expand(&mut self, chosen: &mut Vec<u64>, size: usize, pool: Vec<u64>) {
        if self.done || self.deadline.expired() {
            return;
        }
        if bitset::is_zero(&pool) {
            if size > self.best_size {
                self.best_size = size;
                self.best = Some(chosen.clone());
                self.done = self.first_only;
            }
            return;
        }
        if size + self.clique_cover(&pool) <= self.best_size {
            return;
        }
        // A vertex with at most one neighbour in the pool can always be taken.
        let mut min_v = None;
        let mut max_v = None;
        for v in bitset::ones(&pool) {
            let d = bitset::and_count(self.g.row(v), &pool);
            if min_v.is_none_or(|(md, _)| d < md) {
                min_v = Some((d, v));
            }
            if max_v.is_none_or(|(md, _)| d > md) {
                max_v = Some((d, v));
            }
        }
        let (dmin, vmin) = min_v.unwrap();
        let (v, forced) = if dmin <= 1 { (vmin, true) } else { (max_v.unwrap().1, false) };

        let mut with_v = pool.clone();
        bitset::unset(&mut with_v, v);
        bitset::and_not_assign(&mut with_v, self.g.row(v));
        bitset::set(chosen, v);
        self.expand(chosen, size + 1, with_v);
        bitset::unset(chosen, v);
        if forced {
            return;
        }
        let mut without_v = pool;
        bitset::unset(&mut without_v, v);
        self.expand(chosen, size, without_v);
    }
}

/// Largest independent set inside `pool` with more than `floor` vertices,
/// or `None` if there is none. With `first_only` any such set is returned.
pub(crate) fn max_independent_in(
    g: &Graph,
    pool: &VertexSet,
    floor: usize,
    first_only: bool,
    deadline: &Deadline,
) -> Result<Option<VertexSet>, SolveError> {
    let mut s = Search {
        g,
        deadline,
        best_size: floor,
        best: None,
        first_only,
        done: false,
    };
    let mut chosen = vec![0u64; g.words()];
    s.expand(&mut chosen, 0, pool.words().to_vec());
    deadline.result()?;
    Ok(s.best.map(|b| VertexSet::from_words(g.order(), b)))
}

/// Lexicographically least maximum independent set, given its size `k`.
pub(crate) fn canonical(g: &Graph, k: usize, deadline: &Deadline) -> Result<VertexSet, SolveError> {
    let n = g.order();
    let mut include = VertexSet::new(n);
    let mut pool = VertexSet::full(n);
    for v in 0..n {
        if include.len() == k {
            break;
        }
        if !pool.contains(v) {
            continue;
        }
        let mut rest = pool.clone();
        rest.remove(v);
        rest.difference_with(&g.neighbors(v));
        let need = k - include.len() - 1;
        let ok = need == 0 || max_independent_in(g, &rest, need - 1, true, deadline)?.is_some();
        if ok {
            include.insert(v);
            pool = rest;
        } else {
            pool.remove(v);
        }
    }
    Ok(include)
}
