//! Immutable simple graphs with bitset adjacency rows.

use std::collections::VecDeque;

use thiserror::Error;

use crate::bitset::{self, words_for, VertexSet};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("edge ({u}, {v}) has an endpoint outside 0..{n}")]
    EndpointOutOfRange { u: usize, v: usize, n: usize },
    #[error("loop at vertex {0}; graphs must be simple")]
    Loop(usize),
    #[error("expected {expected} vertex labels, got {got}")]
    LabelCount { expected: usize, got: usize },
}

/// A finite simple undirected graph on vertices `0..n`.
///
/// Adjacency is stored as one bitset row per vertex. Once built the graph
/// is never mutated, so it can be shared freely between solver threads.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    words: usize,
    adj: Vec<u64>,
    labels: Option<Vec<String>>,
}

impl Graph {
    /// Builds a graph from an edge list. Repeated edges collapse into one.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::EndpointOutOfRange { u, v, n });
            }
            if u == v {
                return Err(GraphError::Loop(u));
            }
            g.link(u, v);
        }
        Ok(g)
    }

    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        let words = words_for(n);
        Graph {
            n,
            words,
            adj: vec![0; n * words],
            labels: None,
        }
    }

    pub(crate) fn from_rows(n: usize, adj: Vec<u64>) -> Self {
        let words = words_for(n);
        debug_assert_eq!(adj.len(), n * words);
        Graph {
            n,
            words,
            adj,
            labels: None,
        }
    }

    pub(crate) fn link(&mut self, u: usize, v: usize) {
        let w = self.words;
        bitset::set(&mut self.adj[u * w..(u + 1) * w], v);
        bitset::set(&mut self.adj[v * w..(v + 1) * w], u);
    }

    /// Attaches display names, one per vertex.
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self, GraphError> {
        if labels.len() != self.n {
            return Err(GraphError::LabelCount {
                expected: self.n,
                got: labels.len(),
            });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Display name of `v`: its label if present, else the index.
    pub fn label(&self, v: usize) -> String {
        match &self.labels {
            Some(l) => l[v].clone(),
            None => v.to_string(),
        }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        bitset::count(&self.adj) / 2
    }

    #[inline]
    pub(crate) fn words(&self) -> usize {
        self.words
    }

    #[inline]
    pub(crate) fn row(&self, v: usize) -> &[u64] {
        &self.adj[v * self.words..(v + 1) * self.words]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && bitset::test(self.row(u), v)
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet::from_words(self.n, self.row(v).to_vec())
    }

    pub fn neighbor_iter(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        bitset::ones(self.row(v))
    }

    /// N[v] = N(v) ∪ {v}.
    pub fn closed_neighborhood(&self, v: usize) -> VertexSet {
        let mut s = self.neighbors(v);
        s.insert(v);
        s
    }

    /// N[S], the closed neighbourhood of a set.
    pub fn closed_neighborhood_of(&self, s: &VertexSet) -> VertexSet {
        let mut out = s.clone();
        for v in s {
            bitset::or_assign(out.words_mut(), self.row(v));
        }
        out
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        bitset::count(self.row(v))
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn has_isolated_vertex(&self) -> bool {
        (0..self.n).any(|v| bitset::is_zero(self.row(v)))
    }

    /// Edges as pairs `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.neighbor_iter(u).filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Breadth-first hop counts from `source`; `None` marks unreachable vertices.
    pub fn bfs_distances(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        let mut queue = VecDeque::new();
        dist[source] = Some(0);
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap();
            for v in self.neighbor_iter(u) {
                if dist[v].is_none() {
                    dist[v] = Some(d + 1);
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    /// Shortest-path length between `u` and `v`, or `None` when they lie in
    /// different components.
    pub fn distance(&self, u: usize, v: usize) -> Option<usize> {
        self.bfs_distances(u)[v]
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.bfs_distances(0).iter().all(Option::is_some)
    }

    /// A proper 2-colouring `(A, B)` if one exists. Each component is coloured
    /// starting from its lowest vertex, which goes to `A`.
    pub fn bipartition(&self) -> Option<(VertexSet, VertexSet)> {
        let mut side: Vec<Option<bool>> = vec![None; self.n];
        let mut queue = VecDeque::new();
        for s in 0..self.n {
            if side[s].is_some() {
                continue;
            }
            side[s] = Some(false);
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                let su = side[u].unwrap();
                for v in self.neighbor_iter(u) {
                    match side[v] {
                        None => {
                            side[v] = Some(!su);
                            queue.push_back(v);
                        }
                        Some(sv) if sv == su => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        let a = VertexSet::from_vertices(self.n, (0..self.n).filter(|&v| side[v] == Some(false)));
        let b = a.complement();
        Some((a, b))
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// An induced claw `[center, a, b, c]`, if any.
    pub fn find_claw(&self) -> Option<[usize; 4]> {
        for c in 0..self.n {
            let nb: Vec<usize> = self.neighbor_iter(c).collect();
            if nb.len() < 3 {
                continue;
            }
            for (i, &a) in nb.iter().enumerate() {
                for (j, &b) in nb.iter().enumerate().skip(i + 1) {
                    if self.has_edge(a, b) {
                        continue;
                    }
                    for &d in &nb[j + 1..] {
                        if !self.has_edge(a, d) && !self.has_edge(b, d) {
                            return Some([c, a, b, d]);
                        }
                    }
                }
            }
        }
        None
    }

    pub fn is_claw_free(&self) -> bool {
        self.find_claw().is_none()
    }

    pub fn is_complete(&self) -> bool {
        (0..self.n).all(|v| self.degree(v) + 1 == self.n)
    }

    /// The graph on the same vertices where `u ~ v` iff `1 <= d(u, v) <= 2`.
    pub fn square(&self) -> Graph {
        let mut adj = self.adj.clone();
        let w = self.words;
        for u in 0..self.n {
            for v in self.neighbor_iter(u) {
                let (lo, hi) = (u * w, (u + 1) * w);
                for k in 0..w {
                    adj[lo + k] |= self.adj[v * w + k];
                }
                bitset::unset(&mut adj[lo..hi], u);
            }
        }
        Graph::from_rows(self.n, adj)
    }

    /// Complement graph (no loops).
    pub fn complement(&self) -> Graph {
        let mut g = Graph::empty(self.n);
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    g.link(u, v);
                }
            }
        }
        g
    }

    /// Induced subgraph on `s`; vertex `i` of the result is the `i`-th
    /// smallest element of `s`. Labels carry over.
    pub fn induced_subgraph(&self, s: &VertexSet) -> Graph {
        let map: Vec<usize> = s.to_vec();
        let mut g = Graph::empty(map.len());
        for (i, &u) in map.iter().enumerate() {
            for (j, &v) in map.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.link(i, j);
                }
            }
        }
        if let Some(l) = &self.labels {
            g.labels = Some(map.iter().map(|&v| l[v].clone()).collect());
        }
        g
    }

    /// Disjoint union, `other`'s vertices shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let n = self.n + other.n;
        let mut g = Graph::empty(n);
        for (u, v) in self.edges() {
            g.link(u, v);
        }
        for (u, v) in other.edges() {
            g.link(u + self.n, v + self.n);
        }
        g
    }

    /// Degree sequence, non-increasing.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete, complete_bipartite, cycle, path};

    #[test]
    fn build_small_graphs() {
        let k2 = Graph::new(2, &[(0, 1)]).unwrap();
        assert_eq!(k2.edge_count(), 1);
        let k3 = Graph::new(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert!((0..3).all(|v| k3.degree(v) == 2));
        let dup = Graph::new(4, &[(0, 1), (0, 1)]).unwrap();
        assert_eq!(dup.edge_count(), 1);
        assert_eq!(dup.degree(3), 0);
    }

    #[test]
    fn build_rejects_bad_edges() {
        assert_eq!(
            Graph::new(3, &[(0, 3)]),
            Err(GraphError::EndpointOutOfRange { u: 0, v: 3, n: 3 })
        );
        assert_eq!(Graph::new(3, &[(1, 1)]), Err(GraphError::Loop(1)));
    }

    #[test]
    fn closed_neighborhoods() {
        assert_eq!(path(3).closed_neighborhood(1).to_vec(), vec![0, 1, 2]);
        assert_eq!(Graph::empty(1).closed_neighborhood(0).to_vec(), vec![0]);
        assert_eq!(cycle(5).closed_neighborhood(0).to_vec(), vec![0, 1, 4]);
    }

    #[test]
    fn distances() {
        assert_eq!(path(4).distance(0, 3), Some(3));
        let two_k2 = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(two_k2.distance(0, 2), None);
        assert_eq!(cycle(6).distance(0, 3), Some(3));
    }

    #[test]
    fn bipartitions() {
        let (a, b) = cycle(6).bipartition().unwrap();
        assert_eq!(a.to_vec(), vec![0, 2, 4]);
        assert_eq!(b.to_vec(), vec![1, 3, 5]);
        assert!(cycle(5).bipartition().is_none());
        let (a, b) = complete(2).bipartition().unwrap();
        assert_eq!((a.to_vec(), b.to_vec()), (vec![0], vec![1]));
    }

    #[test]
    fn claws() {
        assert!(!complete_bipartite(1, 3).is_claw_free());
        assert!(cycle(7).is_claw_free());
        assert!(path(5).is_claw_free());
    }

    #[test]
    fn degree_extremes() {
        let c6 = cycle(6);
        assert_eq!((c6.min_degree(), c6.max_degree()), (2, 2));
        let star = complete_bipartite(1, 3);
        assert_eq!((star.min_degree(), star.max_degree()), (1, 3));
        let k1 = Graph::empty(1);
        assert_eq!((k1.min_degree(), k1.max_degree()), (0, 0));
        let k0 = Graph::empty(0);
        assert_eq!((k0.min_degree(), k0.max_degree()), (0, 0));
    }

    #[test]
    fn square_of_path() {
        let sq = path(4).square();
        assert!(sq.has_edge(0, 2));
        assert!(!sq.has_edge(0, 3));
        assert!(!sq.has_edge(0, 0));
    }
}
