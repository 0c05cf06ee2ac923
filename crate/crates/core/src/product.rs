//! Direct (tensor) products and their layer/projection structure.
//!
//! Vertex `(g, h)` of `G × H` is stored at index `g * n(H) + h`. This
//! row-major layout is part of the certificate format and must not change.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bitset::{self, words_for, VertexSet};
use crate::graph::Graph;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ProductError {
    #[error("product of orders {left} and {right} does not fit in memory")]
    TooLarge { left: usize, right: usize },
}

/// Which factor a layer or projection refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Factor {
    G,
    H,
}

#[derive(Clone, Debug)]
pub struct ProductGraph {
    graph: Graph,
    left: Graph,
    right: Graph,
}

/// Metadata written next to a serialized product graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProductSidecar {
    #[serde(rename = "nG")]
    pub n_g: usize,
    #[serde(rename = "nH")]
    pub n_h: usize,
    pub encoding: String,
}

// Largest product we are willing to materialise as a dense bitset matrix.
const MAX_PRODUCT_ORDER: usize = 1 << 17;

pub fn direct_product(g: &Graph, h: &Graph) -> Result<ProductGraph, ProductError> {
    let too_large = ProductError::TooLarge {
        left: g.order(),
        right: h.order(),
    };
    let n = g.order().checked_mul(h.order()).ok_or(too_large.clone())?;
    if n > MAX_PRODUCT_ORDER {
        return Err(too_large);
    }
    let nh = h.order();
    let w = words_for(n);
    let mut adj = vec![0u64; n * w];
    for g1 in 0..g.order() {
        for h1 in 0..nh {
            let v = g1 * nh + h1;
            let row = &mut adj[v * w..(v + 1) * w];
            for g2 in g.neighbor_iter(g1) {
                for h2 in h.neighbor_iter(h1) {
                    bitset::set(row, g2 * nh + h2);
                }
            }
        }
    }
    let mut graph = Graph::from_rows(n, adj);
    if g.labels().is_some() || h.labels().is_some() {
        let labels = (0..n)
            .map(|v| format!("({},{})", g.label(v / nh), h.label(v % nh)))
            .collect();
        graph = graph.with_labels(labels).expect("label count matches order");
    }
    Ok(ProductGraph {
        graph,
        left: g.clone(),
        right: h.clone(),
    })
}

impl ProductGraph {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn left(&self) -> &Graph {
        &self.left
    }

    pub fn right(&self) -> &Graph {
        &self.right
    }

    pub fn n_g(&self) -> usize {
        self.left.order()
    }

    pub fn n_h(&self) -> usize {
        self.right.order()
    }

    #[inline]
    pub fn encode(&self, g: usize, h: usize) -> usize {
        debug_assert!(g < self.n_g() && h < self.n_h());
        g * self.n_h() + h
    }

    #[inline]
    pub fn decode(&self, v: usize) -> (usize, usize) {
        (v / self.n_h(), v % self.n_h())
    }

    /// The fibre over one vertex of the chosen factor: for `Factor::G` and
    /// index `g` this is the H-layer `{(g, h) : h ∈ V(H)}`, for `Factor::H`
    /// and index `h` the G-layer `{(g, h) : g ∈ V(G)}`.
    pub fn layer(&self, factor: Factor, index: usize) -> VertexSet {
        let n = self.graph.order();
        match factor {
            Factor::G => {
                assert!(index < self.n_g());
                VertexSet::from_vertices(n, (0..self.n_h()).map(|h| self.encode(index, h)))
            }
            Factor::H => {
                assert!(index < self.n_h());
                VertexSet::from_vertices(n, (0..self.n_g()).map(|g| self.encode(g, index)))
            }
        }
    }

    /// Image of `s` under the coordinate projection onto `factor`.
    pub fn project(&self, factor: Factor, s: &VertexSet) -> VertexSet {
        assert_eq!(s.universe(), self.graph.order());
        match factor {
            Factor::G => VertexSet::from_vertices(self.n_g(), s.iter().map(|v| self.decode(v).0)),
            Factor::H => VertexSet::from_vertices(self.n_h(), s.iter().map(|v| self.decode(v).1)),
        }
    }

    /// `A × B` as a product vertex set.
    pub fn cartesian_set(&self, a: &VertexSet, b: &VertexSet) -> VertexSet {
        let mut s = VertexSet::new(self.graph.order());
        for g in a {
            for h in b {
                s.insert(self.encode(g, h));
            }
        }
        s
    }

    /// Set of product vertices given as coordinate pairs.
    pub fn set_from_pairs<I: IntoIterator<Item = (usize, usize)>>(&self, pairs: I) -> VertexSet {
        VertexSet::from_vertices(
            self.graph.order(),
            pairs.into_iter().map(|(g, h)| self.encode(g, h)),
        )
    }

    pub fn sidecar(&self) -> ProductSidecar {
        ProductSidecar {
            n_g: self.n_g(),
            n_h: self.n_h(),
            encoding: "row-major".to_string(),
        }
    }
}
