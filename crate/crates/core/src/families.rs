//! Named graph families with their known witness sets.
//!
//! Vertex layouts are fixed so that witnesses are reproducible integers:
//!
//! * `X:m` — `x1..x4` at 0..4, then the independent blocks A, B, C, D of
//!   `m` vertices each.
//! * `cocktail:r` — partite pair `{u_i, v_i}` at `2(i-1), 2(i-1)+1`.
//! * `Gn:n` — `u_s, v_s` at `2(s-1), 2(s-1)+1` for `s = 1..6`, then one block
//!   of `n` twins per member of [`G_BLOCK_SETS`], in order.
//! * `Hn:n` — `y_1..y_6` at 0..6, then one block of `n` twins per member of
//!   [`H_BLOCK_SETS`], in order.

use std::fmt;
use std::ops::Range;
use std::str::FromStr;

use thiserror::Error;

use crate::bitset::VertexSet;
use crate::graph::Graph;
use crate::product::{direct_product, ProductError, ProductGraph};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FamilyError {
    #[error("unknown family kind `{0}`")]
    UnknownKind(String),
    #[error("family `{kind}` expects {expected} parameter(s), got `{got}`")]
    Arity {
        kind: &'static str,
        expected: usize,
        got: String,
    },
    #[error("bad parameter `{0}`")]
    BadParameter(String),
    #[error("{kind} needs parameter >= {min}, got {got}")]
    TooSmall {
        kind: &'static str,
        min: usize,
        got: usize,
    },
    #[error(transparent)]
    Product(#[from] ProductError),
}

/// Blocks of G_n: each listed index set names the pairs `A_s` a block is
/// joined to.
pub const G_BLOCK_SETS: [&[usize]; 5] = [&[3, 4, 5, 6], &[2, 5, 6], &[1, 2, 3, 4], &[1, 3, 4, 6], &[1, 2, 5]];

/// Pairs `(s, t)` such that `A_s ∪ A_t` induces a clique in G_n.
pub const G_CLIQUE_PAIRS: [(usize, usize); 7] = [(1, 5), (1, 6), (2, 3), (2, 4), (2, 6), (3, 5), (4, 5)];

/// Blocks of H_n: each block is joined to `y_k` for the listed `k`.
pub const H_BLOCK_SETS: [&[usize]; 7] = [
    &[2, 3, 4, 6],
    &[2, 3, 4, 5],
    &[1, 3, 5, 6],
    &[1, 2, 4, 6],
    &[1, 3, 4, 5],
    &[1, 2, 3, 6],
    &[1, 4, 5, 6],
];

/// Edges among `y_1..y_6` in H_n (1-based).
pub const H_CORE_EDGES: [(usize, usize); 8] = [(1, 2), (1, 3), (1, 4), (2, 5), (3, 6), (3, 4), (4, 6), (5, 6)];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilyKind {
    Path,
    Cycle,
    Complete,
    CompleteBipartite,
    Cocktail,
    X,
    Gn,
    Hn,
}

impl FamilyKind {
    pub fn tag(self) -> &'static str {
        match self {
            FamilyKind::Path => "path",
            FamilyKind::Cycle => "cycle",
            FamilyKind::Complete => "complete",
            FamilyKind::CompleteBipartite => "kbip",
            FamilyKind::Cocktail => "cocktail",
            FamilyKind::X => "X",
            FamilyKind::Gn => "Gn",
            FamilyKind::Hn => "Hn",
        }
    }

    fn arity(self) -> usize {
        if self == FamilyKind::CompleteBipartite {
            2
        } else {
            1
        }
    }

    const ALL: [FamilyKind; 8] = [
        FamilyKind::Path,
        FamilyKind::Cycle,
        FamilyKind::Complete,
        FamilyKind::CompleteBipartite,
        FamilyKind::Cocktail,
        FamilyKind::X,
        FamilyKind::Gn,
        FamilyKind::Hn,
    ];
}

/// A family name with parameters, written `kind:p1[,p2]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FamilySpec {
    pub kind: FamilyKind,
    pub params: Vec<usize>,
}

impl FamilySpec {
    pub fn new(kind: FamilyKind, params: &[usize]) -> Self {
        FamilySpec {
            kind,
            params: params.to_vec(),
        }
    }

    pub fn build(&self) -> Result<Family, FamilyError> {
        let p = &self.params;
        let (graph, witnesses) = match self.kind {
            FamilyKind::Path => (make_path(p[0])?, vec![]),
            FamilyKind::Cycle => (make_cycle(p[0])?, vec![]),
            FamilyKind::Complete => (make_complete(p[0])?, vec![]),
            FamilyKind::CompleteBipartite => (make_complete_bipartite(p[0], p[1])?, vec![]),
            FamilyKind::Cocktail => {
                let g = make_cocktail(p[0])?;
                let w = VertexSet::from_vertices(g.order(), [0, 1]);
                (g, vec![Witness::new("{u1,v1}", w)])
            }
            FamilyKind::X => {
                let g = make_x(p[0])?;
                (g, vec![Witness::new("D+{x1,x3}", x_witness(p[0]))])
            }
            FamilyKind::Gn => {
                let g = make_gn(p[0])?;
                (g, vec![Witness::new("{u1,u2}+A{3,4,5,6}", gn_witness(p[0]))])
            }
            FamilyKind::Hn => {
                let g = make_hn(p[0])?;
                (g, vec![Witness::new("{y1,y5}+B{2,3,4,6}", hn_witness(p[0]))])
            }
        };
        Ok(Family {
            spec: self.clone(),
            graph,
            witnesses,
        })
    }

    /// Order of the generated graph, from the closed form for each kind.
    pub fn expected_order(&self) -> usize {
        let p = &self.params;
        match self.kind {
            FamilyKind::Path | FamilyKind::Cycle | FamilyKind::Complete => p[0],
            FamilyKind::CompleteBipartite => p[0] + p[1],
            FamilyKind::Cocktail => 2 * p[0],
            FamilyKind::X => 4 * p[0] + 4,
            FamilyKind::Gn => 12 + 5 * p[0],
            FamilyKind::Hn => 6 + 7 * p[0],
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.kind.tag())?;
        for (i, p) in self.params.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for FamilySpec {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, FamilyError> {
        let (tag, rest) = s.split_once(':').unwrap_or((s, ""));
        let kind = FamilyKind::ALL
            .into_iter()
            .find(|k| k.tag() == tag)
            .ok_or_else(|| FamilyError::UnknownKind(tag.to_string()))?;
        let params = if rest.is_empty() {
            Vec::new()
        } else {
            rest.split(',')
                .map(|t| t.trim().parse::<usize>().map_err(|_| FamilyError::BadParameter(t.to_string())))
                .collect::<Result<Vec<_>, _>>()?
        };
        if params.len() != kind.arity() {
            return Err(FamilyError::Arity {
                kind: kind.tag(),
                expected: kind.arity(),
                got: rest.to_string(),
            });
        }
        Ok(FamilySpec { kind, params })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub name: String,
    pub set: VertexSet,
}

impl Witness {
    fn new(name: &str, set: VertexSet) -> Self {
        Witness {
            name: name.to_string(),
            set,
        }
    }
}

#[derive(Debug, Clone)]
pub struct Family {
    pub spec: FamilySpec,
    pub graph: Graph,
    pub witnesses: Vec<Witness>,
}

fn at_least(kind: &'static str, min: usize, got: usize) -> Result<(), FamilyError> {
    if got < min {
        Err(FamilyError::TooSmall { kind, min, got })
    } else {
        Ok(())
    }
}

fn with_labels(g: Graph, labels: Vec<String>) -> Graph {
    g.with_labels(labels).expect("one label per vertex")
}

// ---------------------------------------------------------------------------
// Standard graphs. The infallible helpers panic on out-of-range parameters.

pub fn path(m: usize) -> Graph {
    let edges: Vec<_> = (1..m).map(|i| (i - 1, i)).collect();
    Graph::new(m, &edges).unwrap()
}

pub fn cycle(m: usize) -> Graph {
    assert!(m >= 3, "cycle needs at least 3 vertices");
    let edges: Vec<_> = (0..m).map(|i| (i, (i + 1) % m)).collect();
    Graph::new(m, &edges).unwrap()
}

pub fn complete(n: usize) -> Graph {
    let edges: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    Graph::new(n, &edges).unwrap()
}

/// K_{a,b} with the `a` side first.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let edges: Vec<_> = (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))).collect();
    Graph::new(a + b, &edges).unwrap()
}

pub fn make_path(m: usize) -> Result<Graph, FamilyError> {
    at_least("path", 1, m)?;
    Ok(path(m))
}

pub fn make_cycle(m: usize) -> Result<Graph, FamilyError> {
    at_least("cycle", 3, m)?;
    Ok(cycle(m))
}

pub fn make_complete(n: usize) -> Result<Graph, FamilyError> {
    at_least("complete", 1, n)?;
    Ok(complete(n))
}

pub fn make_complete_bipartite(a: usize, b: usize) -> Result<Graph, FamilyError> {
    at_least("kbip", 1, a.min(b))?;
    Ok(complete_bipartite(a, b))
}

// ---------------------------------------------------------------------------
// Cocktail-party graph H_r = K_{2,...,2}.

pub fn make_cocktail(r: usize) -> Result<Graph, FamilyError> {
    at_least("cocktail", 2, r)?;
    let n = 2 * r;
    let edges: Vec<_> = (0..n)
        .flat_map(|u| (u + 1..n).filter(move |&v| v / 2 != u / 2).map(move |v| (u, v)))
        .collect();
    let labels = (0..n)
        .map(|v| format!("{}{}", if v % 2 == 0 { 'u' } else { 'v' }, v / 2 + 1))
        .collect();
    Ok(with_labels(Graph::new(n, &edges).unwrap(), labels))
}

// ---------------------------------------------------------------------------
// X_m

/// Index of `x_i` (1-based) in X_m.
pub fn x_hub(i: usize) -> usize {
    assert!((1..=4).contains(&i));
    i - 1
}

/// Index range of block `part` of X_m, with `0..4` meaning A, B, C, D.
pub fn x_part(m: usize, part: usize) -> Range<usize> {
    assert!(part < 4);
    let start = 4 + part * m;
    start..start + m
}

pub fn make_x(m: usize) -> Result<Graph, FamilyError> {
    at_least("X", 3, m)?;
    let n = 4 * m + 4;
    let mut edges = vec![(0, 1), (2, 3)];
    // hub -> parts it sees
    let joins: [(usize, [usize; 2]); 4] = [(1, [0, 2]), (2, [1, 3]), (3, [0, 1]), (4, [2, 3])];
    for (hub, parts) in joins {
        for part in parts {
            edges.extend(x_part(m, part).map(|w| (x_hub(hub), w)));
        }
    }
    let mut labels: Vec<String> = (1..=4).map(|i| format!("x{i}")).collect();
    for name in ['a', 'b', 'c', 'd'] {
        labels.extend((1..=m).map(|j| format!("{name}{j}")));
    }
    Ok(with_labels(Graph::new(n, &edges).unwrap(), labels))
}

/// `D ∪ {x1, x3}`, an independent dominating set of size `m + 2`.
pub fn x_witness(m: usize) -> VertexSet {
    let n = 4 * m + 4;
    VertexSet::from_vertices(n, x_part(m, 3).chain([x_hub(1), x_hub(3)]))
}

// ---------------------------------------------------------------------------
// G_n

/// `(u_s, v_s)` for `s` in `1..=6`.
pub fn gn_pair(s: usize) -> (usize, usize) {
    assert!((1..=6).contains(&s));
    (2 * (s - 1), 2 * (s - 1) + 1)
}

/// Index range of the twin block for `G_BLOCK_SETS[j]`.
pub fn gn_block(n: usize, j: usize) -> Range<usize> {
    let start = 12 + j * n;
    start..start + n
}

fn set_name(prefix: char, set: &[usize]) -> String {
    let inner: Vec<String> = set.iter().map(usize::to_string).collect();
    format!("{prefix}{{{}}}", inner.join(","))
}

pub fn make_gn(n: usize) -> Result<Graph, FamilyError> {
    at_least("Gn", 1, n)?;
    let order = 12 + 5 * n;
    let mut edges = Vec::new();
    for s in 1..=6 {
        let (u, v) = gn_pair(s);
        edges.push((u, v));
    }
    for (j, set) in G_BLOCK_SETS.iter().enumerate() {
        for w in gn_block(n, j) {
            for &s in *set {
                let (u, v) = gn_pair(s);
                edges.push((w, u));
                edges.push((w, v));
            }
        }
    }
    for (s, t) in G_CLIQUE_PAIRS {
        let (a, b) = (gn_pair(s), gn_pair(t));
        for x in [a.0, a.1] {
            for y in [b.0, b.1] {
                edges.push((x, y));
            }
        }
    }
    let mut labels: Vec<String> = (1..=6).flat_map(|s| [format!("u{s}"), format!("v{s}")]).collect();
    for set in G_BLOCK_SETS {
        let name = set_name('A', set);
        labels.extend((1..=n).map(|i| format!("{name}#{i}")));
    }
    Ok(with_labels(Graph::new(order, &edges).unwrap(), labels))
}

/// `{u1, u2} ∪ A_{3,4,5,6}`, size `n + 2`.
pub fn gn_witness(n: usize) -> VertexSet {
    VertexSet::from_vertices(12 + 5 * n, gn_block(n, 0).chain([gn_pair(1).0, gn_pair(2).0]))
}

// ---------------------------------------------------------------------------
// H_n

/// Index of `y_s` for `s` in `1..=6`.
pub fn hn_hub(s: usize) -> usize {
    assert!((1..=6).contains(&s));
    s - 1
}

/// Index range of the twin block for `H_BLOCK_SETS[k]`.
pub fn hn_block(n: usize, k: usize) -> Range<usize> {
    let start = 6 + k * n;
    start..start + n
}

pub fn make_hn(n: usize) -> Result<Graph, FamilyError> {
    at_least("Hn", 1, n)?;
    let order = 6 + 7 * n;
    let mut edges: Vec<_> = H_CORE_EDGES.iter().map(|&(a, b)| (hn_hub(a), hn_hub(b))).collect();
    for (k, set) in H_BLOCK_SETS.iter().enumerate() {
        for w in hn_block(n, k) {
            edges.extend(set.iter().map(|&s| (w, hn_hub(s))));
        }
    }
    let mut labels: Vec<String> = (1..=6).map(|s| format!("y{s}")).collect();
    for set in H_BLOCK_SETS {
        let name = set_name('B', set);
        labels.extend((1..=n).map(|i| format!("{name}#{i}")));
    }
    Ok(with_labels(Graph::new(order, &edges).unwrap(), labels))
}

/// `{y1, y5} ∪ B_{2,3,4,6}`, size `n + 2`.
pub fn hn_witness(n: usize) -> VertexSet {
    VertexSet::from_vertices(6 + 7 * n, hn_block(n, 0).chain([hn_hub(1), hn_hub(5)]))
}

// ---------------------------------------------------------------------------
// Product witnesses

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProductFamily {
    /// X_m × H_r
    XCocktail { m: usize, r: usize },
    /// G_n × H_n
    GnHn { n: usize },
}

impl ProductFamily {
    pub fn factors(&self) -> (FamilySpec, FamilySpec) {
        match *self {
            ProductFamily::XCocktail { m, r } => (
                FamilySpec::new(FamilyKind::X, &[m]),
                FamilySpec::new(FamilyKind::Cocktail, &[r]),
            ),
            ProductFamily::GnHn { n } => (
                FamilySpec::new(FamilyKind::Gn, &[n]),
                FamilySpec::new(FamilyKind::Hn, &[n]),
            ),
        }
    }
}

/// The product graph together with the explicit small independent
/// dominating set: `({x1,x2} × {u1,v1}) ∪ ({x3,x4} × {u2,v2})` of size 8 for
/// X_m × H_r, and `⋃_s {(u_s, y_s), (v_s, y_s)}` of size 12 for G_n × H_n.
pub fn product_witness(pf: ProductFamily) -> Result<(ProductGraph, VertexSet), FamilyError> {
    let (gs, hs) = pf.factors();
    let g = gs.build()?.graph;
    let h = hs.build()?.graph;
    let p = direct_product(&g, &h)?;
    let set = match pf {
        ProductFamily::XCocktail { .. } => p.set_from_pairs(
            [(1, 0), (1, 1), (2, 0), (2, 1), (3, 2), (3, 3), (4, 2), (4, 3)]
                .map(|(x, c)| (x_hub(x), c)),
        ),
        ProductFamily::GnHn { .. } => p.set_from_pairs((1..=6).flat_map(|s| {
            let (u, v) = gn_pair(s);
            [(u, hn_hub(s)), (v, hn_hub(s))]
        })),
    };
    Ok((p, set))
}
