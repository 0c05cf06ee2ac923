//! Labellings of V(G) that encode maximal independent sets of `G × K_n`.
//!
//! A maximal independent set `I` of `G × K_n` meets every layer `{g} × [n]`
//! in 0, 1 or n vertices. Recording which case holds, and for the middle
//! case which coordinate, gives a label per vertex of G:
//!
//! * `0`: the layer misses `I`;
//! * `k` in `1..=n`: the layer meets `I` in `(g, k)` only;
//! * `[n]`: the whole layer lies in `I`.
//!
//! A labelling comes from a maximal independent set exactly when it is
//! *legal*:
//!
//! 1. a vertex labelled `k` has all its neighbours labelled `0` or `k`;
//! 2. a vertex labelled `k` has some neighbour labelled `k`;
//! 3. no two `[n]` vertices are adjacent;
//! 4. a vertex labelled `0` has an `[n]` neighbour, or neighbours carrying
//!    two different labels from `1..=n`.
//!
//! The size of the encoded set is the weight `n·|V_[n]| + Σ_k |V_k|`.

mod formulas;
mod search;

use std::fmt;

use thiserror::Error;

use crate::bitset::VertexSet;
use crate::graph::Graph;
use crate::product::ProductGraph;

pub use formulas::{formula_value, pattern_labelling, table_pattern, PathOrCycle};
pub use search::{enumerate_legal_labellings, minimize_weight, minimize_weight_with, LabelSearch};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LabellingError {
    #[error("clique order must be at least 2, got {0}")]
    CliqueOrder(usize),
    #[error("label {label} at vertex {vertex} exceeds clique order {n}")]
    Malformed { vertex: usize, label: u32, n: usize },
    #[error("labelling has {got} labels but the graph has {expected} vertices")]
    Length { expected: usize, got: usize },
    #[error("labelling is not legal: {0}")]
    Illegal(LegalityReport),
    #[error("second factor is not a complete graph on at least 2 vertices")]
    NotCliqueProduct,
    #[error("layer over vertex {vertex} meets the set in {size} vertices; must be 0, 1 or {n}")]
    LayerSize { vertex: usize, size: usize, n: usize },
    #[error("{0}")]
    OutOfRange(String),
}

/// One vertex label.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    Zero,
    /// Class `k`, 1-based.
    Class(u32),
    /// The whole layer, written `[n]`.
    Full,
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Zero => f.write_str("0"),
            Label::Class(k) => write!(f, "{k}"),
            Label::Full => f.write_str("[n]"),
        }
    }
}

impl Label {
    /// Parses `0`, a positive integer, or `[n]`.
    pub fn parse(s: &str) -> Option<Label> {
        match s {
            "[n]" => Some(Label::Full),
            "0" => Some(Label::Zero),
            _ => s.parse::<u32>().ok().filter(|&k| k > 0).map(Label::Class),
        }
    }
}

/// A weak partition `V_0, V_1, …, V_n, V_[n]` of V(G), stored as one tag
/// per vertex: `0`, `1..=n`, and `n + 1` for `[n]`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Labelling {
    n: usize,
    tags: Vec<u32>,
}

impl Labelling {
    pub fn new(n: usize, tags: Vec<u32>) -> Result<Self, LabellingError> {
        if n < 2 {
            return Err(LabellingError::CliqueOrder(n));
        }
        if let Some((vertex, &label)) = tags.iter().enumerate().find(|(_, &t)| t as usize > n + 1) {
            return Err(LabellingError::Malformed { vertex, label, n });
        }
        Ok(Labelling { n, tags })
    }

    pub fn from_labels(n: usize, labels: &[Label]) -> Result<Self, LabellingError> {
        if n < 2 {
            return Err(LabellingError::CliqueOrder(n));
        }
        let tags = labels
            .iter()
            .enumerate()
            .map(|(vertex, l)| match *l {
                Label::Zero => Ok(0),
                Label::Full => Ok(n as u32 + 1),
                Label::Class(k) if (k as usize) <= n => Ok(k),
                Label::Class(k) => Err(LabellingError::Malformed { vertex, label: k, n }),
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Labelling { n, tags })
    }

    pub(crate) fn from_tags_unchecked(n: usize, tags: Vec<u32>) -> Self {
        Labelling { n, tags }
    }

    /// Order of the complete factor.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.tags.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tags.is_empty()
    }

    pub fn tags(&self) -> &[u32] {
        &self.tags
    }

    #[inline]
    fn full_tag(&self) -> u32 {
        self.n as u32 + 1
    }

    pub fn label(&self, v: usize) -> Label {
        match self.tags[v] {
            0 => Label::Zero,
            t if t == self.full_tag() => Label::Full,
            t => Label::Class(t),
        }
    }

    pub fn labels(&self) -> Vec<Label> {
        (0..self.len()).map(|v| self.label(v)).collect()
    }

    /// `n·|V_[n]| + Σ_k |V_k|`.
    pub fn weight(&self) -> usize {
        self.tags
            .iter()
            .map(|&t| match t {
                0 => 0,
                t if t == self.full_tag() => self.n,
                _ => 1,
            })
            .sum()
    }

    pub fn zero_count(&self) -> usize {
        self.tags.iter().filter(|&&t| t == 0).count()
    }

    pub fn uses_full(&self) -> bool {
        self.tags.contains(&self.full_tag())
    }

    /// Vertices carrying `label`.
    pub fn class(&self, label: Label) -> VertexSet {
        VertexSet::from_vertices(self.len(), (0..self.len()).filter(|&v| self.label(v) == label))
    }

    /// Renames classes `1..=n` by first occurrence. Weight and legality are
    /// invariant under renaming.
    pub fn canonical(&self) -> Labelling {
        let mut map = vec![0u32; self.n + 2];
        map[self.full_tag() as usize] = self.full_tag();
        let mut next = 1;
        let tags = self
            .tags
            .iter()
            .map(|&t| {
                if t == 0 || t == self.full_tag() {
                    return t;
                }
                if map[t as usize] == 0 {
                    map[t as usize] = next;
                    next += 1;
                }
                map[t as usize]
            })
            .collect();
        Labelling { n: self.n, tags }
    }

    /// Labels as strings, `[n]` for the full label.
    pub fn to_strings(&self) -> Vec<String> {
        self.labels().iter().map(Label::to_string).collect()
    }
}

impl fmt::Debug for Labelling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Labelling(n={}, [{}])", self.n, self.to_strings().join(","))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    /// Which of the four legality conditions failed.
    pub condition: u8,
    pub vertices: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LegalityReport {
    pub violations: Vec<Violation>,
}

impl LegalityReport {
    pub fn legal(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn violates(&self, condition: u8) -> bool {
        self.violations.iter().any(|v| v.condition == condition)
    }
}

impl fmt::Display for LegalityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.legal() {
            return f.write_str("legal");
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            write!(f, "condition {} at {:?}", v.condition, v.vertices)?;
        }
        Ok(())
    }
}

fn check_len(g: &Graph, l: &Labelling) -> Result<(), LabellingError> {
    if g.order() != l.len() {
        return Err(LabellingError::Length {
            expected: g.order(),
            got: l.len(),
        });
    }
    Ok(())
}

/// Lists every violated legality condition with the offending vertices.
pub fn check_legal(g: &Graph, l: &Labelling) -> Result<LegalityReport, LabellingError> {
    check_len(g, l)?;
    let mut violations = Vec::new();
    for (u, v) in g.edges() {
        match (l.label(u), l.label(v)) {
            (Label::Zero, _) | (_, Label::Zero) => {}
            (Label::Full, Label::Full) => violations.push(Violation {
                condition: 3,
                vertices: vec![u, v],
            }),
            (Label::Class(a), Label::Class(b)) if a == b => {}
            _ => violations.push(Violation {
                condition: 1,
                vertices: vec![u, v],
            }),
        }
    }
    for v in 0..g.order() {
        match l.label(v) {
            Label::Class(k) => {
                if !g.neighbor_iter(v).any(|u| l.label(u) == Label::Class(k)) {
                    violations.push(Violation {
                        condition: 2,
                        vertices: vec![v],
                    });
                }
            }
            Label::Zero => {
                let mut first: Option<u32> = None;
                let ok = g.neighbor_iter(v).any(|u| match l.label(u) {
                    Label::Full => true,
                    Label::Class(k) => match first {
                        None => {
                            first = Some(k);
                            false
                        }
                        Some(f) => f != k,
                    },
                    Label::Zero => false,
                });
                if !ok {
                    violations.push(Violation {
                        condition: 4,
                        vertices: vec![v],
                    });
                }
            }
            Label::Full => {}
        }
    }
    violations.sort_by(|a, b| (a.condition, &a.vertices).cmp(&(b.condition, &b.vertices)));
    Ok(LegalityReport { violations })
}

/// The set `{(g, k) : g ∈ V_k} ∪ (V_[n] × [n])` in `G × K_n`, with clique
/// vertex `k` stored as coordinate `k - 1`. Refuses illegal labellings.
pub fn to_independent_set(g: &Graph, l: &Labelling) -> Result<VertexSet, LabellingError> {
    let report = check_legal(g, l)?;
    if !report.legal() {
        return Err(LabellingError::Illegal(report));
    }
    let n = l.n();
    let mut s = VertexSet::new(g.order() * n);
    for v in 0..g.order() {
        match l.label(v) {
            Label::Zero => {}
            Label::Class(k) => {
                s.insert(v * n + k as usize - 1);
            }
            Label::Full => (0..n).for_each(|j| {
                s.insert(v * n + j);
            }),
        }
    }
    Ok(s)
}

/// Reads off the weak partition generated by a maximal independent set of
/// `G × K_n`.
pub fn from_independent_set(p: &ProductGraph, s: &VertexSet) -> Result<Labelling, LabellingError> {
    let n = p.n_h();
    if n < 2 || !p.right().is_complete() {
        return Err(LabellingError::NotCliqueProduct);
    }
    let mut tags = Vec::with_capacity(p.n_g());
    for g in 0..p.n_g() {
        let hits: Vec<usize> = (0..n).filter(|&h| s.contains(p.encode(g, h))).collect();
        let tag = match hits.len() {
            0 => 0,
            k if k == n => n as u32 + 1,
            1 => hits[0] as u32 + 1,
            size => return Err(LabellingError::LayerSize { vertex: g, size, n }),
        };
        tags.push(tag);
    }
    Ok(Labelling::from_tags_unchecked(n, tags))
}
