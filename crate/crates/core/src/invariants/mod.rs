//! Exact domination-type invariants and the predicates that verify them.
//!
//! Every solver returns the lexicographically least optimal witness, so the
//! answer does not depend on the worker count or on search order.

mod clique;
mod cover;
mod enumerate;

use std::fmt;
use std::ops::ControlFlow;
use std::str::FromStr;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::bitset::{self, VertexSet};
use crate::graph::Graph;
use crate::options::{Deadline, SolveError, SolveOptions};

use cover::CoverKind;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Invariant {
    /// i(G), the independent domination number.
    #[serde(rename = "i")]
    IndependentDomination,
    /// α(G)
    #[serde(rename = "alpha")]
    Independence,
    /// γ(G)
    #[serde(rename = "gamma")]
    Domination,
    /// γ_t(G)
    #[serde(rename = "gamma_t")]
    TotalDomination,
    /// ρ(G), the 2-packing number.
    #[serde(rename = "rho")]
    TwoPacking,
}

impl Invariant {
    pub const ALL: [Invariant; 5] = [
        Invariant::IndependentDomination,
        Invariant::Independence,
        Invariant::Domination,
        Invariant::TotalDomination,
        Invariant::TwoPacking,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Invariant::IndependentDomination => "i",
            Invariant::Independence => "alpha",
            Invariant::Domination => "gamma",
            Invariant::TotalDomination => "gamma_t",
            Invariant::TwoPacking => "rho",
        }
    }

    /// Whether the invariant is a minimum (witness size is an upper bound)
    /// or a maximum (witness size is a lower bound).
    pub fn is_minimum(self) -> bool {
        matches!(
            self,
            Invariant::IndependentDomination | Invariant::Domination | Invariant::TotalDomination
        )
    }
}

impl fmt::Display for Invariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Invariant {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        Invariant::ALL
            .into_iter()
            .find(|i| i.name() == s)
            .ok_or_else(|| format!("unknown invariant `{s}` (expected i, alpha, gamma, gamma_t or rho)"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantResult {
    pub invariant: Invariant,
    pub value: usize,
    pub witness: VertexSet,
    pub method: &'static str,
    pub elapsed: Duration,
}

// ---------------------------------------------------------------------------
// Predicates. These are the verification side and deliberately share no code
// with the solvers beyond the bitset primitives.

pub fn is_independent(g: &Graph, s: &VertexSet) -> bool {
    s.iter().all(|v| !bitset::any_and(g.row(v), s.words()))
}

pub fn is_dominating(g: &Graph, s: &VertexSet) -> bool {
    (0..g.order()).all(|v| s.contains(v) || bitset::any_and(g.row(v), s.words()))
}

/// Independent, and every vertex outside `s` has a neighbour in `s`.
pub fn is_maximal_independent(g: &Graph, s: &VertexSet) -> bool {
    is_independent(g, s) && is_dominating(g, s)
}

/// Every vertex of the graph, members of `s` included, has a neighbour in `s`.
pub fn is_total_dominating(g: &Graph, s: &VertexSet) -> bool {
    (0..g.order()).all(|v| bitset::any_and(g.row(v), s.words()))
}

/// Pairwise distance at least 3, i.e. closed neighbourhoods pairwise disjoint.
pub fn is_two_packing(g: &Graph, s: &VertexSet) -> bool {
    let mut seen = VertexSet::new(g.order());
    for v in s {
        let nv = g.closed_neighborhood(v);
        if !nv.is_disjoint(&seen) {
            return false;
        }
        seen.union_with(&nv);
    }
    true
}

/// Checks `s` against the defining predicate of `inv`.
pub fn witness_satisfies(g: &Graph, inv: Invariant, s: &VertexSet) -> bool {
    if s.universe() != g.order() {
        return false;
    }
    match inv {
        Invariant::IndependentDomination => is_maximal_independent(g, s),
        Invariant::Independence => is_independent(g, s),
        Invariant::Domination => is_dominating(g, s),
        Invariant::TotalDomination => is_total_dominating(g, s),
        Invariant::TwoPacking => is_two_packing(g, s),
    }
}

// ---------------------------------------------------------------------------
// Exact solvers.

fn min_cover(
    g: &Graph,
    inv: Invariant,
    kind: CoverKind,
    method: &'static str,
    opts: &SolveOptions,
) -> Result<InvariantResult, SolveError> {
    opts.check_cap(g.order())?;
    let start = Instant::now();
    let deadline = Deadline::new(opts.budget);
    let (value, _) = cover::minimum(g, kind, opts, &deadline)?
        .ok_or_else(|| SolveError::Undefined(inv.name(), "no feasible set".into()))?;
    let witness = cover::canonical(g, kind, value, &deadline)?;
    debug_assert_eq!(witness.len(), value);
    Ok(InvariantResult {
        invariant: inv,
        value,
        witness,
        method,
        elapsed: start.elapsed(),
    })
}

/// i(G): the smallest maximal independent set.
pub fn independent_domination_number(g: &Graph, opts: &SolveOptions) -> Result<InvariantResult, SolveError> {
    min_cover(
        g,
        Invariant::IndependentDomination,
        CoverKind::IndependentDominating,
        "branch-and-bound/cover",
        opts,
    )
}

/// γ(G)
pub fn domination_number(g: &Graph, opts: &SolveOptions) -> Result<InvariantResult, SolveError> {
    min_cover(g, Invariant::Domination, CoverKind::Dominating, "branch-and-bound/cover", opts)
}

/// γ_t(G); undefined when G has an isolated vertex.
pub fn total_domination_number(g: &Graph, opts: &SolveOptions) -> Result<InvariantResult, SolveError> {
    if let Some(v) = (0..g.order()).find(|&v| g.degree(v) == 0) {
        return Err(SolveError::Undefined(
            "gamma_t",
            format!("vertex {} is isolated", g.label(v)),
        ));
    }
    min_cover(
        g,
        Invariant::TotalDomination,
        CoverKind::TotalDominating,
        "branch-and-bound/cover",
        opts,
    )
}

fn max_independent(
    g: &Graph,
    inv: Invariant,
    method: &'static str,
    opts: &SolveOptions,
    start: Instant,
) -> Result<InvariantResult, SolveError> {
    let deadline = Deadline::new(opts.budget);
    let value = match clique::max_independent_in(g, &VertexSet::full(g.order()), 0, false, &deadline)? {
        Some(s) => s.len(),
        None => 0,
    };
    let witness = clique::canonical(g, value, &deadline)?;
    Ok(InvariantResult {
        invariant: inv,
        value,
        witness,
        method,
        elapsed: start.elapsed(),
    })
}

/// α(G)
pub fn independence_number(g: &Graph, opts: &SolveOptions) -> Result<InvariantResult, SolveError> {
    opts.check_cap(g.order())?;
    max_independent(g, Invariant::Independence, "branch-and-bound/clique-cover", opts, Instant::now())
}

/// ρ(G), computed as α of the distance-≤2 graph.
pub fn two_packing_number(g: &Graph, opts: &SolveOptions) -> Result<InvariantResult, SolveError> {
    opts.check_cap(g.order())?;
    let start = Instant::now();
    max_independent(&g.square(), Invariant::TwoPacking, "alpha-of-square", opts, start)
}

pub fn compute(g: &Graph, inv: Invariant, opts: &SolveOptions) -> Result<InvariantResult, SolveError> {
    match inv {
        Invariant::IndependentDomination => independent_domination_number(g, opts),
        Invariant::Independence => independence_number(g, opts),
        Invariant::Domination => domination_number(g, opts),
        Invariant::TotalDomination => total_domination_number(g, opts),
        Invariant::TwoPacking => two_packing_number(g, opts),
    }
}

/// Decides `i(G) <= k`, returning a maximal independent set of size at most
/// `k` when one exists.
pub fn independent_dominating_set_within(
    g: &Graph,
    k: usize,
    opts: &SolveOptions,
) -> Result<Option<VertexSet>, SolveError> {
    opts.check_cap(g.order())?;
    let deadline = Deadline::new(opts.budget);
    let n = g.order();
    cover::feasible(
        g,
        CoverKind::IndependentDominating,
        &VertexSet::new(n),
        &VertexSet::new(n),
        k,
        &deadline,
    )
}

/// A maximal independent set built by repeatedly taking an undominated
/// vertex that dominates the most undominated vertices. Any size, no cap.
pub fn greedy_maximal_independent_set(g: &Graph) -> VertexSet {
    let n = g.order();
    let mut set = VertexSet::new(n);
    let mut free = VertexSet::full(n);
    while !free.is_empty() {
        let v = free
            .iter()
            .max_by_key(|&v| (g.closed_neighborhood(v).intersection_len(&free), std::cmp::Reverse(v)))
            .expect("nonempty");
        set.insert(v);
        free.difference_with(&g.closed_neighborhood(v));
    }
    set
}

/// Visits every maximal independent set exactly once, in a fixed order.
/// Returns how many were visited.
pub fn enumerate_maximal_independent_sets<F>(
    g: &Graph,
    opts: &SolveOptions,
    mut visit: F,
) -> Result<usize, SolveError>
where
    F: FnMut(&VertexSet) -> ControlFlow<()>,
{
    opts.check_cap(g.order())?;
    Ok(enumerate::bron_kerbosch(g, &mut visit))
}

/// Collects all maximal independent sets.
pub fn maximal_independent_sets(g: &Graph, opts: &SolveOptions) -> Result<Vec<VertexSet>, SolveError> {
    let mut out = Vec::new();
    enumerate_maximal_independent_sets(g, opts, |s| {
        out.push(s.clone());
        ControlFlow::Continue(())
    })?;
    Ok(out)
}
