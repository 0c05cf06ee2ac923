//! Closed-form bounds on i(G × H) and α(G × H), each evaluated against
//! exact values or, for products beyond the solver cap, against a witness.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bitset::VertexSet;
use crate::families::{FamilyError, FamilySpec};
use crate::graph::Graph;
use crate::invariants::{self, is_maximal_independent, Invariant};
use crate::options::{SolveError, SolveOptions};
use crate::product::direct_product;

#[derive(Debug, Error)]
pub enum BoundError {
    #[error(transparent)]
    Solve(#[from] SolveError),
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error("manifest line {line}: {msg}")]
    Manifest { line: usize, msg: String },
    #[error("witness is not a maximal independent set of the product")]
    BadWitness,
    #[error("unknown bound {0:?}")]
    UnknownBound(String),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundId {
    /// i(G×H) ≤ min{i(G)n(H), i(H)n(G)}
    ProductUpper,
    /// α(G×H) ≥ max{α(G)n(H), α(H)n(G)}
    AlphaLower,
    /// γ_t(G) ≤ i(G×K_2)
    K2Lower,
    /// i(G×K_2) ≤ min{2i(G), n(G)}
    K2Upper,
    /// i(G×H) ≥ max{ρ(G)γ_t(H), ρ(H)γ_t(G)}
    PackingTotal,
    /// i(G×H) ≥ max{i(G), i(H)} for claw-free factors
    ClawFree,
    /// i(G×H) ≥ max{n(H)γ(G)/(Δ(H)+1), n(G)γ(H)/(Δ(G)+1)}
    DegreeRatio,
    /// i(G×H) ≥ 2·max{γ(G), γ(H)} for connected bipartite factors
    Bipartite,
    /// Conjectured: i(G×H) ≥ i(G)i(H)
    ProductOfFactors,
    /// Asked: i(G×H) ≥ min{i(G), i(H)}
    MinOfFactors,
}

impl BoundId {
    pub const ALL: [BoundId; 10] = [
        BoundId::ProductUpper,
        BoundId::AlphaLower,
        BoundId::K2Lower,
        BoundId::K2Upper,
        BoundId::PackingTotal,
        BoundId::ClawFree,
        BoundId::DegreeRatio,
        BoundId::Bipartite,
        BoundId::ProductOfFactors,
        BoundId::MinOfFactors,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BoundId::ProductUpper => "product_upper",
            BoundId::AlphaLower => "alpha_lower",
            BoundId::K2Lower => "k2_lower",
            BoundId::K2Upper => "k2_upper",
            BoundId::PackingTotal => "packing_total",
            BoundId::ClawFree => "claw_free",
            BoundId::DegreeRatio => "degree_ratio",
            BoundId::Bipartite => "bipartite",
            BoundId::ProductOfFactors => "product_of_factors",
            BoundId::MinOfFactors => "min_of_factors",
        }
    }

    /// `lhs ≥ rhs` for lower bounds, `lhs ≤ rhs` for upper bounds.
    pub fn direction(self) -> Direction {
        match self {
            BoundId::ProductUpper | BoundId::K2Upper => Direction::AtMost,
            _ => Direction::AtLeast,
        }
    }

    /// Whether the relation is a proved theorem rather than a conjecture or
    /// an open question.
    pub fn is_proved(self) -> bool {
        !matches!(self, BoundId::ProductOfFactors | BoundId::MinOfFactors)
    }
}

impl fmt::Display for BoundId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BoundId {
    type Err = BoundError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        BoundId::ALL
            .into_iter()
            .find(|b| b.name() == s)
            .ok_or_else(|| BoundError::UnknownBound(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Direction {
    AtLeast,
    AtMost,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundVerdict {
    Holds,
    Fails,
    /// `lhs ≤ |witness| < rhs`, so a lower bound fails without knowing lhs.
    FailsViaWitness,
    Unchecked,
    Inapplicable,
}

impl fmt::Display for BoundVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BoundVerdict::Holds => "holds",
            BoundVerdict::Fails => "fails",
            BoundVerdict::FailsViaWitness => "fails_via_witness",
            BoundVerdict::Unchecked => "unchecked",
            BoundVerdict::Inapplicable => "inapplicable",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub id: BoundId,
    pub applicable: bool,
    /// The hypothesis checked, or why it failed.
    pub reason: String,
    pub direction: Direction,
    /// Exact left-hand side, when computed.
    pub lhs: Option<usize>,
    /// Size of a verified maximal independent set, an upper bound on lhs.
    pub witness_bound: Option<usize>,
    pub rhs: Option<usize>,
    /// The unrounded right-hand side as `(numerator, denominator)` when it
    /// is a ratio.
    pub ratio: Option<(usize, usize)>,
    pub verdict: BoundVerdict,
}

impl BoundReport {
    fn inapplicable(id: BoundId, reason: String) -> Self {
        BoundReport {
            id,
            applicable: false,
            reason,
            direction: id.direction(),
            lhs: None,
            witness_bound: None,
            rhs: None,
            ratio: None,
            verdict: BoundVerdict::Inapplicable,
        }
    }

    fn evaluate(id: BoundId, reason: &str, lhs: Option<usize>, witness_bound: Option<usize>, rhs: usize) -> Self {
        let verdict = match (lhs, witness_bound, id.direction()) {
            (Some(l), _, Direction::AtLeast) if l >= rhs => BoundVerdict::Holds,
            (Some(l), _, Direction::AtMost) if l <= rhs => BoundVerdict::Holds,
            (Some(_), _, _) => BoundVerdict::Fails,
            (None, Some(w), Direction::AtLeast) if w < rhs => BoundVerdict::FailsViaWitness,
            _ => BoundVerdict::Unchecked,
        };
        BoundReport {
            id,
            applicable: true,
            reason: reason.to_string(),
            direction: id.direction(),
            lhs,
            witness_bound,
            rhs: Some(rhs),
            ratio: None,
            verdict,
        }
    }

    /// True unless a proved bound was found to fail.
    pub fn consistent(&self) -> bool {
        !(self.id.is_proved() && matches!(self.verdict, BoundVerdict::Fails | BoundVerdict::FailsViaWitness))
    }
}

fn value(g: &Graph, inv: Invariant, opts: &SolveOptions) -> Result<usize, SolveError> {
    Ok(invariants::compute(g, inv, opts)?.value)
}

/// Exact i(G×H), or `None` when the product is beyond the cap.
pub fn product_i(g: &Graph, h: &Graph, opts: &SolveOptions) -> Result<Option<usize>, SolveError> {
    product_value(g, h, Invariant::IndependentDomination, opts)
}

fn product_value(g: &Graph, h: &Graph, inv: Invariant, opts: &SolveOptions) -> Result<Option<usize>, SolveError> {
    let order = g.order().checked_mul(h.order());
    if order.is_none_or(|n| n > opts.cap) {
        return Ok(None);
    }
    let Ok(p) = direct_product(g, h) else {
        return Ok(None);
    };
    match invariants::compute(p.graph(), inv, opts) {
        Ok(r) => Ok(Some(r.value)),
        Err(SolveError::BudgetExhausted) => Ok(None),
        Err(e) => Err(e),
    }
}

fn isolate_free(g: &Graph, h: &Graph) -> Result<(), String> {
    if g.has_isolated_vertex() {
        Err("first factor has an isolated vertex".into())
    } else if h.has_isolated_vertex() {
        Err("second factor has an isolated vertex".into())
    } else {
        Ok(())
    }
}

const NO_ISOLATES: &str = "no isolated vertices";

fn product_upper_with(g: &Graph, h: &Graph, lhs: Option<usize>, opts: &SolveOptions) -> Result<BoundReport, SolveError> {
    let id = BoundId::ProductUpper;
    if let Err(r) = isolate_free(g, h) {
        return Ok(BoundReport::inapplicable(id, r));
    }
    let ig = value(g, Invariant::IndependentDomination, opts)?;
    let ih = value(h, Invariant::IndependentDomination, opts)?;
    let rhs = (ig * h.order()).min(ih * g.order());
    Ok(BoundReport::evaluate(id, NO_ISOLATES, lhs, None, rhs))
}

pub fn product_upper_bound(g: &Graph, h: &Graph, opts: &SolveOptions) -> Result<BoundReport, SolveError> {
    product_upper_with(g, h, product_i(g, h, opts)?, opts)
}

pub fn alpha_lower_bound(g: &Graph, h: &Graph, opts: &SolveOptions) -> Result<BoundReport, SolveError> {
    let id = BoundId::AlphaLower;
    if let Err(r) = isolate_free(g, h) {
        return Ok(BoundReport::inapplicable(id, r));
    }
    let ag = value(g, Invariant::Independence, opts)?;
    let ah = value(h, Invariant::Independence, opts)?;
    let rhs = (ag * h.order()).max(ah * g.order());
    let lhs = product_value(g, h, Invariant::Independence, opts)?;
    Ok(BoundReport::evaluate(id, NO_ISOLATES, lhs, None, rhs))
}

/// `γ_t(G) ≤ i(G×K_2)` and `i(G×K_2) ≤ min{2i(G), n(G)}`.
pub fn k2_sandwich(g: &Graph, opts: &SolveOptions) -> Result<[BoundReport; 2], SolveError> {
    if let Some(v) = (0..g.order()).find(|&v| g.degree(v) == 0) {
        let reason = format!("vertex {v} is isolated");
        return Ok([
            BoundReport::inapplicable(BoundId::K2Lower, reason.clone()),
            BoundReport::inapplicable(BoundId::K2Upper, reason),
        ]);
    }
    let k2 = crate::families::complete(2);
    let mid = product_i(g, &k2, opts)?;
    let gt = value(g, Invariant::TotalDomination, opts)?;
    let ig = value(g, Invariant::IndependentDomination, opts)?;
    // γ_t(G) ≤ i(G×K_2) reads as i(G×K_2) ≥ γ_t(G).
    let lower = BoundReport::evaluate(BoundId::K2Lower, NO_ISOLATES, mid, None, gt);
    let upper = BoundReport::evaluate(BoundId::K2Upper, NO_ISOLATES, mid, None, (2 * ig).min(g.order()));
    Ok([lower, upper])
}

fn packing_total_with(g: &Graph, h: &Graph, lhs: Option<usize>, opts: &SolveOptions) -> Result<BoundReport, SolveError> {
    let id = BoundId::PackingTotal;
    if let Err(r) = isolate_free(g, h) {
        return Ok(BoundReport::inapplicable(id, r));
    }
    let rg = value(g, Invariant::TwoPacking, opts)?;
    let rh = value(h, Invariant::TwoPacking, opts)?;
    let tg = value(g, Invariant::TotalDomination, opts)?;
    let th = value(h, Invariant::TotalDomination, opts)?;
    Ok(BoundReport::evaluate(id, "minimum degree at least 1", lhs, None, (rg * th).max(rh * tg)))
}

pub fn packing_total_bound(g: &Graph, h: &Graph, opts: &SolveOptions) -> Result<BoundReport, SolveError> {
    packing_total_with(g, h, product_i(g, h, opts)?, opts)
}

fn clawfree_with(g: &Graph, h: &Graph, lhs: Option<usize>, opts: &SolveOptions) -> Result<BoundReport, SolveError> {
    let id = BoundId::ClawFree;
    for (name, x) in [("first", g), ("second", h)] {
        if let Some(c) = x.find_claw() {
            return Ok(BoundReport::inapplicable(
                id,
                format!("{name} factor has a claw centred at {} with leaves {:?}", c[0], &c[1..]),
            ));
        }
    }
    if let Err(r) = isolate_free(g, h) {
        return Ok(BoundReport::inapplicable(id, r));
    }
    let ig = value(g, Invariant::IndependentDomination, opts)?;
    let ih = value(h, Invariant::IndependentDomination, opts)?;
    Ok(BoundReport::evaluate(id, "claw-free, no isolated vertices", lhs, None, ig.max(ih)))
}

pub fn clawfree_bound(g: &Graph, h: &Graph, opts: &SolveOptions) -> Result<BoundReport, SolveError> {
    clawfree_with(g, h, product_i(g, h, opts)?, opts)
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn degree_ratio_with(g: &Graph, h: &Graph, lhs: Option<usize>, opts: &SolveOptions) -> Result<BoundReport, SolveError> {
    let id = BoundId::DegreeRatio;
    if !g.is_connected() || !h.is_connected() {
        return Ok(BoundReport::inapplicable(id, "a factor is disconnected".into()));
    }
    let a = (h.order() * value(g, Invariant::Domination, opts)?, h.max_degree() + 1);
    let b = (g.order() * value(h, Invariant::Domination, opts)?, g.max_degree() + 1);
    let (num, den) = if a.0 * b.1 >= b.0 * a.1 { a } else { b };
    let d = gcd(num, den).max(1);
    let mut r = BoundReport::evaluate(id, "connected", lhs, None, num.div_ceil(den));
    r.ratio = Some((num / d, den / d));
    Ok(r)
}

pub fn degree_ratio_bound(g: &Graph, h: &Graph, opts: &SolveOptions) -> Result<BoundReport, SolveError> {
    degree_ratio_with(g, h, product_i(g, h, opts)?, opts)
}

fn bipartite_with(g: &Graph, h: &Graph, lhs: Option<usize>, opts: &SolveOptions) -> Result<BoundReport, SolveError> {
    let id = BoundId::Bipartite;
    for (name, x) in [("first", g), ("second", h)] {
        if !x.is_connected() {
            return Ok(BoundReport::inapplicable(id, format!("{name} factor is disconnected")));
        }
        if x.order() < 2 {
            return Ok(BoundReport::inapplicable(id, format!("{name} factor has no edge")));
        }
        if !x.is_bipartite() {
            return Ok(BoundReport::inapplicable(id, format!("{name} factor has an odd cycle")));
        }
    }
    let rhs = 2 * value(g, Invariant::Domination, opts)?.max(value(h, Invariant::Domination, opts)?);
    Ok(BoundReport::evaluate(id, "connected bipartite", lhs, None, rhs))
}

pub fn bipartite_bound(g: &Graph, h: &Graph, opts: &SolveOptions) -> Result<BoundReport, SolveError> {
    bipartite_with(g, h, product_i(g, h, opts)?, opts)
}

/// Checks `i(G×H) ≥ i(G)i(H)` and `i(G×H) ≥ min{i(G), i(H)}`. When the
/// product is beyond the cap, a maximal independent set of it can stand in
/// for the exact value.
pub fn conjecture_scan(
    g: &Graph,
    h: &Graph,
    witness: Option<&VertexSet>,
    opts: &SolveOptions,
) -> Result<[BoundReport; 2], BoundError> {
    let lhs = product_i(g, h, opts)?;
    conjecture_scan_with(g, h, lhs, witness, opts)
}

fn conjecture_scan_with(
    g: &Graph,
    h: &Graph,
    lhs: Option<usize>,
    witness: Option<&VertexSet>,
    opts: &SolveOptions,
) -> Result<[BoundReport; 2], BoundError> {
    let witness_bound = match (lhs, witness) {
        (None, Some(w)) => {
            let p = direct_product(g, h).map_err(|_| BoundError::BadWitness)?;
            if w.universe() != p.graph().order() || !is_maximal_independent(p.graph(), w) {
                return Err(BoundError::BadWitness);
            }
            Some(w.len())
        }
        _ => None,
    };
    let ig = value(g, Invariant::IndependentDomination, opts)?;
    let ih = value(h, Invariant::IndependentDomination, opts)?;
    let reason = "all graphs";
    Ok([
        BoundReport::evaluate(BoundId::ProductOfFactors, reason, lhs, witness_bound, ig * ih),
        BoundReport::evaluate(BoundId::MinOfFactors, reason, lhs, witness_bound, ig.min(ih)),
    ])
}

/// Every two-factor report for one pair, sharing a single solve of i(G×H).
pub fn all_bounds(g: &Graph, h: &Graph, opts: &SolveOptions) -> Result<Vec<BoundReport>, BoundError> {
    let lhs = product_i(g, h, opts)?;
    let mut out = vec![
        product_upper_with(g, h, lhs, opts)?,
        alpha_lower_bound(g, h, opts)?,
        packing_total_with(g, h, lhs, opts)?,
        clawfree_with(g, h, lhs, opts)?,
        degree_ratio_with(g, h, lhs, opts)?,
        bipartite_with(g, h, lhs, opts)?,
    ];
    out.extend(conjecture_scan_with(g, h, lhs, None, opts)?);
    Ok(out)
}

/// One row of a batch run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BatchRow {
    pub pair: String,
    pub report: BoundReport,
}

/// Runs [`all_bounds`] on every pair of a manifest. Each nonblank line holds
/// two family specs separated by whitespace; `#` starts a comment.
pub fn run_manifest(text: &str, opts: &SolveOptions) -> Result<Vec<BatchRow>, BoundError> {
    let mut rows = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let [a, b] = fields[..] else {
            return Err(BoundError::Manifest {
                line: i + 1,
                msg: format!("expected two family specs, found {}", fields.len()),
            });
        };
        let parse = |s: &str| {
            s.parse::<FamilySpec>()
                .and_then(|f| f.build())
                .map_err(|e| BoundError::Manifest {
                    line: i + 1,
                    msg: e.to_string(),
                })
        };
        let (g, h) = (parse(a)?, parse(b)?);
        let pair = format!("{a} x {b}");
        for report in all_bounds(&g.graph, &h.graph, opts)? {
            rows.push(BatchRow {
                pair: pair.clone(),
                report,
            });
        }
    }
    Ok(rows)
}

/// CSV with columns `bound_id,pair,lhs,rhs,verdict`; unknown values are
/// left empty.
pub fn batch_csv(rows: &[BatchRow]) -> Result<String, BoundError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["bound_id", "pair", "lhs", "rhs", "verdict"])?;
    let opt = |v: Option<usize>| v.map(|x| x.to_string()).unwrap_or_default();
    for r in rows {
        w.write_record([
            r.report.id.name().to_string(),
            r.pair.clone(),
            opt(r.report.lhs.or(r.report.witness_bound)),
            opt(r.report.rhs),
            r.report.verdict.to_string(),
        ])?;
    }
    let bytes = w.into_inner().map_err(|e| BoundError::Csv(e.into_error().into()))?;
    Ok(String::from_utf8(bytes).expect("csv output is UTF-8"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete, complete_bipartite, cycle, path, product_witness, FamilyKind, ProductFamily};

    fn opts() -> SolveOptions {
        SolveOptions::default()
    }

    #[test]
    fn product_upper_examples() {
        let r = product_upper_bound(&path(5), &complete(3), &opts()).unwrap();
        assert_eq!((r.rhs, r.lhs, r.verdict), (Some(5), Some(4), BoundVerdict::Holds));
        let r = product_upper_bound(&complete(2), &complete(2), &opts()).unwrap();
        assert_eq!((r.rhs, r.lhs), (Some(2), Some(2)));
        let r = product_upper_bound(&complete_bipartite(3, 3), &complete(2), &opts()).unwrap();
        assert_eq!((r.rhs, r.lhs), (Some(6), Some(6)));
        let r = product_upper_bound(&Graph::empty(2), &complete(2), &opts()).unwrap();
        assert_eq!(r.verdict, BoundVerdict::Inapplicable);
    }

    #[test]
    fn alpha_examples() {
        let r = alpha_lower_bound(&cycle(5), &complete(2), &opts()).unwrap();
        assert_eq!((r.rhs, r.lhs), (Some(5), Some(5)));
        let r = alpha_lower_bound(&complete(2), &complete(2), &opts()).unwrap();
        assert_eq!((r.rhs, r.lhs), (Some(2), Some(2)));
        let r = alpha_lower_bound(&path(4), &complete(3), &opts()).unwrap();
        assert_eq!(r.rhs, Some(6));
        assert_eq!(r.verdict, BoundVerdict::Holds);
    }

    #[test]
    fn k2_examples() {
        let [lo, hi] = k2_sandwich(&complete_bipartite(1, 4), &opts()).unwrap();
        assert_eq!((lo.rhs, lo.lhs), (Some(2), Some(2)));
        assert_eq!(hi.verdict, BoundVerdict::Holds);
        let [_, hi] = k2_sandwich(&complete_bipartite(3, 3), &opts()).unwrap();
        assert_eq!((hi.rhs, hi.lhs), (Some(6), Some(6)));
        let [lo, hi] = k2_sandwich(&path(6), &opts()).unwrap();
        assert_eq!((lo.rhs, lo.lhs, hi.rhs), (Some(4), Some(4), Some(4)));
        let [lo, _] = k2_sandwich(&Graph::empty(3), &opts()).unwrap();
        assert!(!lo.applicable);
    }

    #[test]
    fn packing_examples() {
        let r = packing_total_bound(&path(7), &cycle(6), &opts().with_cap(42)).unwrap();
        assert_eq!(r.rhs, Some(12));
        assert_eq!(r.verdict, BoundVerdict::Holds);
        let r = packing_total_bound(&complete(2), &complete(2), &opts()).unwrap();
        assert_eq!((r.rhs, r.lhs), (Some(2), Some(2)));
        let r = packing_total_bound(&cycle(9), &complete(3), &opts()).unwrap();
        assert_eq!((r.rhs, r.lhs), (Some(6), Some(6)));
    }

    #[test]
    fn clawfree_examples() {
        let r = clawfree_bound(&cycle(5), &cycle(7), &opts()).unwrap();
        assert_eq!(r.rhs, Some(3));
        assert_eq!(r.verdict, BoundVerdict::Holds);
        let r = clawfree_bound(&complete(3), &complete(3), &opts()).unwrap();
        assert_eq!((r.rhs, r.lhs), (Some(1), Some(3)));
        let r = clawfree_bound(&complete_bipartite(1, 3), &cycle(4), &opts()).unwrap();
        assert_eq!(r.verdict, BoundVerdict::Inapplicable);
        assert!(r.reason.contains("claw"));
    }

    #[test]
    fn degree_ratio_examples() {
        let r = degree_ratio_bound(&cycle(6), &cycle(6), &opts()).unwrap();
        assert_eq!((r.rhs, r.ratio), (Some(4), Some((4, 1))));
        let r = degree_ratio_bound(&complete(2), &complete(2), &opts()).unwrap();
        assert_eq!((r.rhs, r.ratio, r.lhs), (Some(1), Some((1, 1)), Some(2)));
        let r = degree_ratio_bound(&path(5), &complete(3), &opts()).unwrap();
        assert_eq!((r.rhs, r.ratio), (Some(2), Some((2, 1))));
        let r = degree_ratio_bound(&path(4), &complete(3), &opts()).unwrap();
        assert_eq!((r.rhs, r.ratio), (Some(2), Some((2, 1))));
        let r = degree_ratio_bound(&path(5), &cycle(4), &opts()).unwrap();
        assert_eq!((r.rhs, r.ratio), (Some(4), Some((10, 3))));
    }

    #[test]
    fn bipartite_examples() {
        let r = bipartite_bound(&cycle(6), &cycle(6), &opts()).unwrap();
        assert_eq!(r.rhs, Some(4));
        assert_eq!(r.verdict, BoundVerdict::Holds);
        let r = bipartite_bound(&complete(2), &complete(2), &opts()).unwrap();
        assert_eq!((r.rhs, r.lhs), (Some(2), Some(2)));
        let r = bipartite_bound(&path(4), &path(4), &opts()).unwrap();
        assert_eq!(r.rhs, Some(4));
        assert_eq!(r.verdict, BoundVerdict::Holds);
        assert!(!bipartite_bound(&cycle(5), &cycle(6), &opts()).unwrap().applicable);
        assert!(!bipartite_bound(&Graph::empty(1), &complete(2), &opts()).unwrap().applicable);
    }

    #[test]
    fn conjecture_examples() {
        let (p, w) = product_witness(ProductFamily::XCocktail { m: 3, r: 3 }).unwrap();
        let x3 = FamilySpec::new(FamilyKind::X, &[3]).build().unwrap().graph;
        let h3 = FamilySpec::new(FamilyKind::Cocktail, &[3]).build().unwrap().graph;
        assert_eq!(p.n_g(), x3.order());
        let [conj, _] = conjecture_scan(&x3, &h3, Some(&w), &opts()).unwrap();
        assert_eq!((conj.witness_bound, conj.rhs), (Some(8), Some(10)));
        assert_eq!(conj.verdict, BoundVerdict::FailsViaWitness);

        let [a, b] = conjecture_scan(&complete(2), &complete(2), None, &opts()).unwrap();
        assert_eq!((a.verdict, b.verdict), (BoundVerdict::Holds, BoundVerdict::Holds));
        assert_eq!((a.rhs, b.rhs), (Some(1), Some(1)));
    }

    #[test]
    fn manifest_and_csv() {
        let rows = run_manifest("# pairs\npath:5 complete:3\n", &opts()).unwrap();
        assert_eq!(rows.len(), 8);
        let csv = batch_csv(&rows).unwrap();
        assert!(csv.starts_with("bound_id,pair,lhs,rhs,verdict\n"));
        assert!(csv.contains("product_upper,path:5 x complete:3,4,5,holds"));
        assert!(matches!(run_manifest("path:5\n", &opts()), Err(BoundError::Manifest { line: 1, .. })));
        assert!(matches!(run_manifest("path:5 blob:3", &opts()), Err(BoundError::Manifest { .. })));
    }
}
