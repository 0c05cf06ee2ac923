//! Self-contained, re-checkable claims serialised as canonical JSON.
//!
//! A certificate names its subject graph by family spec (`"cycle:16"`) or
//! inline graph6 (`"g6:D?{"`), optionally times a second graph. Witness
//! vertices of a product use the encoding `(g, h) -> g·n(H) + h`.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bitset::VertexSet;
use crate::bounds::{self, BoundId, BoundReport, BoundVerdict};
use crate::families::{FamilyError, FamilySpec};
use crate::graph::Graph;
use crate::invariants::{self, is_maximal_independent, witness_satisfies, Invariant};
use crate::io::graph6;
use crate::labelling::{check_legal, to_independent_set, Label, Labelling};
use crate::options::{SolveError, SolveOptions};
use crate::product::{direct_product, ProductGraph};

#[derive(Debug, Error)]
pub enum CertificateError {
    #[error("invalid certificate JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("certificate schema: {0}")]
    Schema(String),
    #[error("subject {subject:?}: {msg}")]
    Subject { subject: String, msg: String },
}

fn schema(msg: impl Into<String>) -> CertificateError {
    CertificateError::Schema(msg.into())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Claim {
    /// The invariant equals `value`; the witness attains it.
    InvariantValue,
    /// A minimum-type invariant is at most `value`; the witness shows it.
    UpperBoundWitness,
    /// The named bound evaluates to `value` on the subject pair.
    LowerBoundFormula,
    /// `labels` is a legal labelling for `K_n` of weight `value`.
    Legality,
    /// A maximal independent set of size `value` in the product is smaller
    /// than `rhs`, so the relation fails.
    Refutation,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Verified,
    Refuted,
    Unchecked,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Verified => "verified",
            Verdict::Refuted => "refuted",
            Verdict::Unchecked => "unchecked",
        })
    }
}

/// The relation a refutation targets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Relation {
    /// i(G×H) ≥ i(G)·i(H)
    ProductOfFactors,
    /// i(G×H) ≥ min{i(G), i(H)}
    MinOfFactors,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Subject {
    pub graph: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub times: Option<String>,
}

impl Subject {
    pub fn family(spec: &FamilySpec) -> Self {
        Subject {
            graph: spec.to_string(),
            times: None,
        }
    }

    pub fn inline(g: &Graph) -> Self {
        Subject {
            graph: format!("g6:{}", graph6::encode(g)),
            times: None,
        }
    }

    pub fn times(mut self, other: Subject) -> Self {
        self.times = Some(other.graph);
        self
    }

    fn resolve_one(s: &str) -> Result<Graph, CertificateError> {
        let err = |msg: String| CertificateError::Subject {
            subject: s.to_string(),
            msg,
        };
        if let Some(code) = s.strip_prefix("g6:") {
            return graph6::decode(code).map_err(|e| err(e.to_string()));
        }
        s.parse::<FamilySpec>()
            .and_then(|f| f.build())
            .map(|f| f.graph)
            .map_err(|e: FamilyError| err(e.to_string()))
    }

    /// The first graph and, if present, the second factor.
    pub fn resolve(&self) -> Result<(Graph, Option<Graph>), CertificateError> {
        let g = Self::resolve_one(&self.graph)?;
        let h = self.times.as_deref().map(Self::resolve_one).transpose()?;
        Ok((g, h))
    }
}

impl fmt::Display for Subject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.times {
            Some(t) => write!(f, "{} x {}", self.graph, t),
            None => f.write_str(&self.graph),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Certificate {
    pub claim: Claim,
    pub subject: Subject,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub invariant: Option<Invariant>,
    pub value: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bound: Option<BoundId>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub relation: Option<Relation>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rhs: Option<usize>,
    /// Free-text pointer to where the claim comes from.
    pub paper_anchor: String,
    pub verdict: Verdict,
}

impl Certificate {
    /// A bare claim with verdict `unchecked`; fill the optional fields and
    /// call [`Certificate::sealed`].
    pub fn new(claim: Claim, subject: Subject, value: usize, anchor: &str) -> Self {
        Certificate {
            claim,
            subject,
            invariant: None,
            value,
            witness: None,
            n: None,
            labels: None,
            bound: None,
            relation: None,
            rhs: None,
            paper_anchor: anchor.to_string(),
            verdict: Verdict::Unchecked,
        }
    }

    pub fn with_invariant(mut self, inv: Invariant) -> Self {
        self.invariant = Some(inv);
        self
    }

    pub fn with_witness(mut self, w: &VertexSet) -> Self {
        self.witness = Some(w.to_vec());
        self
    }

    pub fn with_labelling(mut self, l: &Labelling) -> Self {
        self.n = Some(l.n());
        self.labels = Some(l.to_strings());
        self
    }

    pub fn with_bound(mut self, b: BoundId) -> Self {
        self.bound = Some(b);
        self
    }

    pub fn with_relation(mut self, r: Relation, rhs: usize) -> Self {
        self.relation = Some(r);
        self.rhs = Some(rhs);
        self
    }

    /// Sets the verdict to what verification finds.
    pub fn sealed(mut self, opts: &SolveOptions) -> Result<Self, CertificateError> {
        self.verdict = verify_certificate(&self, opts)?.verdict;
        Ok(self)
    }
}

/// Result of re-checking one certificate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub verdict: Verdict,
    pub detail: String,
}

impl Outcome {
    fn verified(detail: impl Into<String>) -> Self {
        Outcome {
            verdict: Verdict::Verified,
            detail: detail.into(),
        }
    }

    fn refuted(detail: impl Into<String>) -> Self {
        Outcome {
            verdict: Verdict::Refuted,
            detail: detail.into(),
        }
    }

    fn unchecked(detail: impl Into<String>) -> Self {
        Outcome {
            verdict: Verdict::Unchecked,
            detail: detail.into(),
        }
    }
}

fn to_value(c: &Certificate) -> serde_json::Value {
    serde_json::to_value(c).expect("certificates serialise")
}

/// Canonical JSON: sorted keys, integers only, two-space indentation.
pub fn write_certificate(c: &Certificate) -> String {
    serde_json::to_string_pretty(&to_value(c)).expect("values serialise")
}

pub fn write_bundle(cs: &[Certificate]) -> String {
    let v = serde_json::Value::Array(cs.iter().map(to_value).collect());
    serde_json::to_string_pretty(&v).expect("values serialise")
}

/// Accepts a single certificate object or an array of them.
pub fn read_bundle(text: &str) -> Result<Vec<Certificate>, CertificateError> {
    let v: serde_json::Value = serde_json::from_str(text)?;
    Ok(match v {
        serde_json::Value::Array(items) => items
            .into_iter()
            .map(serde_json::from_value)
            .collect::<Result<_, _>>()?,
        other => vec![serde_json::from_value(other)?],
    })
}

pub fn verify_bundle(text: &str, opts: &SolveOptions) -> Result<Vec<(Certificate, Outcome)>, CertificateError> {
    read_bundle(text)?
        .into_iter()
        .map(|c| verify_certificate(&c, opts).map(|o| (c, o)))
        .collect()
}

fn witness_set(c: &Certificate, order: usize) -> Result<Result<VertexSet, String>, CertificateError> {
    let w = c.witness.as_ref().ok_or_else(|| schema("missing witness"))?;
    if let Some(&v) = w.iter().find(|&&v| v >= order) {
        return Ok(Err(format!("witness vertex {v} is out of range for order {order}")));
    }
    let set = VertexSet::from_vertices(order, w.iter().copied());
    if set.len() != w.len() {
        return Ok(Err("witness repeats a vertex".into()));
    }
    Ok(Ok(set))
}

fn subject_graph(c: &Certificate) -> Result<Graph, CertificateError> {
    match c.subject.resolve()? {
        (g, None) => Ok(g),
        (g, Some(h)) => Ok(product(&c.subject, &g, &h)?.graph().clone()),
    }
}

fn product(s: &Subject, g: &Graph, h: &Graph) -> Result<ProductGraph, CertificateError> {
    direct_product(g, h).map_err(|e| CertificateError::Subject {
        subject: s.to_string(),
        msg: e.to_string(),
    })
}

fn pair(c: &Certificate) -> Result<(Graph, Graph), CertificateError> {
    match c.subject.resolve()? {
        (g, Some(h)) => Ok((g, h)),
        _ => Err(schema(format!("{:?} needs a product subject with \"times\"", c.claim))),
    }
}

/// Outcome of an exact solve that may hit the cap or budget.
fn exact(g: &Graph, inv: Invariant, opts: &SolveOptions) -> Result<Option<usize>, Outcome> {
    match invariants::compute(g, inv, opts) {
        Ok(r) => Ok(Some(r.value)),
        Err(e @ (SolveError::CapExceeded { .. } | SolveError::BudgetExhausted)) => {
            Err(Outcome::unchecked(format!("exact {inv} not recomputed: {e}")))
        }
        Err(e @ SolveError::Undefined(..)) => Err(Outcome::refuted(e.to_string())),
    }
}

macro_rules! try_outcome {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(o) => return Ok(o),
        }
    };
}

/// Re-checks a certificate from its own contents. Witness predicates run
/// at any size; exact re-solves respect `opts.cap` and report `unchecked`
/// beyond it.
pub fn verify_certificate(c: &Certificate, opts: &SolveOptions) -> Result<Outcome, CertificateError> {
    match c.claim {
        Claim::InvariantValue => {
            let inv = c.invariant.ok_or_else(|| schema("missing invariant"))?;
            let g = subject_graph(c)?;
            let w = try_outcome!(witness_set(c, g.order())?.map_err(Outcome::refuted));
            if !witness_satisfies(&g, inv, &w) {
                return Ok(Outcome::refuted(format!("witness fails the {inv} predicate")));
            }
            if w.len() != c.value {
                return Ok(Outcome::refuted(format!("witness has {} vertices, claim is {}", w.len(), c.value)));
            }
            let v = try_outcome!(exact(&g, inv, opts)).expect("exact value");
            if v == c.value {
                Ok(Outcome::verified(format!("{inv} = {v}")))
            } else {
                Ok(Outcome::refuted(format!("exact {inv} is {v}, claim is {}", c.value)))
            }
        }
        Claim::UpperBoundWitness => {
            let inv = c.invariant.ok_or_else(|| schema("missing invariant"))?;
            if !inv.is_minimum() {
                return Err(schema(format!("{inv} is a maximum; a witness bounds it from below")));
            }
            let g = subject_graph(c)?;
            let w = try_outcome!(witness_set(c, g.order())?.map_err(Outcome::refuted));
            if !witness_satisfies(&g, inv, &w) {
                return Ok(Outcome::refuted(format!("witness fails the {inv} predicate")));
            }
            if w.len() > c.value {
                return Ok(Outcome::refuted(format!("witness has {} vertices, above {}", w.len(), c.value)));
            }
            Ok(Outcome::verified(format!("{inv} <= {}", w.len())))
        }
        Claim::LowerBoundFormula => {
            let id = c.bound.ok_or_else(|| schema("missing bound"))?;
            let report: Result<BoundReport, SolveError> = match id {
                BoundId::K2Lower | BoundId::K2Upper => {
                    let (g, h) = c.subject.resolve()?;
                    if h.is_some() {
                        return Err(schema("k2 bounds take a single graph"));
                    }
                    bounds::k2_sandwich(&g, opts).map(|[lo, hi]| if id == BoundId::K2Lower { lo } else { hi })
                }
                BoundId::ProductOfFactors | BoundId::MinOfFactors => {
                    return Err(schema(format!("{id} is not a proved bound; use a refutation claim")))
                }
                _ => {
                    let (g, h) = pair(c)?;
                    match id {
                        BoundId::ProductUpper => bounds::product_upper_bound(&g, &h, opts),
                        BoundId::AlphaLower => bounds::alpha_lower_bound(&g, &h, opts),
                        BoundId::PackingTotal => bounds::packing_total_bound(&g, &h, opts),
                        BoundId::ClawFree => bounds::clawfree_bound(&g, &h, opts),
                        BoundId::DegreeRatio => bounds::degree_ratio_bound(&g, &h, opts),
                        _ => bounds::bipartite_bound(&g, &h, opts),
                    }
                }
            };
            let report = match report {
                Ok(r) => r,
                Err(e @ (SolveError::CapExceeded { .. } | SolveError::BudgetExhausted)) => {
                    return Ok(Outcome::unchecked(format!("bound not recomputed: {e}")))
                }
                Err(e) => return Ok(Outcome::refuted(e.to_string())),
            };
            if !report.applicable {
                return Ok(Outcome::refuted(format!("{id} does not apply: {}", report.reason)));
            }
            if report.rhs != Some(c.value) {
                return Ok(Outcome::refuted(format!(
                    "{id} evaluates to {}, claim is {}",
                    report.rhs.unwrap_or_default(),
                    c.value
                )));
            }
            if report.verdict == BoundVerdict::Fails {
                return Ok(Outcome::refuted(format!("{id} fails against the exact value")));
            }
            Ok(Outcome::verified(format!("{id} = {}", c.value)))
        }
        Claim::Legality => {
            let n = c.n.ok_or_else(|| schema("missing n"))?;
            let raw = c.labels.as_ref().ok_or_else(|| schema("missing labels"))?;
            let labels = raw
                .iter()
                .map(|s| Label::parse(s).ok_or_else(|| schema(format!("bad label {s:?}"))))
                .collect::<Result<Vec<_>, _>>()?;
            let l = Labelling::from_labels(n, &labels).map_err(|e| schema(e.to_string()))?;
            let g = match c.subject.resolve()? {
                (g, None) => g,
                _ => return Err(schema("legality takes a single graph")),
            };
            let report = match check_legal(&g, &l) {
                Ok(r) => r,
                Err(e) => return Ok(Outcome::refuted(e.to_string())),
            };
            if !report.legal() {
                return Ok(Outcome::refuted(format!("illegal labelling: {report}")));
            }
            if l.weight() != c.value {
                return Ok(Outcome::refuted(format!("weight is {}, claim is {}", l.weight(), c.value)));
            }
            let p = product(&c.subject, &g, &crate::families::complete(n))?;
            let set = to_independent_set(&g, &l).expect("labelling is legal");
            if !is_maximal_independent(p.graph(), &set) {
                return Ok(Outcome::refuted("encoded set is not maximal independent"));
            }
            Ok(Outcome::verified(format!("legal, weight {}", c.value)))
        }
        Claim::Refutation => {
            let relation = c.relation.ok_or_else(|| schema("missing relation"))?;
            let rhs = c.rhs.ok_or_else(|| schema("missing rhs"))?;
            let (g, h) = pair(c)?;
            let p = product(&c.subject, &g, &h)?;
            let w = try_outcome!(witness_set(c, p.graph().order())?.map_err(Outcome::refuted));
            if !is_maximal_independent(p.graph(), &w) {
                return Ok(Outcome::refuted("witness is not a maximal independent set of the product"));
            }
            if w.len() != c.value {
                return Ok(Outcome::refuted(format!("witness has {} vertices, claim is {}", w.len(), c.value)));
            }
            let ig = try_outcome!(exact(&g, Invariant::IndependentDomination, opts)).expect("exact value");
            let ih = try_outcome!(exact(&h, Invariant::IndependentDomination, opts)).expect("exact value");
            let actual = match relation {
                Relation::ProductOfFactors => ig * ih,
                Relation::MinOfFactors => ig.min(ih),
            };
            if actual != rhs {
                return Ok(Outcome::refuted(format!("right-hand side is {actual}, claim is {rhs}")));
            }
            if c.value >= rhs {
                return Ok(Outcome::refuted(format!("{} is not below {rhs}", c.value)));
            }
            Ok(Outcome::verified(format!(
                "i(G x H) <= {} < {rhs} with i(G) = {ig}, i(H) = {ih}",
                c.value
            )))
        }
    }
}
