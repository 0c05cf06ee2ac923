//! Counterexample search: evaluate one bound over every pair drawn from a
//! list of graphs and report the pairs where it fails.

use std::time::{Duration, Instant};

use serde::Serialize;

use crate::bounds::{self, BoundError, BoundId, BoundReport, BoundVerdict};
use crate::graph::Graph;
use crate::invariants;
use crate::io::certificate::{Certificate, Claim, Relation, Subject};
use crate::io::graph6;
use crate::options::{SolveError, SolveOptions};
use crate::product::direct_product;

/// One pair where the bound fails.
#[derive(Debug, Clone, Serialize)]
pub struct Violation {
    /// Indices into the input list; the second is absent for single-graph
    /// bounds.
    pub first: usize,
    pub second: Option<usize>,
    pub graphs: Vec<String>,
    pub report: BoundReport,
    /// A refutation certificate for the conjectured relations.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Certificate>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ScanSummary {
    pub bound: String,
    pub graphs: usize,
    /// Pairs (or single graphs) with a decided verdict.
    pub checked: usize,
    pub inapplicable: usize,
    /// Pairs left undecided because a solve was over the cap.
    pub skipped: usize,
    pub violations: usize,
    /// Set when the time budget ran out before every pair was visited.
    pub partial: bool,
}

fn single_graph(id: BoundId) -> bool {
    matches!(id, BoundId::K2Lower | BoundId::K2Upper)
}

/// The report for one bound on one pair. Single-graph bounds ignore `h`.
pub fn evaluate(id: BoundId, g: &Graph, h: &Graph, opts: &SolveOptions) -> Result<BoundReport, BoundError> {
    Ok(match id {
        BoundId::ProductUpper => bounds::product_upper_bound(g, h, opts)?,
        BoundId::AlphaLower => bounds::alpha_lower_bound(g, h, opts)?,
        BoundId::K2Lower => bounds::k2_sandwich(g, opts)?[0].clone(),
        BoundId::K2Upper => bounds::k2_sandwich(g, opts)?[1].clone(),
        BoundId::PackingTotal => bounds::packing_total_bound(g, h, opts)?,
        BoundId::ClawFree => bounds::clawfree_bound(g, h, opts)?,
        BoundId::DegreeRatio => bounds::degree_ratio_bound(g, h, opts)?,
        BoundId::Bipartite => bounds::bipartite_bound(g, h, opts)?,
        BoundId::ProductOfFactors => bounds::conjecture_scan(g, h, None, opts)?[0].clone(),
        BoundId::MinOfFactors => bounds::conjecture_scan(g, h, None, opts)?[1].clone(),
    })
}

fn refutation(id: BoundId, g: &Graph, h: &Graph, r: &BoundReport, opts: &SolveOptions) -> Option<Certificate> {
    let relation = match id {
        BoundId::ProductOfFactors => Relation::ProductOfFactors,
        BoundId::MinOfFactors => Relation::MinOfFactors,
        _ => return None,
    };
    let p = direct_product(g, h).ok()?;
    let best = invariants::independent_domination_number(p.graph(), opts).ok()?;
    let subject = Subject::inline(g).times(Subject::inline(h));
    Certificate::new(Claim::Refutation, subject, best.value, "counterexample search")
        .with_witness(&best.witness)
        .with_relation(relation, r.rhs?)
        .sealed(opts)
        .ok()
}

/// Scans every unordered pair `(i, j)`, `i ≤ j`, of `graphs` in order, or
/// every graph for the single-graph bounds, calling `visit` on each
/// violation as it is found. The budget in `opts` bounds the whole scan;
/// each solve runs without one so that a verdict is never cut short.
pub fn scan(
    graphs: &[Graph],
    id: BoundId,
    opts: &SolveOptions,
    mut visit: impl FnMut(&Violation),
) -> Result<ScanSummary, BoundError> {
    let end = opts.budget.map(|b: Duration| Instant::now() + b);
    let solve = opts.with_budget(None);
    let mut summary = ScanSummary {
        bound: id.name().to_string(),
        graphs: graphs.len(),
        ..ScanSummary::default()
    };
    let pairs: Box<dyn Iterator<Item = (usize, Option<usize>)>> = if single_graph(id) {
        Box::new((0..graphs.len()).map(|i| (i, None)))
    } else {
        Box::new((0..graphs.len()).flat_map(|i| (i..graphs.len()).map(move |j| (i, Some(j)))))
    };
    for (i, j) in pairs {
        if end.is_some_and(|e| Instant::now() >= e) {
            summary.partial = true;
            break;
        }
        let g = &graphs[i];
        let h = &graphs[j.unwrap_or(i)];
        let report = match evaluate(id, g, h, &solve) {
            Ok(r) => r,
            Err(BoundError::Solve(SolveError::CapExceeded { .. })) => {
                summary.skipped += 1;
                continue;
            }
            Err(e) => return Err(e),
        };
        match report.verdict {
            BoundVerdict::Inapplicable => summary.inapplicable += 1,
            BoundVerdict::Unchecked => summary.skipped += 1,
            BoundVerdict::Holds => summary.checked += 1,
            BoundVerdict::Fails | BoundVerdict::FailsViaWitness => {
                summary.checked += 1;
                summary.violations += 1;
                let mut names = vec![graph6::encode(g)];
                if j.is_some() {
                    names.push(graph6::encode(h));
                }
                let certificate = refutation(id, g, h, &report, &solve);
                visit(&Violation {
                    first: i,
                    second: j,
                    graphs: names,
                    report,
                    certificate,
                });
            }
        }
    }
    Ok(summary)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete, cycle, path};
    use crate::generate::connected_graphs_up_to;
    use crate::io::Verdict;

    #[test]
    fn k2_pair_has_no_violation() {
        let s = scan(&[complete(2)], BoundId::MinOfFactors, &SolveOptions::default(), |_| panic!()).unwrap();
        assert_eq!((s.checked, s.violations, s.partial), (1, 0, false));
    }

    #[test]
    fn proved_bound_has_no_violation() {
        let gs = vec![path(3), cycle(4), cycle(5), complete(3)];
        let s = scan(&gs, BoundId::ClawFree, &SolveOptions::default(), |_| panic!()).unwrap();
        assert_eq!(s.checked + s.inapplicable + s.skipped, 10);
        assert_eq!(s.violations, 0);
    }

    #[test]
    fn conjecture_violations_reverify() {
        let gs = connected_graphs_up_to(4);
        let mut found = Vec::new();
        let s = scan(&gs, BoundId::ProductOfFactors, &SolveOptions::default(), |v| found.push(v.clone())).unwrap();
        assert_eq!(s.violations, found.len());
        for v in &found {
            let c = v.certificate.as_ref().expect("refutation attached");
            assert_eq!(c.verdict, Verdict::Verified);
        }
    }

    #[test]
    fn single_graph_bounds_visit_each_graph_once() {
        let gs = vec![path(2), path(4), cycle(5)];
        let s = scan(&gs, BoundId::K2Upper, &SolveOptions::default(), |_| panic!()).unwrap();
        assert_eq!(s.checked, 3);
    }

    #[test]
    fn exhausted_budget_marks_partial() {
        let gs = vec![path(3); 5];
        let opts = SolveOptions::default().with_budget(Some(Duration::ZERO));
        let s = scan(&gs, BoundId::ProductUpper, &opts, |_| ()).unwrap();
        assert!(s.partial);
        assert_eq!(s.checked, 0);
    }
}
