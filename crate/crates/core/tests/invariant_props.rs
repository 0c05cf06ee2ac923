mod common;

use common::{brute_alpha, brute_gamma, brute_gamma_t, brute_i, brute_maximal_independent_sets, brute_rho, graphs};
use idomlab::families::complete;
use idomlab::generate::connected_graphs_up_to;
use idomlab::invariants::{
    self, enumerate_maximal_independent_sets, independent_domination_number, witness_satisfies,
};
use idomlab::{direct_product, Factor, Invariant, SolveError, SolveOptions};
use proptest::prelude::*;
use std::ops::ControlFlow;

fn value(g: &idomlab::Graph, inv: Invariant) -> Result<usize, SolveError> {
    Ok(invariants::compute(g, inv, &SolveOptions::default())?.value)
}

proptest! {
    #[test]
    fn witnesses_satisfy_their_predicates(g in graphs(1, 14)) {
        for inv in Invariant::ALL {
            match invariants::compute(&g, inv, &SolveOptions::default()) {
                Ok(r) => {
                    prop_assert!(witness_satisfies(&g, inv, &r.witness), "{inv}");
                    prop_assert_eq!(r.witness.len(), r.value);
                }
                Err(SolveError::Undefined(..)) => prop_assert!(inv == Invariant::TotalDomination && g.has_isolated_vertex()),
                Err(e) => return Err(TestCaseError::fail(e.to_string())),
            }
        }
    }

    #[test]
    fn chain_of_inequalities(g in graphs(1, 16)) {
        let i = value(&g, Invariant::IndependentDomination).unwrap();
        let alpha = value(&g, Invariant::Independence).unwrap();
        let gamma = value(&g, Invariant::Domination).unwrap();
        let rho = value(&g, Invariant::TwoPacking).unwrap();
        prop_assert!(i <= alpha);
        prop_assert!(gamma <= i);
        prop_assert!(rho <= gamma);
        if let Ok(gt) = value(&g, Invariant::TotalDomination) {
            prop_assert!(gamma <= gt);
        }
    }

    #[test]
    fn solvers_match_subset_enumeration(g in graphs(1, 10)) {
        prop_assert_eq!(value(&g, Invariant::IndependentDomination).unwrap(), brute_i(&g));
        prop_assert_eq!(value(&g, Invariant::Independence).unwrap(), brute_alpha(&g));
        prop_assert_eq!(value(&g, Invariant::Domination).unwrap(), brute_gamma(&g));
        prop_assert_eq!(value(&g, Invariant::TotalDomination).ok(), brute_gamma_t(&g));
        prop_assert_eq!(value(&g, Invariant::TwoPacking).unwrap(), brute_rho(&g));
    }

    #[test]
    fn branch_and_bound_matches_enumeration(g in graphs(1, 12)) {
        let mut least = usize::MAX;
        let mut count = 0;
        enumerate_maximal_independent_sets(&g, &SolveOptions::default(), |s| {
            least = least.min(s.len());
            count += 1;
            ControlFlow::Continue(())
        }).unwrap();
        prop_assert_eq!(count, brute_maximal_independent_sets(&g).len());
        prop_assert_eq!(value(&g, Invariant::IndependentDomination).unwrap(), least);
    }

    #[test]
    fn witnesses_do_not_depend_on_worker_count(g in graphs(10, 30)) {
        let one = SolveOptions::default();
        let four = one.with_workers(4);
        for inv in Invariant::ALL {
            let a = invariants::compute(&g, inv, &one);
            let b = invariants::compute(&g, inv, &four);
            match (a, b) {
                (Ok(a), Ok(b)) => {
                    prop_assert_eq!(a.value, b.value);
                    prop_assert_eq!(a.witness, b.witness);
                }
                (a, b) => prop_assert_eq!(a.is_err(), b.is_err()),
            }
        }
    }
}

#[test]
fn layer_intersections_with_clique_factor() {
    let opts = SolveOptions::default();
    for g in connected_graphs_up_to(4) {
        for n in 2..=4 {
            let kn = complete(n);
            let p = direct_product(&g, &kn).unwrap();
            enumerate_maximal_independent_sets(p.graph(), &opts, |s| {
                for v in 0..g.order() {
                    let k = p.layer(Factor::G, v).intersection_len(s);
                    assert!(k == 0 || k == 1 || k == n, "layer {v} meets {k} vertices");
                }
                ControlFlow::Continue(())
            })
            .unwrap();
        }
    }
}

#[test]
fn decision_version_agrees_with_optimum() {
    let opts = SolveOptions::default();
    for g in connected_graphs_up_to(6) {
        let i = independent_domination_number(&g, &opts).unwrap().value;
        assert!(invariants::independent_dominating_set_within(&g, i, &opts).unwrap().is_some());
        assert!(invariants::independent_dominating_set_within(&g, i - 1, &opts).unwrap().is_none());
    }
}
