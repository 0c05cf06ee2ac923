mod common;

use common::{brute_i, graphs};
use idomlab::families::{complete, cycle, path};
use idomlab::invariants::{independent_domination_number, maximal_independent_sets};
use idomlab::labelling::{
    check_legal, enumerate_legal_labellings, from_independent_set, minimize_weight, minimize_weight_with,
    to_independent_set, LabelSearch,
};
use idomlab::{direct_product, SolveOptions};
use proptest::prelude::*;
use std::ops::ControlFlow;

fn opts() -> SolveOptions {
    SolveOptions::default()
}

const NO_FULL: LabelSearch = LabelSearch { allow_full: false };

proptest! {
    #[test]
    fn weight_equals_product_domination(g in graphs(1, 6), n in 2usize..=4) {
        let l = minimize_weight(&g, n, &opts()).unwrap();
        let p = direct_product(&g, &complete(n)).unwrap();
        let i = independent_domination_number(p.graph(), &opts()).unwrap().value;
        prop_assert_eq!(l.weight(), i);
        if p.graph().order() <= 16 {
            prop_assert_eq!(i, brute_i(p.graph()));
        }
    }

    #[test]
    fn maximal_sets_round_trip(g in graphs(1, 5), n in 2usize..=4) {
        let p = direct_product(&g, &complete(n)).unwrap();
        for s in maximal_independent_sets(p.graph(), &opts()).unwrap() {
            let l = from_independent_set(&p, &s).unwrap();
            prop_assert!(check_legal(&g, &l).unwrap().legal());
            prop_assert_eq!(l.weight(), s.len());
            prop_assert_eq!(to_independent_set(&g, &l).unwrap(), s);
        }
    }

    #[test]
    fn legal_labellings_round_trip(g in graphs(1, 5), n in 2usize..=3) {
        let p = direct_product(&g, &complete(n)).unwrap();
        enumerate_legal_labellings(&g, n, LabelSearch::default(), &opts(), |l| {
            let s = to_independent_set(&g, l).unwrap();
            assert_eq!(s.len(), l.weight());
            assert_eq!(&from_independent_set(&p, &s).unwrap(), l);
            ControlFlow::Continue(())
        }).unwrap();
    }
}

#[test]
fn cycles_need_no_full_label() {
    for m in 6..=12 {
        let c = cycle(m);
        let free = minimize_weight_with(&c, 3, NO_FULL, &opts()).unwrap();
        assert_eq!(free.weight(), minimize_weight(&c, 3, &opts()).unwrap().weight(), "C{m}");
    }
}

#[test]
fn values_do_not_depend_on_clique_order() {
    for m in 3..=9 {
        for g in [path(m), cycle(m)] {
            let three = minimize_weight(&g, 3, &opts()).unwrap().weight();
            assert_eq!(three, minimize_weight(&g, 4, &opts()).unwrap().weight(), "m = {m}");
        }
    }
}

#[test]
fn paths_carry_few_zero_labels() {
    for m in 2..=9 {
        for n in [3, 4] {
            let mut seen = 0;
            enumerate_legal_labellings(&path(m), n, NO_FULL, &opts(), |l| {
                assert!(l.zero_count() <= (m - 2) / 3, "P{m}: {:?}", l.to_strings());
                seen += 1;
                ControlFlow::Continue(())
            })
            .unwrap();
            assert!(seen > 0);
        }
    }
}
