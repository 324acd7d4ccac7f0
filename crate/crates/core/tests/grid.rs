mod common;

use common::{catalogue, close, grid_strategy, oracle_expectation, oracle_h_influence, oracle_influence};
use hinfluence::rational::{self, Rational};
use hinfluence::GridFunction;
use num_traits::One;
use proptest::prelude::*;

fn with_axis() -> impl Strategy<Value = (GridFunction, usize, usize)> {
    grid_strategy(3, 5).prop_flat_map(|g| {
        let n = g.arity();
        (Just(g), 0..n, 2usize..=3)
    })
}

proptest! {
    #[test]
    fn influences_match_fiber_scan(g in grid_strategy(3, 5)) {
        for k in 1..=g.arity() {
            prop_assert_eq!(g.influence(k).unwrap(), oracle_influence(&g, k));
            for h in catalogue() {
                let got = g.h_influence(k, &h).unwrap();
                prop_assert!(close(got, oracle_h_influence(&g, k, &h), 1e-12), "{} {}", h.name(), k);
            }
        }
        prop_assert_eq!(g.expectation(), oracle_expectation(&g));
    }

    #[test]
    fn profile_weights_sum_to_one(g in grid_strategy(3, 5)) {
        for k in 1..=g.arity() {
            let total: Rational = g.fiber_profile(k).unwrap().entries.iter().map(|c| c.weight.clone()).sum();
            prop_assert!(total.is_one());
        }
    }

    #[test]
    fn refinement_changes_nothing((g, axis, factor) in with_axis()) {
        let mut factors = vec![1; g.arity()];
        factors[axis] = factor;
        let fine = g.refine(&factors).unwrap();
        prop_assert_eq!(fine.expectation(), g.expectation());
        prop_assert_eq!(fine.boundary_measure(), g.boundary_measure());
        for k in 1..=g.arity() {
            prop_assert_eq!(fine.influence(k).unwrap(), g.influence(k).unwrap());
            for h in catalogue() {
                prop_assert!(close(fine.h_influence(k, &h).unwrap(), g.h_influence(k, &h).unwrap(), 1e-12));
            }
        }
    }

    #[test]
    fn variance_is_at_most_a_quarter_of_indicator(g in grid_strategy(3, 6)) {
        let var = hinfluence::InfluenceKernel::variance();
        for k in 1..=g.arity() {
            let i = rational::to_f64(&g.influence(k).unwrap());
            prop_assert!(g.h_influence(k, &var).unwrap() <= i / 4.0 + 1e-15);
        }
    }

    #[test]
    fn text_round_trip(g in grid_strategy(3, 5)) {
        let text = g.to_text().unwrap();
        prop_assert_eq!(GridFunction::from_text(&text).unwrap(), g);
    }

    #[test]
    fn product_and_dense_storage_agree(axes in prop::collection::vec(prop::collection::vec(any::<bool>(), 1..=5), 1..=3)) {
        let p = GridFunction::product(axes).unwrap();
        let d = p.to_dense().unwrap();
        prop_assert_eq!(p.expectation(), d.expectation());
        prop_assert_eq!(p.boundary_measure(), d.boundary_measure());
        for k in 1..=p.arity() {
            prop_assert_eq!(p.fiber_profile(k).unwrap(), d.fiber_profile(k).unwrap());
        }
    }
}
