mod common;

use common::catalogue;
use hinfluence::kernels::{self, check_concave, check_dominates_entropy, entropy, InfluenceKernel, CHECK_STEPS};
use proptest::prelude::*;

#[test]
fn declared_flags_match_checkers() {
    for h in catalogue() {
        assert_eq!(check_concave(&h, CHECK_STEPS), h.declared_concave(), "{}", h.name());
        assert_eq!(check_dominates_entropy(&h, CHECK_STEPS), h.declared_dominates_entropy(), "{}", h.name());
    }
}

#[test]
fn values_stay_in_unit_interval() {
    for h in catalogue() {
        for i in 0..=CHECK_STEPS {
            let v = h.eval(i as f64 / CHECK_STEPS as f64);
            assert!((0.0..=1.0).contains(&v), "{} at {i}", h.name());
        }
    }
}

#[test]
fn entropy_is_exactly_symmetric_on_the_grid() {
    for i in 0..=CHECK_STEPS {
        let t = i as f64 / CHECK_STEPS as f64;
        assert!((entropy(t).unwrap() - entropy(1.0 - t).unwrap()).abs() <= 1e-12);
    }
}

#[test]
fn designators_round_trip_names() {
    for d in ["ent", "var", "ind", "alpha:0.75", "t0", "t1"] {
        assert!(kernels::parse_designator(d).is_ok(), "{d}");
    }
    assert!(kernels::parse_designator("alpha:1.5").is_err());
    assert!(kernels::parse_designator("nope").is_err());
}

proptest! {
    #[test]
    fn alpha_family_is_non_increasing(a in 0.01f64..1.0, b in 0.01f64..1.0, i in 0usize..=4096) {
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        let t = i as f64 / 4096.0;
        let hl = InfluenceKernel::alpha(lo).unwrap().eval(t);
        let hh = InfluenceKernel::alpha(hi).unwrap().eval(t);
        prop_assert!(hl >= hh - 1e-15);
    }

    #[test]
    fn entropy_symmetry_off_grid(t in 0.0f64..=1.0) {
        prop_assert!((entropy(t).unwrap() - entropy(1.0 - t).unwrap()).abs() <= 1e-12);
    }
}
