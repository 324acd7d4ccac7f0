mod common;

use common::close;
use hinfluence::families::{corner, padded_tribes, threshold_family, tribes, tribes_tightness_bound, Analytic};
use hinfluence::rational::{self, ratio, Rational};
use hinfluence::theorems::min_junta_size;
use hinfluence::{FamilyInstance, InfluenceKernel};
use num_traits::Zero;

fn exact(inst: &FamilyInstance, key: &str) -> Rational {
    match &inst.analytic[key] {
        Analytic::Exact(r) => r.clone(),
        Analytic::Real(v) => panic!("{key} = {v} is not exact"),
    }
}

/// Checks every analytic entry of `inst` against brute force.
fn agrees(inst: &FamilyInstance) {
    let kernel = |name: &str| match name {
        "ind" => InfluenceKernel::indicator(),
        "var" => InfluenceKernel::variance(),
        _ => InfluenceKernel::entropy(),
    };
    for (key, value) in &inst.analytic {
        match key.as_str() {
            "expectation" => assert_eq!(inst.expectation(), exact(inst, key), "{}", inst.label()),
            "boundary" => assert_eq!(inst.boundary_measure(), exact(inst, key)),
            "influence_ind" => assert_eq!(inst.influence(1).unwrap(), exact(inst, key), "{}", inst.label()),
            k if k.starts_with("influence_") => {
                let got = inst.h_influence(1, &kernel(&k["influence_".len()..])).unwrap();
                assert!(close(got, value.to_f64(), 1e-9), "{}: {key} {got} vs {}", inst.label(), value.to_f64());
            }
            "sum_ent" => {
                let got: f64 = inst.h_influences(&InfluenceKernel::entropy()).unwrap().iter().sum();
                assert!(close(got, value.to_f64(), 1e-9));
            }
            "band" => {}
            other => panic!("unchecked analytic entry {other}"),
        }
    }
    if let (Some(g), Some((f, mu))) = (inst.grid(), inst.cube()) {
        assert_eq!(g.expectation(), f.expectation(mu).unwrap());
    }
}

#[test]
fn analytic_values_match_enumeration() {
    for n in 2..=6 {
        agrees(&corner(n, n).unwrap());
        agrees(&corner(n, 2 * n).unwrap());
    }
    for (n, r) in [(4, 2), (6, 3), (6, 2), (8, 2), (9, 3), (12, 3), (12, 4)] {
        for q in [ratio(1, 2), ratio(1, 3), ratio(1, 5), ratio(3, 4)] {
            agrees(&tribes(n, r, &q).unwrap());
        }
    }
    for q in [ratio(1, 2), ratio(1, 3), ratio(2, 3)] {
        agrees(&padded_tribes(8, 4, 2, &q).unwrap());
    }
    for n in 1..=10 {
        for q in [ratio(1, 2), ratio(1, 3), ratio(1, 10), ratio(4, 5)] {
            agrees(&threshold_family(n, &q).unwrap());
        }
    }
}

#[test]
fn tabled_examples() {
    assert_eq!(corner(4, 4).unwrap().expectation(), ratio(81, 256));
    let t = tribes(4, 2, &ratio(1, 2)).unwrap();
    assert_eq!(t.expectation(), ratio(7, 16));
    assert_eq!(t.influence(3).unwrap(), ratio(3, 8));
    let t = tribes(6, 3, &ratio(1, 2)).unwrap();
    assert!(close(t.h_influence(2, &InfluenceKernel::entropy()).unwrap(), 7.0 / 32.0, 1e-12));
    let th = threshold_family(4, &ratio(1, 2)).unwrap();
    assert_eq!(th.expectation(), ratio(5, 16));
    let total: Rational = (1..=4).map(|k| th.influence(k).unwrap()).sum();
    assert_eq!(total, ratio(3, 2));
    assert_eq!(exact(&th, "band"), ratio(10, 16));
}

#[test]
fn padded_tribes_depend_on_m_coordinates() {
    for n in [6, 8, 10] {
        let p = padded_tribes(n, 4, 2, &ratio(1, 2)).unwrap();
        for k in 5..=n {
            for h in [InfluenceKernel::indicator(), InfluenceKernel::entropy(), InfluenceKernel::variance()] {
                assert_eq!(p.h_influence(k, &h).unwrap(), 0.0);
            }
            assert!(p.influence(k).unwrap().is_zero());
        }
        let (f, mu) = p.cube().unwrap();
        assert_eq!(min_junta_size(f, mu, 0.0).unwrap().size, 4);
    }
}

#[test]
fn tribes_tightness_chain() {
    // (n, r, q) triples near the balanced width
    for (n, r, q) in [(16, 2, ratio(1, 2)), (18, 3, ratio(1, 2)), (20, 4, ratio(1, 2)), (12, 2, ratio(1, 3)), (15, 3, ratio(1, 3))] {
        let t = tribes(n, r, &q).unwrap();
        let qf = rational::to_f64(&q);
        for h in [InfluenceKernel::entropy(), InfluenceKernel::variance(), InfluenceKernel::alpha(0.75).unwrap()] {
            let closed = rational::to_f64(&exact(&t, "influence_ind")) * h.eval(qf);
            let got = t.h_influences(&h).unwrap().into_iter().fold(0.0, f64::max);
            assert!(close(got, closed, 1e-12));
            let bound = tribes_tightness_bound(n, qf, &h);
            assert!(got <= bound * (1.0 + 1e-9), "n={n} r={r} q={qf} {}: {got} > {bound}", h.name());
        }
    }
}
