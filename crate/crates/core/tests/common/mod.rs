#![allow(dead_code)]

use hinfluence::rational::{ratio, Rational};
use hinfluence::{CubeFunction, GridFunction, InfluenceKernel};
use itertools::Itertools;
use proptest::prelude::*;

pub fn grid_strategy(max_n: usize, max_res: usize) -> impl Strategy<Value = GridFunction> {
    prop::collection::vec(1..=max_res, 1..=max_n).prop_flat_map(|res| {
        let total: usize = res.iter().product();
        prop::collection::vec(any::<bool>(), total)
            .prop_map(move |bits| GridFunction::from_bits(res.clone(), bits).unwrap())
    })
}

pub fn cube_strategy(max_m: usize) -> impl Strategy<Value = CubeFunction> {
    (1..=max_m).prop_flat_map(|m| {
        prop::collection::vec(any::<bool>(), 1 << m).prop_map(move |bits| CubeFunction::from_bits(m, bits).unwrap())
    })
}

/// Every fiber in direction `k` (1-based): its ones count and length.
pub fn fibers(g: &GridFunction, k: usize) -> Vec<(usize, usize)> {
    let res = g.resolutions().to_vec();
    let others: Vec<usize> = (0..res.len()).filter(|&i| i != k - 1).collect();
    let ranges: Vec<_> = others.iter().map(|&i| 0..res[i]).collect();
    let rest: Vec<Vec<usize>> = if ranges.is_empty() { vec![vec![]] } else { ranges.into_iter().multi_cartesian_product().collect() };
    rest.into_iter()
        .map(|fixed| {
            let mut idx = vec![0; res.len()];
            for (slot, &i) in others.iter().enumerate() {
                idx[i] = fixed[slot];
            }
            let ones = (0..res[k - 1])
                .filter(|&j| {
                    idx[k - 1] = j;
                    g.get(&idx)
                })
                .count();
            (ones, res[k - 1])
        })
        .collect()
}

pub fn oracle_h_influence(g: &GridFunction, k: usize, h: &InfluenceKernel) -> f64 {
    let fs = fibers(g, k);
    let w = 1.0 / fs.len() as f64;
    fs.iter().map(|&(c, r)| w * h.eval(c as f64 / r as f64)).sum()
}

pub fn oracle_influence(g: &GridFunction, k: usize) -> Rational {
    let fs = fibers(g, k);
    let bad = fs.iter().filter(|&&(c, r)| c != 0 && c != r).count();
    ratio(bad as i64, fs.len() as i64)
}

pub fn oracle_expectation(g: &GridFunction) -> Rational {
    let res = g.resolutions().to_vec();
    let ones = res.iter().map(|&r| 0..r).multi_cartesian_product().filter(|idx| g.get(idx)).count();
    ratio(ones as i64, res.iter().product::<usize>() as i64)
}

pub fn close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * b.abs().max(1.0)
}

pub fn catalogue() -> Vec<InfluenceKernel> {
    vec![
        InfluenceKernel::indicator(),
        InfluenceKernel::variance(),
        InfluenceKernel::entropy(),
        InfluenceKernel::alpha(0.3).unwrap(),
        InfluenceKernel::alpha(0.75).unwrap(),
        InfluenceKernel::toward_zero(),
        InfluenceKernel::toward_one(),
    ]
}
