use std::collections::BTreeSet;

use itertools::Itertools;
use rayon::prelude::*;

use crate::cube::{check_coordinate, CubeFunction, ProductMeasure};
use crate::rational::{self, ratio, Rational};
use crate::{Error, Result};

const EXHAUSTIVE_LIMIT: usize = 12;
const GREEDY_LIMIT: usize = 16;

#[derive(Clone, Debug, PartialEq)]
pub struct JuntaSearch {
    pub size: usize,
    pub witness: Vec<usize>,
    pub error: Rational,
    pub exhaustive: bool,
}

struct Table<'a> {
    f: &'a CubeFunction,
    weights: Vec<u128>,
    denominator: u128,
}

impl<'a> Table<'a> {
    fn new(f: &'a CubeFunction, mu: &ProductMeasure) -> Result<Self> {
        if mu.arity() != f.arity() {
            return Err(Error::ArityMismatch { expected: f.arity(), found: mu.arity() });
        }
        let weights = (0..f.len()).map(|x| mu.weight(x)).collect();
        Ok(Table { f, weights, denominator: mu.denominator() })
    }

    /// Numerator of the best error over the common denominator.
    fn error(&self, coords: &[usize]) -> u128 {
        let m = self.f.arity();
        let shifts: Vec<usize> = coords.iter().map(|&k| m - k).collect();
        let buckets = 1usize << coords.len();
        let mut total = vec![0u128; buckets];
        let mut ones = vec![0u128; buckets];
        for (x, &w) in self.weights.iter().enumerate() {
            let a = shifts.iter().enumerate().fold(0, |a, (j, &s)| a | ((x >> s) & 1) << j);
            total[a] += w;
            if self.f.get(x) {
                ones[a] += w;
            }
        }
        total.iter().zip(&ones).map(|(&t, &o)| o.min(t - o)).sum()
    }

    fn rational(&self, num: u128) -> Rational {
        ratio(num_bigint::BigInt::from(num), num_bigint::BigInt::from(self.denominator))
    }
}

/// Distance in `L2^2` from `f` to the nearest Boolean function of the
/// coordinates in `j`.
pub fn best_junta_error(f: &CubeFunction, mu: &ProductMeasure, j: &[usize]) -> Result<Rational> {
    let mut coords = BTreeSet::new();
    for &k in j {
        check_coordinate(k, f.arity())?;
        coords.insert(k);
    }
    let t = Table::new(f, mu)?;
    let coords: Vec<usize> = coords.into_iter().collect();
    Ok(t.rational(t.error(&coords)))
}

/// Smallest coordinate set whose best junta error is at most `eps`.
///
/// Exhaustive by increasing size up to 12 coordinates, greedy forward
/// selection up to 16.
pub fn min_junta_size(f: &CubeFunction, mu: &ProductMeasure, eps: f64) -> Result<JuntaSearch> {
    let m = f.arity();
    if m > GREEDY_LIMIT {
        return Err(Error::TooLarge { what: format!("junta search on {m} coordinates"), limit: GREEDY_LIMIT.to_string() });
    }
    let t = Table::new(f, mu)?;
    let fits = |num: u128| rational::to_f64(&t.rational(num)) <= eps;
    if m <= EXHAUSTIVE_LIMIT {
        for size in 0..=m {
            let sets: Vec<Vec<usize>> = (1..=m).combinations(size).collect();
            let hit = sets.par_iter().map(|s| (s, t.error(s))).find_first(|(_, e)| fits(*e));
            if let Some((s, e)) = hit {
                return Ok(JuntaSearch { size, witness: s.clone(), error: t.rational(e), exhaustive: true });
            }
        }
        unreachable!("the full coordinate set has error 0");
    }
    let mut chosen: Vec<usize> = Vec::new();
    let mut err = t.error(&chosen);
    while !fits(err) {
        let (k, e) = (1..=m)
            .filter(|k| !chosen.contains(k))
            .map(|k| {
                let mut s = chosen.clone();
                s.push(k);
                s.sort_unstable();
                (k, t.error(&s))
            })
            .min_by_key(|&(_, e)| e)
            .expect("a coordinate remains while the error is positive");
        chosen.push(k);
        chosen.sort_unstable();
        err = e;
    }
    Ok(JuntaSearch { size: chosen.len(), witness: chosen, error: t.rational(err), exhaustive: false })
}
