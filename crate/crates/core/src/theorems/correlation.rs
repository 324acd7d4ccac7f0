use num_traits::Zero;

use super::quadrature::integrate;
use super::InequalityReport;
use crate::cube::{CubeFunction, ProductMeasure};
use crate::grid::GridFunction;
use crate::kernels::InfluenceKernel;
use crate::rational::{self, ratio, Rational};
use crate::{Error, Result};

/// `c(alpha) = 1 / int_0^1 (alpha (2t-1) [t(1-t)]^(alpha-1))^2 dt` for
/// `alpha` in `(1/2, 1]`.
pub fn normalization_constant(alpha: f64) -> Result<f64> {
    if !(alpha > 0.5 && alpha <= 1.0) {
        return Err(Error::param(format!("alpha = {alpha} is not in (1/2, 1]; the integral diverges")));
    }
    // With t = u^p, p = 1/(2 alpha - 1), the factor t^(2 alpha - 2) cancels the
    // Jacobian, leaving a bounded integrand on [0, 2^-(2 alpha - 1)].
    let p = 1.0 / (2.0 * alpha - 1.0);
    let upper = 0.5f64.powf(2.0 * alpha - 1.0);
    let integrand = |u: f64| {
        let t = u.powf(p);
        let d = 2.0 * t - 1.0;
        p * alpha * alpha * d * d * (1.0 - t).powf(2.0 * alpha - 2.0)
    };
    let half = integrate(&integrand, 0.0, upper, 1e-12, 0.0)?;
    // The integrand is symmetric about t = 1/2.
    Ok(1.0 / (2.0 * half))
}

fn require_monotone_grids(family: &[GridFunction]) -> Result<usize> {
    let n = family.first().ok_or_else(|| Error::param("empty family"))?.arity();
    for f in family {
        if f.arity() != n {
            return Err(Error::ArityMismatch { expected: n, found: f.arity() });
        }
        if !f.is_monotone() {
            return Err(Error::NotMonotone);
        }
    }
    Ok(n)
}

/// Total pairwise correlation of a monotone family against
/// `c(alpha) sum_{A,B} sum_i I^{h_alpha}_A(i) I^{h_alpha}_B(i)`.
///
/// For `alpha <= 1/2` there is no constant; the right side is then the bare
/// product sum and `c_alpha` is reported as `none`.
pub fn correlation_report(family: &[GridFunction], alpha: f64) -> Result<InequalityReport> {
    let n = require_monotone_grids(family)?;
    let h = InfluenceKernel::alpha(alpha)?;
    let means: Vec<Rational> = family.iter().map(|f| f.expectation()).collect();
    let mut lhs = Rational::zero();
    for (i, a) in family.iter().enumerate() {
        for (j, b) in family.iter().enumerate().skip(i) {
            let term = a.intersection_mass(b)? - &means[i] * &means[j];
            lhs += if i == j { term } else { term * Rational::from_integer(2.into()) };
        }
    }
    let mut sums = vec![0.0; n];
    for f in family {
        for (s, v) in sums.iter_mut().zip(f.h_influences(&h)?) {
            *s += v;
        }
    }
    let products: f64 = sums.iter().map(|s| s * s).sum();
    let c = if alpha > 0.5 { Some(normalization_constant(alpha)?) } else { None };
    let rhs = c.map_or(products, |c| c * products);
    Ok(InequalityReport::new("correlation", n, rational::to_f64(&lhs), rhs)
        .with_param("alpha", alpha)
        .with_param("c_alpha", c.map_or("none".to_string(), |c| c.to_string()))
        .with_param("members", family.len())
        .with_param("products", products)
        .with_param("lhs_exact", rational::display(&lhs)))
}

/// `mu(A and B) >= mu(A) mu(B)` for monotone `A`, `B`, decided exactly.
pub fn harris_kleitman_check(a: &CubeFunction, b: &CubeFunction, mu: &ProductMeasure) -> Result<bool> {
    if !a.is_monotone() || !b.is_monotone() {
        return Err(Error::NotMonotone);
    }
    let both = a.and(b)?.expectation(mu)?;
    Ok(both >= a.expectation(mu)? * b.expectation(mu)?)
}

/// Total pairwise correlation against `1/4 sum_{A,B} sum_i I_A(i) I_B(i)`
/// under the uniform measure, both sides exact.
pub fn averaged_correlation_check(family: &[CubeFunction]) -> Result<InequalityReport> {
    let m = family.first().ok_or_else(|| Error::param("empty family"))?.arity();
    let mu = ProductMeasure::uniform(m);
    for f in family {
        if f.arity() != m {
            return Err(Error::ArityMismatch { expected: m, found: f.arity() });
        }
        if !f.is_monotone() {
            return Err(Error::NotMonotone);
        }
    }
    let means = family.iter().map(|f| f.expectation(&mu)).collect::<Result<Vec<_>>>()?;
    let mut lhs = Rational::zero();
    for (i, a) in family.iter().enumerate() {
        for (j, b) in family.iter().enumerate() {
            lhs += a.and(b)?.expectation(&mu)? - &means[i] * &means[j];
        }
    }
    let mut sums = vec![Rational::zero(); m];
    for f in family {
        for (s, v) in sums.iter_mut().zip(f.influences(&mu)?) {
            *s += v;
        }
    }
    let rhs = sums.iter().map(|s| s * s).fold(Rational::zero(), |a, b| a + b) * ratio(1, 4);
    Ok(InequalityReport::new("avgcorr", m, rational::to_f64(&lhs), rational::to_f64(&rhs))
        .with_param("members", family.len())
        .with_param("lhs_exact", rational::display(&lhs))
        .with_param("rhs_exact", rational::display(&rhs)))
}
