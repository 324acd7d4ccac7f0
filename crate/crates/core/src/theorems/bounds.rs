use num_traits::{One, Zero};

use super::InequalityReport;
use crate::grid::GridFunction;
use crate::kernels::InfluenceKernel;
use crate::rational::{self, ratio};
use crate::{Error, Result};

/// `p(1 - p)` for non-constant `f`, or the degenerate report.
fn variance(f: &GridFunction, name: &str) -> std::result::Result<f64, InequalityReport> {
    let p = f.expectation();
    if p.is_zero() || p.is_one() {
        return Err(InequalityReport::degenerate(name, f.arity(), "constant function"));
    }
    let pf = rational::to_f64(&p);
    Ok(pf * (1.0 - pf))
}

fn stamp(r: InequalityReport, f: &GridFunction, h: &InfluenceKernel) -> InequalityReport {
    r.with_param("kernel", h.name()).with_param("p", rational::display(&f.expectation()))
}

/// Max h-influence against `p(1-p) log2(n) / n`.
pub fn bkkkl_report(f: &GridFunction, h: &InfluenceKernel) -> Result<InequalityReport> {
    let n = f.arity();
    if n < 2 {
        return Err(Error::param("the max-influence bound needs n >= 2"));
    }
    let var = match variance(f, "bkkkl") {
        Ok(v) => v,
        Err(d) => return Ok(stamp(d, f, h)),
    };
    let lhs = f.h_influences(h)?.into_iter().fold(0.0, f64::max);
    let rhs = var * (n as f64).log2() / n as f64;
    Ok(stamp(InequalityReport::new("bkkkl", n, lhs, rhs), f, h))
}

/// Sum of h-influences against `p(1-p) log2(1/delta)`, `delta` the max.
pub fn kkl_sum_report(f: &GridFunction, h: &InfluenceKernel) -> Result<InequalityReport> {
    let n = f.arity();
    let var = match variance(f, "kklsum") {
        Ok(v) => v,
        Err(d) => return Ok(stamp(d, f, h)),
    };
    let infl = f.h_influences(h)?;
    let delta = infl.iter().copied().fold(0.0, f64::max);
    if delta <= 0.0 || delta >= 1.0 {
        let r = InequalityReport::degenerate("kklsum", n, "max influence outside (0, 1)");
        return Ok(stamp(r, f, h).with_param("delta", delta));
    }
    let lhs: f64 = infl.iter().sum();
    let rhs = var * (1.0 / delta).log2();
    Ok(stamp(InequalityReport::new("kklsum", n, lhs, rhs), f, h).with_param("delta", delta))
}

/// `x / log2(4 / 3x)`, extended by 0 at `x = 0`.
pub(crate) fn talagrand_term(x: f64) -> f64 {
    if x <= 0.0 {
        0.0
    } else {
        x / (4.0 / (3.0 * x)).log2()
    }
}

/// `p(1-p)` against `sum_i I_i / log2(4 / (3 I_i))`.
pub fn talagrand_report(f: &GridFunction, h: &InfluenceKernel) -> Result<InequalityReport> {
    let n = f.arity();
    let var = match variance(f, "talagrand") {
        Ok(v) => v,
        Err(d) => return Ok(stamp(d, f, h)),
    };
    let infl = f.h_influences(h)?;
    if infl.iter().any(|&x| x >= 4.0 / 3.0) {
        return Err(Error::param("an h-influence is at least 4/3"));
    }
    let rhs = infl.iter().map(|&x| talagrand_term(x)).sum();
    Ok(stamp(InequalityReport::new("talagrand", n, var, rhs), f, h))
}

/// `lambda(boundary A) * sum_i I^h_A(i)` against `lambda(A)^2 log2(e / lambda(A))`.
pub fn boundary_report(a: &GridFunction, h: &InfluenceKernel) -> Result<InequalityReport> {
    let n = a.arity();
    if !a.is_monotone() {
        return Err(Error::NotMonotone);
    }
    let lambda = a.expectation();
    if lambda > ratio(1, 2) {
        return Err(Error::param(format!("measure {} exceeds 1/2", rational::display(&lambda))));
    }
    if lambda.is_zero() {
        return Ok(stamp(InequalityReport::degenerate("boundary", n, "empty set"), a, h));
    }
    let boundary = a.boundary_measure();
    let sum: f64 = a.h_influences(h)?.iter().sum();
    let lhs = rational::to_f64(&boundary) * sum;
    let l = rational::to_f64(&lambda);
    let rhs = l * l * (std::f64::consts::E / l).log2();
    Ok(stamp(InequalityReport::new("boundary", n, lhs, rhs), a, h).with_param("boundary", rational::display(&boundary)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{corner, threshold_family};
    use crate::kernels::entropy;

    fn close(a: f64, b: f64) -> bool {
        (a - b).abs() <= 1e-12 * b.abs().max(1.0)
    }

    #[test]
    fn bkkkl_corner_four() {
        let g = corner(4, 4).unwrap().grid().unwrap().clone();
        let r = bkkkl_report(&g, &InfluenceKernel::entropy()).unwrap();
        assert!(close(r.lhs, 27.0 / 64.0 * entropy(0.75).unwrap()));
        assert!(close(r.rhs, 81.0 / 256.0 * 175.0 / 256.0 * 2.0 / 4.0));
        assert_eq!(r.params["p"], "81/256");
        let c = GridFunction::constant(vec![2, 2], true).unwrap();
        assert!(bkkkl_report(&c, &InfluenceKernel::entropy()).unwrap().degenerate);
        let one = GridFunction::from_bits(vec![2], [false, true]).unwrap();
        assert!(bkkkl_report(&one, &InfluenceKernel::entropy()).is_err());
    }

    #[test]
    fn kkl_sum_dictator() {
        let g = GridFunction::from_fn(vec![2, 2], |i| i[0] == 1).unwrap();
        let r = kkl_sum_report(&g, &InfluenceKernel::variance()).unwrap();
        assert!(close(r.lhs, 0.25));
        assert!(close(r.rhs, 0.25 * 2.0));
        let e = kkl_sum_report(&g, &InfluenceKernel::entropy()).unwrap();
        assert!(e.degenerate);
    }

    #[test]
    fn talagrand_zero_terms() {
        assert_eq!(talagrand_term(0.0), 0.0);
        let g = GridFunction::from_fn(vec![2, 2], |i| i[0] == 1).unwrap();
        let r = talagrand_report(&g, &InfluenceKernel::variance()).unwrap();
        assert!(close(r.rhs, 0.25 / (4.0f64 / 0.75).log2()));
    }

    #[test]
    fn boundary_dictator_and_threshold() {
        let g = GridFunction::from_fn(vec![2, 2], |i| i[0] == 1).unwrap();
        let r = boundary_report(&g, &InfluenceKernel::entropy()).unwrap();
        assert!(close(r.lhs, 0.5));
        assert!(close(r.rhs, 0.25 * (2.0 * std::f64::consts::E).log2()));
        let t = threshold_family(4, &ratio(1, 2)).unwrap();
        let r = boundary_report(t.grid().unwrap(), &InfluenceKernel::indicator()).unwrap();
        assert_eq!(r.params["boundary"], "1/4");
        assert!(close(r.lhs, 0.25 * 1.5));
        assert!(r.ratio.unwrap().is_finite());
        let big = GridFunction::from_fn(vec![4], |i| i[0] >= 1).unwrap();
        assert!(boundary_report(&big, &InfluenceKernel::entropy()).is_err());
        let bad = GridFunction::from_fn(vec![2, 2], |i| i[0] == 0 && i[1] == 1).unwrap();
        assert!(matches!(boundary_report(&bad, &InfluenceKernel::entropy()), Err(Error::NotMonotone)));
    }
}
