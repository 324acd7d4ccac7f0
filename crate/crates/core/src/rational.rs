//! Exact rational helpers shared by the cube and grid modules.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn ratio(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Rational {
    Rational::new(num.into(), den.into())
}

pub fn int(v: impl Into<BigInt>) -> Rational {
    Rational::from_integer(v.into())
}

pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Parses `a/b`, an integer, or a finite decimal literal such as `0.25`.
pub fn parse(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::param(format!("not a rational number: `{s}`"));
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| bad())?;
        let d: BigInt = d.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        return Ok(Rational::new(n, d));
    }
    if let Some((whole, frac)) = s.split_once('.') {
        let negative = whole.starts_with('-');
        let digits = format!("{}{}", whole.trim_start_matches(['-', '+']), frac);
        if digits.is_empty() || !digits.chars().all(|c| c.is_ascii_digit()) {
            return Err(bad());
        }
        let num: BigInt = digits.parse().map_err(|_| bad())?;
        let den = num_traits::pow(BigInt::from(10), frac.len());
        let r = Rational::new(num, den);
        return Ok(if negative { -r } else { r });
    }
    let n: BigInt = s.parse().map_err(|_| bad())?;
    Ok(Rational::from_integer(n))
}

/// Parses a rational strictly inside `(0, 1)`.
pub fn parse_open_unit(s: &str) -> Result<Rational> {
    let q = parse(s)?;
    if !in_open_unit(&q) {
        return Err(Error::param(format!("{s} is not strictly between 0 and 1")));
    }
    Ok(q)
}

pub fn in_open_unit(q: &Rational) -> bool {
    q.is_positive() && *q < Rational::one()
}

/// `num/den` rendering, with integers printed bare.
pub fn display(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Numerator and denominator of a rational in `(0,1)` as machine integers.
pub(crate) fn small_parts(q: &Rational) -> Result<(u128, u128)> {
    let n = q.numer().to_u128();
    let d = q.denom().to_u128();
    match (n, d) {
        (Some(n), Some(d)) => Ok((n, d)),
        _ => Err(Error::TooLarge { what: format!("rational {q}"), limit: "u128".into() }),
    }
}
