//! Boolean functions on the discrete cube `{0,1}^m` under product measures.
//!
//! Table index convention: coordinate 1 is the most significant bit of the
//! index, so the table lists points in lexicographic order of `(x_1, ..., x_m)`.

use std::fmt;

use bitvec::prelude::*;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::format::{self, Bits};
use crate::kernels::InfluenceKernel;
use crate::rational::{self, Rational};

/// Largest supported dense arity.
pub const MAX_ARITY: usize = 24;

const PAR_THRESHOLD: usize = 1 << 15;

/// Independent product measure with rational biases `q_i = Pr[x_i = 1]`.
///
/// Point masses are handled as integer numerators over the common
/// denominator `D = prod d_i`, which must fit in a `u128`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductMeasure {
    biases: Vec<Rational>,
    ones: Vec<u128>,
    zeros: Vec<u128>,
    dens: Vec<u128>,
    total: u128,
    // weight numerator indexed by popcount, when all biases are equal
    by_weight: Option<Vec<u128>>,
}

impl ProductMeasure {
    pub fn new(biases: Vec<Rational>) -> Result<Self> {
        let mut ones = Vec::with_capacity(biases.len());
        let mut zeros = Vec::with_capacity(biases.len());
        let mut dens = Vec::with_capacity(biases.len());
        let mut total: u128 = 1;
        for q in &biases {
            if !rational::in_open_unit(q) {
                return Err(Error::param(format!("bias {q} is not strictly inside (0, 1)")));
            }
            let (a, d) = rational::small_parts(q)?;
            total = total.checked_mul(d).ok_or_else(|| Error::TooLarge {
                what: "product of bias denominators".into(),
                limit: "u128".into(),
            })?;
            ones.push(a);
            zeros.push(d - a);
            dens.push(d);
        }
        let by_weight = if biases.windows(2).all(|w| w[0] == w[1]) && !biases.is_empty() {
            let m = biases.len();
            let (a, b) = (ones[0], zeros[0]);
            Some(
                (0..=m)
                    .map(|k| a.pow(k as u32) * b.pow((m - k) as u32))
                    .collect(),
            )
        } else {
            None
        };
        Ok(ProductMeasure { biases, ones, zeros, dens, total, by_weight })
    }

    /// The same bias on every coordinate.
    pub fn homogeneous(arity: usize, q: Rational) -> Result<Self> {
        Self::new(vec![q; arity])
    }

    pub fn uniform(arity: usize) -> Self {
        Self::homogeneous(arity, rational::ratio(1, 2)).expect("2^m fits for m <= 24")
    }

    /// Parses `q=<rational>` (one bias for every coordinate) or `q=<r1,...,rm>`.
    pub fn parse_designator(s: &str, arity: usize) -> Result<Self> {
        let body = s
            .trim()
            .strip_prefix("q=")
            .ok_or_else(|| Error::param(format!("measure designator must start with `q=`: `{s}`")))?;
        let parts: Vec<&str> = body.split(',').collect();
        if parts.len() == 1 {
            return Self::homogeneous(arity, rational::parse_open_unit(parts[0])?);
        }
        if parts.len() != arity {
            return Err(Error::ArityMismatch { expected: arity, found: parts.len() });
        }
        let biases = parts
            .into_iter()
            .map(rational::parse_open_unit)
            .collect::<Result<Vec<_>>>()?;
        Self::new(biases)
    }

    pub fn arity(&self) -> usize {
        self.biases.len()
    }

    pub fn biases(&self) -> &[Rational] {
        &self.biases
    }

    pub fn bias(&self, k: usize) -> &Rational {
        &self.biases[k - 1]
    }

    pub fn is_uniform(&self) -> bool {
        self.biases.iter().all(|q| *q == rational::ratio(1, 2))
    }

    /// The shared denominator `D` of all point masses.
    pub fn denominator(&self) -> u128 {
        self.total
    }

    /// Numerator of `mu(x)` over [`denominator`](Self::denominator).
    pub fn weight(&self, x: usize) -> u128 {
        if let Some(table) = &self.by_weight {
            return table[x.count_ones() as usize];
        }
        let m = self.arity();
        let mut w = 1u128;
        for i in 0..m {
            w *= if x >> (m - 1 - i) & 1 == 1 { self.ones[i] } else { self.zeros[i] };
        }
        w
    }

    pub fn point_mass(&self, x: usize) -> Rational {
        rational::ratio(self.weight(x), self.total)
    }

    fn mass(&self, numerator: u128) -> Rational {
        rational::ratio(numerator, self.total)
    }
}

/// Truth table of a Boolean function on `{0,1}^m`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CubeFunction {
    arity: usize,
    table: Bits,
}

impl fmt::Debug for CubeFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CubeFunction(m={}, {})", self.arity, format::encode(&self.table))
    }
}

/// Exact masses of the four fiber classes in one direction, keyed by
/// `(f(x | x_k = 0), f(x | x_k = 1))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiberClasses {
    pub zero_zero: Rational,
    pub zero_one: Rational,
    pub one_zero: Rational,
    pub one_one: Rational,
}

impl FiberClasses {
    /// Mass of fibers on which the function is nonconstant.
    pub fn nonconstant(&self) -> Rational {
        &self.zero_one + &self.one_zero
    }
}

pub(crate) fn check_coordinate(k: usize, arity: usize) -> Result<()> {
    if k == 0 || k > arity {
        return Err(Error::CoordinateOutOfRange { k, arity });
    }
    Ok(())
}

fn par_sum(len: usize, f: impl Fn(usize) -> u128 + Sync + Send) -> u128 {
    if len < PAR_THRESHOLD {
        (0..len).map(f).sum()
    } else {
        (0..len).into_par_iter().with_min_len(1 << 12).map(f).sum()
    }
}

impl CubeFunction {
    pub fn from_bits(arity: usize, bits: impl IntoIterator<Item = bool>) -> Result<Self> {
        if arity > MAX_ARITY {
            return Err(Error::TooLarge { what: format!("arity {arity}"), limit: MAX_ARITY.to_string() });
        }
        let table: Bits = bits.into_iter().collect();
        if table.len() != 1 << arity {
            return Err(Error::param(format!(
                "truth table has {} entries, expected 2^{arity}",
                table.len()
            )));
        }
        Ok(CubeFunction { arity, table })
    }

    /// Tabulates `f` on every point; the argument is the table index.
    pub fn from_fn(arity: usize, f: impl FnMut(usize) -> bool) -> Result<Self> {
        if arity > MAX_ARITY {
            return Err(Error::TooLarge { what: format!("arity {arity}"), limit: MAX_ARITY.to_string() });
        }
        Self::from_bits(arity, (0..1usize << arity).map(f))
    }

    /// Tabulates `f` on coordinate vectors `(x_1, ..., x_m)`.
    pub fn from_coords(arity: usize, f: impl Fn(&[bool]) -> bool) -> Result<Self> {
        let mut buf = vec![false; arity];
        Self::from_fn(arity, |x| {
            for (i, b) in buf.iter_mut().enumerate() {
                *b = x >> (arity - 1 - i) & 1 == 1;
            }
            f(&buf)
        })
    }

    pub fn constant(arity: usize, value: bool) -> Result<Self> {
        Self::from_fn(arity, |_| value)
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn len(&self) -> usize {
        self.table.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn get(&self, x: usize) -> bool {
        self.table[x]
    }

    /// Bit mask of coordinate `k` (1-based) in the table index.
    pub fn coordinate_mask(&self, k: usize) -> usize {
        1 << (self.arity - k)
    }

    pub fn count_ones(&self) -> usize {
        self.table.count_ones()
    }

    fn check_measure(&self, mu: &ProductMeasure) -> Result<()> {
        if mu.arity() != self.arity {
            return Err(Error::ArityMismatch { expected: self.arity, found: mu.arity() });
        }
        Ok(())
    }

    pub fn expectation(&self, mu: &ProductMeasure) -> Result<Rational> {
        self.check_measure(mu)?;
        let s = par_sum(self.len(), |x| if self.table[x] { mu.weight(x) } else { 0 });
        Ok(mu.mass(s))
    }

    /// Masses of the four fiber classes in direction `k`.
    pub fn fiber_classes(&self, mu: &ProductMeasure, k: usize) -> Result<FiberClasses> {
        self.check_measure(mu)?;
        check_coordinate(k, self.arity)?;
        let bit = self.coordinate_mask(k);
        let class = |x: usize| -> usize {
            (self.table[x] as usize) << 1 | self.table[x | bit] as usize
        };
        let sums = if self.len() < PAR_THRESHOLD {
            let mut acc = [0u128; 4];
            for x in (0..self.len()).filter(|x| x & bit == 0) {
                acc[class(x)] += mu.weight(x);
            }
            acc
        } else {
            (0..self.len())
                .into_par_iter()
                .with_min_len(1 << 12)
                .filter(|x| x & bit == 0)
                .fold(|| [0u128; 4], |mut acc, x| {
                    acc[class(x)] += mu.weight(x);
                    acc
                })
                .reduce(|| [0u128; 4], |a, b| [a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]])
        };
        // weights of x with x_k = 0 carry the factor (1 - q_k); rescale to fiber masses
        let i = k - 1;
        let scale = Rational::new(BigInt::from(mu.dens[i]), BigInt::from(mu.zeros[i]));
        let m = |s: u128| mu.mass(s) * &scale;
        Ok(FiberClasses {
            zero_zero: m(sums[0]),
            zero_one: m(sums[1]),
            one_zero: m(sums[2]),
            one_one: m(sums[3]),
        })
    }

    /// `I^h_f(k)`: fiber-mass weighted `h` of the fiber mean.
    pub fn h_influence(&self, mu: &ProductMeasure, k: usize, h: &InfluenceKernel) -> Result<f64> {
        let c = self.fiber_classes(mu, k)?;
        let q = mu.bias(k);
        let one = Rational::one();
        let terms = [
            (&c.zero_zero, Rational::zero()),
            (&c.zero_one, q.clone()),
            (&c.one_zero, &one - q),
            (&c.one_one, one.clone()),
        ];
        Ok(terms
            .iter()
            .filter(|(w, _)| !w.is_zero())
            .map(|(w, mean)| rational::to_f64(w) * h.eval_rational(mean))
            .sum())
    }

    /// Indicator-kernel influence as an exact rational.
    pub fn influence(&self, mu: &ProductMeasure, k: usize) -> Result<Rational> {
        Ok(self.fiber_classes(mu, k)?.nonconstant())
    }

    pub fn influences(&self, mu: &ProductMeasure) -> Result<Vec<Rational>> {
        (1..=self.arity).map(|k| self.influence(mu, k)).collect()
    }

    /// Mass of `{x : f(x) = 1 and f is nonconstant on some fiber through x}`.
    pub fn boundary_measure(&self, mu: &ProductMeasure) -> Result<Rational> {
        self.check_measure(mu)?;
        let m = self.arity;
        let s = par_sum(self.len(), |x| {
            if self.table[x] && (0..m).any(|i| !self.table[x ^ (1 << i)]) {
                mu.weight(x)
            } else {
                0
            }
        });
        Ok(mu.mass(s))
    }

    /// Coordinatewise monotone: `f(x) <= f(x + e_k)` for every `x` with `x_k = 0`.
    pub fn is_monotone(&self) -> bool {
        (0..self.arity).all(|i| {
            let bit = 1 << i;
            (0..self.len()).filter(|x| x & bit == 0).all(|x| !self.table[x] || self.table[x | bit])
        })
    }

    /// `x -> 1 - f(1 - x)`.
    pub fn dual(&self) -> CubeFunction {
        let mask = self.len() - 1;
        let table = (0..self.len()).map(|x| !self.table[x ^ mask]).collect();
        CubeFunction { arity: self.arity, table }
    }

    pub fn and(&self, other: &CubeFunction) -> Result<CubeFunction> {
        if other.arity != self.arity {
            return Err(Error::ArityMismatch { expected: self.arity, found: other.arity });
        }
        let mut table = self.table.clone();
        table &= &other.table;
        Ok(CubeFunction { arity: self.arity, table })
    }

    /// Serialises to the two-line truth-table format: `m=<int>` then the hex bit string.
    pub fn to_text(&self) -> String {
        format!("m={}\n{}\n", self.arity, format::encode(&self.table))
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let m: usize = format::header(lines.next(), "m", 1)?
            .trim()
            .parse()
            .map_err(|_| Error::parse(1, "arity is not an integer"))?;
        if m > MAX_ARITY {
            return Err(Error::TooLarge { what: format!("arity {m}"), limit: MAX_ARITY.to_string() });
        }
        let hex = lines.next().ok_or_else(|| Error::parse(2, "missing truth table"))?;
        let table = format::decode(hex, 1 << m, 2)?;
        Ok(CubeFunction { arity: m, table })
    }
}

/// Every monotone Boolean function on `{0,1}^m`, built recursively from
/// pairs `f_0 <= f_1` of monotone functions on `m - 1` variables.
pub fn all_monotone(arity: usize) -> Result<Vec<CubeFunction>> {
    if arity > 5 {
        return Err(Error::TooLarge { what: format!("monotone enumeration at arity {arity}"), limit: "5".into() });
    }
    let mut level: Vec<Bits> = vec![bitvec![u64, Lsb0; 0], bitvec![u64, Lsb0; 1]];
    for _ in 0..arity {
        let mut next = Vec::new();
        for f0 in &level {
            for f1 in &level {
                if f0.iter().zip(f1.iter()).all(|(a, b)| !*a || *b) {
                    let mut t = f0.clone();
                    t.extend_from_bitslice(f1);
                    next.push(t);
                }
            }
        }
        level = next;
    }
    Ok(level.into_iter().map(|table| CubeFunction { arity, table }).collect())
}

pub fn cube_expectation(f: &CubeFunction, mu: &ProductMeasure) -> Result<Rational> {
    f.expectation(mu)
}

pub fn cube_h_influence(f: &CubeFunction, mu: &ProductMeasure, k: usize, h: &InfluenceKernel) -> Result<f64> {
    f.h_influence(mu, k, h)
}

pub fn cube_boundary_measure(a: &CubeFunction, mu: &ProductMeasure) -> Result<Rational> {
    a.boundary_measure(mu)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    fn and2() -> CubeFunction {
        CubeFunction::from_coords(2, |x| x[0] && x[1]).unwrap()
    }
    fn or2() -> CubeFunction {
        CubeFunction::from_coords(2, |x| x[0] || x[1]).unwrap()
    }

    #[test]
    fn expectation_examples() {
        assert_eq!(and2().expectation(&ProductMeasure::uniform(2)).unwrap(), ratio(1, 4));
        let mu = ProductMeasure::homogeneous(2, ratio(1, 3)).unwrap();
        assert_eq!(or2().expectation(&mu).unwrap(), ratio(5, 9));
        let one = CubeFunction::constant(3, true).unwrap();
        let mu3 = ProductMeasure::new(vec![ratio(1, 3), ratio(2, 7), ratio(1, 2)]).unwrap();
        assert_eq!(one.expectation(&mu3).unwrap(), ratio(1, 1));
        assert!(matches!(one.expectation(&mu), Err(Error::ArityMismatch { .. })));
    }

    #[test]
    fn point_masses_sum_to_one() {
        let mu = ProductMeasure::new(vec![ratio(1, 3), ratio(2, 7), ratio(3, 5)]).unwrap();
        let total: Rational = (0..8).map(|x| mu.point_mass(x)).sum();
        assert_eq!(total, ratio(1, 1));
        // x = (1,0,1): 1/3 * 5/7 * 3/5
        assert_eq!(mu.point_mass(0b101), ratio(1, 7));
    }

    #[test]
    fn influence_examples() {
        let mu = ProductMeasure::uniform(2);
        let dict = CubeFunction::from_coords(2, |x| x[0]).unwrap();
        let ind = InfluenceKernel::indicator();
        assert_eq!(dict.h_influence(&mu, 1, &ind).unwrap(), 1.0);
        assert_eq!(dict.h_influence(&mu, 2, &ind).unwrap(), 0.0);
        let xor = CubeFunction::from_coords(2, |x| x[0] ^ x[1]).unwrap();
        assert_eq!(xor.h_influence(&mu, 1, &InfluenceKernel::entropy()).unwrap(), 1.0);
        let tribes = CubeFunction::from_coords(4, |x| (x[0] && x[1]) || (x[2] && x[3])).unwrap();
        let mu4 = ProductMeasure::uniform(4);
        for k in 1..=4 {
            assert_eq!(tribes.influence(&mu4, k).unwrap(), ratio(3, 8));
            assert_eq!(tribes.h_influence(&mu4, k, &ind).unwrap(), 0.375);
        }
        assert!(matches!(
            tribes.h_influence(&mu4, 5, &ind),
            Err(Error::CoordinateOutOfRange { k: 5, arity: 4 })
        ));
        assert!(tribes.influence(&mu4, 0).is_err());
    }

    #[test]
    fn boundary_examples() {
        let mu = ProductMeasure::uniform(4);
        let thr = CubeFunction::from_fn(4, |x| x.count_ones() > 2).unwrap();
        // A-points of weight 3 drop out when a one is flipped; weight 4 points do not
        assert_eq!(thr.boundary_measure(&mu).unwrap(), ratio(4, 16));
        let zero = CubeFunction::constant(4, false).unwrap();
        assert_eq!(zero.boundary_measure(&mu).unwrap(), ratio(0, 1));
        let dict = CubeFunction::from_coords(2, |x| x[0]).unwrap();
        assert_eq!(dict.boundary_measure(&ProductMeasure::uniform(2)).unwrap(), ratio(1, 2));
    }

    #[test]
    fn dual_and_monotone() {
        assert_eq!(or2().dual(), and2());
        assert_eq!(or2().dual().dual(), or2());
        assert!(or2().is_monotone());
        assert!(!CubeFunction::from_coords(2, |x| x[0] ^ x[1]).unwrap().is_monotone());
        let mu = ProductMeasure::homogeneous(2, ratio(1, 3)).unwrap();
        let mu_c = ProductMeasure::homogeneous(2, ratio(2, 3)).unwrap();
        assert_eq!(
            or2().expectation(&mu).unwrap(),
            ratio(1, 1) - and2().expectation(&mu_c).unwrap()
        );
    }

    #[test]
    fn dedekind_counts() {
        let counts: Vec<usize> = (0..=5).map(|m| all_monotone(m).unwrap().len()).collect();
        assert_eq!(counts, vec![2, 3, 6, 20, 168, 7581]);
        assert!(all_monotone(4).unwrap().iter().all(|f| f.is_monotone()));
    }

    #[test]
    fn text_format_round_trip() {
        let f = CubeFunction::from_coords(3, |x| x[0] && !x[2]).unwrap();
        let text = f.to_text();
        assert_eq!(text, "m=3\n0a\n");
        assert_eq!(CubeFunction::from_text(&text).unwrap(), f);
        let small = CubeFunction::from_coords(1, |x| x[0]).unwrap();
        assert_eq!(small.to_text(), "m=1\n4\n");
        assert_eq!(CubeFunction::from_text("m=1\n4\n").unwrap(), small);
        assert!(CubeFunction::from_text("n=1\n4\n").is_err());
        assert!(CubeFunction::from_text("m=2\n4\n").is_ok());
        assert!(CubeFunction::from_text("m=2\n44\n").is_err());
    }

    #[test]
    fn measure_designators() {
        let mu = ProductMeasure::parse_designator("q=1/3", 3).unwrap();
        assert_eq!(mu.biases(), &[ratio(1, 3), ratio(1, 3), ratio(1, 3)]);
        let mu = ProductMeasure::parse_designator("q=1/3,1/2", 2).unwrap();
        assert_eq!(mu.bias(2), &ratio(1, 2));
        assert!(ProductMeasure::parse_designator("q=1/3,1/2", 3).is_err());
        assert!(ProductMeasure::parse_designator("q=3/2", 1).is_err());
        assert!(ProductMeasure::parse_designator("p=1/2", 1).is_err());
    }

    #[test]
    fn large_cube_is_deterministic() {
        // exercises the parallel path
        let f = CubeFunction::from_fn(18, |x| (x.wrapping_mul(2654435761) >> 7) & 1 == 1).unwrap();
        let mu = ProductMeasure::homogeneous(18, ratio(1, 3)).unwrap();
        let a = f.influence(&mu, 7).unwrap();
        let b = f.influence(&mu, 7).unwrap();
        assert_eq!(a, b);
        let brute: Rational = (0..f.len())
            .filter(|x| x & f.coordinate_mask(7) == 0)
            .filter(|&x| f.get(x) != f.get(x | f.coordinate_mask(7)))
            .map(|x| mu.point_mass(x) + mu.point_mass(x | f.coordinate_mask(7)))
            .sum();
        assert_eq!(a, brute);
    }
}
