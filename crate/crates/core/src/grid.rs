//! Boolean step functions on `[0,1]^n` under Lebesgue measure.
//!
//! Axis `i` is split into `r_i` equal intervals and the function is constant
//! on every open cell. Cells are stored row-major with axis `n` varying
//! fastest. Functions that are indicators of a product of per-axis sets can
//! also be stored in factored form, which keeps high-dimensional members of
//! product families (such as the corner set) exact without a dense table.

use std::fmt;

use bitvec::prelude::*;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::cube::check_coordinate;
use crate::error::{Error, Result};
use crate::format::{self, Bits};
use crate::kernels::InfluenceKernel;
use crate::rational::{self, Rational};

/// Largest dense table, in cells.
pub const MAX_CELLS: usize = 1 << 27;

const PAR_THRESHOLD: usize = 1 << 20;

#[derive(Clone)]
pub(crate) enum Cells {
    Dense(Bits),
    /// Indicator of `S_1 x ... x S_n`, one bit set per axis.
    Product(Vec<Bits>),
}

#[derive(Clone)]
pub struct GridFunction {
    pub(crate) resolutions: Vec<usize>,
    pub(crate) cells: Cells,
}

/// One class of fibers sharing the same mean.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiberClass {
    pub weight: Rational,
    pub mean: Rational,
}

/// Exact distribution of fiber means in one direction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiberProfile {
    pub coordinate: usize,
    /// Sorted by increasing mean; weights sum to one.
    pub entries: Vec<FiberClass>,
}

impl FiberProfile {
    pub fn h_influence(&self, h: &InfluenceKernel) -> f64 {
        self.entries
            .iter()
            .map(|e| rational::to_f64(&e.weight) * h.eval_rational(&e.mean))
            .sum()
    }

    /// Total weight of fibers whose mean lies strictly inside `(0, 1)`.
    pub fn nonconstant_weight(&self) -> Rational {
        self.entries
            .iter()
            .filter(|e| rational::in_open_unit(&e.mean))
            .map(|e| e.weight.clone())
            .sum()
    }

    /// Compact `mean:weight;...` rendering.
    pub fn summary(&self) -> String {
        self.entries
            .iter()
            .map(|e| format!("{}:{}", rational::display(&e.mean), rational::display(&e.weight)))
            .collect::<Vec<_>>()
            .join(";")
    }
}

pub(crate) fn cap_check(resolutions: &[usize]) -> Result<usize> {
    let mut total: usize = 1;
    for &r in resolutions {
        if r == 0 {
            return Err(Error::param("resolutions must be positive"));
        }
        total = total.checked_mul(r).filter(|&t| t <= MAX_CELLS).ok_or_else(|| Error::TooLarge {
            what: format!("grid with resolutions {resolutions:?}"),
            limit: format!("{MAX_CELLS} cells"),
        })?;
    }
    Ok(total)
}

/// Row-major line geometry for one axis (0-based).
#[derive(Clone, Copy)]
pub(crate) struct Lines {
    pub len: usize,
    pub stride: usize,
    block: usize,
    pub count: usize,
}

impl Lines {
    pub(crate) fn new(resolutions: &[usize], axis: usize) -> Self {
        let stride: usize = resolutions[axis + 1..].iter().product();
        let len = resolutions[axis];
        let total: usize = resolutions.iter().product();
        Lines { len, stride, block: len * stride, count: total / len }
    }

    /// Index of the first cell of line `l`.
    pub(crate) fn base(&self, l: usize) -> usize {
        (l / self.stride) * self.block + l % self.stride
    }
}

fn count_line(bits: &BitSlice<u64, Lsb0>, lines: &Lines, l: usize) -> usize {
    let base = lines.base(l);
    (0..lines.len).filter(|&j| bits[base + j * lines.stride]).count()
}

impl GridFunction {
    pub fn from_bits(resolutions: Vec<usize>, bits: impl IntoIterator<Item = bool>) -> Result<Self> {
        let total = cap_check(&resolutions)?;
        let bits: Bits = bits.into_iter().collect();
        if bits.len() != total {
            return Err(Error::param(format!("grid table has {} cells, expected {total}", bits.len())));
        }
        Ok(GridFunction { resolutions, cells: Cells::Dense(bits) })
    }

    /// Tabulates `f` on cell multi-indices `(j_1, ..., j_n)`.
    pub fn from_fn(resolutions: Vec<usize>, mut f: impl FnMut(&[usize]) -> bool) -> Result<Self> {
        let total = cap_check(&resolutions)?;
        let n = resolutions.len();
        let mut idx = vec![0usize; n];
        let mut bits = Bits::with_capacity(total);
        for _ in 0..total {
            bits.push(f(&idx));
            for i in (0..n).rev() {
                idx[i] += 1;
                if idx[i] < resolutions[i] {
                    break;
                }
                idx[i] = 0;
            }
        }
        Ok(GridFunction { resolutions, cells: Cells::Dense(bits) })
    }

    /// Indicator of a product set, given per axis as a cell mask.
    pub fn product(axes: Vec<Vec<bool>>) -> Result<Self> {
        if axes.iter().any(|a| a.is_empty()) {
            return Err(Error::param("resolutions must be positive"));
        }
        let resolutions: Vec<usize> = axes.iter().map(|a| a.len()).collect();
        resolutions.iter().try_fold(1u128, |acc, &r| acc.checked_mul(r as u128)).ok_or_else(|| {
            Error::TooLarge { what: "product grid cell count".into(), limit: "u128".into() }
        })?;
        let axes = axes.into_iter().map(|a| a.into_iter().collect()).collect();
        Ok(GridFunction { resolutions, cells: Cells::Product(axes) })
    }

    pub fn constant(resolutions: Vec<usize>, value: bool) -> Result<Self> {
        let total = cap_check(&resolutions)?;
        Ok(GridFunction { resolutions, cells: Cells::Dense(BitVec::repeat(value, total)) })
    }

    /// Two-dimensional function from a matrix `A[i][j]`, rows along axis 1.
    pub fn from_matrix(rows: &[Vec<bool>]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::param("matrix rows differ in length"));
        }
        Self::from_bits(vec![rows.len(), cols], rows.iter().flatten().copied())
    }

    pub fn to_matrix(&self) -> Result<Vec<Vec<bool>>> {
        if self.arity() != 2 {
            return Err(Error::param("only two-dimensional grids convert to matrices"));
        }
        let (r, c) = (self.resolutions[0], self.resolutions[1]);
        Ok((0..r).map(|i| (0..c).map(|j| self.get(&[i, j])).collect()).collect())
    }

    pub fn arity(&self) -> usize {
        self.resolutions.len()
    }

    pub fn resolutions(&self) -> &[usize] {
        &self.resolutions
    }

    pub fn is_dense(&self) -> bool {
        matches!(self.cells, Cells::Dense(_))
    }

    pub fn cell_count(&self) -> u128 {
        self.resolutions.iter().map(|&r| r as u128).product()
    }

    pub fn get(&self, idx: &[usize]) -> bool {
        match &self.cells {
            Cells::Dense(bits) => {
                let mut flat = 0;
                for (i, &j) in idx.iter().enumerate() {
                    flat = flat * self.resolutions[i] + j;
                }
                bits[flat]
            }
            Cells::Product(axes) => axes.iter().zip(idx).all(|(a, &j)| a[j]),
        }
    }

    pub(crate) fn dense_bits(&self) -> Option<&Bits> {
        match &self.cells {
            Cells::Dense(b) => Some(b),
            Cells::Product(_) => None,
        }
    }

    /// Materialises the full cell table.
    pub fn to_dense(&self) -> Result<GridFunction> {
        match &self.cells {
            Cells::Dense(_) => Ok(self.clone()),
            Cells::Product(_) => Self::from_fn(self.resolutions.clone(), |idx| self.get(idx)),
        }
    }

    /// Number of one-cells.
    pub fn ones(&self) -> BigInt {
        match &self.cells {
            Cells::Dense(bits) => BigInt::from(bits.count_ones()),
            Cells::Product(axes) => axes.iter().map(|a| BigInt::from(a.count_ones())).product(),
        }
    }

    pub fn expectation(&self) -> Rational {
        Rational::new(self.ones(), BigInt::from(self.cell_count()))
    }

    pub fn fiber_profile(&self, k: usize) -> Result<FiberProfile> {
        check_coordinate(k, self.arity())?;
        let axis = k - 1;
        let r_k = self.resolutions[axis];
        let mut entries = match &self.cells {
            Cells::Dense(bits) => {
                let lines = Lines::new(&self.resolutions, axis);
                let hist = if lines.count * lines.len < PAR_THRESHOLD {
                    let mut h = vec![0u64; r_k + 1];
                    for l in 0..lines.count {
                        h[count_line(bits, &lines, l)] += 1;
                    }
                    h
                } else {
                    (0..lines.count)
                        .into_par_iter()
                        .with_min_len(1 << 10)
                        .fold(
                            || vec![0u64; r_k + 1],
                            |mut h, l| {
                                h[count_line(bits, &lines, l)] += 1;
                                h
                            },
                        )
                        .reduce(|| vec![0u64; r_k + 1], |a, b| a.iter().zip(&b).map(|(x, y)| x + y).collect())
                };
                hist.iter()
                    .enumerate()
                    .filter(|(_, &n)| n > 0)
                    .map(|(c, &n)| FiberClass {
                        weight: rational::ratio(n, lines.count as u64),
                        mean: rational::ratio(c as u64, r_k as u64),
                    })
                    .collect::<Vec<_>>()
            }
            Cells::Product(axes) => {
                let others: Rational = axes
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| *i != axis)
                    .map(|(_, a)| rational::ratio(a.count_ones() as u64, a.len() as u64))
                    .product();
                let mean = rational::ratio(axes[axis].count_ones() as u64, r_k as u64);
                vec![
                    FiberClass { weight: Rational::one() - &others, mean: Rational::zero() },
                    FiberClass { weight: others, mean },
                ]
            }
        };
        entries.retain(|e| !e.weight.is_zero());
        entries.sort_by(|a, b| a.mean.cmp(&b.mean));
        entries.dedup_by(|b, a| {
            if a.mean == b.mean {
                a.weight += &b.weight;
                true
            } else {
                false
            }
        });
        Ok(FiberProfile { coordinate: k, entries })
    }

    pub fn h_influence(&self, k: usize, h: &InfluenceKernel) -> Result<f64> {
        Ok(self.fiber_profile(k)?.h_influence(h))
    }

    pub fn h_influences(&self, h: &InfluenceKernel) -> Result<Vec<f64>> {
        (1..=self.arity()).map(|k| self.h_influence(k, h)).collect()
    }

    /// Indicator-kernel influence as an exact rational.
    pub fn influence(&self, k: usize) -> Result<Rational> {
        Ok(self.fiber_profile(k)?.nonconstant_weight())
    }

    /// Mass of the one-cells lying on at least one nonconstant axis-parallel line.
    pub fn boundary_measure(&self) -> Rational {
        match &self.cells {
            Cells::Dense(bits) => {
                let mut marked = BitVec::<u64, Lsb0>::repeat(false, bits.len());
                for axis in 0..self.arity() {
                    let lines = Lines::new(&self.resolutions, axis);
                    for l in 0..lines.count {
                        let c = count_line(bits, &lines, l);
                        if c == 0 || c == lines.len {
                            continue;
                        }
                        let base = lines.base(l);
                        for j in 0..lines.len {
                            let idx = base + j * lines.stride;
                            if bits[idx] {
                                marked.set(idx, true);
                            }
                        }
                    }
                }
                rational::ratio(marked.count_ones() as u64, bits.len() as u64)
            }
            Cells::Product(axes) => {
                let empty = axes.iter().any(|a| a.not_any());
                let full = axes.iter().all(|a| a.all());
                if empty || full {
                    Rational::zero()
                } else {
                    self.expectation()
                }
            }
        }
    }

    /// Non-decreasing along every axis-parallel line.
    pub fn is_monotone(&self) -> bool {
        match &self.cells {
            Cells::Dense(bits) => (0..self.arity()).all(|axis| {
                let lines = Lines::new(&self.resolutions, axis);
                (0..lines.count).all(|l| {
                    let base = lines.base(l);
                    (1..lines.len).all(|j| {
                        !bits[base + (j - 1) * lines.stride] || bits[base + j * lines.stride]
                    })
                })
            }),
            Cells::Product(axes) => {
                axes.iter().any(|a| a.not_any())
                    || axes.iter().all(|a| a.windows(2).all(|w| !w[0] || w[1]))
            }
        }
    }

    /// Splits every cell of axis `i` into `factors[i]` equal parts.
    pub fn refine(&self, factors: &[usize]) -> Result<GridFunction> {
        if factors.len() != self.arity() {
            return Err(Error::ArityMismatch { expected: self.arity(), found: factors.len() });
        }
        if factors.contains(&0) {
            return Err(Error::param("refinement factors must be positive"));
        }
        let resolutions: Vec<usize> =
            self.resolutions.iter().zip(factors).map(|(r, t)| r * t).collect();
        match &self.cells {
            Cells::Dense(_) => {
                let mut coarse = vec![0usize; self.arity()];
                Self::from_fn(resolutions, |idx| {
                    for (i, j) in idx.iter().enumerate() {
                        coarse[i] = j / factors[i];
                    }
                    self.get(&coarse)
                })
            }
            Cells::Product(axes) => Self::product(
                axes.iter()
                    .zip(factors)
                    .map(|(a, &t)| a.iter().flat_map(|b| std::iter::repeat_n(*b, t)).collect())
                    .collect(),
            ),
        }
    }

    /// Refines onto a grid whose resolutions are multiples of the current ones.
    pub fn refine_to(&self, resolutions: &[usize]) -> Result<GridFunction> {
        if resolutions.len() != self.arity() {
            return Err(Error::ArityMismatch { expected: self.arity(), found: resolutions.len() });
        }
        let mut factors = Vec::with_capacity(resolutions.len());
        for (&target, &r) in resolutions.iter().zip(&self.resolutions) {
            if target % r != 0 {
                return Err(Error::param(format!("resolution {target} is not a multiple of {r}")));
            }
            factors.push(target / r);
        }
        if factors.iter().all(|&t| t == 1) {
            return Ok(self.clone());
        }
        self.refine(&factors)
    }

    /// Per-axis least common multiple of the resolutions.
    pub fn common_resolutions(fs: &[&GridFunction]) -> Result<Vec<usize>> {
        let first = fs.first().ok_or_else(|| Error::param("empty family"))?;
        let n = first.arity();
        let mut res = first.resolutions.clone();
        for f in &fs[1..] {
            if f.arity() != n {
                return Err(Error::ArityMismatch { expected: n, found: f.arity() });
            }
            for (a, b) in res.iter_mut().zip(&f.resolutions) {
                *a = a.lcm(b);
            }
        }
        Ok(res)
    }

    /// Pointwise AND on the common refinement.
    pub fn and(&self, other: &GridFunction) -> Result<GridFunction> {
        let res = Self::common_resolutions(&[self, other])?;
        let a = self.refine_to(&res)?;
        let b = other.refine_to(&res)?;
        match (&a.cells, &b.cells) {
            (Cells::Product(x), Cells::Product(y)) => Self::product(
                x.iter()
                    .zip(y)
                    .map(|(p, q)| p.iter().zip(q.iter()).map(|(u, v)| *u && *v).collect())
                    .collect(),
            ),
            _ => {
                let a = a.to_dense()?;
                let b = b.to_dense()?;
                let mut bits = a.dense_bits().unwrap().clone();
                bits &= b.dense_bits().unwrap();
                Ok(GridFunction { resolutions: res, cells: Cells::Dense(bits) })
            }
        }
    }

    /// `lambda(A ∩ B)`.
    pub fn intersection_mass(&self, other: &GridFunction) -> Result<Rational> {
        Ok(self.and(other)?.expectation())
    }

    /// Three-line text format: `n=<int>`, `r=<r1,...,rn>`, row-major hex bits.
    pub fn to_text(&self) -> Result<String> {
        let dense = self.to_dense()?;
        let res: Vec<String> = self.resolutions.iter().map(|r| r.to_string()).collect();
        Ok(format!(
            "n={}\nr={}\n{}\n",
            self.arity(),
            res.join(","),
            format::encode(dense.dense_bits().unwrap())
        ))
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let n: usize = format::header(lines.next(), "n", 1)?
            .trim()
            .parse()
            .map_err(|_| Error::parse(1, "arity is not an integer"))?;
        let resolutions = format::header(lines.next(), "r", 2)?
            .split(',')
            .map(|s| s.trim().parse::<usize>().map_err(|_| Error::parse(2, format!("bad resolution `{s}`"))))
            .collect::<Result<Vec<_>>>()?;
        if resolutions.len() != n {
            return Err(Error::parse(2, format!("expected {n} resolutions, found {}", resolutions.len())));
        }
        let total = cap_check(&resolutions)?;
        let hex = lines.next().ok_or_else(|| Error::parse(3, "missing cell table"))?;
        let bits = format::decode(hex, total, 3)?;
        Ok(GridFunction { resolutions, cells: Cells::Dense(bits) })
    }
}

impl PartialEq for GridFunction {
    fn eq(&self, other: &Self) -> bool {
        if self.resolutions != other.resolutions {
            return false;
        }
        match (&self.cells, &other.cells) {
            (Cells::Dense(a), Cells::Dense(b)) => a == b,
            (Cells::Product(a), Cells::Product(b)) => {
                let ea = a.iter().any(|x| x.not_any());
                let eb = b.iter().any(|x| x.not_any());
                (ea && eb) || (!ea && !eb && a == b)
            }
            _ => match (self.to_dense(), other.to_dense()) {
                (Ok(a), Ok(b)) => a.dense_bits() == b.dense_bits(),
                _ => false,
            },
        }
    }
}

impl Eq for GridFunction {}

impl fmt::Debug for GridFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.cells {
            Cells::Dense(bits) => {
                write!(f, "GridFunction(r={:?}, {})", self.resolutions, format::encode(bits))
            }
            Cells::Product(axes) => {
                let parts: Vec<String> = axes.iter().map(|a| format::encode(a)).collect();
                write!(f, "GridFunction(r={:?}, product {})", self.resolutions, parts.join(" x "))
            }
        }
    }
}

pub fn grid_expectation(f: &GridFunction) -> Rational {
    f.expectation()
}

pub fn fiber_profile(f: &GridFunction, k: usize) -> Result<FiberProfile> {
    f.fiber_profile(k)
}

pub fn grid_h_influence(f: &GridFunction, k: usize, h: &InfluenceKernel) -> Result<f64> {
    f.h_influence(k, h)
}

pub fn grid_boundary_measure(a: &GridFunction) -> Rational {
    a.boundary_measure()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernels::entropy;
    use crate::rational::ratio;

    fn corner_dense(n: usize, r: usize) -> GridFunction {
        GridFunction::from_fn(vec![r; n], |idx| idx.iter().all(|&j| j >= r / n)).unwrap()
    }

    #[test]
    fn expectation_examples() {
        assert_eq!(corner_dense(4, 4).expectation(), ratio(81, 256));
        assert_eq!(GridFunction::constant(vec![3, 5], true).unwrap().expectation(), ratio(1, 1));
        let xor = GridFunction::from_matrix(&[vec![false, true], vec![true, false]]).unwrap();
        assert_eq!(xor.expectation(), ratio(1, 2));
    }

    #[test]
    fn profile_examples() {
        let c = corner_dense(2, 2);
        let p = c.fiber_profile(1).unwrap();
        assert_eq!(
            p.entries,
            vec![
                FiberClass { weight: ratio(1, 2), mean: ratio(0, 1) },
                FiberClass { weight: ratio(1, 2), mean: ratio(1, 2) },
            ]
        );
        let zero = GridFunction::constant(vec![3, 4], false).unwrap();
        for k in 1..=2 {
            assert!(zero.fiber_profile(k).unwrap().entries.iter().all(|e| e.mean.is_zero()));
        }
        let thr = GridFunction::from_fn(vec![8], |i| i[0] >= 3).unwrap();
        assert_eq!(
            thr.fiber_profile(1).unwrap().entries,
            vec![FiberClass { weight: ratio(1, 1), mean: ratio(5, 8) }]
        );
        assert!(matches!(thr.fiber_profile(2), Err(Error::CoordinateOutOfRange { .. })));
    }

    #[test]
    fn corner_influences() {
        let c = corner_dense(4, 4);
        for k in 1..=4 {
            assert_eq!(c.influence(k).unwrap(), ratio(27, 64));
            assert!((c.h_influence(k, &InfluenceKernel::indicator()).unwrap() - 0.421875).abs() < 1e-15);
            let var = c.h_influence(k, &InfluenceKernel::variance()).unwrap();
            assert!((var - 81.0 / 1024.0).abs() < 1e-15);
            let ent = c.h_influence(k, &InfluenceKernel::entropy()).unwrap();
            assert!((ent - 27.0 / 64.0 * entropy(0.75).unwrap()).abs() < 1e-12);
            assert!((ent - 0.342258).abs() < 1e-6);
        }
    }

    #[test]
    fn boundary_examples() {
        let dict = GridFunction::from_fn(vec![2, 2], |i| i[0] == 1).unwrap();
        assert_eq!(dict.boundary_measure(), ratio(1, 2));
        assert_eq!(GridFunction::constant(vec![2, 2], true).unwrap().boundary_measure(), ratio(0, 1));
        assert_eq!(corner_dense(2, 2).boundary_measure(), ratio(1, 4));
    }

    #[test]
    fn product_storage_agrees_with_dense() {
        let axes = vec![vec![false, true, true], vec![false, false, true, true], vec![true, true]];
        let p = GridFunction::product(axes).unwrap();
        let d = p.to_dense().unwrap();
        assert_eq!(p, d);
        assert_eq!(p.expectation(), d.expectation());
        assert_eq!(p.boundary_measure(), d.boundary_measure());
        assert_eq!(p.is_monotone(), d.is_monotone());
        for k in 1..=3 {
            assert_eq!(p.fiber_profile(k).unwrap(), d.fiber_profile(k).unwrap());
        }
        let r = p.refine(&[2, 1, 3]).unwrap();
        assert_eq!(r, d.refine(&[2, 1, 3]).unwrap());
    }

    #[test]
    fn refinement_preserves_everything() {
        let f = GridFunction::from_fn(vec![3, 2], |i| (i[0] + 2 * i[1]) % 3 == 1).unwrap();
        let g = f.refine(&[2, 3]).unwrap();
        assert_eq!(g.resolutions(), &[6, 6]);
        assert_eq!(f.expectation(), g.expectation());
        assert_eq!(f.boundary_measure(), g.boundary_measure());
        for k in 1..=2 {
            assert_eq!(f.influence(k).unwrap(), g.influence(k).unwrap());
        }
    }

    #[test]
    fn intersections() {
        let a = GridFunction::from_fn(vec![2, 1], |i| i[0] == 1).unwrap();
        let b = GridFunction::from_fn(vec![1, 3], |i| i[1] >= 1).unwrap();
        assert_eq!(a.intersection_mass(&b).unwrap(), ratio(1, 3));
        let pa = GridFunction::product(vec![vec![false, true], vec![true]]).unwrap();
        let pb = GridFunction::product(vec![vec![true], vec![false, true, true]]).unwrap();
        assert_eq!(pa.intersection_mass(&pb).unwrap(), ratio(1, 3));
        assert_eq!(pa.intersection_mass(&b).unwrap(), ratio(1, 3));
    }

    #[test]
    fn text_round_trip() {
        let f = GridFunction::from_matrix(&[vec![false, true], vec![true, false]]).unwrap();
        let text = f.to_text().unwrap();
        assert_eq!(text, "n=2\nr=2,2\n6\n");
        assert_eq!(GridFunction::from_text(&text).unwrap(), f);
        assert!(GridFunction::from_text("n=2\nr=2\n6\n").is_err());
        assert!(GridFunction::from_text("n=1\nr=3\n7\n").is_err());
    }

    #[test]
    fn cell_cap() {
        assert!(matches!(GridFunction::constant(vec![1 << 14, 1 << 14], false), Err(Error::TooLarge { .. })));
        assert!(GridFunction::product(vec![vec![true; 1 << 14]; 3]).is_ok());
    }
}
