//! Bit-expansion discretization of monotone step functions, the biased
//! cube to continuous cube lift, and the dual transform.

use crate::cube::{CubeFunction, ProductMeasure, MAX_ARITY};
use crate::error::{Error, Result};
use crate::grid::{cap_check, GridFunction};
use crate::rational::{self, Rational};

/// Maps each continuous coordinate to the `l` cube coordinates holding the
/// binary digits of its sub-interval index.
///
/// `groups[i][j]` is the (1-based) cube coordinate carrying place value `2^j`
/// of coordinate `i + 1`. The canonical layout puts the digits of coordinate
/// `i` in cube coordinates `(i-1)l + 1 ..= il`, most significant first, so the
/// cube table index is the concatenation of the sub-interval indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BitGrouping {
    pub n: usize,
    pub l: usize,
    pub groups: Vec<Vec<usize>>,
}

impl BitGrouping {
    pub fn canonical(n: usize, l: usize) -> Self {
        let groups = (1..=n)
            .map(|i| (0..l).map(|j| (i - 1) * l + (l - j)).collect())
            .collect();
        BitGrouping { n, l, groups }
    }

    /// Checks that the groups partition `1..=n*l` into blocks of size `l`.
    pub fn validate(&self) -> Result<()> {
        if self.groups.len() != self.n || self.groups.iter().any(|g| g.len() != self.l) {
            return Err(Error::param("grouping does not have n blocks of size l"));
        }
        let total = self.n * self.l;
        let mut seen = vec![false; total + 1];
        for &c in self.groups.iter().flatten() {
            if c == 0 || c > total || std::mem::replace(&mut seen[c], true) {
                return Err(Error::param(format!("grouping repeats or exceeds coordinate {c}")));
            }
        }
        Ok(())
    }

    /// One `groups=i:j1,j2,...` line per coordinate.
    pub fn to_text(&self) -> String {
        self.groups
            .iter()
            .enumerate()
            .map(|(i, g)| {
                let js: Vec<String> = g.iter().map(|j| j.to_string()).collect();
                format!("groups={}:{}\n", i + 1, js.join(","))
            })
            .collect()
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut groups: Vec<(usize, Vec<usize>)> = Vec::new();
        for (n, line) in text.lines().enumerate() {
            let Some(rest) = line.trim().strip_prefix("groups=") else { continue };
            let bad = || Error::parse(n + 1, format!("malformed grouping line `{line}`"));
            let (i, js) = rest.split_once(':').ok_or_else(bad)?;
            let i: usize = i.trim().parse().map_err(|_| bad())?;
            let js = js
                .split(',')
                .map(|j| j.trim().parse::<usize>().map_err(|_| bad()))
                .collect::<Result<Vec<_>>>()?;
            groups.push((i, js));
        }
        groups.sort_by_key(|(i, _)| *i);
        if groups.iter().enumerate().any(|(k, (i, _))| *i != k + 1) {
            return Err(Error::param("grouping lines must cover coordinates 1..=n once each"));
        }
        let l = groups.first().map_or(0, |(_, g)| g.len());
        let g = BitGrouping { n: groups.len(), l, groups: groups.into_iter().map(|(_, g)| g).collect() };
        g.validate()?;
        Ok(g)
    }
}

/// The default number of bits: `ceil(3 log2 n)`, raised when needed so that
/// every power-of-two resolution divides `2^l`.
pub fn default_bits(resolutions: &[usize]) -> usize {
    let n = resolutions.len().max(1);
    let paper = (3.0 * (n as f64).log2()).ceil() as usize;
    let dyadic = resolutions
        .iter()
        .filter(|r| r.is_power_of_two())
        .map(|r| r.trailing_zeros() as usize)
        .max()
        .unwrap_or(0);
    paper.max(dyadic).max(1)
}

/// Replaces each coordinate by the `l` binary digits of its sub-interval index.
///
/// Requires a monotone `f` whose resolutions all divide `2^l`, so that `f` is
/// constant on each of the `2^{ln}` sub-cubes and the construction is exact.
pub fn discretize(f: &GridFunction, l: usize) -> Result<(CubeFunction, BitGrouping)> {
    let n = f.arity();
    if l == 0 {
        return Err(Error::param("need at least one bit per coordinate"));
    }
    if n * l > MAX_ARITY {
        return Err(Error::TooLarge { what: format!("{n} coordinates x {l} bits"), limit: MAX_ARITY.to_string() });
    }
    for (axis, &r) in f.resolutions().iter().enumerate() {
        if !(1usize << l).is_multiple_of(r) {
            return Err(Error::ResolutionNotDyadic { axis: axis + 1, resolution: r, bits: l as u32 });
        }
    }
    if !f.is_monotone() {
        return Err(Error::NotMonotone);
    }
    let mask = (1usize << l) - 1;
    let res = f.resolutions().to_vec();
    let mut cell = vec![0usize; n];
    let g = CubeFunction::from_fn(n * l, |x| {
        for i in 0..n {
            let m = (x >> ((n - 1 - i) * l)) & mask;
            cell[i] = (m * res[i]) >> l;
        }
        f.get(&cell)
    })?;
    Ok((g, BitGrouping::canonical(n, l)))
}

/// Indicator influences of every bit, grouped by original coordinate and
/// ordered by place value.
pub fn bit_influences(g: &CubeFunction, grouping: &BitGrouping, mu: &ProductMeasure) -> Result<Vec<Vec<Rational>>> {
    grouping.validate()?;
    if grouping.n * grouping.l != g.arity() {
        return Err(Error::ArityMismatch { expected: g.arity(), found: grouping.n * grouping.l });
    }
    grouping
        .groups
        .iter()
        .map(|group| group.iter().map(|&c| g.influence(mu, c)).collect())
        .collect()
}

/// Per original coordinate, the sum of the indicator influences of its bits.
pub fn grouped_bit_influence_sums(
    g: &CubeFunction,
    grouping: &BitGrouping,
    mu: &ProductMeasure,
) -> Result<Vec<Rational>> {
    Ok(bit_influences(g, grouping, mu)?
        .into_iter()
        .map(|bits| bits.into_iter().sum())
        .collect())
}

/// Lifts `f` to `[0,1]^n` through `G(x) = 1[x > 1 - q]` on every axis.
///
/// With `q = a/d` in lowest terms each axis has `d` cells and cell `j` maps
/// to 1 exactly when `j >= d - a`.
pub fn lift_biased(f: &CubeFunction, q: &Rational) -> Result<GridFunction> {
    if !rational::in_open_unit(q) {
        return Err(Error::param(format!("bias {q} is not strictly inside (0, 1)")));
    }
    let (a, d) = rational::small_parts(q)?;
    let d = usize::try_from(d).map_err(|_| Error::param("bias denominator too large"))?;
    let threshold = d - a as usize;
    let m = f.arity();
    let resolutions = vec![d; m];
    cap_check(&resolutions)?;
    GridFunction::from_fn(resolutions, |idx| {
        let mut x = 0usize;
        for &j in idx {
            x = x << 1 | (j >= threshold) as usize;
        }
        f.get(x)
    })
}

pub fn dual(f: &CubeFunction) -> CubeFunction {
    f.dual()
}
