//! Named families of Boolean functions with closed-form reference values.

use std::collections::BTreeMap;

use num_integer::binomial;
use num_traits::{One, Pow, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cube::{CubeFunction, ProductMeasure, MAX_ARITY};
use crate::discretize::lift_biased;
use crate::grid::{cap_check, GridFunction};
use crate::kernels::{entropy_unchecked, InfluenceKernel};
use crate::rational::{self, int, ratio, Rational};
use crate::{Error, Result};

/// A closed-form value attached to a family instance.
#[derive(Clone, Debug, PartialEq)]
pub enum Analytic {
    Exact(Rational),
    Real(f64),
}

impl Analytic {
    pub fn to_f64(&self) -> f64 {
        match self {
            Analytic::Exact(r) => rational::to_f64(r),
            Analytic::Real(v) => *v,
        }
    }
}

#[derive(Clone, Debug)]
pub enum Realized {
    Grid(GridFunction),
    Cube { function: CubeFunction, measure: ProductMeasure, lift: Option<GridFunction> },
}

#[derive(Clone, Debug)]
pub struct FamilyInstance {
    pub family: String,
    pub parameters: BTreeMap<String, String>,
    pub realized: Realized,
    pub analytic: BTreeMap<String, Analytic>,
}

impl FamilyInstance {
    fn new(family: &str, realized: Realized) -> Self {
        FamilyInstance { family: family.into(), parameters: BTreeMap::new(), realized, analytic: BTreeMap::new() }
    }

    fn param(mut self, key: &str, value: impl ToString) -> Self {
        self.parameters.insert(key.into(), value.to_string());
        self
    }

    fn exact(&mut self, key: &str, value: Rational) {
        self.analytic.insert(key.into(), Analytic::Exact(value));
    }

    fn real(&mut self, key: &str, value: f64) {
        self.analytic.insert(key.into(), Analytic::Real(value));
    }

    /// The grid form: the function itself, or the lift of a cube function.
    pub fn grid(&self) -> Option<&GridFunction> {
        match &self.realized {
            Realized::Grid(g) => Some(g),
            Realized::Cube { lift, .. } => lift.as_ref(),
        }
    }

    pub fn cube(&self) -> Option<(&CubeFunction, &ProductMeasure)> {
        match &self.realized {
            Realized::Cube { function, measure, .. } => Some((function, measure)),
            Realized::Grid(_) => None,
        }
    }

    pub fn arity(&self) -> usize {
        match &self.realized {
            Realized::Grid(g) => g.arity(),
            Realized::Cube { function, .. } => function.arity(),
        }
    }

    /// `family:key=value,...` with parameters in key order.
    pub fn label(&self) -> String {
        let params: Vec<String> = self.parameters.iter().map(|(k, v)| format!("{k}={v}")).collect();
        format!("{}:{}", self.family, params.join(","))
    }

    pub fn expectation(&self) -> Rational {
        match &self.realized {
            Realized::Grid(g) => g.expectation(),
            Realized::Cube { function, measure, .. } => {
                function.expectation(measure).expect("measure arity matches")
            }
        }
    }

    /// h-influence of coordinate `k` (1-based), on the cube when available.
    pub fn h_influence(&self, k: usize, h: &InfluenceKernel) -> Result<f64> {
        match &self.realized {
            Realized::Grid(g) => g.h_influence(k, h),
            Realized::Cube { function, measure, .. } => function.h_influence(measure, k, h),
        }
    }

    pub fn h_influences(&self, h: &InfluenceKernel) -> Result<Vec<f64>> {
        (1..=self.arity()).map(|k| self.h_influence(k, h)).collect()
    }

    pub fn influence(&self, k: usize) -> Result<Rational> {
        match &self.realized {
            Realized::Grid(g) => g.influence(k),
            Realized::Cube { function, measure, .. } => function.influence(measure, k),
        }
    }

    pub fn boundary_measure(&self) -> Rational {
        match &self.realized {
            Realized::Grid(g) => g.boundary_measure(),
            Realized::Cube { function, measure, .. } => {
                function.boundary_measure(measure).expect("measure arity matches")
            }
        }
    }

    pub fn is_monotone(&self) -> bool {
        match &self.realized {
            Realized::Grid(g) => g.is_monotone(),
            Realized::Cube { function, .. } => function.is_monotone(),
        }
    }
}

fn q_in_open_unit(q: &Rational) -> Result<()> {
    if rational::in_open_unit(q) {
        Ok(())
    } else {
        Err(Error::param(format!("q = {q} is not strictly inside (0, 1)")))
    }
}

/// Cell count above which generators skip building the lift.
const LIFT_CELLS: usize = 1 << 22;

fn lift_if_small(f: &CubeFunction, q: &Rational) -> Option<GridFunction> {
    let (_, d) = rational::small_parts(q).ok()?;
    let d = usize::try_from(d).ok()?;
    if cap_check(&vec![d; f.arity()]).ok()? > LIFT_CELLS {
        return None;
    }
    lift_biased(f, q).ok()
}

fn cube_instance(family: &str, function: CubeFunction, q: &Rational) -> Result<FamilyInstance> {
    let measure = ProductMeasure::homogeneous(function.arity(), q.clone())?;
    let lift = lift_if_small(&function, q);
    Ok(FamilyInstance::new(family, Realized::Cube { function, measure, lift }).param("q", rational::display(q)))
}

/// Indicator of `[1/n, 1]^n`, on a grid with `resolution` cells per axis.
///
/// Stored as a product set, so large `n` stays cheap.
pub fn corner(n: usize, resolution: usize) -> Result<FamilyInstance> {
    if n < 2 {
        return Err(Error::param("corner needs n >= 2"));
    }
    if resolution < n || !resolution.is_multiple_of(n) {
        return Err(Error::param(format!("resolution {resolution} is not a positive multiple of n = {n}")));
    }
    let cut = resolution / n;
    let axis: Vec<bool> = (0..resolution).map(|j| j >= cut).collect();
    let g = GridFunction::product(vec![axis; n])?;
    let mut inst = FamilyInstance::new("corner", Realized::Grid(g)).param("n", n).param("r", resolution);
    let side = ratio(n as i64 - 1, n as i64);
    let tail = Pow::pow(&side, (n - 1) as u32);
    inst.exact("expectation", &tail * &side);
    inst.exact("influence_ind", tail.clone());
    inst.exact("influence_var", &tail * &side * ratio(1, n as i64));
    inst.real("influence_ent", rational::to_f64(&tail) * entropy_unchecked(1.0 / n as f64));
    inst.real("sum_ent", n as f64 * rational::to_f64(&tail) * entropy_unchecked(1.0 / n as f64));
    Ok(inst)
}

/// The tribe width `(log n - log log n + log log(1/q)) / log(1/q)`, base-2
/// logs, that makes the tribes function roughly balanced.
pub fn tribes_r_hint(n: usize, q: f64) -> Result<f64> {
    if n < 4 {
        return Err(Error::param("the tribe width hint needs n >= 4"));
    }
    if !(q > 0.0 && q <= 0.5) {
        return Err(Error::param(format!("q = {q} is not in (0, 1/2]")));
    }
    let n = n as f64;
    let l = (1.0 / q).log2();
    Ok((n.log2() - n.log2().log2() + l.log2()) / l)
}

fn tribes_function(n: usize, r: usize) -> Result<CubeFunction> {
    CubeFunction::from_coords(n, |x| x.chunks(r).any(|t| t.iter().all(|&b| b)))
}

fn check_tribes(n: usize, r: usize) -> Result<()> {
    if n == 0 || n > MAX_ARITY {
        return Err(Error::TooLarge { what: format!("tribes arity {n}"), limit: format!("1..={MAX_ARITY}") });
    }
    if r == 0 || !n.is_multiple_of(r) {
        return Err(Error::param(format!("tribe width {r} does not divide {n}")));
    }
    Ok(())
}

/// Tribes reference values at bias `q`: `(E, I)` with `I` the plain influence
/// of every coordinate.
fn tribes_values(n: usize, r: usize, q: &Rational) -> (Rational, Rational) {
    let one = Rational::one();
    let qr = Pow::pow(q, r as u32);
    let blocks = n / r;
    let miss = &one - &qr;
    let e = &one - Pow::pow(&miss, blocks as u32);
    let i = Pow::pow(q, (r - 1) as u32) * Pow::pow(&miss, (blocks - 1) as u32);
    (e, i)
}

/// Disjoint tribes of width `r` on `{0,1}^n` under `mu_q`.
///
/// For `q > 1/2` the instance is the dual of tribes at `1 - q`.
pub fn tribes(n: usize, r: usize, q: &Rational) -> Result<FamilyInstance> {
    check_tribes(n, r)?;
    q_in_open_unit(q)?;
    let half = ratio(1, 2);
    let (function, family, base_q) = if *q > half {
        (tribes_function(n, r)?.dual(), "tribes-dual", Rational::one() - q)
    } else {
        (tribes_function(n, r)?, "tribes", q.clone())
    };
    let mut inst = cube_instance(family, function, q)?.param("n", n).param("r", r);
    let (e, i) = tribes_values(n, r, &base_q);
    let e = if *q > half { Rational::one() - e } else { e };
    attach_tribe_values(&mut inst, e, i, q, n);
    Ok(inst)
}

fn attach_tribe_values(inst: &mut FamilyInstance, e: Rational, i: Rational, q: &Rational, active: usize) {
    let qf = rational::to_f64(q);
    let ent = rational::to_f64(&i) * entropy_unchecked(qf);
    inst.exact("expectation", e);
    inst.exact("influence_var", &i * q * (Rational::one() - q));
    inst.exact("influence_ind", i);
    inst.real("influence_ent", ent);
    inst.real("sum_ent", active as f64 * ent);
}

/// Tribes on the first `m` of `n` coordinates; the rest are dummies.
pub fn padded_tribes(n: usize, m: usize, r: usize, q: &Rational) -> Result<FamilyInstance> {
    if m == 0 || m >= n {
        return Err(Error::param(format!("padding needs 0 < m < n, got m = {m}, n = {n}")));
    }
    check_tribes(m, r)?;
    check_tribes(n, 1)?;
    q_in_open_unit(q)?;
    let half = ratio(1, 2);
    let base = CubeFunction::from_coords(n, |x| x[..m].chunks(r).any(|t| t.iter().all(|&b| b)))?;
    let (function, family, base_q) = if *q > half {
        (base.dual(), "padded-dual", Rational::one() - q)
    } else {
        (base, "padded", q.clone())
    };
    let mut inst = cube_instance(family, function, q)?.param("n", n).param("m", m).param("r", r);
    let (e, i) = tribes_values(m, r, &base_q);
    let e = if *q > half { Rational::one() - e } else { e };
    attach_tribe_values(&mut inst, e, i, q, m);
    Ok(inst)
}

/// `{x : sum x_i > floor(n q)}` under `mu_q`.
///
/// For `q > 1/2` the instance is the dual of the threshold set at `1 - q`;
/// only the measure and influence are then given in closed form.
pub fn threshold_family(n: usize, q: &Rational) -> Result<FamilyInstance> {
    if n == 0 || n > 20 {
        return Err(Error::TooLarge { what: format!("threshold arity {n}"), limit: "1..=20".into() });
    }
    q_in_open_unit(q)?;
    let half = ratio(1, 2);
    let base_q = if *q > half { Rational::one() - q } else { q.clone() };
    let t = (int(n as i64) * &base_q).floor().to_integer();
    let t = usize::try_from(t).expect("0 <= floor(n q) <= n");
    let base = CubeFunction::from_fn(n, |x| x.count_ones() as usize > t)?;
    let pmf = |k: usize| -> Rational {
        Rational::from_integer(binomial(num_bigint::BigInt::from(n), num_bigint::BigInt::from(k)))
            * Pow::pow(&base_q, k as u32)
            * Pow::pow(&(Rational::one() - &base_q), (n - k) as u32)
    };
    let measure: Rational = (t + 1..=n).map(pmf).fold(Rational::zero(), |a, b| a + b);
    let influence = if t < n {
        Rational::from_integer(binomial(num_bigint::BigInt::from(n - 1), num_bigint::BigInt::from(t)))
            * Pow::pow(&base_q, t as u32)
            * Pow::pow(&(Rational::one() - &base_q), (n - 1 - t) as u32)
    } else {
        Rational::zero()
    };
    let dual = *q > half;
    let (function, family) = if dual { (base.dual(), "threshold-dual") } else { (base, "threshold") };
    let mut inst = cube_instance(family, function, q)?.param("n", n).param("t", t);
    if dual {
        inst.exact("expectation", Rational::one() - measure);
    } else {
        inst.exact("expectation", measure);
        let at = |k: usize| if k <= n { pmf(k) } else { Rational::zero() };
        inst.exact("boundary", at(t + 1));
        inst.exact("band", at(t) + at(t + 1));
    }
    inst.exact("influence_ind", influence);
    Ok(inst)
}

/// A dense grid whose cells are independently 1 with probability `density`.
pub fn random_grid(resolutions: Vec<usize>, density: f64, seed: u64) -> Result<FamilyInstance> {
    if !(0.0..=1.0).contains(&density) {
        return Err(Error::param(format!("density {density} is not in [0, 1]")));
    }
    let total = cap_check(&resolutions)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let bits: Vec<bool> = (0..total).map(|_| rng.gen_bool(density)).collect();
    let label = resolutions.iter().map(|r| r.to_string()).collect::<Vec<_>>().join("x");
    let n = resolutions.len();
    let g = GridFunction::from_bits(resolutions, bits)?;
    Ok(FamilyInstance::new("random", Realized::Grid(g))
        .param("n", n)
        .param("r", label)
        .param("density", density)
        .param("seed", seed))
}

pub fn dictator(m: usize, k: usize, q: &Rational) -> Result<FamilyInstance> {
    crate::cube::check_coordinate(k, m)?;
    let f = CubeFunction::from_coords(m, |x| x[k - 1])?;
    let mut inst = cube_instance("dictator", f, q)?.param("n", m).param("k", k);
    inst.exact("expectation", q.clone());
    Ok(inst)
}

pub fn and_all(m: usize, q: &Rational) -> Result<FamilyInstance> {
    let f = CubeFunction::from_coords(m, |x| x.iter().all(|&b| b))?;
    let mut inst = cube_instance("and", f, q)?.param("n", m);
    inst.exact("expectation", Pow::pow(q, m as u32));
    Ok(inst)
}

pub fn or_all(m: usize, q: &Rational) -> Result<FamilyInstance> {
    let f = CubeFunction::from_coords(m, |x| x.iter().any(|&b| b))?;
    let mut inst = cube_instance("or", f, q)?.param("n", m);
    inst.exact("expectation", Rational::one() - Pow::pow(&(Rational::one() - q), m as u32));
    Ok(inst)
}

pub fn parity(m: usize, q: &Rational) -> Result<FamilyInstance> {
    let f = CubeFunction::from_fn(m, |x| x.count_ones() % 2 == 1)?;
    let mut inst = cube_instance("parity", f, q)?.param("n", m);
    let bias = Rational::one() - int(2) * q;
    inst.exact("expectation", (Rational::one() - Pow::pow(&bias, m as u32)) / int(2));
    Ok(inst)
}

/// `(2 log2 n / (e n Ent(q))) h(q)`: the per-coordinate h-influence scale
/// attained by balanced tribes.
pub fn tribes_tightness_bound(n: usize, q: f64, h: &InfluenceKernel) -> f64 {
    let n = n as f64;
    2.0 * n.log2() / (std::f64::consts::E * n * entropy_unchecked(q)) * h.eval(q)
}

fn parse_params(body: &str) -> Result<BTreeMap<String, String>> {
    let mut out = BTreeMap::new();
    for part in body.split(',').filter(|p| !p.is_empty()) {
        let (k, v) = part
            .split_once('=')
            .ok_or_else(|| Error::param(format!("family parameter `{part}` is not key=value")))?;
        if out.insert(k.trim().to_string(), v.trim().to_string()).is_some() {
            return Err(Error::param(format!("family parameter `{k}` given twice")));
        }
    }
    Ok(out)
}

struct Params(BTreeMap<String, String>);

impl Params {
    fn take(&mut self, key: &str) -> Option<String> {
        self.0.remove(key)
    }

    fn usize(&mut self, key: &str) -> Result<usize> {
        let v = self.take(key).ok_or_else(|| Error::param(format!("missing family parameter `{key}`")))?;
        v.parse().map_err(|_| Error::param(format!("`{key}={v}` is not a non-negative integer")))
    }

    fn usize_or(&mut self, key: &str, default: usize) -> Result<usize> {
        if self.0.contains_key(key) {
            self.usize(key)
        } else {
            Ok(default)
        }
    }

    fn q(&mut self) -> Result<Rational> {
        match self.take("q") {
            Some(v) => rational::parse_open_unit(&v),
            None => Ok(ratio(1, 2)),
        }
    }

    fn finish(self) -> Result<()> {
        match self.0.keys().next() {
            Some(k) => Err(Error::param(format!("unknown family parameter `{k}`"))),
            None => Ok(()),
        }
    }
}

/// Parses a family designator such as `tribes:n=8,r=2,q=1/2` or
/// `random:n=3,r=4,density=0.5,seed=7`. `seed` defaults to `default_seed`.
pub fn parse_family(s: &str, default_seed: u64) -> Result<FamilyInstance> {
    let (name, body) = s.split_once(':').unwrap_or((s, ""));
    let mut p = Params(parse_params(body)?);
    let inst = match name {
        "corner" => {
            let n = p.usize("n")?;
            let r = p.usize_or("r", n)?;
            corner(n, r)?
        }
        "tribes" => {
            let (n, q) = (p.usize("n")?, p.q()?);
            let r = match p.take("r") {
                Some(v) => v.parse().map_err(|_| Error::param(format!("`r={v}` is not an integer")))?,
                None => {
                    let hint = tribes_r_hint(n, rational::to_f64(&q).min(1.0 - rational::to_f64(&q)))?;
                    (1..=n).filter(|r| n % r == 0).min_by(|a, b| {
                        (*a as f64 - hint).abs().total_cmp(&(*b as f64 - hint).abs())
                    }).expect("1 divides n")
                }
            };
            tribes(n, r, &q)?
        }
        "padded" => {
            let (n, m, r, q) = (p.usize("n")?, p.usize("m")?, p.usize("r")?, p.q()?);
            padded_tribes(n, m, r, &q)?
        }
        "threshold" => {
            let (n, q) = (p.usize("n")?, p.q()?);
            threshold_family(n, &q)?
        }
        "random" => {
            let n = p.usize("n")?;
            let r = p.take("r").unwrap_or_else(|| "2".into());
            let mut res: Vec<usize> = r
                .split('x')
                .map(|v| v.parse().map_err(|_| Error::param(format!("bad resolution `{r}`"))))
                .collect::<Result<_>>()?;
            if res.len() == 1 {
                res = vec![res[0]; n];
            }
            if res.len() != n {
                return Err(Error::ArityMismatch { expected: n, found: res.len() });
            }
            let density = match p.take("density") {
                Some(v) => v.parse().map_err(|_| Error::param(format!("`density={v}` is not a number")))?,
                None => 0.5,
            };
            let seed = match p.take("seed") {
                Some(v) => v.parse().map_err(|_| Error::param(format!("`seed={v}` is not an integer")))?,
                None => default_seed,
            };
            random_grid(res, density, seed)?
        }
        "dictator" => {
            let (n, k, q) = (p.usize("n")?, p.usize_or("k", 1)?, p.q()?);
            dictator(n, k, &q)?
        }
        "and" => {
            let (n, q) = (p.usize("n")?, p.q()?);
            and_all(n, &q)?
        }
        "or" => {
            let (n, q) = (p.usize("n")?, p.q()?);
            or_all(n, &q)?
        }
        "parity" => {
            let (n, q) = (p.usize("n")?, p.q()?);
            parity(n, &q)?
        }
        other => return Err(Error::param(format!("unknown family `{other}`"))),
    };
    p.finish()?;
    Ok(inst)
}
