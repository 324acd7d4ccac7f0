//! Influence kernels `h: [0,1] -> [0,1]`.
//!
//! The catalogue covers the classical definitions as special cases of the
//! h-influence: the indicator of `(0,1)` gives the fiber-nonconstancy
//! influence, `t(1-t)` gives the expected fiber variance, and the binary
//! entropy is the smallest kernel for which the logarithmic lower bounds hold.

use std::fmt;
use std::path::Path;
use std::sync::Arc;

use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// Default grid used by the structural checkers.
pub const CHECK_STEPS: usize = 4096;

const CHECK_SLACK: f64 = 1e-12;

/// Binary entropy `-t log2 t - (1-t) log2 (1-t)`, extended by 0 at the endpoints.
pub fn entropy(t: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&t) {
        return Err(Error::OutOfUnitInterval(t));
    }
    Ok(entropy_unchecked(t))
}

pub(crate) fn entropy_unchecked(t: f64) -> f64 {
    // evaluate on the smaller half so that H(t) and H(1-t) agree bit for bit
    let a = t.min(1.0 - t);
    let b = 1.0 - a;
    if a <= 0.0 {
        return 0.0;
    }
    -(a * a.log2() + b * b.log2())
}

#[derive(Clone)]
enum Shape {
    Indicator,
    Variance,
    Entropy,
    Alpha(f64),
    TowardZero,
    TowardOne,
    Table(Vec<(f64, f64)>),
    Custom(Arc<dyn Fn(f64) -> f64 + Send + Sync>),
}

/// A kernel together with its declared structural properties.
#[derive(Clone)]
pub struct InfluenceKernel {
    name: String,
    shape: Shape,
    declared_concave: bool,
    declared_dominates_entropy: bool,
}

impl fmt::Debug for InfluenceKernel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("InfluenceKernel")
            .field("name", &self.name)
            .field("declared_concave", &self.declared_concave)
            .field("declared_dominates_entropy", &self.declared_dominates_entropy)
            .finish()
    }
}

impl InfluenceKernel {
    fn builtin(name: &str, shape: Shape, concave: bool, dominates: bool) -> Self {
        InfluenceKernel {
            name: name.to_string(),
            shape,
            declared_concave: concave,
            declared_dominates_entropy: dominates,
        }
    }

    /// `h(t) = 1` on `(0,1)`, `0` at the endpoints.
    pub fn indicator() -> Self {
        Self::builtin("ind", Shape::Indicator, true, true)
    }

    /// `h(t) = t(1-t)`.
    pub fn variance() -> Self {
        Self::builtin("var", Shape::Variance, true, false)
    }

    pub fn entropy() -> Self {
        Self::builtin("ent", Shape::Entropy, true, true)
    }

    /// `h(t) = [t(1-t)]^alpha` for `alpha` in `(0, 1]`.
    pub fn alpha(alpha: f64) -> Result<Self> {
        if !(alpha > 0.0 && alpha <= 1.0) {
            return Err(Error::param(format!("alpha must lie in (0, 1], got {alpha}")));
        }
        Ok(Self::builtin(&format!("alpha:{alpha}"), Shape::Alpha(alpha), true, false))
    }

    /// Influence toward zero: `t` for `t != 1`, and `0` at `t = 1`.
    pub fn toward_zero() -> Self {
        Self::builtin("t0", Shape::TowardZero, true, false)
    }

    /// Influence toward one: `1 - t` for `t != 0`, and `0` at `t = 0`.
    pub fn toward_one() -> Self {
        Self::builtin("t1", Shape::TowardOne, true, false)
    }

    /// Wraps an arbitrary function; the declared flags are taken from the
    /// numeric checkers on the default grid.
    pub fn custom(name: &str, f: impl Fn(f64) -> f64 + Send + Sync + 'static) -> Self {
        let mut k = Self::builtin(name, Shape::Custom(Arc::new(f)), false, false);
        k.declared_concave = check_concave(&k, CHECK_STEPS);
        k.declared_dominates_entropy = check_dominates_entropy(&k, CHECK_STEPS);
        k
    }

    /// Piecewise linear kernel through the given `(t, value)` points.
    ///
    /// The points must be sorted by strictly increasing `t`, start at 0, end at
    /// 1, and carry values in `[0, 1]`.
    pub fn tabulated(name: &str, points: Vec<(f64, f64)>) -> Result<Self> {
        if points.len() < 2 {
            return Err(Error::param("a table kernel needs at least two points"));
        }
        if points[0].0 != 0.0 || points[points.len() - 1].0 != 1.0 {
            return Err(Error::param("table kernel must include t = 0 and t = 1"));
        }
        if points.windows(2).any(|w| w[0].0 >= w[1].0) {
            return Err(Error::param("table kernel abscissae must be strictly increasing"));
        }
        if let Some(&(_, v)) = points.iter().find(|(_, v)| !(0.0..=1.0).contains(v)) {
            return Err(Error::OutOfUnitInterval(v));
        }
        let mut k = Self::builtin(name, Shape::Table(points), false, false);
        k.declared_concave = check_concave(&k, CHECK_STEPS);
        k.declared_dominates_entropy = check_dominates_entropy(&k, CHECK_STEPS);
        Ok(k)
    }

    /// Parses CSV text of `t,value` rows; a non-numeric first row is treated as a header.
    pub fn from_table_csv(name: &str, text: &str) -> Result<Self> {
        let mut reader = csv::ReaderBuilder::new()
            .has_headers(false)
            .comment(Some(b'#'))
            .trim(csv::Trim::All)
            .from_reader(text.as_bytes());
        let mut points = Vec::new();
        for (i, record) in reader.records().enumerate() {
            let record = record.map_err(|e| Error::parse(e.position().map_or(0, |p| p.line() as usize), e.to_string()))?;
            let line = record.position().map_or(i + 1, |p| p.line() as usize);
            let parsed = match (record.get(0), record.get(1), record.len()) {
                (Some(a), Some(b), 2) => a.parse::<f64>().ok().zip(b.parse::<f64>().ok()),
                _ => None,
            };
            match parsed {
                Some(p) => points.push(p),
                None if i == 0 => continue,
                None => return Err(Error::parse(line, format!("expected `t,value`, got {:?}", record.as_slice()))),
            }
        }
        Self::tabulated(name, points)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn declared_concave(&self) -> bool {
        self.declared_concave
    }

    pub fn declared_dominates_entropy(&self) -> bool {
        self.declared_dominates_entropy
    }

    /// Evaluates `h(t)` for `t` in `[0, 1]`.
    pub fn eval(&self, t: f64) -> f64 {
        debug_assert!((0.0..=1.0).contains(&t), "kernel argument {t} outside [0,1]");
        match &self.shape {
            Shape::Indicator => {
                if t == 0.0 || t == 1.0 {
                    0.0
                } else {
                    1.0
                }
            }
            Shape::Variance => t * (1.0 - t),
            Shape::Entropy => entropy_unchecked(t),
            Shape::Alpha(a) => (t * (1.0 - t)).powf(*a),
            Shape::TowardZero => {
                if t == 1.0 {
                    0.0
                } else {
                    t
                }
            }
            Shape::TowardOne => {
                if t == 0.0 {
                    0.0
                } else {
                    1.0 - t
                }
            }
            Shape::Table(points) => interpolate(points, t),
            Shape::Custom(f) => f(t),
        }
    }

    /// Evaluates `h` at an exact rational. Endpoints are recognised exactly;
    /// interior points never round onto an endpoint.
    pub fn eval_rational(&self, t: &Rational) -> f64 {
        if t.is_zero() {
            return self.eval(0.0);
        }
        if t.is_one() {
            return self.eval(1.0);
        }
        let mut x = t.to_f64().unwrap_or(0.5);
        if x >= 1.0 {
            x = 1.0 - f64::EPSILON / 2.0;
        } else if x <= 0.0 {
            x = f64::MIN_POSITIVE;
        }
        self.eval(x)
    }
}

fn interpolate(points: &[(f64, f64)], t: f64) -> f64 {
    let i = points.partition_point(|p| p.0 <= t);
    if i == 0 {
        return points[0].1;
    }
    if i == points.len() {
        return points[points.len() - 1].1;
    }
    let (t0, v0) = points[i - 1];
    let (t1, v1) = points[i];
    v0 + (v1 - v0) * (t - t0) / (t1 - t0)
}

/// Builds a catalogue kernel by its long name.
pub fn catalogue_kernel(name: &str, parameter: Option<f64>) -> Result<InfluenceKernel> {
    match name {
        "indicator" => Ok(InfluenceKernel::indicator()),
        "variance" => Ok(InfluenceKernel::variance()),
        "entropy" => Ok(InfluenceKernel::entropy()),
        "alpha" => match parameter {
            Some(a) => InfluenceKernel::alpha(a),
            None => Err(Error::param("the alpha kernel needs a parameter")),
        },
        "toward_zero" => Ok(InfluenceKernel::toward_zero()),
        "toward_one" => Ok(InfluenceKernel::toward_one()),
        other => Err(Error::UnknownKernel(other.to_string())),
    }
}

/// Parses a short designator: `ent`, `var`, `ind`, `alpha:<f>`, `t0`, `t1`, `table:<path>`.
pub fn parse_designator(s: &str) -> Result<InfluenceKernel> {
    let s = s.trim();
    if let Some(a) = s.strip_prefix("alpha:") {
        let a: f64 = a
            .parse()
            .map_err(|_| Error::param(format!("bad alpha value `{a}`")))?;
        return InfluenceKernel::alpha(a);
    }
    if let Some(path) = s.strip_prefix("table:") {
        let text = std::fs::read_to_string(Path::new(path))?;
        return InfluenceKernel::from_table_csv(s, &text);
    }
    match s {
        "ent" => Ok(InfluenceKernel::entropy()),
        "var" => Ok(InfluenceKernel::variance()),
        "ind" => Ok(InfluenceKernel::indicator()),
        "t0" => Ok(InfluenceKernel::toward_zero()),
        "t1" => Ok(InfluenceKernel::toward_one()),
        other => Err(Error::UnknownKernel(other.to_string())),
    }
}

fn grid_values(h: &InfluenceKernel, steps: usize) -> Vec<f64> {
    (0..=steps).map(|k| h.eval(k as f64 / steps as f64)).collect()
}

/// Midpoint concavity on the closed grid `{k / steps}`, with absolute slack `1e-12`.
pub fn check_concave(h: &InfluenceKernel, steps: usize) -> bool {
    assert!(steps >= 2, "concavity check needs at least two steps");
    let v = grid_values(h, steps);
    for i in 0..=steps {
        for j in (i + 2..=steps).step_by(2) {
            if v[(i + j) / 2] < (v[i] + v[j]) / 2.0 - CHECK_SLACK {
                return false;
            }
        }
    }
    true
}

/// `h(k/steps) >= Ent(k/steps) - 1e-12` for every grid point.
pub fn check_dominates_entropy(h: &InfluenceKernel, steps: usize) -> bool {
    assert!(steps >= 2, "domination check needs at least two steps");
    (0..=steps).all(|k| {
        let t = k as f64 / steps as f64;
        h.eval(t) >= entropy_unchecked(t) - CHECK_SLACK
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn catalogue() -> Vec<InfluenceKernel> {
        let mut v = vec![
            InfluenceKernel::indicator(),
            InfluenceKernel::variance(),
            InfluenceKernel::entropy(),
            InfluenceKernel::toward_zero(),
            InfluenceKernel::toward_one(),
        ];
        for a in [0.1, 0.3, 0.5, 0.6, 0.75, 0.9, 1.0] {
            v.push(InfluenceKernel::alpha(a).unwrap());
        }
        v
    }

    #[test]
    fn entropy_values() {
        assert_eq!(entropy(0.5).unwrap(), 1.0);
        assert_eq!(entropy(0.0).unwrap(), 0.0);
        assert_eq!(entropy(1.0).unwrap(), 0.0);
        let expected = 0.75 * (4.0f64 / 3.0).log2() + 0.25 * 2.0;
        assert!((entropy(0.75).unwrap() - expected).abs() < 1e-15);
        assert!((entropy(0.75).unwrap() - 0.811_278_124_459_132_8).abs() < 1e-15);
        assert!(entropy(-0.1).is_err());
        assert!(entropy(1.5).is_err());
    }

    #[test]
    fn entropy_is_symmetric_on_grid() {
        for k in 0..=CHECK_STEPS {
            let t = k as f64 / CHECK_STEPS as f64;
            let d = entropy(t).unwrap() - entropy(1.0 - t).unwrap();
            assert!(d.abs() <= 1e-12);
        }
    }

    #[test]
    fn catalogue_by_name() {
        let var = catalogue_kernel("variance", None).unwrap();
        assert_eq!(var.eval(0.5), 0.25);
        let ind = catalogue_kernel("indicator", None).unwrap();
        assert_eq!(ind.eval(0.0), 0.0);
        assert_eq!(ind.eval(1.0 / 3.0), 1.0);
        let a1 = catalogue_kernel("alpha", Some(1.0)).unwrap();
        for k in 0..=64 {
            let t = k as f64 / 64.0;
            assert_eq!(a1.eval(t), var.eval(t));
        }
        assert!(catalogue_kernel("alpha", None).is_err());
        assert!(catalogue_kernel("alpha", Some(0.0)).is_err());
        assert!(catalogue_kernel("alpha", Some(1.5)).is_err());
        assert!(matches!(catalogue_kernel("nope", None), Err(Error::UnknownKernel(_))));
    }

    #[test]
    fn directional_kernels() {
        let t0 = InfluenceKernel::toward_zero();
        let t1 = InfluenceKernel::toward_one();
        assert_eq!(t0.eval(1.0), 0.0);
        assert_eq!(t0.eval(0.25), 0.25);
        assert_eq!(t1.eval(0.0), 0.0);
        assert_eq!(t1.eval(0.25), 0.75);
    }

    #[test]
    fn declared_flags_match_checkers() {
        for h in catalogue() {
            assert_eq!(h.declared_concave(), check_concave(&h, CHECK_STEPS), "{}", h.name());
            assert_eq!(
                h.declared_dominates_entropy(),
                check_dominates_entropy(&h, CHECK_STEPS),
                "{}",
                h.name()
            );
        }
    }

    #[test]
    fn checker_examples() {
        assert!(check_concave(&InfluenceKernel::entropy(), 4096));
        assert!(check_concave(&InfluenceKernel::variance(), 4096));
        // indicator is concave as a function on the closed interval
        assert!(check_concave(&InfluenceKernel::indicator(), 4096));
        let square = InfluenceKernel::custom("square", |t| t * t);
        assert!(!check_concave(&square, 4096));
        assert!(!square.declared_concave());

        assert!(check_dominates_entropy(&InfluenceKernel::entropy(), 4096));
        assert!(!check_dominates_entropy(&InfluenceKernel::variance(), 4096));
        assert!(check_dominates_entropy(&InfluenceKernel::indicator(), 4096));
    }

    #[test]
    fn values_stay_in_unit_interval() {
        for h in catalogue() {
            for k in 0..=CHECK_STEPS {
                let v = h.eval(k as f64 / CHECK_STEPS as f64);
                assert!((0.0..=1.0).contains(&v), "{} at {k}", h.name());
            }
        }
    }

    #[test]
    fn alpha_family_decreases_in_alpha() {
        let alphas = [0.1, 0.25, 0.5, 0.6, 0.8, 1.0];
        for w in alphas.windows(2) {
            let lo = InfluenceKernel::alpha(w[0]).unwrap();
            let hi = InfluenceKernel::alpha(w[1]).unwrap();
            for k in 1..CHECK_STEPS {
                let t = k as f64 / CHECK_STEPS as f64;
                assert!(lo.eval(t) >= hi.eval(t));
            }
        }
    }

    #[test]
    fn designators() {
        for (d, name) in [("ent", "ent"), ("var", "var"), ("ind", "ind"), ("t0", "t0"), ("t1", "t1")] {
            assert_eq!(parse_designator(d).unwrap().name(), name);
        }
        assert_eq!(parse_designator("alpha:0.75").unwrap().eval(0.5), 0.25f64.powf(0.75));
        assert!(parse_designator("alpha:x").is_err());
        assert!(parse_designator("bogus").is_err());
    }

    #[test]
    fn table_kernel() {
        let k = InfluenceKernel::from_table_csv("tri", "t,value\n0,0\n0.5,1\n1,0\n").unwrap();
        assert_eq!(k.eval(0.25), 0.5);
        assert_eq!(k.eval(0.5), 1.0);
        assert!(k.declared_concave());
        assert!(!k.declared_dominates_entropy());
        assert!(InfluenceKernel::from_table_csv("bad", "0.1,0\n1,0\n").is_err());
        assert!(InfluenceKernel::from_table_csv("bad", "0,0\n1,2\n").is_err());
        assert!(InfluenceKernel::from_table_csv("bad", "0,0\n0.5,x\n1,0\n").is_err());
    }

    #[test]
    fn rational_evaluation_hits_endpoints_exactly() {
        use crate::rational::ratio;
        let ind = InfluenceKernel::indicator();
        assert_eq!(ind.eval_rational(&ratio(0, 5)), 0.0);
        assert_eq!(ind.eval_rational(&ratio(5, 5)), 0.0);
        let huge = num_bigint::BigInt::from(1u8) << 200usize;
        let near_one = Rational::new(huge.clone() - 1, huge);
        assert_eq!(ind.eval_rational(&near_one), 1.0);
    }
}
