use std::borrow::Cow;

use hinfluence::discretize::lift_biased;
use hinfluence::families::parse_family;
use hinfluence::{CubeFunction, GridFunction, ProductMeasure, Realized};

use crate::Result;

pub enum Kind {
    Grid(GridFunction),
    Cube { f: CubeFunction, mu: ProductMeasure, lift: Option<GridFunction> },
}

pub struct Source {
    pub label: String,
    pub kind: Kind,
}

fn measure(designator: Option<&str>, arity: usize) -> Result<ProductMeasure> {
    Ok(match designator {
        Some(d) => ProductMeasure::parse_designator(d, arity)?,
        None => ProductMeasure::uniform(arity),
    })
}

/// `file:<path>` (cube when the first line is `m=`, grid when `n=`) or a
/// family designator.
pub fn load(s: &str, measure_flag: Option<&str>, seed: u64) -> Result<Source> {
    let label = s.to_string();
    if let Some(path) = s.strip_prefix("file:") {
        let text = std::fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))?;
        let first = text.lines().find(|l| !l.trim().is_empty()).unwrap_or("");
        let kind = if first.trim_start().starts_with("m=") {
            let f = CubeFunction::from_text(&text).map_err(|e| format!("{path}: {e}"))?;
            let mu = measure(measure_flag, f.arity())?;
            Kind::Cube { f, mu, lift: None }
        } else if first.trim_start().starts_with("n=") {
            Kind::Grid(GridFunction::from_text(&text).map_err(|e| format!("{path}: {e}"))?)
        } else {
            return Err(format!("{path}: line 1: expected `m=` or `n=` header").into());
        };
        return Ok(Source { label, kind });
    }
    let inst = parse_family(s, seed)?;
    let kind = match inst.realized {
        Realized::Grid(g) => Kind::Grid(g),
        Realized::Cube { function, measure: mu, lift } => match measure_flag {
            Some(d) => Kind::Cube { mu: measure(Some(d), function.arity())?, f: function, lift: None },
            None => Kind::Cube { f: function, mu, lift },
        },
    };
    Ok(Source { label, kind })
}

impl Source {
    /// The grid form; cube functions are lifted through their common bias.
    pub fn grid(&self) -> Result<Cow<'_, GridFunction>> {
        match &self.kind {
            Kind::Grid(g) => Ok(Cow::Borrowed(g)),
            Kind::Cube { lift: Some(g), .. } => Ok(Cow::Borrowed(g)),
            Kind::Cube { f, mu, lift: None } => {
                let q = mu.bias(1);
                if mu.biases().iter().any(|b| b != q) {
                    return Err(format!("{}: lifting needs one common bias", self.label).into());
                }
                Ok(Cow::Owned(lift_biased(f, q)?))
            }
        }
    }

    pub fn cube(&self) -> Result<(&CubeFunction, &ProductMeasure)> {
        match &self.kind {
            Kind::Cube { f, mu, .. } => Ok((f, mu)),
            Kind::Grid(_) => Err(format!("{}: expected a cube function", self.label).into()),
        }
    }
}
