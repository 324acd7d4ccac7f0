use hinfluence::kernels::parse_designator;
use hinfluence::InequalityReport;
use rayon::prelude::*;

use crate::args::{Cli, ReportKind};
use crate::commands::evaluate;
use crate::render;
use crate::source::load;
use crate::Result;

/// `a..b` as inclusive integers, otherwise a comma-separated list.
pub fn parse_values(s: &str) -> Result<Vec<String>> {
    if let Some((a, b)) = s.split_once("..") {
        let (a, b): (i64, i64) = (a.trim().parse()?, b.trim().parse()?);
        if a > b {
            return Err(format!("empty range `{s}`").into());
        }
        return Ok((a..=b).map(|v| v.to_string()).collect());
    }
    let values: Vec<String> = s.split(',').map(|v| v.trim().to_string()).filter(|v| !v.is_empty()).collect();
    if values.is_empty() {
        return Err("no sweep values".into());
    }
    Ok(values)
}

fn point(cli: &Cli, template: &str, kind: ReportKind, alpha: &str, value: &str) -> Result<InequalityReport> {
    let fill = |s: &str| s.replace("{}", value);
    let h = parse_designator(&fill(&cli.kernel))?;
    let alpha: f64 = fill(alpha).parse().map_err(|_| format!("bad alpha `{}`", fill(alpha)))?;
    let sources = fill(template)
        .split(';')
        .map(|s| load(s, cli.measure.as_deref(), cli.seed))
        .collect::<Result<Vec<_>>>()?;
    Ok(evaluate(kind, &sources, &h, alpha)?.with_param("point", value))
}

/// Evaluates every point, in parallel, and renders rows in value order.
/// Points that fail are reported on stderr and left out.
pub fn run(cli: &Cli, template: &str, kind: ReportKind, values: &str, alpha: &str) -> Result<String> {
    if kind == ReportKind::Hk {
        return Err("hk cannot be swept".into());
    }
    let values = parse_values(values)?;
    let results: Vec<Result<InequalityReport>> =
        values.par_iter().map(|v| point(cli, template, kind, alpha, v)).collect();
    let mut rows = Vec::new();
    for (v, r) in values.iter().zip(results) {
        match r {
            Ok(rep) => rows.push(rep),
            Err(e) => eprintln!("skipped {v}: {e}"),
        }
    }
    Ok(render::reports(&rows, cli.format))
}
