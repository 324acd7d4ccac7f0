use std::path::PathBuf;

use hinfluence::discretize::{default_bits, discretize, lift_biased};
use hinfluence::kernels::parse_designator;
use hinfluence::monotone::{monotonize, shift_trace};
use hinfluence::rational::{self, Rational};
use hinfluence::theorems::{
    averaged_correlation_check, bkkkl_report, boundary_report, correlation_report, harris_kleitman_check,
    kkl_sum_report, min_junta_size, talagrand_report,
};
use hinfluence::{InequalityReport, InfluenceKernel};

use crate::args::{Cli, Command, ReportKind};
use crate::render::{self, Table};
use crate::source::{load, Kind, Source};
use crate::{sweep, Result, DEGENERATE};

pub fn dispatch(cli: &Cli) -> Result<u8> {
    let measure = cli.measure.as_deref();
    let out = cli.out.as_deref();
    match &cli.command {
        Command::Influence { source } => {
            let src = load(source, measure, cli.seed)?;
            let h = parse_designator(&cli.kernel)?;
            render::emit(out, &influence_table(&src, &h)?.render(cli.format))?;
            Ok(0)
        }
        Command::Verify { kind, sources, pair, alpha } => {
            let mut names = sources.clone();
            names.extend(pair.iter().flatten().cloned());
            let srcs = names.iter().map(|s| load(s, measure, cli.seed)).collect::<Result<Vec<_>>>()?;
            if *kind == ReportKind::Hk {
                let [a, b] = srcs.as_slice() else {
                    return Err("hk needs exactly two sources".into());
                };
                let ((fa, mu), (fb, _)) = (a.cube()?, b.cube()?);
                let holds = harris_kleitman_check(fa, fb, mu)?;
                let mut t = Table::new(&["name", "a", "b", "holds"]);
                t.push(vec!["hk".into(), a.label.clone(), b.label.clone(), holds.to_string()]);
                render::emit(out, &t.render(cli.format))?;
                return Ok(0);
            }
            let h = parse_designator(&cli.kernel)?;
            let report = evaluate(*kind, &srcs, &h, *alpha)?;
            let degenerate = report.degenerate;
            render::emit(out, &render::reports(&[report], cli.format))?;
            Ok(if degenerate { DEGENERATE } else { 0 })
        }
        Command::Sweep { template, report, values, alpha } => {
            let text = sweep::run(cli, template, *report, values, alpha)?;
            render::emit(out, &text)?;
            Ok(0)
        }
        Command::Monotonize { source, trace_out } => {
            let src = load(source, measure, cli.seed)?;
            let g = src.grid()?;
            let m = monotonize(&g)?;
            if cli.trace {
                let path = trace_out
                    .clone()
                    .or_else(|| out.map(|p| PathBuf::from(format!("{}.trace", p.display()))))
                    .ok_or("--trace needs --out or --trace-out")?;
                let trace = shift_trace(&g.to_matrix()?)?;
                std::fs::write(&path, trace.steps_to_text()).map_err(|e| format!("{}: {e}", path.display()))?;
            }
            render::emit(out, &m.to_text()?)?;
            Ok(0)
        }
        Command::Discretize { source, bits } => {
            let src = load(source, measure, cli.seed)?;
            let g = src.grid()?;
            let l = bits.unwrap_or_else(|| default_bits(g.resolutions()));
            let (cube, grouping) = discretize(&g, l)?;
            render::emit(out, &(cube.to_text() + &grouping.to_text()))?;
            Ok(0)
        }
        Command::Lift { source } => {
            let src = load(source, measure, cli.seed)?;
            let (f, mu) = src.cube()?;
            let q = mu.bias(1);
            if mu.biases().iter().any(|b| b != q) {
                return Err("lift needs one common bias".into());
            }
            render::emit(out, &lift_biased(f, q)?.to_text()?)?;
            Ok(0)
        }
        Command::Dual { source } => {
            let src = load(source, measure, cli.seed)?;
            render::emit(out, &src.cube()?.0.dual().to_text())?;
            Ok(0)
        }
        Command::Junta { source, eps } => {
            let src = load(source, measure, cli.seed)?;
            let (f, mu) = src.cube()?;
            let r = min_junta_size(f, mu, *eps)?;
            let witness: Vec<String> = r.witness.iter().map(|k| k.to_string()).collect();
            let mut t = Table::new(&["size", "witness", "error", "error_float", "search"]);
            t.push(vec![
                r.size.to_string(),
                witness.join(" "),
                rational::display(&r.error),
                rational::to_f64(&r.error).to_string(),
                if r.exhaustive { "exhaustive" } else { "greedy" }.into(),
            ]);
            render::emit(out, &t.render(cli.format))?;
            Ok(0)
        }
    }
}

fn exact_pair(r: &Rational) -> [String; 2] {
    [rational::display(r), rational::to_f64(r).to_string()]
}

pub fn influence_table(src: &Source, h: &InfluenceKernel) -> Result<Table> {
    let mut t = Table::new(&["coordinate", "kernel", "profile", "nonconstant", "nonconstant_float", "influence"]);
    match &src.kind {
        Kind::Grid(g) => {
            for k in 1..=g.arity() {
                let p = g.fiber_profile(k)?;
                let [nc, ncf] = exact_pair(&p.nonconstant_weight());
                t.push(vec![k.to_string(), h.name().into(), p.summary(), nc, ncf, p.h_influence(h).to_string()]);
            }
        }
        Kind::Cube { f, mu, .. } => {
            for k in 1..=f.arity() {
                let c = f.fiber_classes(mu, k)?;
                let summary = [("00", &c.zero_zero), ("01", &c.zero_one), ("10", &c.one_zero), ("11", &c.one_one)]
                    .iter()
                    .map(|(key, v)| format!("{key}:{}", rational::display(v)))
                    .collect::<Vec<_>>()
                    .join(";");
                let [nc, ncf] = exact_pair(&c.nonconstant());
                t.push(vec![k.to_string(), h.name().into(), summary, nc, ncf, f.h_influence(mu, k, h)?.to_string()]);
            }
        }
    }
    Ok(t)
}

/// One inequality instance over already loaded sources.
pub fn evaluate(kind: ReportKind, srcs: &[Source], h: &InfluenceKernel, alpha: f64) -> Result<InequalityReport> {
    let label = srcs.iter().map(|s| s.label.as_str()).collect::<Vec<_>>().join(";");
    let single = || -> Result<&Source> {
        match srcs {
            [s] => Ok(s),
            _ => Err(format!("{kind:?} takes exactly one source, got {}", srcs.len()).into()),
        }
    };
    let report = match kind {
        ReportKind::Bkkkl => bkkkl_report(single()?.grid()?.as_ref(), h)?,
        ReportKind::Kklsum => kkl_sum_report(single()?.grid()?.as_ref(), h)?,
        ReportKind::Talagrand => talagrand_report(single()?.grid()?.as_ref(), h)?,
        ReportKind::Boundary => boundary_report(single()?.grid()?.as_ref(), h)?,
        ReportKind::Correlation => {
            let grids = srcs.iter().map(|s| s.grid().map(|g| g.into_owned())).collect::<Result<Vec<_>>>()?;
            correlation_report(&grids, alpha)?
        }
        ReportKind::Avgcorr => {
            let cubes = srcs.iter().map(|s| s.cube().map(|(f, _)| f.clone())).collect::<Result<Vec<_>>>()?;
            averaged_correlation_check(&cubes)?
        }
        ReportKind::Hk => return Err("hk does not produce an inequality report".into()),
    };
    Ok(report.with_param("source", label))
}
