use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "hinfl", version, about = "h-influences of Boolean functions on product spaces")]
pub struct Cli {
    /// Kernel: ent, var, ind, alpha:<x>, t0, t1 or table:<path>.
    #[arg(long, global = true, default_value = "ent")]
    pub kernel: String,
    /// Cube measure, `q=<rational>` or `q=<q1,...,qm>`; defaults to the family's or uniform.
    #[arg(long, global = true)]
    pub measure: Option<String>,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Seed for random families that do not set their own.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Worker threads.
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Also write the column-exchange trace when monotonizing a square matrix.
    #[arg(long, global = true)]
    pub trace: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum ReportKind {
    Bkkkl,
    Kklsum,
    Talagrand,
    Boundary,
    Correlation,
    Hk,
    Avgcorr,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Per-coordinate h-influences with exact fiber profiles.
    Influence { source: String },
    /// Evaluates one inequality instance.
    Verify {
        kind: ReportKind,
        sources: Vec<String>,
        /// The two sets for `hk`.
        #[arg(long, num_args = 2, value_names = ["A", "B"])]
        pair: Option<Vec<String>>,
        /// Kernel exponent for `correlation`.
        #[arg(long, default_value_t = 1.0)]
        alpha: f64,
    },
    /// Evaluates a report over a parameter range.
    ///
    /// Every `{}` in the template, `--kernel` and `--alpha` is replaced by the
    /// current value. Members of a correlation family are separated by `;`.
    Sweep {
        template: String,
        #[arg(long)]
        report: ReportKind,
        /// `a..b` (inclusive integers) or a comma-separated list.
        #[arg(long)]
        values: String,
        #[arg(long, default_value = "1")]
        alpha: String,
    },
    /// Pushes every fiber's ones to its upper end.
    Monotonize {
        source: String,
        /// Trace destination; defaults to `<out>.trace`.
        #[arg(long)]
        trace_out: Option<PathBuf>,
    },
    /// Bit-expands a monotone grid function.
    Discretize {
        source: String,
        #[arg(long)]
        bits: Option<usize>,
    },
    /// Lifts a cube function to the continuous cube under `--measure`.
    Lift { source: String },
    /// `x -> 1 - f(1 - x)`.
    Dual { source: String },
    /// Smallest coordinate set approximating the function within `--eps`.
    Junta {
        source: String,
        #[arg(long, default_value_t = 0.0)]
        eps: f64,
    },
}
