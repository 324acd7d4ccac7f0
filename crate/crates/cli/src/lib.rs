//! Command-line front end: every number printed comes straight from a
//! library call.

mod args;
mod commands;
mod render;
mod source;
mod sweep;

pub use args::{Cli, Command, Format, ReportKind};

pub type Result<T, E = Box<dyn std::error::Error + Send + Sync>> = std::result::Result<T, E>;

/// Exit code for a degenerate instance.
pub const DEGENERATE: u8 = 2;

/// Runs one invocation and returns the process exit code.
pub fn run(cli: &Cli) -> Result<u8> {
    if let Some(t) = cli.threads {
        // A second call in the same process keeps the first pool.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(t).build_global();
    }
    commands::dispatch(cli)
}
