//! Command-line front end: argument parsing, per-command predicates and
//! JSON/CSV reports.

pub mod args;
pub mod commands;
pub mod error;
pub mod report;

use std::fs::File;
use std::io::{self, BufWriter};
use std::time::Instant;

pub use args::{Cli, Command, Global};
pub use error::CliError;
pub use report::{Format, Report, Verdict};

/// Runs one command on a pool of `g.jobs` threads and returns the verdict
/// with the serialized report.
pub fn render(cli: &Cli) -> Result<(Verdict, Vec<u8>), CliError> {
    let report = build(cli)?;
    let mut buf = Vec::new();
    report.write(cli.global.format, &mut buf)?;
    Ok((report.verdict, buf))
}

/// Like [`render`], but writes to `--out` or stdout.
pub fn execute(cli: &Cli) -> Result<Verdict, CliError> {
    let g = &cli.global;
    let report = build(cli)?;
    match &g.out {
        Some(path) => report.write(g.format, BufWriter::new(File::create(path)?))?,
        None => report.write(g.format, io::stdout().lock())?,
    }
    Ok(report.verdict)
}

fn build(cli: &Cli) -> Result<Report, CliError> {
    let g = &cli.global;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(g.jobs)
        .build()?;
    let start = Instant::now();
    let mut report = pool.install(|| commands::run(&cli.command, g))?;
    if g.timing {
        report.runtime_ms = start.elapsed().as_millis() as u64;
    }
    Ok(report)
}
