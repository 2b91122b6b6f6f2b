use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::report::Format;

/// Numerical checks of discrete weighted Hardy inequalities on the half-line.
#[derive(Debug, Parser)]
#[command(name = "hardy", version, about)]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct Global {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Tolerance of the pass/fail predicate (each command has its own default).
    #[arg(long, global = true)]
    pub tol: Option<f64>,
    /// Worker threads; 0 uses all available cores.
    #[arg(long, default_value_t = 0, global = true)]
    pub jobs: usize,
    /// Seed for randomized commands.
    #[arg(long, default_value_t = 0, global = true)]
    pub seed: u64,
    /// Record wall-clock time in `runtime_ms` (otherwise 0, keeping reports
    /// byte-identical across runs).
    #[arg(long, global = true)]
    pub timing: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Tabulate w_{α,β}(n) and its margin over ((α−1)²/4)·n^{α−2}.
    #[command(allow_negative_numbers = true)]
    Weight {
        #[arg(long)]
        alpha: f64,
        #[arg(long)]
        beta: f64,
        #[arg(long, default_value_t = 1000)]
        n_max: usize,
    },
    /// Check the inequality for random finitely supported u.
    #[command(allow_negative_numbers = true)]
    Verify {
        #[arg(long)]
        alpha: f64,
        /// Defaults to (1−α)/2.
        #[arg(long)]
        beta: Option<f64>,
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        #[arg(long, default_value_t = 100)]
        support_max: usize,
    },
    /// Bottom of the spectrum on finite sections {1..N}.
    #[command(allow_negative_numbers = true)]
    Sharp {
        #[arg(long)]
        alpha: f64,
        #[arg(long, value_delimiter = ',', default_values_t = [100, 1000, 10000, 100000])]
        schedule: Vec<usize>,
    },
    /// Taylor coefficients b_k(α) with sign classes.
    #[command(allow_negative_numbers = true)]
    Coeffs {
        #[arg(long)]
        alpha: f64,
        #[arg(long, default_value_t = 60)]
        k_max: usize,
    },
    /// Sign scan of g(x) − ((α−1)²/4)x² on (0, x_max], one row per α.
    #[command(allow_negative_numbers = true)]
    Scan {
        #[arg(
            long,
            value_delimiter = ',',
            required = true,
            allow_hyphen_values = true
        )]
        alpha: Vec<f64>,
        #[arg(long, default_value_t = 0.5)]
        x_max: f64,
        #[arg(long, default_value_t = 1000)]
        points: usize,
    },
    /// Rayleigh quotients of the truncated power test functions.
    #[command(allow_negative_numbers = true)]
    Family {
        #[arg(long)]
        alpha: f64,
        /// Defaults to (1−α)/2 − {0.1, 0.03, 0.01, 0.003}.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        beta: Vec<f64>,
        #[arg(long = "n", value_delimiter = ',', default_values_t = [100, 1000, 10000])]
        n_cuts: Vec<usize>,
    },
    /// First negative b_k(α) over a grid of α (raw findings).
    #[command(allow_negative_numbers = true)]
    Conjecture {
        /// Defaults to 0, 0.01, …, 0.33.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        alpha: Vec<f64>,
        #[arg(long, default_value_t = 200)]
        k_max: usize,
    },
}
