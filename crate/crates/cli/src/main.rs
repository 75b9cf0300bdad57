use std::path::PathBuf;
use std::process::ExitCode;

use borsuk_core::oracle::OracleConfig;
use clap::{Args, Parser, Subcommand};

mod commands;
mod io;

use io::CliError;

#[derive(Parser, Debug)]
#[command(name = "borsuk", version, about = "Borsuk numbers and small-diameter partitions of planar convex bodies")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// Tolerance and sampling flags shared by every command.
#[derive(Args, Debug, Clone, Copy)]
pub struct Tuning {
    /// Relative tolerance for diameter pairs.
    #[arg(long, default_value_t = 1e-9)]
    pub eps: f64,
    /// Boundary samples for verification and the oracle.
    #[arg(long, default_value_t = 2048)]
    pub samples: usize,
    /// Boundary points in the oracle's chord grid.
    #[arg(long, default_value_t = 256)]
    pub grid: usize,
    /// Seed for the oracle's jittered sampling.
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
}

impl Tuning {
    pub fn oracle(&self) -> OracleConfig {
        OracleConfig { boundary_samples: self.samples, chord_grid: self.grid, seed: self.seed, eps_rel: self.eps }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide the Borsuk number and write a full JSON report.
    Analyze {
        input: PathBuf,
        #[command(flatten)]
        tuning: Tuning,
        /// Report destination (stdout when absent).
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also write a figure with the partition and diameter segments.
        #[arg(long)]
        svg: Option<PathBuf>,
        /// Also write the full diameter graph as JSON.
        #[arg(long)]
        graph: Option<PathBuf>,
        /// Include the brute-force oracle cross-check.
        #[arg(long)]
        oracle: bool,
        /// Include wall-clock timings (makes the report nondeterministic).
        #[arg(long)]
        timings: bool,
    },
    /// Build and verify a partition into pieces of smaller diameter.
    Partition {
        input: PathBuf,
        #[command(flatten)]
        tuning: Tuning,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Emit a gallery shape in the body schema; `gallery` writes every shape into the --out directory.
    Generate {
        shape: String,
        #[arg(long)]
        n: Option<f64>,
        #[arg(long)]
        width: Option<f64>,
        #[arg(long)]
        radius: Option<f64>,
        #[arg(long)]
        side: Option<f64>,
        #[arg(long)]
        circumradius: Option<f64>,
        #[arg(long)]
        w: Option<f64>,
        #[arg(long)]
        h: Option<f64>,
        #[arg(long)]
        r: Option<f64>,
        #[arg(long)]
        beta: Option<f64>,
        #[arg(long)]
        gamma: Option<f64>,
        /// Seed of the random generators.
        #[arg(long)]
        seed: Option<f64>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Cross-check the decision against the brute-force chord oracle.
    Oracle {
        input: PathBuf,
        #[command(flatten)]
        tuning: Tuning,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Verify a partition file against a body.
    Verify {
        body: PathBuf,
        partition: PathBuf,
        #[command(flatten)]
        tuning: Tuning,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Analyze every `.json` body in a directory, each in isolation.
    Batch {
        dir: PathBuf,
        #[command(flatten)]
        tuning: Tuning,
        /// Directory for per-file reports.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also write a figure per body into the --out directory.
        #[arg(long)]
        svg: bool,
        #[arg(long)]
        oracle: bool,
    },
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Analyze { input, tuning, out, svg, graph, oracle, timings } => {
            commands::analyze(&input, &tuning, out.as_deref(), svg.as_deref(), graph.as_deref(), oracle, timings)
        }
        Command::Partition { input, tuning, out, svg } => {
            commands::partition(&input, &tuning, out.as_deref(), svg.as_deref())
        }
        Command::Generate { shape, n, width, radius, side, circumradius, w, h, r, beta, gamma, seed, out, svg } => {
            let params = [
                ("n", n),
                ("width", width),
                ("radius", radius),
                ("side", side),
                ("circumradius", circumradius),
                ("w", w),
                ("h", h),
                ("r", r),
                ("beta", beta),
                ("gamma", gamma),
                ("seed", seed),
            ]
            .into_iter()
            .filter_map(|(k, v)| v.map(|v| (k.to_string(), v)))
            .collect();
            commands::generate(&shape, &params, out.as_deref(), svg.as_deref())
        }
        Command::Oracle { input, tuning, out } => commands::oracle(&input, &tuning, out.as_deref()),
        Command::Verify { body, partition, tuning, out } => {
            commands::verify(&body, &partition, &tuning, out.as_deref())
        }
        Command::Batch { dir, tuning, out, svg, oracle } => commands::batch(&dir, &tuning, out.as_deref(), svg, oracle),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code())
        }
    }
}
