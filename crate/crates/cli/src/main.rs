//! `beauville`: verify explicit Beauville structures on finite Coxeter
//! groups, search for them, reproduce the trace tables and run the
//! mixed/mixable obstructions.
//!
//! Exit codes: 0 success, 1 verification failure or no structure, 2 bad
//! input or configuration, 3 inconclusive or a bound was hit.

mod commands;
mod paper_all;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::Value;

use beauville_core::beauville::BeauvilleError;
use beauville_core::groups::GroupError;
use beauville_core::paperdata::PaperError;

#[derive(Parser, Debug)]
#[command(name = "beauville", version, about = "Beauville structures on finite Coxeter groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone, Copy, Default)]
#[group(multiple = false)]
pub struct SigmaFlags {
    /// Σ from the exact conjugacy class table.
    #[arg(long)]
    pub exact: bool,
    /// Σ from class invariants (cycle types, characteristic polynomials).
    #[arg(long)]
    pub invariant: bool,
}

impl SigmaFlags {
    pub fn name(self) -> Option<&'static str> {
        match (self.exact, self.invariant) {
            (true, _) => Some("exact"),
            (_, true) => Some("invariant"),
            _ => None,
        }
    }
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Write the JSON report here instead of standard output.
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
    /// Worker threads; defaults to the available parallelism.
    #[arg(long, value_name = "N")]
    pub workers: Option<usize>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Verify a structure from the catalogue or from a JSON file.
    Verify {
        /// Group descriptor such as B12, E8 or H3xH3.
        group: String,
        #[arg(long, conflicts_with = "file", required_unless_present = "file")]
        paper: bool,
        #[arg(long, value_name = "PATH")]
        file: Option<PathBuf>,
        #[command(flatten)]
        sigma: SigmaFlags,
        #[command(flatten)]
        common: Common,
    },
    /// Search for a strongly real Beauville structure.
    Search {
        group: String,
        /// Enumerate every generating pair up to conjugacy instead of sampling.
        #[arg(long)]
        exhaustive: bool,
        /// Pair orbits (exhaustive) or samples (randomized); 0 is unlimited.
        #[arg(long, value_name = "N")]
        budget: Option<u64>,
        /// Largest group order enumerated.
        #[arg(long, value_name = "N", default_value_t = 10_000)]
        bound: u64,
        #[arg(long, value_name = "N", default_value_t = 1)]
        seed: u64,
        #[command(flatten)]
        common: Common,
    },
    /// Compare computed traces of powers with the closed forms.
    Tables {
        /// B-even, B-odd, D-even or D-odd.
        case: String,
        /// A rank `n` or an inclusive range `lo..hi`.
        ranks: String,
        #[command(flatten)]
        common: Common,
    },
    /// Order-mod-4 obstruction to a mixed structure, for every index 2 subgroup.
    #[command(alias = "mixed-obstruction")]
    Mixed {
        group: String,
        #[arg(long, value_name = "N", default_value_t = 1_000_000)]
        bound: u64,
        #[command(flatten)]
        common: Common,
    },
    /// Obstruction to mixability: elements outside the derived subgroup.
    #[command(alias = "mixable-obstruction")]
    Mixable {
        group: String,
        #[arg(long, value_name = "N", default_value_t = 1_000_000)]
        bound: u64,
        #[command(flatten)]
        common: Common,
    },
    /// Every catalogue structure, every rank and every exhaustive negative.
    VerifyPaperAll {
        /// Largest B/D rank included.
        #[arg(long, value_name = "N", default_value_t = 30)]
        max_rank: usize,
        #[arg(long, value_name = "N", default_value_t = 1)]
        seed: u64,
        #[command(flatten)]
        sigma: SigmaFlags,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Config(String),
    #[error(transparent)]
    Paper(#[from] PaperError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Beauville(#[from] BeauvilleError),
    #[error("cannot write {path}: {message}")]
    Write { path: String, message: String },
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Beauville(BeauvilleError::Bound(_)) => 3,
            CliError::Paper(PaperError::Beauville(BeauvilleError::Bound(_))) => 3,
            _ => 2,
        }
    }
}

/// A finished command: its exit code, JSON document and, for commands that
/// have one, a human-readable table.
pub struct Outcome {
    pub code: u8,
    pub json: Value,
    pub human: Option<String>,
}

/// The table (if any) goes to standard output and the JSON to `--out`;
/// without a table the JSON goes to standard output unless `--out` is set.
fn emit(outcome: &Outcome, out: Option<&PathBuf>) -> Result<(), CliError> {
    let text = serde_json::to_string_pretty(&outcome.json).expect("serializable") + "\n";
    if let Some(h) = &outcome.human {
        print!("{h}");
    }
    match out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| CliError::Write { path: path.display().to_string(), message: e.to_string() }),
        None if outcome.human.is_none() => {
            print!("{text}");
            Ok(())
        }
        None => Ok(()),
    }
}

fn init_workers(workers: Option<usize>) -> Result<(), CliError> {
    if let Some(n) = workers {
        if n == 0 {
            return Err(CliError::Config("--workers must be positive".into()));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| CliError::Config(e.to_string()))?;
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(Outcome, Common), CliError> {
    Ok(match cli.command {
        Command::Verify { group, paper, file, sigma, common } => {
            init_workers(common.workers)?;
            (commands::verify(&group, paper, file.as_deref(), sigma)?, common)
        }
        Command::Search { group, exhaustive, budget, bound, seed, common } => {
            init_workers(common.workers)?;
            let workers = common.workers.unwrap_or(0);
            (commands::search(&group, exhaustive, budget, bound, seed, workers)?, common)
        }
        Command::Tables { case, ranks, common } => (commands::tables(&case, &ranks)?, common),
        Command::Mixed { group, bound, common } => (commands::mixed(&group, bound)?, common),
        Command::Mixable { group, bound, common } => (commands::mixable(&group, bound)?, common),
        Command::VerifyPaperAll { max_rank, seed, sigma, common } => {
            init_workers(common.workers)?;
            let workers = common.workers.unwrap_or(0);
            (paper_all::run(max_rank, seed, workers, sigma)?, common)
        }
    })
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    match run(cli).and_then(|(outcome, common)| emit(&outcome, common.out.as_ref()).map(|_| outcome.code)) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
