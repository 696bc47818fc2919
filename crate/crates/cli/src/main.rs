//! `latmin`: poset ideals, matching-based set functions, and exhaustive
//! verification reports.
//!
//! Exit codes: 0 success, 1 a verification check failed, 2 and above for
//! input errors (see [`error::CliError::exit_code`]).

mod commands;
mod error;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "latmin", version, about = "Distributive lattices as minimizer sets of M-natural-concave functions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count (and optionally list) the ideals of a poset.
    Ideals {
        poset: PathBuf,
        #[arg(long)]
        list: bool,
        #[arg(long)]
        json: bool,
    },
    /// Build a set-function table from a poset.
    Build {
        poset: PathBuf,
        #[arg(long, value_enum)]
        variant: FunctionKind,
        /// Output file; `.csv` selects CSV, anything else JSON. Stdout if absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check submodularity, M♮-concavity, minimizers and (given a poset) the
    /// minimizer condition.
    Verify {
        table: PathBuf,
        poset: Option<PathBuf>,
        #[arg(long)]
        json: bool,
        /// Include wall-clock timings (makes output non-reproducible).
        #[arg(long)]
        timing: bool,
    },
    /// Count ideals directly, via the dyadic partition sum, or via #BIS.
    Count {
        /// Poset file, or a bipartite graph file with `--via bis`.
        input: PathBuf,
        #[arg(long, value_enum, default_value = "ideals")]
        via: CountMethod,
        /// Representing function used with `--via partition`.
        #[arg(long, value_enum, default_value = "f0")]
        variant: FunctionKind,
        #[arg(long)]
        json: bool,
    },
    /// Generate a poset file.
    Gen {
        #[arg(long, value_enum)]
        kind: GenKind,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 0.3)]
        edge_prob: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FunctionKind {
    F0,
    F1,
    F2,
    Prop2,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CountMethod {
    Ideals,
    Partition,
    Bis,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GenKind {
    Chain,
    Antichain,
    RandomDag,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = latmin::Caps::from_env()
        .map_err(error::CliError::from)
        .and_then(|caps| match cli.command {
            Command::Ideals { poset, list, json } => commands::ideals(&caps, &poset, list, json),
            Command::Build { poset, variant, out } => commands::build(&caps, &poset, variant, out.as_deref()),
            Command::Verify {
                table,
                poset,
                json,
                timing,
            } => commands::verify(&caps, &table, poset.as_deref(), json, timing),
            Command::Count {
                input,
                via,
                variant,
                json,
            } => commands::count(&caps, &input, via, variant, json),
            Command::Gen {
                kind,
                n,
                seed,
                edge_prob,
                out,
            } => commands::gen(&caps, kind, n, seed, edge_prob, out.as_deref()),
        });
    match result {
        Ok(outcome) => {
            print!("{}", outcome.stdout);
            ExitCode::from(if outcome.failed { 1 } else { 0 })
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
