use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

mod commands;

use commands::CliError;

/// Exact counting, ranking, sampling and entropy of binary plane trees by
/// Horton-Strahler numbers.
#[derive(Debug, Parser)]
#[command(name = "strahler", version)]
struct Cli {
    #[command(flatten)]
    global: GlobalOpts,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct GlobalOpts {
    /// Seed for the sampler
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Plain machine-readable numbers (default)
    #[arg(long, global = true, conflicts_with = "pretty")]
    pub csv: bool,
    /// Group digits of big numbers by thousands
    #[arg(long, global = true)]
    pub pretty: bool,
    /// Write output to this file instead of stdout
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Number of trees with the given branch counts "N1,...,NK"
    Count { sequence: String },
    /// Tree counts for the published grid of leaf counts and tails
    Table1,
    /// Catalan identity and brute-force cross-check for n = 1..=N_MAX
    Verify {
        n_max: u64,
        /// Add one to every count (exercises the failure path)
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
    /// Entropy rate H(R) on a grid of Horton exponents
    Curve { r_min: f64, r_max: f64, step: f64 },
    /// Size and normalised entropy of the Horton-law space
    Tkr {
        order: u32,
        exponent: f64,
        alpha: f64,
        /// Emit one row for every order from 1 to ORDER
        #[arg(long)]
        sweep: bool,
        /// Print only the exact number of trees
        #[arg(long, conflicts_with = "sweep")]
        count: bool,
    },
    /// Admissible sequences with N1 = N and their tree counts
    Sequences { leaves: u64 },
    /// Uniformly sampled trees as canonical bit strings
    Sample {
        /// Branch counts "N1,...,NK" to sample from
        #[arg(required_unless_present = "leaves", conflicts_with = "leaves")]
        sequence: Option<String>,
        /// Sample uniformly among all trees with this many leaves
        #[arg(long)]
        leaves: Option<u64>,
        #[arg(long, default_value_t = 1)]
        count: u64,
    },
    /// Rank of trees given as canonical bit strings
    Rank {
        #[arg(required = true)]
        trees: Vec<String>,
    },
    /// Trees at "N1,...,NK@index" or "N1,...,NK@first..last" (inclusive)
    Unrank { rank: String },
    /// Encode a canonical bit string file into a binary message
    Encode {
        /// Text file holding one canonical bit string; "-" reads stdin
        input: PathBuf,
    },
    /// Decode a binary message file into a canonical bit string
    Decode {
        /// Binary message file; "-" reads stdin
        input: PathBuf,
    },
    /// Entropy of a uniform tree with N vertices
    Entropy { vertices: u64 },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli.command, &cli.global) {
        Ok(output) => {
            let written = match &cli.global.out {
                Some(path) => std::fs::write(path, &output),
                None => std::io::stdout().write_all(&output),
            };
            if let Err(e) = written {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
            ExitCode::SUCCESS
        }
        Err(CliError::Failed(output)) => {
            let _ = std::io::stdout().write_all(&output);
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
