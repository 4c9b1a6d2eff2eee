mod commands;
mod text;

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

/// Analyze finite semigroups with zero: categoricity at zero, annihilators,
/// the P/Q/N decomposition and its Rees embedding.
#[derive(Parser)]
#[command(name = "kseg", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format
    #[arg(long, value_enum, default_value = "json", global = true)]
    format: Format,

    /// Write the result here instead of stdout
    #[arg(long, global = true)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Check a semigroup table and print it normalized, or list every violation
    Validate {
        #[arg(long)]
        input: PathBuf,
    },
    /// Categoricity at zero, annihilators and nilpotency degree
    Analyze {
        #[arg(long)]
        input: PathBuf,
    },
    /// Full decomposition report of a K-semigroup
    Decompose {
        #[arg(long)]
        input: PathBuf,
    },
    /// Build a semigroup from a construction spec
    Construct {
        #[arg(value_enum)]
        kind: ConstructKind,
        #[arg(long)]
        input: PathBuf,
    },
    /// Enumerate semigroups with zero of a given order as JSON lines
    Enumerate {
        #[arg(long)]
        order: usize,
        /// Only semigroups that are categorical at zero
        #[arg(long)]
        k_only: bool,
        /// One representative per isomorphism class
        #[arg(long)]
        up_to_iso: bool,
        /// Print counts instead of the semigroups
        #[arg(long)]
        count: bool,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Draw this many random candidate tables instead of a full scan
        #[arg(long, requires = "seed")]
        sample: Option<u64>,
        #[arg(long, requires = "sample")]
        seed: Option<u64>,
    },
    /// Run every structural check over all semigroups up to an order
    Verify {
        #[arg(long)]
        max_order: usize,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Check the category reading of the decomposition of S(C)
    CheckCategory {
        #[arg(long)]
        semigroup: PathBuf,
        #[arg(long)]
        category: PathBuf,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ConstructKind {
    Category,
    Nilpotent,
    Rees,
    MorExt,
}

/// A finished command: what to print and whether the answer was positive.
pub struct Outcome {
    pub body: String,
    pub positive: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Validate { input } => commands::validate(&input, cli.format),
        Command::Analyze { input } => commands::analyze(&input, cli.format),
        Command::Decompose { input } => commands::decompose(&input, cli.format),
        Command::Construct { kind, input } => commands::construct(kind, &input, cli.format),
        Command::Enumerate {
            order,
            k_only,
            up_to_iso,
            count,
            jobs,
            sample,
            seed,
        } => commands::enumerate(
            commands::EnumerateArgs {
                order,
                k_only,
                up_to_iso,
                count,
                jobs,
                sample: sample.zip(seed),
            },
            cli.format,
        ),
        Command::Verify { max_order, jobs } => commands::verify(max_order, jobs, cli.format),
        Command::CheckCategory {
            semigroup,
            category,
        } => commands::check_category(&semigroup, &category, cli.format),
    };
    let outcome = match result {
        Ok(outcome) => outcome,
        Err(e) => {
            eprintln!("kseg: {e}");
            return ExitCode::from(2);
        }
    };
    let written = match &cli.output {
        Some(path) => fs::write(path, &outcome.body),
        None => io::stdout().lock().write_all(outcome.body.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("kseg: cannot write output: {e}");
        return ExitCode::from(2);
    }
    if outcome.positive {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
