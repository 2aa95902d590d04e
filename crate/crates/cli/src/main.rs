//! `circsq`: count squares in circular words, export Rauzy graphs and run
//! the verification sweeps.
//!
//! Exit status: 0 on success, 1 when a check finds violations, 2 on usage
//! errors.

mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use circsq_core::rauzy::DEFAULT_CIRCUIT_CAP;
use circsq_core::verify::{self, CheckId, SweepConfig};
use circsq_core::{Error, Word};

const CHECKPOINT_ENV: &str = "CIRCSQ_CHECKPOINT";

#[derive(Parser, Debug)]
#[command(name = "circsq", version, about = "Distinct squares in circular words")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
    Dot,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Count the distinct squares of a word.
    Count {
        word: String,
        /// Count squares of the circular word (all rotations).
        #[arg(long)]
        circular: bool,
    },
    /// Partition the powers of a word into classes by primitive root.
    Classes { word: String },
    /// Print the Rauzy graph of the given order.
    Rauzy {
        word: String,
        #[arg(long)]
        order: usize,
    },
    /// List the elementary circuits of a Rauzy graph.
    Circuits {
        word: String,
        #[arg(long)]
        order: usize,
        /// Only circuits no longer than the order.
        #[arg(long)]
        small: bool,
    },
    /// Find where the class circuits of a primitive word split.
    Split { word: String },
    /// Run verification sweeps.
    Verify(VerifyArgs),
    /// Search for words with many distinct circular squares.
    Search {
        #[arg(long)]
        length: usize,
        #[arg(long, default_value_t = 2)]
        alphabet: usize,
        /// Maximum number of words evaluated.
        #[arg(long, default_value_t = 100_000)]
        budget: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// A check id, or `all`.
    #[arg(long, default_value = "all")]
    check: String,
    #[arg(long, default_value_t = 2)]
    alphabet: usize,
    #[arg(long)]
    max_len: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Resume from and save progress to this file.
    #[arg(long)]
    checkpoint: Option<PathBuf>,
    /// Enumerate every word instead of one per symmetry class.
    #[arg(long)]
    raw: bool,
}

/// Failures, by exit status.
enum Failure {
    Usage(String),
    Violations,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn parse_word(text: &str) -> Result<Word, Failure> {
    Word::parse(text).map_err(Failure::from)
}

fn require(format: Format, allowed: &[Format]) -> Result<(), Failure> {
    if allowed.contains(&format) {
        Ok(())
    } else {
        Err(Failure::Usage(
            format!("format {format:?} is not supported by this command").to_lowercase(),
        ))
    }
}

fn checks(spec: &str) -> Result<Vec<CheckId>, Failure> {
    if spec == "all" {
        return Ok(CheckId::ALL.to_vec());
    }
    spec.split(',')
        .map(|s| s.trim().parse().map_err(Failure::from))
        .collect()
}

fn checkpoint_path(flag: Option<PathBuf>) -> Option<PathBuf> {
    match std::env::var_os(CHECKPOINT_ENV) {
        Some(p) if !p.is_empty() => Some(PathBuf::from(p)),
        _ => flag,
    }
}

fn run(cli: Cli) -> Result<String, Failure> {
    use Format::*;
    let format = cli.format;
    match cli.command {
        Command::Count { word, circular } => {
            require(format, &[Text, Json, Csv])?;
            Ok(render::count(&parse_word(&word)?, circular, format))
        }
        Command::Classes { word } => {
            require(format, &[Text, Json, Csv])?;
            Ok(render::classes(&parse_word(&word)?, format))
        }
        Command::Rauzy { word, order } => {
            let w = parse_word(&word)?;
            let g = circsq_core::build_rauzy_graph(&w, order)?;
            Ok(render::rauzy(&g, format))
        }
        Command::Circuits { word, order, small } => {
            require(format, &[Text, Json, Csv])?;
            let w = parse_word(&word)?;
            let g = circsq_core::build_rauzy_graph(&w, order)?;
            Ok(render::circuits(&g, small, DEFAULT_CIRCUIT_CAP, format)?)
        }
        Command::Split { word } => {
            require(format, &[Text, Json])?;
            Ok(render::split(&parse_word(&word)?, format)?)
        }
        Command::Verify(args) => {
            require(format, &[Text, Json, Csv])?;
            let mut cfg = SweepConfig::new(args.alphabet, args.max_len)
                .with_checks(checks(&args.check)?)
                .with_jobs(args.jobs)
                .with_seed(args.seed);
            cfg.canonicalize = !args.raw;
            cfg.checkpoint_path = checkpoint_path(args.checkpoint);
            let reports = verify::run_checks(&cfg)?;
            let out = render::reports(&reports, format);
            if reports.iter().all(|r| r.passed()) {
                Ok(out)
            } else {
                print!("{out}");
                Err(Failure::Violations)
            }
        }
        Command::Search {
            length,
            alphabet,
            budget,
            seed,
        } => {
            require(format, &[Text, Json, Csv])?;
            let report = verify::search_extremal(length, alphabet, budget, seed)?;
            let out = render::reports(std::slice::from_ref(&report), format);
            if report.passed() {
                Ok(out)
            } else {
                print!("{out}");
                Err(Failure::Violations)
            }
        }
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    match run(Cli::parse()) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Violations) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
