//! Command-line front end.
//!
//! Exit codes: 0 valid, 1 invalid colouring, 2 usage or input error,
//! 3 size-limit refusal.

mod instance;
mod run;

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

pub use instance::{Family, Instance};
pub use run::{
    bench, colour, exact, verify, Algorithm, BenchRow, ColourRun, ColouringFile, ExactReport, RoundSummary, RunReport,
    TargetNotion, VerifyReport, UNION_PAIR_LIMIT,
};

use crate::error::Error;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] Error),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("CSV output: {0}")]
    Csv(#[from] csv::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(Error::SizeLimit { .. } | Error::Overflow(_)) => 3,
            _ => 2,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "cfcolour", version, about = "Conflict-free colourings of vertex t-subsets")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

/// Where the instance comes from: a file, or generated from parameters.
#[derive(Debug, Args)]
pub struct InstanceArgs {
    /// Instance JSON file.
    #[arg(long, conflicts_with = "family")]
    pub instance: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub family: Option<Family>,
    #[arg(long, default_value_t = 8)]
    pub n: usize,
    #[arg(long, default_value_t = 2)]
    pub t: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

impl InstanceArgs {
    pub fn resolve(&self) -> Result<Instance, CliError> {
        match (&self.instance, self.family) {
            (Some(path), _) => load_instance(path),
            (None, Some(f)) => Ok(Instance::generate(f, self.n, self.t, self.seed)?),
            (None, None) => Err(Error::InvalidArgument("give --instance or --family".into()).into()),
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write a generated instance.
    Gen {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        t: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Colour an instance and validate the result.
    Colour {
        #[command(flatten)]
        source: InstanceArgs,
        /// Defaults to the natural algorithm of the family.
        #[arg(long, value_enum)]
        algorithm: Option<Algorithm>,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also write the colouring itself.
        #[arg(long)]
        save_colouring: Option<PathBuf>,
        /// Include a per-round summary of the peeling loop.
        #[arg(long)]
        trace: bool,
        /// Include wall time (makes reports non-reproducible).
        #[arg(long)]
        timing: bool,
    },
    /// Compute an exact optimum on a small instance.
    Exact {
        #[command(flatten)]
        source: InstanceArgs,
        #[arg(long, value_enum, default_value = "cf")]
        notion: TargetNotion,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write CSV rows of token counts over sizes and seeded trials.
    Bench {
        #[arg(long, value_enum)]
        family: Family,
        /// Comma-separated sizes; may be empty.
        #[arg(long, value_delimiter = ',', num_args = 0..)]
        n: Vec<usize>,
        #[arg(long, default_value_t = 2)]
        t: usize,
        #[arg(long, default_value_t = 1)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum)]
        algorithm: Option<Algorithm>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Validate a stored colouring against an instance.
    Verify {
        #[command(flatten)]
        source: InstanceArgs,
        #[arg(long)]
        colouring: PathBuf,
        /// Notion for vertex colourings; subset colourings are always
        /// checked for t-subset CF.
        #[arg(long, value_enum, default_value = "cf")]
        notion: TargetNotion,
        /// Check against unions of two hyperedges with at least three
        /// vertices.
        #[arg(long)]
        unions: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io { path: path.into(), source })
}

pub fn load_instance(path: &Path) -> Result<Instance, CliError> {
    let inst: Instance = serde_json::from_str(&read(path)?)?;
    inst.check()?;
    Ok(inst)
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), CliError> {
    match out {
        Some(path) => fs::write(path, text).map_err(|source| CliError::Io { path: path.into(), source }),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes()).map_err(|source| CliError::Io { path: "<stdout>".into(), source })
        }
    }
}

fn emit_json<T: Serialize>(out: Option<&Path>, value: &T) -> Result<(), CliError> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    emit(out, &text)
}

/// Runs a parsed command and returns the process exit code.
pub fn run(cli: Cli) -> Result<u8, CliError> {
    match cli.command {
        Command::Gen { family, n, t, seed, out } => {
            emit_json(out.as_deref(), &Instance::generate(family, n, t, seed)?)?;
            Ok(0)
        }
        Command::Colour { source, algorithm, out, save_colouring, trace, timing } => {
            let inst = source.resolve()?;
            let alg = algorithm.unwrap_or(Algorithm::default_for(inst.family));
            let run = colour(&inst, alg, trace, timing)?;
            if let Some(path) = save_colouring {
                emit_json(Some(&path), &ColouringFile::from_subsets(&run.colouring))?;
            }
            emit_json(out.as_deref(), &run.report)?;
            Ok(if run.report.valid { 0 } else { 1 })
        }
        Command::Exact { source, notion, out } => {
            emit_json(out.as_deref(), &exact(&source.resolve()?, notion)?)?;
            Ok(0)
        }
        Command::Bench { family, n, t, trials, seed, algorithm, out } => {
            let alg = algorithm.unwrap_or(Algorithm::default_for(family));
            let rows = bench(family, &n, t, trials, seed, alg)?;
            let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(Vec::new());
            w.write_record(["family", "n", "t", "seed", "algorithm", "tokens", "edges_of_G", "valid", "millis"])?;
            for row in &rows {
                w.serialize(row)?;
            }
            let bytes = w.into_inner().map_err(|e| CliError::Io { path: "<csv>".into(), source: e.into_error() })?;
            emit(out.as_deref(), &String::from_utf8(bytes).expect("CSV is UTF-8"))?;
            Ok(if rows.iter().all(|r| r.valid) { 0 } else { 1 })
        }
        Command::Verify { source, colouring, notion, unions, out } => {
            let inst = source.resolve()?;
            let file: ColouringFile = serde_json::from_str(&read(&colouring)?)?;
            let report = verify(&inst, &file, notion, unions)?;
            emit_json(out.as_deref(), &report)?;
            Ok(if report.valid { 0 } else { 1 })
        }
    }
}
