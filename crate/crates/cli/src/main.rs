//! Command line surface for the engine: one-off computations, batch
//! verification sweeps, conjecture testing, and crystal-graph export.

mod compute;
mod config;
mod conjecture;
mod export;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use config::Config;

/// Failure classes and their exit codes. Verification failures are 1,
/// unparsable input is 2, mathematically invalid requests are 3, and
/// blown resource limits are 4. Conjecture counterexamples are findings,
/// not failures, and exit 0.
#[derive(Debug)]
pub enum Failure {
    Verify(String),
    Parse(String),
    Domain(String),
    Resource(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Verify(_) => 1,
            Failure::Parse(_) => 2,
            Failure::Domain(_) => 3,
            Failure::Resource(_) => 4,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Verify(m) | Failure::Parse(m) | Failure::Domain(m) | Failure::Resource(m) => {
                m
            }
        }
    }
}

impl From<stanley_core::Error> for Failure {
    fn from(e: stanley_core::Error) -> Failure {
        use stanley_core::Error;
        match e {
            Error::ResourceLimit { .. } => Failure::Resource(e.to_string()),
            Error::Parse(_)
            | Error::BadWindow(_)
            | Error::IndexOutOfRange { .. }
            | Error::BadTableau(_)
            | Error::BadFactorization(_) => Failure::Parse(e.to_string()),
            other => Failure::Domain(other.to_string()),
        }
    }
}

/// Rendering target shared by the subcommands that print results.
#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Output {
    Text,
    Json,
}

#[derive(Parser)]
#[command(
    name = "stanley",
    version,
    about = "Stanley symmetric polynomials of the symmetric and hyperoctahedral groups"
)]
struct Cli {
    /// Key=value file supplying default rank/k/max-length/cap/jobs.
    #[arg(long, global = true, value_name = "PATH")]
    config: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute one generating function for one group element.
    Compute(compute::ComputeArgs),
    /// Re-check a family of identities over a range of elements.
    Verify(verify::VerifyArgs),
    /// Test the signed-tableau Schur expansions and report findings.
    Conjecture(conjecture::ConjectureArgs),
    /// Export the crystal component of a tableau as DOT or JSON.
    #[command(name = "crystal-export")]
    CrystalExport(export::ExportArgs),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cfg = match cli.config.as_deref().map(Config::load).transpose() {
        Ok(cfg) => cfg.unwrap_or_default(),
        Err(failure) => return report(failure),
    };
    let outcome = match cli.command {
        Command::Compute(args) => compute::run(args, &cfg),
        Command::Verify(args) => verify::run(args, &cfg),
        Command::Conjecture(args) => conjecture::run(args, &cfg),
        Command::CrystalExport(args) => export::run(args, &cfg),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => report(failure),
    }
}

fn report(failure: Failure) -> ExitCode {
    eprintln!("error: {}", failure.message());
    ExitCode::from(failure.code())
}
