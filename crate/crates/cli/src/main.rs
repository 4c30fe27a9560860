//! `hombrax`: construct and verify Hom-Yang-Baxter solutions from the shell.
//!
//! Exit codes: 0 when every check passes, 1 when a check fails or an oracle
//! finds an unclassified solution, 2 on bad arguments or unreadable input.

mod construct;
mod io;
mod run;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use io::{CliError, Output};

#[derive(Parser)]
#[command(
    name = "hombrax",
    version,
    about = "Exact Hom-Yang-Baxter constructions and checks"
)]
struct Cli {
    /// Write output here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Emit a gallery object as JSON.
    Construct {
        #[command(subcommand)]
        target: construct::Target,
    },
    /// Check identities on a JSON input and print PASS/FAIL lines.
    Verify(verify::VerifyArgs),
    /// Run a classification oracle.
    Classify {
        #[command(subcommand)]
        target: run::ClassifyTarget,
    },
    /// Permutation operators `B^γ` and tensor-power solutions.
    Braid {
        #[command(subcommand)]
        action: run::BraidAction,
    },
    /// Yetter-Drinfel'd modules.
    Yd {
        #[command(subcommand)]
        action: run::YdAction,
    },
}

/// Where to read JSON input from.
#[derive(Args, Clone, Debug)]
pub struct InputArg {
    /// JSON input file; `-` or absent reads standard input.
    #[arg(long, short)]
    input: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum AlgebraName {
    Heisenberg,
    Sl2star,
    Sl2,
}

fn configure_threads() -> Result<(), CliError> {
    let Ok(v) = std::env::var("HOMBRAX_THREADS") else {
        return Ok(());
    };
    let n: usize = v.trim().parse().ok().filter(|&n| n > 0).ok_or_else(|| {
        CliError::usage(format!(
            "HOMBRAX_THREADS must be a positive integer, got `{v}`"
        ))
    })?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| CliError::usage(e.to_string()))
}

fn dispatch(cli: Cli) -> Result<bool, CliError> {
    configure_threads()?;
    let mut out = Output::new(cli.out.as_deref())?;
    let ok = match cli.command {
        Command::Construct { target } => construct::run(target, &mut out)?,
        Command::Verify(args) => verify::run(args, &mut out)?,
        Command::Classify { target } => run::classify(target, &mut out)?,
        Command::Braid { action } => run::braid(action, &mut out)?,
        Command::Yd { action } => run::yd(action, &mut out)?,
    };
    out.finish()?;
    Ok(ok)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}
