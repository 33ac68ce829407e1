//! `seaweed`: command-line front end for meander computations.
//!
//! Exit codes: 0 success, 1 usage or parse error, 2 type is not Frobenius,
//! 3 unimodality counterexample found by `sweep`, 4 verification violation
//! found by `sweep`.

mod commands;
mod error;

use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Dot,
    Svg,
    Text,
}

#[derive(Debug, Parser)]
#[command(name = "seaweed", version, about = "Meanders, spectra and winding moves of type-A seaweed algebras")]
pub struct Cli {
    #[arg(long, value_enum, default_value = "json", global = true)]
    pub format: Format,
    /// Write output here instead of standard out.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Worker threads for `sweep`; defaults to available parallelism.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct TypeArg {
    /// Type symbol such as `2|4/1|2|3`.
    #[arg(value_name = "TYPE", allow_hyphen_values = true)]
    pub ty: String,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Parse and normalize a type symbol.
    Parse(TypeArg),
    /// Arcs, orientation and components of the meander.
    Meander {
        #[command(flatten)]
        ty: TypeArg,
        /// Draw oriented edges in dot/svg output.
        #[arg(long)]
        directed: bool,
    },
    /// Index from the component count 2C + P - 1.
    Index(TypeArg),
    /// Whether the meander is a single path.
    Frobenius(TypeArg),
    /// Spectrum of the principal element.
    Spectrum(TypeArg),
    /// Diagonal principal element.
    Principal {
        #[command(flatten)]
        ty: TypeArg,
        /// Reference vertex for the raw measures `D`.
        #[arg(long)]
        ref_vertex: Option<usize>,
    },
    /// Per-block contributions and sigma/tau sets.
    Blocks(TypeArg),
    /// Simple eigenvalues, cross-checked by two routes.
    Simple(TypeArg),
    /// Winding-down sequence, one JSON line per step.
    WindDown(TypeArg),
    /// Apply one winding-up move.
    WindUp {
        #[command(flatten)]
        ty: TypeArg,
        /// BlockCreation, RotationExpansion, PureExpansion or FlipUp.
        #[arg(value_name = "MOVE")]
        mv: String,
    },
    /// Exact linear-algebra cross-check.
    Oracle(TypeArg),
    /// Theorem and lemma checks, or the winding-up equations of one move.
    Verify {
        #[command(flatten)]
        ty: TypeArg,
        #[arg(long = "move", value_name = "MOVE")]
        mv: Option<String>,
    },
    /// Exhaustive verification over every composition pair.
    Sweep {
        #[arg(long, default_value_t = 2)]
        n_min: usize,
        #[arg(long, default_value_t = 10)]
        n_max: usize,
        #[arg(long, default_value_t = 8)]
        oracle_up_to: usize,
        /// Flat per-type table instead of per-n summaries.
        #[arg(long)]
        csv: bool,
    },
}

fn write_output(path: Option<&PathBuf>, text: &str) -> Result<(), CliError> {
    match path {
        Some(p) => File::create(p)
            .and_then(|mut f| f.write_all(text.as_bytes()))
            .map_err(|e| CliError::Io(format!("{}: {e}", p.display()))),
        None => {
            let mut stdout = io::stdout().lock();
            stdout.write_all(text.as_bytes()).and_then(|_| stdout.flush()).map_err(|e| CliError::Io(e.to_string()))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let err = CliError::Usage(e.to_string().trim_end().to_string());
            err.report(Format::Json);
            return ExitCode::from(err.exit_code());
        }
    };
    match commands::run(&cli) {
        Ok(out) => {
            if let Err(e) = write_output(cli.out.as_ref(), &out.text) {
                e.report(cli.format);
                return ExitCode::from(e.exit_code());
            }
            ExitCode::from(out.status)
        }
        Err(e) => {
            e.report(cli.format);
            ExitCode::from(e.exit_code())
        }
    }
}
