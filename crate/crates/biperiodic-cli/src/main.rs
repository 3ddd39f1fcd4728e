//! `biperiodic` — exact tables, closed-form verification, generating
//! functions, and norms for bi-periodic recurrences lifted to quaternions
//! and octonions.
//!
//! Exit codes: `0` when the requested output was produced and every
//! gating comparison agreed, `1` when at least one gating comparison
//! disagreed, `2` for usage or parameter errors.

mod commands;
mod config;
mod output;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;

use biperiodic::Rational;
use clap::{Args, Parser, Subcommand};

use config::FileConfig;
use output::OutputFormat;

pub const EXIT_OK: u8 = 0;
pub const EXIT_MISMATCH: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

/// An error message paired with the process exit code it should produce.
#[derive(Debug)]
pub struct CliError {
    message: String,
    code: u8,
}

impl CliError {
    pub fn usage(message: impl Into<String>) -> CliError {
        CliError {
            message: message.into(),
            code: EXIT_USAGE,
        }
    }

    pub fn io(err: std::io::Error) -> CliError {
        CliError {
            message: format!("output error: {err}"),
            code: EXIT_USAGE,
        }
    }
}

#[derive(Parser)]
#[command(
    name = "biperiodic",
    version,
    about = "Exact bi-periodic sequences over quaternions and octonions: \
             term tables, closed-form verification, generating functions, \
             and norms"
)]
struct Cli {
    /// Defaults file with one key=value per line; flags override it.
    #[arg(long, global = true, value_name = "PATH")]
    config: Option<PathBuf>,

    /// Output format (`--format` is accepted as an alias).
    #[arg(long = "output", alias = "format", global = true, value_enum)]
    output: Option<OutputFormat>,

    /// Write output to this file instead of stdout.
    #[arg(long = "out-path", global = true, value_name = "PATH")]
    out_path: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print terms and their quaternion/octonion lifts over an index range
    Table(TableArgs),
    /// Check the algebra tables and every closed form; exit 1 on mismatch
    Verify(VerifyArgs),
    /// Expand a generating function and compare coefficients with terms
    Genfunc(GenfuncArgs),
    /// Evaluate quaternion norms against their closed form
    Norm(NormArgs),
}

/// The sequence parameters, each an exact rational such as `2` or `-1/3`.
#[derive(Args, Debug, Clone)]
pub struct ParamFlags {
    /// Multiplier applied when the new index is even.
    #[arg(long, allow_hyphen_values = true)]
    a: Option<Rational>,

    /// Multiplier applied when the new index is odd.
    #[arg(long, allow_hyphen_values = true)]
    b: Option<Rational>,

    /// Term at index 0.
    #[arg(long, allow_hyphen_values = true)]
    w0: Option<Rational>,

    /// Term at index 1.
    #[arg(long, allow_hyphen_values = true)]
    w1: Option<Rational>,
}

#[derive(Args)]
pub struct TableArgs {
    #[command(flatten)]
    params: ParamFlags,

    /// First index of the table (may be negative).
    #[arg(long, allow_negative_numbers = true)]
    n_min: Option<i64>,

    /// Last index of the table.
    #[arg(long, allow_negative_numbers = true)]
    n_max: Option<i64>,
}

#[derive(Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    params: ParamFlags,

    /// Cap every index sweep at this value.
    #[arg(long, allow_negative_numbers = true)]
    n_max: Option<i64>,

    /// Comma-separated offsets for the offset-product sweeps
    /// (the quaternion sweep keeps only the even ones).
    #[arg(long, value_delimiter = ',')]
    r_values: Option<Vec<i64>>,

    /// Explicit grid of parameter points, written as
    /// `a,b,w0,w1;a,b,w0,w1;...`; replaces the built-in grid and cannot
    /// be combined with the single-point parameter flags.
    #[arg(long, allow_hyphen_values = true, value_name = "POINTS")]
    grid: Option<String>,
}

#[derive(Args)]
pub struct GenfuncArgs {
    #[command(flatten)]
    params: ParamFlags,

    /// Highest degree of the expansion.
    #[arg(long)]
    order: Option<usize>,

    /// Expand the octonion generating function instead of the
    /// quaternion one.
    #[arg(long)]
    octonion: bool,
}

#[derive(Args)]
pub struct NormArgs {
    #[command(flatten)]
    params: ParamFlags,

    /// Last index to evaluate.
    #[arg(long, allow_negative_numbers = true)]
    n_max: Option<i64>,
}

fn run(cli: &Cli) -> Result<u8, CliError> {
    let file = match &cli.config {
        Some(path) => FileConfig::load(path)?,
        None => FileConfig::default(),
    };
    let format = match cli.output {
        Some(format) => format,
        None => match file.get("output") {
            Some(name) => OutputFormat::parse_name(name).ok_or_else(|| {
                CliError::usage(format!(
                    "config value output={name:?} is invalid: expected json or csv"
                ))
            })?,
            None => OutputFormat::Json,
        },
    };
    let out_path = match &cli.out_path {
        Some(path) => Some(path.clone()),
        None => file.get("out-path").map(PathBuf::from),
    };
    let out_path = out_path.as_deref();
    match &cli.command {
        Command::Table(args) => commands::run_table(args, &file, format, out_path),
        Command::Verify(args) => commands::run_verify(args, &file, format, out_path),
        Command::Genfunc(args) => commands::run_genfunc(args, &file, format, out_path),
        Command::Norm(args) => commands::run_norm(args, &file, format, out_path),
    }
}

fn main() -> ExitCode {
    // A defect in a multiplication table would silently poison every
    // product, so it is checked on every start. Commands keep running so
    // that `verify` can report the defect as a failing row.
    if let Err(message) = biperiodic::hypercomplex::validate_tables() {
        eprintln!("warning: multiplication-table validation failed: {message}");
    }
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {}", err.message);
            ExitCode::from(err.code)
        }
    }
}
