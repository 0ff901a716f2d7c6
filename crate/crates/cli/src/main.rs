//! Command-line planner for Dubins paths on the unit sphere.

mod commands;
mod format;
mod query;

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use sphere_dubins::SolverTolerances;

use query::Overrides;

#[derive(Debug)]
pub enum CliError {
    /// Unreadable or malformed input.
    Input(String),
    /// Well-formed input that violates a domain invariant.
    Domain(String),
    Io(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Input(_) | CliError::Io(_) => 1,
            CliError::Domain(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Input(m) | CliError::Domain(m) | CliError::Io(m) => m,
        }
    }
}

const EXIT_NO_PATH: u8 = 2;
const EXIT_VERIFY_FAILED: u8 = 4;

#[derive(Parser)]
#[command(
    name = "sphere-dubins",
    version,
    about = "Shortest Dubins paths on the unit sphere"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Plan a path and write the JSON report.
    Plan(QueryArgs),
    /// Sample the best path and write a CSV polyline.
    Sample(QueryArgs),
    /// Run seeded round trips through every path family.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct QueryArgs {
    /// Query document (JSON); reads stdin when omitted.
    #[arg(long, value_name = "PATH")]
    input: Option<PathBuf>,
    /// Output file; writes stdout when omitted.
    #[arg(long, value_name = "PATH")]
    output: Option<PathBuf>,
    /// Turning radius, overriding the document.
    #[arg(long, value_name = "FLOAT", allow_negative_numbers = true)]
    r: Option<f64>,
    /// Samples per segment, overriding the document.
    #[arg(long, value_name = "INT")]
    samples: Option<usize>,
    /// Residual tolerance for accepting a candidate.
    #[arg(long, value_name = "FLOAT", allow_negative_numbers = true)]
    residual_tol: Option<f64>,
}

#[derive(Args)]
struct VerifyArgs {
    /// First seed of the sweep.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Instances per family and radius.
    #[arg(long, default_value_t = 100)]
    trials: u64,
    /// Single turning radius; defaults to 0.2, 0.5, 1/√2 and 0.8.
    #[arg(long, value_name = "FLOAT", allow_negative_numbers = true)]
    r: Option<f64>,
    /// Residual tolerance for accepting a candidate.
    #[arg(long, value_name = "FLOAT", allow_negative_numbers = true)]
    residual_tol: Option<f64>,
    /// Output file; writes stdout when omitted.
    #[arg(long, value_name = "PATH")]
    output: Option<PathBuf>,
}

fn read_input(path: Option<&Path>) -> Result<String, CliError> {
    match path {
        Some(p) => {
            fs::read_to_string(p).map_err(|e| CliError::Input(format!("{}: {e}", p.display())))
        }
        None => io::read_to_string(io::stdin()).map_err(|e| CliError::Input(format!("stdin: {e}"))),
    }
}

fn write_output(path: Option<&Path>, text: &str) -> Result<(), CliError> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| CliError::Io(format!("{}: {e}", p.display()))),
        None => io::stdout()
            .lock()
            .write_all(text.as_bytes())
            .map_err(|e| CliError::Io(format!("stdout: {e}"))),
    }
}

fn load(args: &QueryArgs) -> Result<query::Query, CliError> {
    let text = read_input(args.input.as_deref())?;
    let flags = Overrides {
        r: args.r,
        samples: args.samples,
        residual_tol: args.residual_tol,
    };
    query::parse(&text, &flags)
}

fn run(cli: Cli) -> Result<u8, CliError> {
    match cli.command {
        Command::Plan(args) => {
            let (json, found) = commands::plan_report(&load(&args)?)?;
            write_output(args.output.as_deref(), &json)?;
            if !found {
                eprintln!("no path family reaches the target");
                return Ok(EXIT_NO_PATH);
            }
            Ok(0)
        }
        Command::Sample(args) => match commands::sample_csv(&load(&args)?)? {
            Some(csv) => {
                write_output(args.output.as_deref(), &csv)?;
                Ok(0)
            }
            None => {
                eprintln!("no path family reaches the target");
                Ok(EXIT_NO_PATH)
            }
        },
        Command::Verify(args) => {
            let mut tolerances = SolverTolerances::default();
            if let Some(t) = args.residual_tol {
                tolerances.residual_tol = t;
            }
            let settings = commands::VerifySettings {
                seed: args.seed,
                trials: args.trials,
                radii: args
                    .r
                    .map_or_else(|| commands::DEFAULT_RADII.to_vec(), |r| vec![r]),
                tolerances,
            };
            let (text, failures) = commands::verify(&settings)?;
            write_output(args.output.as_deref(), &text)?;
            Ok(if failures.is_empty() {
                0
            } else {
                EXIT_VERIFY_FAILED
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.code())
        }
    }
}
