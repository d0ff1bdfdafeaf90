//! `euler`: compute Euler numbers and polynomials, evaluate their Fourier
//! series and odd-denominator power sums, and run the verification suite.

mod commands;
mod render;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use euler_identities::verify::Suite;

use crate::render::OutputFormat;

#[derive(Parser, Debug)]
#[command(
    name = "euler",
    version,
    about = "Euler numbers, polynomials and their identities"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Plain)]
    format: OutputFormat,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Table of Euler numbers E_0..E_N.
    Numbers {
        #[arg(long = "max", value_name = "N")]
        max: usize,
    },
    /// Coefficients of the Euler polynomial E_M(x), constant term first.
    Poly { m: usize },
    /// Exact value of E_M(X); X may be "p/q", an integer or a decimal.
    Eval { m: usize, x: String },
    /// Evaluate E_M(X) from its Fourier series.
    FourierEval(FourierEvalArgs),
    /// Σ_{n≥0} (2n+1)^(-S), with the exact closed form when S is even.
    Lambda {
        s: f64,
        #[arg(long, default_value_t = 1e-10)]
        tolerance: f64,
    },
    /// Second-kind Stirling number S(M, N).
    Stirling {
        m: usize,
        n: usize,
        #[arg(long, value_enum, default_value_t = StirlingMethod::Recurrence)]
        method: StirlingMethod,
    },
    /// Run the identity checks.
    Verify {
        #[arg(long, default_value = "all", value_parser = parse_suite)]
        suite: Suite,
        /// Upper index bound (each suite clamps it to its own cap).
        #[arg(long = "max", value_name = "M")]
        max: Option<usize>,
    },
}

#[derive(Args, Debug)]
#[command(group(clap::ArgGroup::new("mode").required(true).args(["tolerance", "terms"])))]
struct FourierEvalArgs {
    m: usize,
    #[arg(allow_hyphen_values = true)]
    x: f64,
    /// Guarantee |value - E_M(X)| ≤ T (needs M ≥ 1).
    #[arg(long)]
    tolerance: Option<f64>,
    /// Sum a fixed number of paired terms.
    #[arg(long)]
    terms: Option<u64>,
    /// Accept X outside [0, 1), continuing E_M antiperiodically.
    #[arg(long)]
    extend: bool,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum StirlingMethod {
    Recurrence,
    Multinomial,
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse()
}

/// Failure modes mapped to exit codes.
#[derive(Debug)]
pub enum CliError {
    /// Bad input or an unsupported request: exit 2.
    Usage(String),
    /// An identity expected to hold did not: exit 1.
    VerificationFailed,
    Io(std::io::Error),
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

impl From<euler_identities::Error> for CliError {
    fn from(e: euler_identities::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    let result = commands::run(cli.command, cli.format, &mut out);
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::VerificationFailed) => {
            eprintln!("euler: verification failed");
            ExitCode::from(1)
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("euler: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Io(e)) if e.kind() == std::io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(CliError::Io(e)) => {
            eprintln!("euler: {e}");
            ExitCode::from(2)
        }
    }
}
