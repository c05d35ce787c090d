//! Command-line front end: generate component sequences and pairs, verify
//! the theorem catalogs, reproduce the worked examples, and emit
//! machine-readable reports.
//!
//! Every command prints a JSON run report (CSV for spectra on request).
//! Exit codes: 0 success, 1 verification mismatch, 2 invalid input,
//! 3 unresolved convention.

use std::time::Instant;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use seqforge_core::error::Error;

mod cyclo;
mod generate;
mod reproduce;
mod spectrum;
mod util;
mod verify;

pub use reproduce::FIXTURES_ENV;

pub const EXIT_OK: u8 = 0;
pub const EXIT_MISMATCH: u8 = 1;
pub const EXIT_INVALID: u8 = 2;
pub const EXIT_CONVENTION: u8 = 3;

#[derive(Debug, Parser)]
#[command(name = "seqforge", version, about = "Quaternary sequence construction and verification")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Generate a sequence or pair and write it in the fixture format.
    Generate {
        /// One of: legendre, twin_prime, gmw, mseq, cyclotomic_s1 .. cyclotomic_s6.
        family: String,
        /// Family parameter: p (legendre, twin_prime), k (gmw), m (mseq), n (cyclotomic).
        param: usize,
        /// Destination file; without it the fixture text only appears in the report.
        #[arg(long, short)]
        output: Option<String>,
        /// Primitive polynomial bits, most significant first (mseq, gmw).
        #[arg(long)]
        poly: Option<String>,
        /// Generator override (cyclotomic families).
        #[arg(long)]
        alpha: Option<usize>,
        /// JSON report (the default).
        #[arg(long)]
        json: bool,
    },
    /// Run every cataloged input of a theorem and check the predicted spectrum.
    Verify {
        /// Theorem id T2 .. T10.
        theorem: String,
        /// Parameter: m (T2, T3), p (T4, T5), k (T6), n (T7 .. T10).
        param: usize,
        /// Try every admissible e triple instead of the canonical one.
        #[arg(long)]
        sweep_e: bool,
        /// Generator override for the cyclotomic theorems.
        #[arg(long)]
        alpha: Option<usize>,
        /// Primitive polynomial override for T2/T3/T6.
        #[arg(long)]
        poly: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Rebuild a worked example from first principles and compare with the
    /// stored fixture.
    Reproduce {
        /// Example number: 1, 2 or 3.
        which: u8,
        #[arg(long)]
        json: bool,
    },
    /// Full autocorrelation spectrum of a sequence (inline text or a file path).
    Spectrum {
        input: String,
        /// Emit bare CSV rows instead of the JSON report.
        #[arg(long)]
        csv: bool,
        /// Force the alphabet (2 or 4); default infers from the symbols.
        #[arg(long)]
        alphabet: Option<u8>,
        /// Also write the spectrum (CSV) to this path.
        #[arg(long, short)]
        output: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Build a quartic cyclotomic system and report classes, (x, y) and the
    /// cyclotomic numbers.
    Cyclotomy {
        /// Odd prime congruent to 1 mod 4.
        n: usize,
        /// Generator override; default is the smallest generator.
        #[arg(long)]
        alpha: Option<usize>,
        /// Search generators for a convention: y-minus-one or x-unit.
        #[arg(long)]
        convention: Option<String>,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Clone)]
pub struct CommandOutcome {
    pub code: u8,
    pub stdout: String,
}

impl CommandOutcome {
    fn new(code: u8, stdout: String) -> Self {
        Self { code, stdout }
    }
}

/// Exit code for a domain error: convention and pair-resolution failures get
/// their own code, everything else is invalid input.
pub(crate) fn error_exit_code(err: &Error) -> u8 {
    match err {
        Error::ConventionUnreachable { .. }
        | Error::PairUnresolved { .. }
        | Error::PairConventionMismatch { .. } => EXIT_CONVENTION,
        _ => EXIT_INVALID,
    }
}

pub(crate) struct ReportBuilder {
    command: Vec<String>,
    started: Instant,
}

impl ReportBuilder {
    fn new(args: &[String]) -> Self {
        Self { command: args.to_vec(), started: Instant::now() }
    }

    /// Assemble the run report; `timing_ms` is the only nondeterministic field.
    fn finish(&self, inputs: Value, outputs: Value) -> Value {
        json!({
            "command": self.command,
            "version": env!("CARGO_PKG_VERSION"),
            "timing_ms": self.started.elapsed().as_millis() as u64,
            "inputs": inputs,
            "outputs": outputs,
        })
    }
}

fn render(report: &Value) -> String {
    let mut text = serde_json::to_string_pretty(report).expect("report serializes");
    text.push('\n');
    text
}

/// Parse and execute one invocation; never panics on bad input.
pub fn run(args: &[String]) -> CommandOutcome {
    let mut argv = vec!["seqforge".to_string()];
    argv.extend_from_slice(args);
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(err) => {
            // clap renders --help/--version through the error path too.
            let benign = matches!(
                err.kind(),
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion
            );
            let code = if benign { EXIT_OK } else { EXIT_INVALID };
            return CommandOutcome::new(code, err.to_string());
        }
    };
    let report = ReportBuilder::new(args);
    match cli.command {
        Command::Generate { family, param, output, poly, alpha, .. } => {
            generate::execute(&report, &family, param, output.as_deref(), poly.as_deref(), alpha)
        }
        Command::Verify { theorem, param, sweep_e, alpha, poly, .. } => {
            verify::execute(&report, &theorem, param, sweep_e, alpha, poly.as_deref())
        }
        Command::Reproduce { which, .. } => reproduce::execute(&report, which),
        Command::Spectrum { input, csv, alphabet, output, .. } => {
            spectrum::execute(&report, &input, csv, alphabet, output.as_deref())
        }
        Command::Cyclotomy { n, alpha, convention, .. } => {
            cyclo::execute(&report, n, alpha, convention.as_deref())
        }
    }
}
