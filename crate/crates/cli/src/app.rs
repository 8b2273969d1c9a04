use std::io::{self, Read, Write};

use clap::{Args, Parser, Subcommand};
use serde_json::json;
use thiserror::Error;

use mzv_core::identities;
use mzv_core::numeric::{self, NumericConfig, DEFAULT_TOLERANCE};
use mzv_core::{Combination, Index, Report};

use crate::expr::{self, ParseError};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_PRECISION: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "mzv", version, about = "Exact harmonic-algebra identities and multiple zeta values")]
pub struct Cli {
    /// Emit structured JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    /// Print nothing on success; only the exit code reports the outcome.
    #[arg(long, global = true)]
    pub quiet: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate an expression to its canonical combination (reads stdin if EXPR is omitted).
    Expand { expr: Option<String> },
    /// Print S(K).
    SPoly { k: u32 },
    /// Exact identity checks.
    #[command(subcommand)]
    Verify(VerifyCommand),
    /// Numerical value of an expression under the zeta map (reads stdin if EXPR is omitted).
    Numeric {
        expr: Option<String>,
        #[command(flatten)]
        numeric: NumericArgs,
    },
    /// Numerical cross-checks.
    #[command(subcommand)]
    Check(CheckCommand),
}

#[derive(Debug, Subcommand)]
pub enum VerifyCommand {
    /// exp_*(A) exp_*(B) = 1 + sum (-1)^n [2,...,2] x^2n
    Main {
        #[arg(long)]
        order: usize,
    },
    /// exp_*(A) = 1 + sum (-1)^k S(k) x^k
    Sakata {
        #[arg(long)]
        order: usize,
    },
    /// sum (-1)^k S(k) * S(2n-k) = (-1)^n [2,...,2]
    Eq2 {
        #[arg(long)]
        n: u32,
    },
    /// sum (-1)^k S(k) * S(n-k) = 0 for odd n
    Odd {
        #[arg(long)]
        n: u32,
    },
    /// Binomial lemma for every k in 4..=KMAX
    Binomial {
        #[arg(long)]
        kmax: u32,
    },
    /// Predicted coefficients of the eq2 sum over all compositions of 2n
    Cases {
        #[arg(long)]
        n: u32,
    },
}

#[derive(Debug, Subcommand)]
pub enum CheckCommand {
    /// zeta(U * V) = zeta(U) zeta(V)
    Homomorphism {
        u: String,
        v: String,
        #[command(flatten)]
        numeric: NumericArgs,
    },
    /// zeta(2,...,2) against the Taylor coefficients of sin(pi x)/(pi x)
    Sine {
        #[arg(long)]
        nmax: u32,
        #[command(flatten)]
        numeric: NumericArgs,
    },
}

#[derive(Debug, Clone, Args)]
pub struct NumericArgs {
    /// Target absolute error.
    #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
    pub tol: f64,
    /// Cap on the outer summation length.
    #[arg(long)]
    pub max_terms: Option<u64>,
    /// Allow indices deeper than the default limit of 4.
    #[arg(long)]
    pub max_depth: Option<usize>,
}

impl NumericArgs {
    fn config(&self) -> Result<NumericConfig, CliError> {
        let defaults = NumericConfig::default();
        let cfg = NumericConfig::new(self.tol, self.max_terms.unwrap_or(defaults.max_terms()))?;
        Ok(cfg.with_max_depth(self.max_depth.unwrap_or(defaults.max_depth())))
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error: {0}")]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Core(#[from] mzv_core::Error),
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Io(#[from] io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(mzv_core::Error::Precision { .. }) => EXIT_PRECISION,
            _ => EXIT_USAGE,
        }
    }
}

struct Output<'a> {
    out: &'a mut dyn Write,
    json: bool,
    quiet: bool,
}

impl Output<'_> {
    fn emit(&mut self, text: impl FnOnce() -> String, structured: impl FnOnce() -> serde_json::Value) -> io::Result<()> {
        if self.quiet {
            return Ok(());
        }
        if self.json {
            writeln!(self.out, "{}", structured())
        } else {
            writeln!(self.out, "{}", text())
        }
    }

    fn report(&mut self, report: &Report) -> Result<i32, CliError> {
        self.emit(
            || report.to_string(),
            || serde_json::to_value(report).expect("report serializes"),
        )?;
        Ok(if report.passed() { EXIT_PASS } else { EXIT_MISMATCH })
    }
}

fn read_expression(arg: &Option<String>, input: &mut dyn Read) -> Result<String, CliError> {
    match arg {
        Some(text) => Ok(text.clone()),
        None => {
            let mut text = String::new();
            input.read_to_string(&mut text)?;
            if text.trim().is_empty() {
                return Err(CliError::Usage("no expression given".to_string()));
            }
            Ok(text)
        }
    }
}

fn combination_json(u: &Combination) -> serde_json::Value {
    json!({ "result": u.to_string(), "terms": u })
}

fn parse_index(text: &str) -> Result<Index, CliError> {
    Ok(text.parse::<Index>()?)
}

/// Runs one command, writing results to `out`. Returns the process exit code.
pub fn run(cli: &Cli, input: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let mut output = Output { out, json: cli.json, quiet: cli.quiet };
    match execute(&cli.command, input, &mut output) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn execute(command: &Command, input: &mut dyn Read, out: &mut Output<'_>) -> Result<i32, CliError> {
    match command {
        Command::Expand { expr } => {
            let text = read_expression(expr, input)?;
            let u = expr::evaluate(&text)?;
            out.emit(|| u.to_string(), || combination_json(&u))?;
            Ok(EXIT_PASS)
        }
        Command::SPoly { k } => {
            let s = identities::s_poly(*k);
            out.emit(
                || s.to_string(),
                || {
                    let mut v = combination_json(&s);
                    v["k"] = json!(k);
                    v
                },
            )?;
            Ok(EXIT_PASS)
        }
        Command::Verify(v) => {
            let report = match v {
                VerifyCommand::Main { order } => identities::verify_main(*order)?,
                VerifyCommand::Sakata { order } => identities::verify_sakata(*order)?,
                VerifyCommand::Eq2 { n } => identities::verify_eq2(*n)?,
                VerifyCommand::Odd { n } => identities::verify_odd_vanishing(*n)?,
                VerifyCommand::Binomial { kmax } => identities::verify_binomial(*kmax)?,
                VerifyCommand::Cases { n } => identities::verify_case_analysis(*n)?,
            };
            out.report(&report)
        }
        Command::Numeric { expr, numeric } => {
            let cfg = numeric.config()?;
            let text = read_expression(expr, input)?;
            let u = expr::evaluate(&text)?;
            let r = numeric::eval_combination(&u, &cfg)?;
            out.emit(
                || r.to_string(),
                || json!({ "expression": u.to_string(), "value": r.value, "error_bound": r.error_bound }),
            )?;
            Ok(EXIT_PASS)
        }
        Command::Check(CheckCommand::Homomorphism { u, v, numeric }) => {
            let cfg = numeric.config()?;
            let report = numeric::check_homomorphism(&parse_index(u)?, &parse_index(v)?, &cfg)?;
            out.report(&report)
        }
        Command::Check(CheckCommand::Sine { nmax, numeric }) => {
            let cfg = numeric.config()?;
            // the check itself asks for depth nmax
            let cfg = cfg.with_max_depth(cfg.max_depth().max(*nmax as usize));
            let report = numeric::check_sine_coefficients(*nmax, &cfg)?;
            out.report(&report)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str], stdin: &str) -> (i32, String, String) {
        let cli = Cli::try_parse_from(std::iter::once("mzv").chain(args.iter().copied())).unwrap();
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(&cli, &mut stdin.as_bytes(), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn expand_prints_canonical_form() {
        let (code, out, _) = run_args(&["expand", "[2]*[3]"], "");
        assert_eq!(code, EXIT_PASS);
        assert_eq!(out.trim(), "[2,3] + [3,2] + [5]");
    }

    #[test]
    fn expand_reads_stdin() {
        let (code, out, _) = run_args(&["expand"], "[1]*[1]\n");
        assert_eq!(code, EXIT_PASS);
        assert_eq!(out.trim(), "2*[1,1] + [2]");
    }

    #[test]
    fn parse_errors_exit_two() {
        let (code, out, err) = run_args(&["expand", "[2,0]"], "");
        assert_eq!(code, EXIT_USAGE);
        assert!(out.is_empty());
        assert!(err.contains("position 3"), "{err}");
        let (code, _, _) = run_args(&["expand"], "  ");
        assert_eq!(code, EXIT_USAGE);
    }

    #[test]
    fn s_poly_text() {
        let (_, out, _) = run_args(&["s-poly", "4"], "");
        assert_eq!(out.trim(), "1/4*[2,2] - 1/8*[4]");
    }

    #[test]
    fn quiet_suppresses_output() {
        let (code, out, _) = run_args(&["--quiet", "verify", "eq2", "--n", "2"], "");
        assert_eq!(code, EXIT_PASS);
        assert!(out.is_empty());
    }

    #[test]
    fn verify_parameter_errors_are_usage_errors() {
        assert_eq!(run_args(&["verify", "eq2", "--n", "0"], "").0, EXIT_USAGE);
        assert_eq!(run_args(&["verify", "odd", "--n", "4"], "").0, EXIT_USAGE);
        assert_eq!(run_args(&["verify", "main", "--order", "1"], "").0, EXIT_USAGE);
    }

    #[test]
    fn numeric_errors() {
        assert_eq!(run_args(&["numeric", "[2,1]"], "").0, EXIT_USAGE);
        assert_eq!(run_args(&["numeric", "[1,1,1,1,2]"], "").0, EXIT_USAGE);
        assert_eq!(run_args(&["numeric", "[1,1,1,1,2]", "--max-depth", "5"], "").0, EXIT_PASS);
        assert_eq!(run_args(&["numeric", "[1,2]", "--tol", "1e-9", "--max-terms", "100"], "").0, EXIT_PRECISION);
        assert_eq!(run_args(&["numeric", "[2]", "--tol", "0"], "").0, EXIT_USAGE);
    }
}
