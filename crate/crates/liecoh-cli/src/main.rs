//! `liecoh` — exact Lie algebra cohomology and the seven-term sequence.
//!
//! Exit codes: 0 success (for `sequence`: all exactness verdicts hold),
//! 1 validation or computation failure, 2 usage or parse errors.

use std::fs;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use liecoh::field::FieldSpec;
use liecoh::problem::{self, AnyProblem};
use liecoh::report::{self, Format};
use liecoh::seven::SevenTermContext;
use liecoh::{ce, Error};

#[derive(Parser)]
#[command(name = "liecoh", version, about = "Exact Lie algebra cohomology in low degrees")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct CommonOpts {
    /// Coefficient field: `q` or `fp:P` (overrides the file's directive)
    #[arg(long)]
    field: Option<String>,
    /// Output format: `text` or `json` (default from LIECOH_FORMAT, then text)
    #[arg(long)]
    format: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Parse a problem file and check all Lie axioms
    Validate {
        file: String,
        #[command(flatten)]
        opts: CommonOpts,
    },
    /// Compute dim H^N(g, M) with canonical representatives
    Cohomology {
        file: String,
        /// Cohomology degree (0..=3)
        #[arg(long)]
        degree: usize,
        #[command(flatten)]
        opts: CommonOpts,
    },
    /// Assemble the seven-term sequence and verify exactness
    Sequence {
        file: String,
        #[command(flatten)]
        opts: CommonOpts,
    },
    /// Emit the canonical Heisenberg problem file for g_m
    Heisenberg {
        /// Number of (x_i, y_i) pairs
        #[arg(long)]
        m: usize,
        /// Write the problem file here instead of stdout
        #[arg(long)]
        emit: Option<String>,
        #[command(flatten)]
        opts: CommonOpts,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(CliError { code, message }) => {
            eprintln!("error: {message}");
            code
        }
    }
}

struct CliError {
    code: ExitCode,
    message: String,
}

fn usage_error(message: impl Into<String>) -> CliError {
    CliError {
        code: ExitCode::from(2),
        message: message.into(),
    }
}

fn data_error(message: impl Into<String>) -> CliError {
    CliError {
        code: ExitCode::from(1),
        message: message.into(),
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> CliError {
        match e {
            Error::Parse { .. } | Error::NotPrime(_) => usage_error(e.to_string()),
            _ => data_error(e.to_string()),
        }
    }
}

/// Runs a block generically over whichever field the problem carries.
macro_rules! dispatch {
    ($problem:expr, $p:ident => $body:block) => {
        match $problem {
            AnyProblem::Q($p) => $body,
            AnyProblem::Fp($p) => $body,
        }
    };
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    match cli.command {
        Command::Validate { file, opts } => {
            let (problem, format) = load(&file, &opts)?;
            dispatch!(problem, p => {
                print!("{}", report::render_validate(&p, format));
            });
            Ok(ExitCode::SUCCESS)
        }
        Command::Cohomology { file, degree, opts } => {
            if degree > 3 {
                return Err(usage_error("only degrees 0..=3 are supported"));
            }
            let (problem, format) = load(&file, &opts)?;
            dispatch!(problem, p => {
                let h = ce::cohomology_space(&p.algebra, &p.module, degree);
                print!("{}", report::render_cohomology(&p, degree, &h, format));
            });
            Ok(ExitCode::SUCCESS)
        }
        Command::Sequence { file, opts } => {
            let (problem, format) = load(&file, &opts)?;
            let all_exact;
            dispatch!(problem, p => {
                let ideal = p.ideal.clone().ok_or_else(|| {
                    data_error("the sequence command needs an `ideal` section")
                })?;
                let ctx = SevenTermContext::new(&p.algebra, &ideal, &p.module)
                    .map_err(|e| data_error(e.to_string()))?;
                let rep = ctx.assemble_and_verify();
                all_exact = rep.all_exact();
                print!("{}", report::render_sequence(&p, &rep, format));
            });
            if all_exact {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::from(1))
            }
        }
        Command::Heisenberg { m, emit, opts } => {
            if m == 0 {
                return Err(usage_error("--m must be at least 1"));
            }
            let spec = parse_field_flag(&opts)?.unwrap_or(FieldSpec::Rationals);
            let text = match spec {
                FieldSpec::Rationals => {
                    problem::emit(&problem::heisenberg_problem(liecoh::Rationals, m))
                }
                FieldSpec::PrimeField(p) => {
                    let f = liecoh::PrimeField::new(p).map_err(CliError::from)?;
                    problem::emit(&problem::heisenberg_problem(f, m))
                }
            };
            match emit {
                Some(path) => fs::write(&path, &text)
                    .map_err(|e| data_error(format!("cannot write {path}: {e}")))?,
                None => print!("{text}"),
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn parse_field_flag(opts: &CommonOpts) -> Result<Option<FieldSpec>, CliError> {
    match &opts.field {
        None => Ok(None),
        Some(s) => FieldSpec::parse_flag(s)
            .map(Some)
            .map_err(|e| usage_error(e.to_string())),
    }
}

fn resolve_format(opts: &CommonOpts) -> Result<Format, CliError> {
    let chosen = opts
        .format
        .clone()
        .or_else(|| std::env::var("LIECOH_FORMAT").ok());
    match chosen {
        None => Ok(Format::Text),
        Some(s) => {
            Format::parse_flag(&s).ok_or_else(|| usage_error(format!("bad format `{s}`")))
        }
    }
}

fn load(path: &str, opts: &CommonOpts) -> Result<(AnyProblem, Format), CliError> {
    let format = resolve_format(opts)?;
    let field = parse_field_flag(opts)?;
    let text =
        fs::read_to_string(path).map_err(|e| usage_error(format!("cannot read {path}: {e}")))?;
    let problem = problem::parse_problem(&text, field)?;
    Ok((problem, format))
}
