//! Command-line front end for `resreg-core`.
//!
//! Exit status: 0 when every check passes, 1 when a mathematical check fails,
//! 2 for unreadable input or bad usage.

pub mod args;
mod checks;
mod commands;
mod input;
mod scan;

use std::path::PathBuf;

pub use args::{Cli, Command, CommonArgs, Emit, InputFormat, OutputFormat, Product, DEFAULT_TOL};
pub use checks::{CheckOutcome, CheckStatus};
pub use scan::{Finding, ScanSummary};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{}: {source}", path.display())]
    Io { path: PathBuf, source: std::io::Error },
    #[error(transparent)]
    Core(#[from] resreg_core::Error),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    CheckFailed,
    InputError,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Pass => 0,
            Status::CheckFailed => 1,
            Status::InputError => 2,
        }
    }

    fn from_passed(passed: bool) -> Self {
        if passed {
            Status::Pass
        } else {
            Status::CheckFailed
        }
    }
}

/// Rendered report plus the status it implies.
#[derive(Clone, Debug)]
pub struct Report {
    pub body: String,
    pub status: Status,
}

fn validate(args: &CommonArgs) -> Result<(), CliError> {
    if !(args.tol > 0.0 && args.tol.is_finite()) {
        return Err(CliError::Usage(format!("--tol must be positive, got {}", args.tol)));
    }
    if args.workers == Some(0) {
        return Err(CliError::Usage("--workers must be at least 1".into()));
    }
    Ok(())
}

pub fn run(cli: &Cli) -> Result<Report, CliError> {
    let common = cli.command.common();
    validate(common)?;
    match &cli.command {
        Command::Analyze(a) => commands::analyze(a),
        Command::Classify(a) => commands::classify(a),
        Command::Construct { common, emit } => commands::construct(common, *emit),
        Command::Verify(a) => commands::verify(a),
        Command::Scan(a) => scan::scan(a),
        Command::OracleCheck(a) => commands::oracle_check(a),
    }
}

/// Worker pool sized by `--workers`, defaulting to the available parallelism.
fn pool(args: &CommonArgs) -> Result<rayon::ThreadPool, CliError> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(w) = args.workers {
        builder = builder.num_threads(w);
    }
    builder.build().map_err(|e| CliError::Usage(format!("cannot start workers: {e}")))
}

fn to_json_string(v: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values always serialize");
    s.push('\n');
    s
}
