use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use resreg_core::Error as CoreError;

use crate::args::{CommonArgs, OutputFormat};
use crate::checks::evaluate;
use crate::input::load_many;
use crate::{pool, to_json_string, CliError, Report, Status};

/// A failed check on one corpus graph, keyed by its line number.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Finding {
    pub line: usize,
    pub check: String,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ScanSummary {
    pub total: usize,
    pub labels: BTreeMap<String, usize>,
    /// Failed bounds and identity checks.
    pub violations: Vec<Finding>,
    /// Bounds whose equality flag disagrees with their equality condition.
    pub mismatches: Vec<Finding>,
    /// Single-vertex graphs, which have no resistance profile.
    pub skipped: Vec<usize>,
    pub input_errors: Vec<Finding>,
    pub elapsed_ms: u128,
}

enum LineResult {
    Analysed { kind: &'static str, violations: Vec<Finding>, mismatches: Vec<Finding> },
    Skipped,
    Invalid(Finding),
}

fn scan_line(line: usize, g: &Result<resreg_core::Graph, CliError>, tol: f64) -> LineResult {
    let invalid = |check: &str, detail: String| LineResult::Invalid(Finding { line, check: check.into(), detail });
    let g = match g {
        Ok(g) => g,
        Err(e) => return invalid("PARSE", e.to_string()),
    };
    let eval = match evaluate(g, tol) {
        Ok(e) => e,
        Err(CliError::Core(CoreError::TooSmall(_))) => return LineResult::Skipped,
        Err(e) => return invalid("INPUT", e.to_string()),
    };
    let violations = eval
        .checks
        .iter()
        .filter(|c| c.failed())
        .map(|c| Finding { line, check: c.id.clone(), detail: c.detail.clone() })
        .collect();
    let mismatches = eval
        .bounds
        .mismatches()
        .map(|e| Finding {
            line,
            check: e.id.as_str().into(),
            detail: format!("equality {} but {} is {}", e.equality, e.condition_label, e.condition_holds),
        })
        .collect();
    LineResult::Analysed { kind: eval.profile.label.kind_name(), violations, mismatches }
}

impl ScanSummary {
    fn merge(results: Vec<(usize, LineResult)>, elapsed_ms: u128) -> Self {
        let mut s = ScanSummary {
            total: 0,
            labels: BTreeMap::new(),
            violations: Vec::new(),
            mismatches: Vec::new(),
            skipped: Vec::new(),
            input_errors: Vec::new(),
            elapsed_ms,
        };
        for (line, r) in results {
            match r {
                LineResult::Analysed { kind, violations, mismatches } => {
                    s.total += 1;
                    *s.labels.entry(kind.to_owned()).or_default() += 1;
                    s.violations.extend(violations);
                    s.mismatches.extend(mismatches);
                }
                LineResult::Skipped => s.skipped.push(line),
                LineResult::Invalid(f) => s.input_errors.push(f),
            }
        }
        s
    }

    pub fn status(&self) -> Status {
        if !self.input_errors.is_empty() {
            Status::InputError
        } else if self.violations.is_empty() && self.mismatches.is_empty() {
            Status::Pass
        } else {
            Status::CheckFailed
        }
    }

    fn text(&self) -> String {
        let mut out = format!("graphs: {}\n", self.total);
        for (label, count) in &self.labels {
            let _ = writeln!(out, "  {label}: {count}");
        }
        let _ = writeln!(out, "skipped: {}", self.skipped.len());
        let _ = writeln!(out, "bound violations: {}", self.violations.len());
        let _ = writeln!(out, "equality-condition mismatches: {}", self.mismatches.len());
        let _ = writeln!(out, "input errors: {}", self.input_errors.len());
        for f in self.violations.iter().chain(&self.mismatches).chain(&self.input_errors) {
            let _ = writeln!(out, "  line {}: {} {}", f.line, f.check, f.detail);
        }
        let _ = writeln!(out, "elapsed: {} ms", self.elapsed_ms);
        out
    }

    fn csv(&self) -> String {
        let mut out = String::from("line,check,kind,detail\n");
        let rows = [("violation", &self.violations), ("mismatch", &self.mismatches), ("input_error", &self.input_errors)];
        for (kind, findings) in rows {
            for f in findings {
                let _ = writeln!(out, "{},{},{kind},\"{}\"", f.line, f.check, f.detail.replace('"', "'"));
            }
        }
        out
    }
}

pub fn scan(args: &CommonArgs) -> Result<Report, CliError> {
    if args.product.is_some() {
        return Err(CliError::Usage("scan does not take --product".into()));
    }
    let start = Instant::now();
    let graphs = load_many(args)?;
    let tol = args.tol;
    let results: Vec<(usize, LineResult)> = pool(args)?
        .install(|| graphs.par_iter().map(|(line, g)| (*line, scan_line(*line, g, tol))).collect());
    let summary = ScanSummary::merge(results, start.elapsed().as_millis());
    let body = match args.output {
        OutputFormat::Json => to_json_string(&serde_json::to_value(&summary).expect("summary serializes")),
        OutputFormat::Csv => summary.csv(),
        OutputFormat::Text => summary.text(),
    };
    Ok(Report { body, status: summary.status() })
}
