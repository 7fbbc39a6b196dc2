use std::fmt::Write as _;

use rayon::prelude::*;
use serde_json::{json, Value};

use resreg_core::graph::{encode_graph6, format_edge_list};
use resreg_core::linalg::format_rational;
use resreg_core::oracle::oracle_resistance;
use resreg_core::resistance::{profile, resistance_matrix, ClassLabel};
use resreg_core::Graph;

use crate::args::{CommonArgs, Emit, OutputFormat};
use crate::checks::{equality_check, evaluate, product_checks, CheckOutcome, CheckStatus};
use crate::input::{load_many, load_single};
use crate::{pool, to_json_string, CliError, Report, Status};

fn graph_name(g: &Graph) -> String {
    g.label().map_or_else(|| format!("graph(n={})", g.order()), str::to_owned)
}

fn label_json(label: &ClassLabel) -> Value {
    json!({
        "kind": label.kind_name(),
        "k": label.resistance_constant().or(label.pseudo_constant()).map(format_rational),
    })
}

fn label_text(label: &ClassLabel) -> String {
    match label.resistance_constant().or(label.pseudo_constant()) {
        Some(k) => format!("{} k={}", label.kind_name(), format_rational(k)),
        None => label.kind_name().to_owned(),
    }
}

fn checks_text(out: &mut String, checks: &[CheckOutcome]) {
    for c in checks {
        let status = match c.status {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "FAIL",
            CheckStatus::Skip => "skip",
        };
        let _ = writeln!(out, "  {:<22} {status:<4} {}", c.id, c.detail);
    }
}

fn spectrum_text(out: &mut String, groups: &[(f64, usize)], energy: f64) {
    let parts: Vec<String> = groups.iter().map(|(v, m)| format!("{v:.12} (x{m})")).collect();
    let _ = writeln!(out, "spectrum: {}", parts.join(", "));
    let _ = writeln!(out, "energy: {energy:.12}");
}

pub fn analyze(args: &CommonArgs) -> Result<Report, CliError> {
    let loaded = load_single(args)?;
    let g = &loaded.graph;
    let eval = evaluate(g, args.tol)?;
    let mut checks = eval.checks.clone();
    checks.push(equality_check(&eval.bounds));
    let passed = !checks.iter().any(CheckOutcome::failed);
    let body = match args.output {
        OutputFormat::Json => {
            let mut prof = eval.profile.to_json();
            let rows: Vec<Vec<String>> =
                (0..g.order()).map(|i| eval.profile.r.row(i).iter().map(format_rational).collect()).collect();
            prof["resistance"] = json!(rows);
            prof["kirchhoff_f64"] = json!(resreg_core::linalg::to_f64(&eval.profile.kf));
            to_json_string(&json!({
                "graph": graph_name(g),
                "profile": prof,
                "spectrum": eval.spectrum.to_json(),
                "bounds": eval.bounds.to_json()["bounds"],
                "checks": checks,
            }))
        }
        OutputFormat::Csv => eval.profile.r.to_csv(),
        OutputFormat::Text => {
            let mut out = String::new();
            let _ = writeln!(out, "graph: {} (n={}, m={})", graph_name(g), g.order(), g.size());
            let _ = writeln!(out, "label: {}", label_text(&eval.profile.label));
            let _ = writeln!(out, "kirchhoff: {}", format_rational(&eval.profile.kf));
            let rows: Vec<String> = eval.profile.rdeg.iter().map(format_rational).collect();
            let _ = writeln!(out, "row sums: {}", rows.join(" "));
            spectrum_text(&mut out, &eval.spectrum.groups, eval.spectrum.energy);
            let _ = writeln!(out, "bounds:");
            for e in &eval.bounds.entries {
                let _ = writeln!(
                    out,
                    "  {:<22} {:.12} <= {:.12}  holds={} equality={} {}={}",
                    e.id.as_str(),
                    e.lhs,
                    e.rhs,
                    e.holds,
                    e.equality,
                    e.condition_label.replace(' ', "_"),
                    e.condition_holds
                );
            }
            let _ = writeln!(out, "checks:");
            checks_text(&mut out, &checks);
            out
        }
    };
    Ok(Report { body, status: Status::from_passed(passed) })
}

pub fn classify(args: &CommonArgs) -> Result<Report, CliError> {
    let g = load_single(args)?.graph;
    let label = profile(&g)?.label;
    let body = match args.output {
        OutputFormat::Json => to_json_string(&json!({"graph": graph_name(&g), "label": label_json(&label)})),
        OutputFormat::Csv => {
            let k = label.resistance_constant().or(label.pseudo_constant()).map(format_rational).unwrap_or_default();
            format!("graph,kind,k\n{},{},{k}\n", graph_name(&g), label.kind_name())
        }
        OutputFormat::Text => format!("{}: {}\n", graph_name(&g), label_text(&label)),
    };
    Ok(Report { body, status: Status::Pass })
}

pub fn construct(args: &CommonArgs, emit: Emit) -> Result<Report, CliError> {
    let g = load_single(args)?.graph;
    let encoded = match emit {
        Emit::Graph6 => format!("{}\n", encode_graph6(&g)),
        Emit::Edgelist => format_edge_list(&g),
    };
    let body = match args.output {
        OutputFormat::Json => to_json_string(&json!({
            "graph": graph_name(&g),
            "n": g.order(),
            "m": g.size(),
            "encoding": match emit { Emit::Graph6 => "graph6", Emit::Edgelist => "edgelist" },
            "data": encoded,
        })),
        OutputFormat::Csv => {
            let mut out = String::from("u,v\n");
            for (u, v) in g.edges() {
                let _ = writeln!(out, "{},{}", u + 1, v + 1);
            }
            out
        }
        OutputFormat::Text => encoded,
    };
    Ok(Report { body, status: Status::Pass })
}

pub fn verify(args: &CommonArgs) -> Result<Report, CliError> {
    let loaded = load_single(args)?;
    let g = &loaded.graph;
    let eval = evaluate(g, args.tol)?;
    let mut checks = product_checks(&loaded, &eval, args.tol);
    checks.extend(eval.checks.iter().cloned());
    checks.push(equality_check(&eval.bounds));
    let passed = !checks.iter().any(CheckOutcome::failed);
    let body = match args.output {
        OutputFormat::Json => to_json_string(&json!({
            "graph": graph_name(g),
            "label": label_json(&eval.profile.label),
            "spectrum": eval.spectrum.to_json(),
            "checks": checks,
            "passed": passed,
        })),
        OutputFormat::Csv => {
            let mut out = String::from("check,status,detail\n");
            for c in &checks {
                let status = serde_json::to_value(c.status).expect("status serializes");
                let _ = writeln!(out, "{},{},\"{}\"", c.id, status.as_str().unwrap_or(""), c.detail.replace('"', "'"));
            }
            out
        }
        OutputFormat::Text => {
            let mut out = String::new();
            let _ = writeln!(out, "graph: {} (n={}, m={})", graph_name(g), g.order(), g.size());
            let _ = writeln!(out, "label: {}", label_text(&eval.profile.label));
            spectrum_text(&mut out, &eval.spectrum.groups, eval.spectrum.energy);
            let _ = writeln!(out, "checks:");
            checks_text(&mut out, &checks);
            let _ = writeln!(out, "{}", if passed { "all checks passed" } else { "some checks FAILED" });
            out
        }
    };
    Ok(Report { body, status: Status::from_passed(passed) })
}

enum OracleOutcome {
    Agree,
    Differ,
    Error(String),
}

pub fn oracle_check(args: &CommonArgs) -> Result<Report, CliError> {
    let mut graphs = load_many(args)?;
    if let Some(want) = args.line {
        graphs.retain(|(line, _)| *line == want);
    }
    if let Some(product) = args.product {
        for (_, g) in &mut graphs {
            let built = match g {
                Ok(inner) => crate::input::apply_product(inner, product),
                Err(_) => continue,
            };
            *g = built;
        }
    }
    let outcomes: Vec<(usize, OracleOutcome)> = pool(args)?.install(|| {
        graphs
            .par_iter()
            .map(|(line, g)| {
                let outcome = match g {
                    Err(e) => OracleOutcome::Error(e.to_string()),
                    Ok(g) => match (resistance_matrix(g), oracle_resistance(g)) {
                        (Ok(a), Ok(b)) if a == b => OracleOutcome::Agree,
                        (Ok(_), Ok(_)) => OracleOutcome::Differ,
                        (Err(e), _) | (_, Err(e)) => OracleOutcome::Error(e.to_string()),
                    },
                };
                (*line, outcome)
            })
            .collect()
    });
    let agree = outcomes.iter().filter(|(_, o)| matches!(o, OracleOutcome::Agree)).count();
    let differ: Vec<usize> =
        outcomes.iter().filter(|(_, o)| matches!(o, OracleOutcome::Differ)).map(|(l, _)| *l).collect();
    let errors: Vec<(usize, String)> = outcomes
        .iter()
        .filter_map(|(l, o)| match o {
            OracleOutcome::Error(e) => Some((*l, e.clone())),
            _ => None,
        })
        .collect();
    let status = if !errors.is_empty() {
        Status::InputError
    } else if !differ.is_empty() {
        Status::CheckFailed
    } else {
        Status::Pass
    };
    let body = match args.output {
        OutputFormat::Json => to_json_string(&json!({
            "checked": outcomes.len(),
            "agree": agree,
            "mismatches": differ,
            "errors": errors.iter().map(|(l, e)| json!({"line": l, "error": e})).collect::<Vec<_>>(),
        })),
        OutputFormat::Csv => {
            let mut out = String::from("line,result\n");
            for (line, o) in &outcomes {
                let r = match o {
                    OracleOutcome::Agree => "agree".to_owned(),
                    OracleOutcome::Differ => "ORACLE_MISMATCH".to_owned(),
                    OracleOutcome::Error(e) => format!("\"error: {}\"", e.replace('"', "'")),
                };
                let _ = writeln!(out, "{line},{r}");
            }
            out
        }
        OutputFormat::Text => {
            let mut out = format!("checked {}: {agree} agree\n", outcomes.len());
            for line in &differ {
                let _ = writeln!(out, "line {line}: ORACLE_MISMATCH");
            }
            for (line, e) in &errors {
                let _ = writeln!(out, "line {line}: {e}");
            }
            out
        }
    };
    Ok(Report { body, status })
}
