//! Command implementations for the `gl3cg` binary. Each command produces an
//! [`Outcome`] so tests can inspect output without spawning a process.

pub mod args;
pub mod compute;
pub mod query;
pub mod verify;

use std::fmt::Write as _;
use std::time::Instant;

use gl3cg::alphabet::multiplicity_basis;
use gl3cg::scalar::format_rational;
use gl3cg::threej::{pattern_triples, Engine, ThreeJQuery};
use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use args::{Cli, Command, Format, Method, TableArgs, ThreejArgs, VerifyArgs};
use compute::{evaluate, oracle_table, oracle_value, Record, SCHEMA_VERSION};
use query::{label_text, parse_label, parse_weight, pattern_text, pick_label, resolve_threej, CliError, CliResult, Triple};

#[derive(Debug, Default, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn failed(e: &CliError) -> Self {
        Outcome { code: e.exit_code(), stdout: String::new(), stderr: format!("error: {e}\n") }
    }
}

pub fn run(cli: &Cli) -> Outcome {
    let r = match &cli.command {
        Command::Threej(a) => cmd_threej(a),
        Command::Table(a) => cmd_table(a),
        Command::Verify(a) => cmd_verify(a),
    };
    r.unwrap_or_else(|e| Outcome::failed(&e))
}

fn csv_text(header: &[&str], rows: &[Vec<String>]) -> CliResult<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).map_err(|e| CliError::Internal(e.to_string()))?;
    for r in rows {
        w.write_record(r).map_err(|e| CliError::Internal(e.to_string()))?;
    }
    let bytes = w.into_inner().map_err(|e| CliError::Internal(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| CliError::Internal(e.to_string()))
}

fn csv_row(r: &Record) -> Vec<String> {
    let p = |x: [i64; 3]| x.map(|v| v.to_string()).join(",");
    vec![
        p(r.patterns.v),
        p(r.patterns.w),
        p(r.patterns.u),
        r.label.map(|x| x.to_string()).join(","),
        r.value.clone(),
    ]
}

pub fn cmd_threej(a: &ThreejArgs) -> CliResult<Outcome> {
    let resolved = resolve_threej(a)?;
    let verbose = a.out.verbose;
    let engine = Engine::new(a.out.normalization.mode());
    let mut eval = evaluate(&resolved.query, resolved.method, a.out.normalization, &engine)?;
    let mut stderr = String::new();
    if verbose {
        let r = &eval.record;
        let _ = writeln!(stderr, "query: {}", compute::describe(&resolved.query));
        let _ = writeln!(stderr, "lattice: {}", r.lattice_kind);
        let _ = writeln!(stderr, "varpi: {}", r.varpi.as_deref().unwrap_or("none"));
        if eval.cache_hit {
            let _ = writeln!(stderr, "cache: hit");
        }
        for (k, v) in r.timings.iter().flatten() {
            let _ = writeln!(stderr, "{k}: {v:.6}");
        }
    } else {
        eval.record.timings = None;
    }
    let stdout = match resolved.format {
        Format::Plain => format!("{}\n", eval.record.value),
        Format::Json => format!("{}\n", serde_json::to_string(&eval.record).expect("record serializes")),
        Format::Csv => csv_text(&["v_pattern", "w_pattern", "u_pattern", "label", "value"], &[csv_row(&eval.record)])?,
    };
    Ok(Outcome { code: 0, stdout, stderr })
}

#[derive(Serialize)]
struct TableRow {
    v_pattern: String,
    w_pattern: String,
    u_pattern: String,
    label: String,
    value: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    agree: Option<bool>,
}

#[derive(Serialize)]
struct TableDoc<'a> {
    schema_version: u32,
    weights: Triple<[i64; 3]>,
    method: &'a str,
    normalization: &'a str,
    rows: &'a [TableRow],
}

pub fn cmd_table(a: &TableArgs) -> CliResult<Outcome> {
    let (v, w, u) = (parse_weight(&a.v)?, parse_weight(&a.w)?, parse_weight(&a.u)?);
    let method = a.out.method.unwrap_or(Method::Formula);
    let format = a.out.format.unwrap_or(Format::Csv);
    let norm = a.out.normalization;
    let labels = match (&a.label, a.label_index) {
        (None, None) => multiplicity_basis(&v, &w, &u),
        (l, i) => vec![pick_label(&v, &w, &u, l.as_deref().map(parse_label).transpose()?, i)?],
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(a.jobs.max(1))
        .build()
        .map_err(|e| CliError::Internal(format!("worker pool: {e}")))?;
    let engine = Engine::new(norm.mode());
    let started = Instant::now();
    let mut rows = Vec::new();
    let mut disagreements = 0usize;
    for label in &labels {
        let probe = |p: &(gl3cg::GtPattern, gl3cg::GtPattern, gl3cg::GtPattern)| ThreeJQuery {
            v,
            w,
            u,
            p_v: p.0,
            p_w: p.1,
            p_u: p.2,
            label: *label,
        };
        let triples = pattern_triples(&v, &w, &u);
        let table = match (method, triples.first()) {
            (Method::Formula, _) | (_, None) => None,
            (_, Some(t)) => Some(oracle_table(&probe(t))?),
        };
        let values: Vec<CliResult<(gl3cg::Rational, Option<bool>)>> = pool.install(|| {
            triples
                .par_iter()
                .map(|t| {
                    let q = probe(t);
                    let formula = match method {
                        Method::Oracle => None,
                        _ => Some(engine.threej(&q)?.value),
                    };
                    let oracle = match &table {
                        Some(tab) => Some(oracle_value(tab, &q, norm.mode())?),
                        None => None,
                    };
                    Ok(match (formula, oracle) {
                        (Some(f), Some(o)) => {
                            let agree = f == o;
                            (f, Some(agree))
                        }
                        (Some(f), None) => (f, None),
                        (None, Some(o)) => (o, None),
                        (None, None) => unreachable!("at least one method runs"),
                    })
                })
                .collect()
        });
        for (t, r) in triples.iter().zip(values) {
            let (value, agree) = r?;
            if agree == Some(false) {
                disagreements += 1;
            }
            if a.nonzero_only && value.is_zero() {
                continue;
            }
            rows.push(TableRow {
                v_pattern: pattern_text(&t.0),
                w_pattern: pattern_text(&t.1),
                u_pattern: pattern_text(&t.2),
                label: label_text(label),
                value: format_rational(&value),
                agree,
            });
        }
    }
    let mut header = vec!["v_pattern", "w_pattern", "u_pattern", "label", "value"];
    if method == Method::Both {
        header.push("agree");
    }
    let stdout = match format {
        Format::Csv => {
            let body: Vec<Vec<String>> = rows
                .iter()
                .map(|r| {
                    let mut x = vec![r.v_pattern.clone(), r.w_pattern.clone(), r.u_pattern.clone(), r.label.clone(), r.value.clone()];
                    x.extend(r.agree.map(|b| b.to_string()));
                    x
                })
                .collect();
            csv_text(&header, &body)?
        }
        Format::Plain => {
            let mut s = String::new();
            for r in &rows {
                let _ = write!(s, "{} | {} | {} | {} | {}", r.v_pattern, r.w_pattern, r.u_pattern, r.label, r.value);
                if let Some(b) = r.agree {
                    let _ = write!(s, " | {}", if b { "agree" } else { "DISAGREE" });
                }
                s.push('\n');
            }
            s
        }
        Format::Json => {
            let doc = TableDoc {
                schema_version: SCHEMA_VERSION,
                weights: Triple { v: v.m, w: w.m, u: u.m },
                method: method.name(),
                normalization: norm.name(),
                rows: &rows,
            };
            format!("{}\n", serde_json::to_string(&doc).expect("table serializes"))
        }
    };
    let mut stderr = String::new();
    if a.out.verbose {
        let _ = writeln!(stderr, "{} rows, {} labels, {:.3}s", rows.len(), labels.len(), started.elapsed().as_secs_f64());
    }
    let code = if disagreements > 0 {
        let _ = writeln!(stderr, "error: {disagreements} formula/oracle disagreements");
        3
    } else {
        0
    };
    Ok(Outcome { code, stdout, stderr })
}

pub fn cmd_verify(a: &VerifyArgs) -> CliResult<Outcome> {
    let report = verify::run_verify(a.max_weight, a.suite, a.jobs)?;
    let mut stderr = String::new();
    if a.verbose {
        for s in &report.suites {
            let _ = writeln!(stderr, "{}: {:.3}s", verify::suite_name(s.suite), s.seconds);
        }
    }
    Ok(Outcome { code: if report.passed() { 0 } else { 1 }, stdout: report.render(), stderr })
}
