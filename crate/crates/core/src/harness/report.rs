use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{Erratum, Status, Suite, SuiteConfig, SuiteResult, Table};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceRow {
    pub formula: String,
    pub suites: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub seed: u64,
    pub samples: usize,
    pub witness_budget: usize,
    pub suites: Vec<SuiteResult>,
    pub errata: Vec<Erratum>,
    pub traceability: Vec<TraceRow>,
}

impl Report {
    pub(super) fn new(cfg: &SuiteConfig, suites: Vec<SuiteResult>, chosen: &[&dyn Suite]) -> Self {
        let mut errata: BTreeMap<String, Erratum> = BTreeMap::new();
        for s in &suites {
            for e in &s.errata {
                errata.entry(e.id.clone()).or_insert_with(|| e.clone());
            }
        }
        let mut trace: BTreeMap<&str, Vec<String>> = BTreeMap::new();
        for s in chosen {
            for f in s.formulas() {
                trace.entry(f).or_default().push(s.id().to_string());
            }
        }
        Report {
            seed: cfg.seed,
            samples: cfg.samples,
            witness_budget: cfg.witness_budget,
            suites,
            errata: errata.into_values().collect(),
            traceability: trace
                .into_iter()
                .map(|(f, suites)| TraceRow { formula: f.to_string(), suites })
                .collect(),
        }
    }

    pub fn failures(&self) -> usize {
        self.suites.iter().map(|s| s.summary.fail).sum()
    }

    pub fn inconclusive(&self) -> usize {
        self.suites.iter().map(|s| s.summary.inconclusive).sum()
    }

    pub fn passed(&self) -> bool {
        self.failures() == 0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Json,
    Csv,
    Md,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "md" | "markdown" => Ok(Format::Md),
            other => Err(Error::Parse(format!("unknown format '{other}' (json, csv, md)"))),
        }
    }
}

pub fn render(report: &Report, format: Format) -> Result<String> {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(report).map_err(|e| Error::Parse(e.to_string()))?;
            s.push('\n');
            Ok(s)
        }
        Format::Csv => render_csv(report),
        Format::Md => Ok(render_md(report)),
    }
}

fn status_str(s: Status) -> &'static str {
    match s {
        Status::Pass => "pass",
        Status::Fail => "fail",
        Status::Inconclusive => "inconclusive",
    }
}

fn json_cell(v: &impl Serialize) -> String {
    serde_json::to_string(v).unwrap_or_default()
}

fn render_csv(report: &Report) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| Error::Parse(e.to_string());
    w.write_record(["suite", "check", "expected", "holds", "status", "method", "witness", "detail", "runtime_ms"])
        .map_err(io)?;
    for s in &report.suites {
        for c in &s.checks {
            let expected = json_cell(&c.expected);
            let method = json_cell(&c.method);
            w.write_record([
                s.suite.as_str(),
                c.id.as_str(),
                expected.trim_matches('"'),
                if c.holds { "true" } else { "false" },
                status_str(c.status),
                method.trim_matches('"'),
                &c.witness.as_ref().map(json_cell).unwrap_or_default(),
                c.detail.as_deref().unwrap_or(""),
                &c.runtime_ms.map(|t| t.to_string()).unwrap_or_default(),
            ])
            .map_err(io)?;
        }
    }
    let bytes = w.into_inner().map_err(|e| Error::Parse(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Error::Parse(e.to_string()))
}

fn md_escape(s: &str) -> String {
    s.replace('|', "\\|")
}

fn md_table(out: &mut String, headers: &[String], rows: &[Vec<String>]) {
    let _ = writeln!(out, "| {} |", headers.join(" | "));
    let _ = writeln!(out, "|{}|", headers.iter().map(|_| "---").collect::<Vec<_>>().join("|"));
    for r in rows {
        let cells: Vec<String> = r.iter().map(|c| md_escape(c)).collect();
        let _ = writeln!(out, "| {} |", cells.join(" | "));
    }
    out.push('\n');
}

fn render_md(report: &Report) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "# Verification report\n\nseed {}, samples {}, witness budget {}\n",
        report.seed, report.samples, report.witness_budget
    );
    let head = |xs: &[&str]| xs.iter().map(|s| s.to_string()).collect::<Vec<_>>();
    let summary: Vec<Vec<String>> = report
        .suites
        .iter()
        .map(|s| {
            vec![
                s.suite.clone(),
                s.summary.total.to_string(),
                s.summary.pass.to_string(),
                s.summary.fail.to_string(),
                s.summary.inconclusive.to_string(),
            ]
        })
        .collect();
    md_table(&mut out, &head(&["suite", "checks", "pass", "fail", "inconclusive"]), &summary);
    for s in &report.suites {
        let _ = writeln!(out, "## {}\n\n{}\n", s.suite, s.claim);
        for t in &s.tables {
            let _ = writeln!(out, "### {}\n", t.title);
            md_table(&mut out, &t.headers, &t.rows);
        }
        let rows: Vec<Vec<String>> = s
            .checks
            .iter()
            .map(|c| {
                vec![
                    c.id.clone(),
                    json_cell(&c.expected).trim_matches('"').to_string(),
                    status_str(c.status).to_string(),
                    json_cell(&c.method).trim_matches('"').to_string(),
                    c.witness.as_ref().map(json_cell).unwrap_or_default(),
                ]
            })
            .collect();
        md_table(&mut out, &head(&["check", "expected", "status", "method", "witness"]), &rows);
    }
    if !report.errata.is_empty() {
        let _ = writeln!(out, "## Errata\n");
        let rows: Vec<Vec<String>> = report
            .errata
            .iter()
            .map(|e| vec![e.id.clone(), e.statement.clone(), e.tabulated.clone(), e.computed.clone()])
            .collect();
        md_table(&mut out, &head(&["id", "statement", "tabulated", "computed"]), &rows);
    }
    let _ = writeln!(out, "## Traceability\n");
    let rows: Vec<Vec<String>> =
        report.traceability.iter().map(|t| vec![t.formula.clone(), t.suites.join(", ")]).collect();
    md_table(&mut out, &head(&["formula", "suites"]), &rows);
    out
}

/// Renders a single table, used by the `tables` command.
pub fn render_tables(tables: &[Table], format: Format) -> Result<String> {
    match format {
        Format::Json => serde_json::to_string_pretty(tables).map(|s| s + "\n").map_err(|e| Error::Parse(e.to_string())),
        Format::Md => {
            let mut out = String::new();
            for t in tables {
                let _ = writeln!(out, "## {}\n", t.title);
                md_table(&mut out, &t.headers, &t.rows);
            }
            Ok(out)
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            let io = |e: csv::Error| Error::Parse(e.to_string());
            for t in tables {
                let mut header = vec!["table".to_string()];
                header.extend(t.headers.iter().cloned());
                w.write_record(&header).map_err(io)?;
                for r in &t.rows {
                    let mut rec = vec![t.title.clone()];
                    rec.extend(r.iter().cloned());
                    w.write_record(&rec).map_err(io)?;
                }
            }
            let bytes = w.into_inner().map_err(|e| Error::Parse(e.to_string()))?;
            String::from_utf8(bytes).map_err(|e| Error::Parse(e.to_string()))
        }
    }
}
