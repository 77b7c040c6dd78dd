//! Named verification suites behind a [`Suite`] trait and a registry.
//!
//! Each suite expands into independent checks that run in parallel and are
//! merged in check-id order, so a report depends only on the configuration.
//! Wall-clock timings are recorded only when asked for.

mod checks;
mod report;
mod suites;

use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use checks::{CheckMethod, CheckRecord, CheckSet, Expect, Outcome, Status};
pub use report::{render, render_tables, Format, Report, TraceRow};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteConfig {
    pub seed: u64,
    pub samples: usize,
    pub witness_budget: usize,
    #[serde(skip)]
    pub timings: bool,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig { seed: 0, samples: 20, witness_budget: 1000, timings: false }
    }
}

/// A discrepancy between a tabulated value and the value recomputed here.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Erratum {
    pub id: String,
    pub statement: String,
    pub tabulated: String,
    pub computed: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Table {
    pub title: String,
    pub headers: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

/// What a suite contributes besides its checks.
#[derive(Default)]
pub struct SuiteBody {
    pub checks: CheckSet,
    pub errata: Vec<Erratum>,
    pub tables: Vec<Table>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub pass: usize,
    pub fail: usize,
    pub inconclusive: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteResult {
    pub suite: String,
    pub claim: String,
    pub seed: u64,
    pub samples: usize,
    pub witness_budget: usize,
    pub summary: Summary,
    pub checks: Vec<CheckRecord>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub errata: Vec<Erratum>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub tables: Vec<Table>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub runtime_ms: Option<u64>,
}

impl SuiteResult {
    pub fn passed(&self) -> bool {
        self.summary.fail == 0
    }

    pub fn check(&self, id: &str) -> Option<&CheckRecord> {
        self.checks.iter().find(|c| c.id == id)
    }
}

pub trait Suite: Send + Sync {
    /// Registry key, as accepted by `--suite`.
    fn id(&self) -> &'static str;
    /// One-line statement of what is verified.
    fn claim(&self) -> &'static str;
    /// Displayed formulas exercised by the suite, for the traceability matrix.
    fn formulas(&self) -> &'static [&'static str];
    fn build(&self, cfg: &SuiteConfig) -> SuiteBody;
}

pub struct SuiteRegistry {
    suites: Vec<Box<dyn Suite>>,
}

impl SuiteRegistry {
    pub fn empty() -> Self {
        SuiteRegistry { suites: Vec::new() }
    }

    pub fn builtin() -> Self {
        let mut r = SuiteRegistry::empty();
        for s in suites::builtin() {
            r.register(s);
        }
        r
    }

    /// Adds a suite; a suite with the same id is replaced.
    pub fn register(&mut self, suite: Box<dyn Suite>) {
        self.suites.retain(|s| s.id() != suite.id());
        self.suites.push(suite);
    }

    pub fn ids(&self) -> Vec<&'static str> {
        self.suites.iter().map(|s| s.id()).collect()
    }

    pub fn get(&self, id: &str) -> Result<&dyn Suite> {
        self.suites
            .iter()
            .find(|s| s.id() == id)
            .map(|s| s.as_ref())
            .ok_or_else(|| Error::UnknownSuite(id.to_string()))
    }

    pub fn run(&self, id: &str, cfg: &SuiteConfig) -> Result<SuiteResult> {
        Ok(run_suite(self.get(id)?, cfg))
    }

    /// Runs one suite, or every suite for `"all"`, in registry order.
    pub fn run_selection(&self, selection: &str, cfg: &SuiteConfig) -> Result<Report> {
        let chosen: Vec<&dyn Suite> = if selection == "all" {
            self.suites.iter().map(|s| s.as_ref()).collect()
        } else {
            vec![self.get(selection)?]
        };
        let results: Vec<SuiteResult> = chosen.par_iter().map(|s| run_suite(*s, cfg)).collect();
        Ok(Report::new(cfg, results, &chosen))
    }
}

pub fn run_suite(suite: &dyn Suite, cfg: &SuiteConfig) -> SuiteResult {
    let start = Instant::now();
    let body = suite.build(cfg);
    let checks = body.checks.run(cfg.timings);
    let mut summary = Summary { total: checks.len(), ..Summary::default() };
    for c in &checks {
        match c.status {
            Status::Pass => summary.pass += 1,
            Status::Fail => summary.fail += 1,
            Status::Inconclusive => summary.inconclusive += 1,
        }
    }
    SuiteResult {
        suite: suite.id().to_string(),
        claim: suite.claim().to_string(),
        seed: cfg.seed,
        samples: cfg.samples,
        witness_budget: cfg.witness_budget,
        summary,
        checks,
        errata: body.errata,
        tables: body.tables,
        runtime_ms: cfg.timings.then(|| start.elapsed().as_millis() as u64),
    }
}
