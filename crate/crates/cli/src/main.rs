//! `ava`: build absolute-valued algebras from JSON specs, check identities,
//! classify, and run the verification suites.
//!
//! Exit codes: 0 success, 1 a check or hypothesis failed, 2 usage or parse
//! error.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use ava_core::algebra::AlgSpec;
use ava_core::classify::{classify, invariant_fingerprint, ClassifyOptions};
use ava_core::error::Error;
use ava_core::harness::{render, render_tables, Format, SuiteConfig, SuiteRegistry};
use ava_core::identity::{check_quadratic_criterion, check_sextic_exact, check_sextic_sampled};
use clap::{Args, Parser, Subcommand};
use serde_json::json;

#[derive(Parser)]
#[command(name = "ava", version, about = "Absolute-valued algebras with a left unit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run one verification suite, or `all`.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        /// Record per-check and per-suite wall-clock times.
        #[arg(long)]
        timings: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Classify the algebra described by a spec.
    Classify {
        #[command(flatten)]
        input: SpecInput,
        #[command(flatten)]
        common: Common,
    },
    /// Print the isomorphism invariants of an algebra.
    Fingerprint {
        #[command(flatten)]
        input: SpecInput,
        #[command(flatten)]
        common: Common,
    },
    /// Check x²e = x² and the sextic identity.
    Identity {
        #[command(flatten)]
        input: SpecInput,
        /// Decide the sextic identity by full polarization instead of sampling.
        #[arg(long)]
        exact_sextic: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Regenerate the fixed-subspace and classification tables.
    Tables {
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Args)]
struct Common {
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 20)]
    samples: usize,
    /// json, csv or md.
    #[arg(long, default_value = "json")]
    format: String,
    /// Write to this file instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct SpecInput {
    /// Path to a JSON algebra spec.
    #[arg(long)]
    spec: Option<PathBuf>,
    /// The JSON algebra spec itself.
    #[arg(long)]
    inline: Option<String>,
}

/// A command failure and the exit code it maps to.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse(_) | Error::UnknownSuite(_) => 2,
            _ => 1,
        };
        Failure { code, message: e.to_string() }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: 2, message: message.into() }
}

impl Common {
    fn format(&self) -> Result<Format, Failure> {
        self.format.parse().map_err(Failure::from)
    }

    fn json_only(&self, command: &str) -> Result<(), Failure> {
        match self.format()? {
            Format::Json => Ok(()),
            _ => Err(usage(format!("{command} only supports --format json"))),
        }
    }

    fn emit(&self, text: &str) -> Result<(), Failure> {
        match &self.out {
            Some(path) => fs::write(path, text).map_err(|e| usage(format!("cannot write {}: {e}", path.display()))),
            None => {
                print!("{text}");
                Ok(())
            }
        }
    }

    fn emit_json(&self, value: &serde_json::Value) -> Result<(), Failure> {
        let text = serde_json::to_string_pretty(value).map_err(|e| usage(e.to_string()))?;
        self.emit(&(text + "\n"))
    }
}

impl SpecInput {
    fn load(&self) -> Result<AlgSpec, Failure> {
        let text = match (&self.spec, &self.inline) {
            (Some(path), _) => fs::read_to_string(path).map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?,
            (None, Some(text)) => text.clone(),
            (None, None) => return Err(usage("one of --spec or --inline is required")),
        };
        serde_json::from_str(&text).map_err(|e| usage(format!("parse error: {e}")))
    }
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Verify { suite, timings, common } => {
            let format = common.format()?;
            let cfg = SuiteConfig { seed: common.seed, samples: common.samples, timings, ..SuiteConfig::default() };
            let report = SuiteRegistry::builtin().run_selection(&suite, &cfg)?;
            common.emit(&render(&report, format)?)?;
            Ok(if report.passed() { 0 } else { 1 })
        }
        Command::Classify { input, common } => {
            common.json_only("classify")?;
            let spec = input.load()?;
            let opts = ClassifyOptions { samples: common.samples, seed: common.seed };
            match classify(&spec, opts) {
                Ok(c) => {
                    common.emit_json(&serde_json::to_value(&c).map_err(|e| usage(e.to_string()))?)?;
                    Ok(if c.witnesses.iter().all(|w| w.verified) { 0 } else { 1 })
                }
                Err(Error::HypothesesViolated { check }) => {
                    common.emit_json(&json!({ "error": "hypotheses violated", "check": check }))?;
                    Ok(1)
                }
                Err(e) => Err(e.into()),
            }
        }
        Command::Fingerprint { input, common } => {
            common.json_only("fingerprint")?;
            let a = input.load()?.build()?;
            let fp = invariant_fingerprint(&a, common.samples, common.seed)?;
            common.emit_json(&json!(fp))?;
            Ok(0)
        }
        Command::Identity { input, exact_sextic, common } => {
            common.json_only("identity")?;
            let a = input.load()?.build()?;
            let quadratic = check_quadratic_criterion(&a)?;
            let sextic = if exact_sextic {
                check_sextic_exact(&a)
            } else {
                check_sextic_sampled(&a, common.samples, common.seed)
            };
            let ok = quadratic.holds && sextic.holds;
            common.emit_json(&json!({ "quadratic_criterion": quadratic, "sextic": sextic }))?;
            Ok(if ok { 0 } else { 1 })
        }
        Command::Tables { common } => {
            let format = common.format()?;
            let cfg = SuiteConfig { seed: common.seed, samples: common.samples, ..SuiteConfig::default() };
            let result = SuiteRegistry::builtin().run("classification_table", &cfg)?;
            let text = match format {
                Format::Json => {
                    let v = json!({ "tables": result.tables, "errata": result.errata });
                    serde_json::to_string_pretty(&v).map_err(|e| usage(e.to_string()))? + "\n"
                }
                _ => render_tables(&result.tables, format)?,
            };
            common.emit(&text)?;
            Ok(if result.passed() { 0 } else { 1 })
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
