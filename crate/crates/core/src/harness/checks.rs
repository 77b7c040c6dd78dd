use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::Result;
use crate::identity::{IdentityReport, Method};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    Inconclusive,
}

/// The truth value a check is expected to have.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Expect {
    Holds,
    /// Refutation of an "only if" direction: passes only with a witness.
    FailsWithWitness,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckMethod {
    /// Decided on a basis or by a finite exact computation.
    Exact,
    ExactPolarized,
    Sampled,
    WitnessSearch,
}

impl From<Method> for CheckMethod {
    fn from(m: Method) -> Self {
        match m {
            Method::ExactPolarized => CheckMethod::ExactPolarized,
            Method::Sampled => CheckMethod::Sampled,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Outcome {
    pub holds: bool,
    pub method: CheckMethod,
    pub witness: Option<Value>,
    pub detail: Option<String>,
}

impl Outcome {
    pub fn exact(holds: bool) -> Self {
        Outcome { holds, method: CheckMethod::Exact, witness: None, detail: None }
    }

    pub fn sampled(holds: bool) -> Self {
        Outcome { method: CheckMethod::Sampled, ..Outcome::exact(holds) }
    }

    pub fn from_report(r: &IdentityReport) -> Self {
        Outcome {
            holds: r.holds,
            method: r.method.into(),
            witness: r.witness.as_ref().map(to_value),
            detail: None,
        }
    }

    pub fn with_method(mut self, m: CheckMethod) -> Self {
        self.method = m;
        self
    }

    pub fn with_witness(mut self, w: impl Serialize) -> Self {
        self.witness = Some(to_value(&w));
        self
    }

    pub fn with_detail(mut self, d: impl Into<String>) -> Self {
        self.detail = Some(d.into());
        self
    }

    /// Conjunction; the first failing part supplies witness and detail.
    pub fn all(parts: impl IntoIterator<Item = Outcome>) -> Self {
        let mut method = CheckMethod::Exact;
        for p in parts {
            if !p.holds {
                return p;
            }
            method = p.method;
        }
        Outcome::exact(true).with_method(method)
    }
}

fn to_value(v: &impl Serialize) -> Value {
    serde_json::to_value(v).expect("report types serialize")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub id: String,
    pub expected: Expect,
    pub holds: bool,
    pub status: Status,
    pub method: CheckMethod,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub runtime_ms: Option<u64>,
}

type Thunk = Box<dyn FnOnce() -> Result<Outcome> + Send>;

/// Deferred checks keyed by id.
#[derive(Default)]
pub struct CheckSet {
    items: Vec<(String, Expect, Thunk)>,
}

impl CheckSet {
    pub fn new() -> Self {
        CheckSet::default()
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn holds(&mut self, id: impl Into<String>, f: impl FnOnce() -> Result<Outcome> + Send + 'static) {
        self.items.push((id.into(), Expect::Holds, Box::new(f)));
    }

    pub fn refutes(&mut self, id: impl Into<String>, f: impl FnOnce() -> Result<Outcome> + Send + 'static) {
        self.items.push((id.into(), Expect::FailsWithWitness, Box::new(f)));
    }

    pub fn expect(
        &mut self,
        id: impl Into<String>,
        positive: bool,
        f: impl FnOnce() -> Result<Outcome> + Send + 'static,
    ) {
        if positive {
            self.holds(id, f)
        } else {
            self.refutes(id, f)
        }
    }

    pub fn run(self, timings: bool) -> Vec<CheckRecord> {
        let mut out: Vec<CheckRecord> = self
            .items
            .into_par_iter()
            .map(|(id, expected, f)| {
                let start = Instant::now();
                let (outcome, errored) = match f() {
                    Ok(o) => (o, false),
                    Err(e) => (Outcome::exact(false).with_detail(format!("error: {e}")), true),
                };
                let status = match expected {
                    _ if errored => Status::Fail,
                    Expect::Holds if outcome.holds => Status::Pass,
                    Expect::Holds => Status::Fail,
                    Expect::FailsWithWitness if outcome.holds => Status::Fail,
                    Expect::FailsWithWitness if outcome.witness.is_some() => Status::Pass,
                    Expect::FailsWithWitness => Status::Inconclusive,
                };
                CheckRecord {
                    id,
                    expected,
                    holds: outcome.holds,
                    status,
                    method: outcome.method,
                    witness: outcome.witness,
                    detail: outcome.detail,
                    runtime_ms: timings.then(|| start.elapsed().as_millis() as u64),
                }
            })
            .collect();
        out.sort_by(|a, b| a.id.cmp(&b.id));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    #[test]
    fn statuses() {
        let mut c = CheckSet::new();
        c.holds("b", || Ok(Outcome::exact(true)));
        c.holds("a", || Ok(Outcome::exact(false)));
        c.refutes("c", || Ok(Outcome::exact(false).with_witness(1)));
        c.refutes("d", || Ok(Outcome::exact(false)));
        c.refutes("e", || Err(Error::NoLeftUnit));
        let r = c.run(false);
        let st: Vec<_> = r.iter().map(|c| (c.id.as_str(), c.status)).collect();
        assert_eq!(
            st,
            [
                ("a", Status::Fail),
                ("b", Status::Pass),
                ("c", Status::Pass),
                ("d", Status::Inconclusive),
                ("e", Status::Fail)
            ]
        );
        assert!(r.iter().all(|c| c.runtime_ms.is_none()));
    }
}
