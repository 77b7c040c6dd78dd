//! The built-in suite catalog.

mod duplication;
mod isometry_sets;
mod left_unit;
mod octonion;
mod table;

use serde_json::json;

use super::{CheckMethod, Outcome, Suite, SuiteConfig};
use crate::algebra::{AlgSpec, NamedCheck};
use crate::arith::{Oct, Quat};
use crate::error::Result;
use crate::identity::{check_condition, find_witness, Condition, WitnessSearch};
use crate::isometry::{realize, IsoSpec};
use crate::sample::Sampler;

pub(super) fn builtin() -> Vec<Box<dyn Suite>> {
    vec![
        Box::new(isometry_sets::IsometrySets),
        Box::new(left_unit::InnerProductLaws),
        Box::new(left_unit::SquareIdentities),
        Box::new(left_unit::CriterionSexticAgreement),
        Box::new(left_unit::QuaternionIsotopes),
        Box::new(octonion::StarOctTransport),
        Box::new(octonion::OneSidedStarOct),
        Box::new(duplication::ConditionEquivalence),
        Box::new(duplication::ConditionLemmas),
        Box::new(duplication::NormalFamilies),
        Box::new(table::ClassificationTable),
    ]
}

fn sampler(cfg: &SuiteConfig, salt: &str) -> Sampler {
    Sampler::salted(cfg.seed, salt)
}

/// Number of seeded parameter choices for the parametric lemma checks.
const SEEDED_OTHERS: usize = 5;

fn named_checks(checks: &[NamedCheck]) -> Outcome {
    Outcome::all(checks.iter().map(|c| {
        let o = Outcome::sampled(c.holds).with_detail(c.id.clone());
        match &c.witness {
            Some(w) => o.with_witness(w),
            None => o,
        }
    }))
}

/// Conjunction of duplication conditions; a failing condition is backed by a
/// rational witness point when the search finds one.
fn conditions(phi: &IsoSpec, psi: &IsoSpec, conds: &[Condition], cfg: &SuiteConfig) -> Result<Outcome> {
    let (p, q) = (realize(phi)?, realize(psi)?);
    for &c in conds {
        if !check_condition(c, &p, &q)?.holds {
            let search = find_witness(c, &p, &q, cfg.witness_budget, cfg.seed)?;
            let o = Outcome::exact(false)
                .with_method(CheckMethod::WitnessSearch)
                .with_detail(format!("{} fails", c.id()));
            return Ok(match search {
                WitnessSearch::Found { .. } => o.with_witness(json!({ "condition": c.id(), "point": search })),
                _ => o,
            });
        }
    }
    Ok(Outcome::exact(true).with_method(CheckMethod::ExactPolarized))
}

const ALL: [Condition; 3] = crate::identity::CONDITIONS;

fn h_left(a: &Quat) -> AlgSpec {
    AlgSpec::isotope(1, a, &Quat::one())
}

fn star_h_left(a: &Quat) -> AlgSpec {
    AlgSpec::isotope(2, a, &Quat::one())
}

/// Positive roster followed by seeded negative examples: `ℍ(a,1)`,
/// `*ℍ(a,1)` and `*𝕆ₗ(a,1)` with generic units `a`.
fn negative_examples(cfg: &SuiteConfig) -> Vec<(String, AlgSpec)> {
    let mut s = sampler(cfg, "negative-examples");
    let mut out = Vec::new();
    for k in 0..4 {
        out.push((format!("H(a,1)#{k}"), h_left(&s.generic_unit_quat())));
    }
    for k in 0..3 {
        out.push((format!("*H(a,1)#{k}"), star_h_left(&s.generic_unit_quat())));
    }
    for k in 0..3 {
        let a: Oct = s.generic_unit_oct();
        out.push((format!("*O_l(a,1)#{k}"), AlgSpec::star_oct_left(&a)));
    }
    out
}
