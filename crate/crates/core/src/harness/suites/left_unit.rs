//! Identities of left-unit algebras, the criterion against the sextic
//! identity, and the four-dimensional isotopes.

use serde_json::json;

use super::{h_left, named_checks, negative_examples, sampler, star_h_left, SuiteConfig};
use crate::algebra::{
    left_unit_inner_product_checks, left_unit_product_table, left_unit_square_identities, AlgSpec, NamedCheck,
    ROSTER,
};
use crate::arith::{q, Quat, Rat, VecQ};
use crate::error::{Error, Result};
use crate::harness::{CheckMethod, CheckSet, Outcome, Suite, SuiteBody};
use crate::identity::{check_linearizations, check_quadratic_criterion, check_sextic_exact};
use crate::sample::Sampler;

fn roster_specs() -> Vec<(String, AlgSpec)> {
    ROSTER.iter().map(|n| (n.as_str().to_string(), AlgSpec::named(*n))).collect()
}

fn orthogonal_sample(s: &mut Sampler, e: &VecQ) -> VecQ {
    let mut x = s.rat_vec(e.len());
    x.axpy(&-(e.dot(&x) / e.norm2()), e);
    x
}

/// Folds per-sample identity lists into one outcome per identity id.
fn merge_by_id(runs: Vec<Vec<NamedCheck>>) -> Vec<NamedCheck> {
    let mut merged: Vec<NamedCheck> = Vec::new();
    for run in runs {
        for c in run {
            match merged.iter_mut().find(|m| m.id == c.id) {
                Some(m) if !m.holds => {}
                Some(m) => *m = c,
                None => merged.push(c),
            }
        }
    }
    merged
}

pub struct InnerProductLaws;

impl Suite for InnerProductLaws {
    fn id(&self) -> &'static str {
        "theorem2"
    }

    fn claim(&self) -> &'static str {
        "every absolute-valued algebra with left unit e satisfies ⟨xy|z⟩ = ⟨y|x*z⟩ and x*(xy) = ‖x‖²y with x* = 2⟨e|x⟩e − x"
    }

    fn formulas(&self) -> &'static [&'static str] {
        &["x* = 2⟨e|x⟩e − x", "⟨xy|z⟩ = ⟨y|x*z⟩", "x*(xy) = ‖x‖²y", "x(xe) = 2⟨e|x⟩xe − ‖x‖²e"]
    }

    fn build(&self, cfg: &SuiteConfig) -> SuiteBody {
        let mut checks = CheckSet::new();
        let cfg = *cfg;
        for (name, spec) in roster_specs().into_iter().chain(negative_examples(&cfg)) {
            checks.holds(format!("{name}/inner_product_laws"), move || {
                let a = spec.build()?;
                Ok(named_checks(&left_unit_inner_product_checks(&a, cfg.samples, cfg.seed)?))
            });
        }
        SuiteBody { checks, ..SuiteBody::default() }
    }
}

pub struct SquareIdentities;

impl Suite for SquareIdentities {
    fn id(&self) -> &'static str {
        "lemma4_5"
    }

    fn claim(&self) -> &'static str {
        "identities for xe, x² and x²x at sampled x, homogenized; the second group uses x ⊥ e and x²e = x²"
    }

    fn formulas(&self) -> &'static [&'static str] {
        &[
            "(xe)e = x",
            "[xe, x] = ⟨e|x⟩[e, x − xe]",
            "x²x = −‖x‖²xe",
            "x²x² = −‖x‖⁴e + 2⟨e|x²⟩x²",
            "[xe, x] = 0 for x ⊥ e",
        ]
    }

    fn build(&self, cfg: &SuiteConfig) -> SuiteBody {
        let mut checks = CheckSet::new();
        let cfg = *cfg;
        for (name, spec) in roster_specs() {
            let salt = format!("lemma4_5/{name}");
            checks.holds(format!("{name}/square_identities"), move || {
                let a = spec.build()?;
                let mut s = sampler(&cfg, &salt);
                let runs = (0..cfg.samples)
                    .map(|_| left_unit_square_identities(&a, &s.rat_vec(a.dim())))
                    .collect::<Result<Vec<_>>>()?;
                Ok(named_checks(&merge_by_id(runs)))
            });
        }
        SuiteBody { checks, ..SuiteBody::default() }
    }
}

pub struct CriterionSexticAgreement;

impl Suite for CriterionSexticAgreement {
    fn id(&self) -> &'static str {
        "theorem3"
    }

    fn claim(&self) -> &'static str {
        "for a left-unit absolute-valued algebra, x²e = x² holds iff (x², x², x²) = 0; the product table of e, x, xe, x² follows"
    }

    fn formulas(&self) -> &'static [&'static str] {
        &["x²e = x²", "(x², x², x²) = 0", "product table of {e, x, xe, x²}"]
    }

    fn build(&self, cfg: &SuiteConfig) -> SuiteBody {
        let mut checks = CheckSet::new();
        let cfg = *cfg;
        let positives = roster_specs().into_iter().map(|(n, s)| (n, s, true));
        let negatives = negative_examples(&cfg).into_iter().map(|(n, s)| (n, s, false));
        for (name, spec, positive) in positives.chain(negatives) {
            let sp = spec.clone();
            checks.holds(format!("{name}/agreement"), move || {
                let a = sp.build()?;
                let (c, s) = (check_quadratic_criterion(&a)?, check_sextic_exact(&a));
                Ok(Outcome::exact(c.holds == s.holds)
                    .with_method(CheckMethod::ExactPolarized)
                    .with_detail(format!("criterion {}, sextic {}", c.holds, s.holds)))
            });
            let sp = spec.clone();
            checks.expect(format!("{name}/criterion"), positive, move || {
                Ok(Outcome::from_report(&check_quadratic_criterion(&sp.build()?)?))
            });
            let sp = spec.clone();
            checks.expect(format!("{name}/sextic"), positive, move || {
                Ok(Outcome::from_report(&check_sextic_exact(&sp.build()?)))
            });
            if !positive {
                continue;
            }
            let sp = spec.clone();
            let salt = format!("theorem3/{name}");
            checks.holds(format!("{name}/product_table"), move || {
                let a = sp.build()?;
                let e = a.left_unit().ok_or(Error::NoLeftUnit)?;
                let mut s = sampler(&cfg, &salt);
                for _ in 0..cfg.samples {
                    let x = orthogonal_sample(&mut s, &e);
                    let t = left_unit_product_table(&a, &x)?;
                    if let Some(bad) = t.cells.iter().find(|c| !c.holds) {
                        return Ok(Outcome::sampled(false)
                            .with_witness(json!({ "x": x, "row": bad.row, "col": bad.col })));
                    }
                }
                Ok(Outcome::sampled(true))
            });
            checks.holds(format!("{name}/linearizations"), move || {
                Ok(Outcome::from_report(&check_linearizations(&spec.build()?, cfg.samples, cfg.seed)))
            });
        }
        SuiteBody { checks, ..SuiteBody::default() }
    }
}

pub struct QuaternionIsotopes;

fn is_pm_one(a: &Quat) -> bool {
    *a == Quat::one() || *a == -&Quat::one()
}

fn square_pm_one(a: &Quat) -> bool {
    is_pm_one(&a.mul(a))
}

impl Suite for QuaternionIsotopes {
    fn id(&self) -> &'static str {
        "theorem4"
    }

    fn claim(&self) -> &'static str {
        "H(a,1) satisfies x²e = x² iff a = ±1; *H(a,1) satisfies it iff a² = ±1"
    }

    fn formulas(&self) -> &'static [&'static str] {
        &["H(a,1): x²e = x² ⇔ a = ±1", "*H(a,1): x²e = x² ⇔ a² = ±1"]
    }

    fn build(&self, cfg: &SuiteConfig) -> SuiteBody {
        let mut checks = CheckSet::new();
        let mut s = sampler(cfg, "theorem4");
        let mut h_params = vec![
            ("three_five".to_string(), Quat::new(q(3, 5), q(4, 5), Rat::zero(), Rat::zero())),
            ("minus_one".to_string(), -&Quat::one()),
            ("one".to_string(), Quat::one()),
            ("i".to_string(), Quat::i()),
        ];
        let mut star_params = vec![
            ("one".to_string(), Quat::one()),
            ("minus_one".to_string(), -&Quat::one()),
            ("i".to_string(), Quat::i()),
            ("three_five".to_string(), Quat::new(q(3, 5), q(4, 5), Rat::zero(), Rat::zero())),
        ];
        for k in 0..cfg.samples {
            h_params.push((format!("{k:02}"), s.unit_quat()));
            let a = if k % 2 == 0 { s.unit_imag() } else { s.generic_unit_quat() };
            star_params.push((format!("{k:02}"), a));
        }
        for (tag, a) in h_params {
            let positive = is_pm_one(&a);
            checks.expect(format!("H(a,1)/{tag}"), positive, move || {
                Ok(Outcome::from_report(&check_quadratic_criterion(&h_left(&a).build()?)?))
            });
        }
        for (tag, a) in star_params {
            let positive = square_pm_one(&a);
            checks.expect(format!("*H(a,1)/{tag}"), positive, move || {
                Ok(Outcome::from_report(&check_quadratic_criterion(&star_h_left(&a).build()?)?))
            });
        }
        SuiteBody { checks, ..SuiteBody::default() }
    }
}
