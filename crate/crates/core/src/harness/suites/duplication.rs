//! Duplication pairs `(φ, ψ)`: the three conditions, their case analysis and
//! the five normal families.

use super::{conditions, sampler, SuiteConfig, ALL, SEEDED_OTHERS};
use crate::algebra::AlgSpec;
use crate::arith::Quat;
use crate::classify::{match_family, FAMILIES};
use crate::harness::{CheckSet, Outcome, Suite, SuiteBody};
use crate::identity::{check_quadratic_criterion, Condition};
use crate::isometry::{realize, IsoSpec};
use crate::sample::Sampler;

use Condition::{PhiMixed, PhiSquare, PsiClosure};

fn twisted(a: &Quat) -> IsoSpec {
    IsoSpec::t_sigma(a, &a.conj())
}

/// Imaginary unit not equal to `±c`.
fn imag_other_than(s: &mut Sampler, c: &Quat) -> Quat {
    loop {
        let e = s.unit_imag();
        if e != *c && e != -c {
            return e;
        }
    }
}

/// Pairs close to a normal family that fall outside every family.
fn non_member(s: &mut Sampler, variant: usize) -> (String, IsoSpec, IsoSpec) {
    let (tag, phi, psi) = match variant % 10 {
        0 => ("I_Tab", IsoSpec::identity(), IsoSpec::t(&s.generic_unit_quat(), &s.generic_unit_quat())),
        1 => {
            let a = s.unit_quat();
            ("I_Taa_sigma", IsoSpec::identity(), IsoSpec::t_sigma(&a, &a))
        }
        2 => ("I_minusI", IsoSpec::identity(), IsoSpec::neg_identity()),
        3 => ("sigma_Tcd", IsoSpec::sigma(), IsoSpec::t(&s.unit_imag(), &s.unit_imag())),
        4 => {
            let a = s.unit_quat();
            ("sigma_Taa_sigma", IsoSpec::sigma(), IsoSpec::t_sigma(&a, &a))
        }
        5 => ("twisted_minusI", twisted(&s.unit_imag()), IsoSpec::neg_identity()),
        6 => {
            let c = s.unit_imag();
            let e = imag_other_than(s, &c);
            ("twisted_Tde", twisted(&c), IsoSpec::t(&s.unit_imag(), &e))
        }
        7 => {
            let (c, d) = (s.unit_imag(), s.unit_imag());
            let psi = if s.coin() { IsoSpec::t_sigma(&d, &d) } else { IsoSpec::t_sigma(&d, &-&d) };
            ("twisted_Tdd_sigma", twisted(&c), psi)
        }
        8 => ("generic_twisted_I", twisted(&s.generic_unit_quat()), IsoSpec::identity()),
        _ => {
            let c = s.unit_imag();
            ("Tcc_I", IsoSpec::t(&c, &c.conj()), IsoSpec::identity())
        }
    };
    (tag.to_string(), phi, psi)
}

fn criterion(phi: &IsoSpec, psi: &IsoSpec) -> crate::error::Result<bool> {
    let a = AlgSpec::duplication(phi.clone(), psi.clone()).build()?;
    Ok(check_quadratic_criterion(&a)?.holds)
}

pub struct ConditionEquivalence;

impl Suite for ConditionEquivalence {
    fn id(&self) -> &'static str {
        "prop6"
    }

    fn claim(&self) -> &'static str {
        "the duplication algebra of (φ, ψ) with φ(1) = 1 satisfies x²e = x² iff φ, ψ satisfy the three conditions"
    }

    fn formulas(&self) -> &'static [&'static str] {
        &[
            "(x,y)(u,v) = (φ(x)u − v̄ψ(y), ψ(ψ(y)ū + vφ(x)))",
            "φ(φ(x)x) = φ(x)x",
            "φ(x̄ψ(x)) = x̄ψ(x)",
            "ψ(ψ(y)x̄ + yφ(x)) = ψ(y)x̄ + yφ(x)",
        ]
    }

    fn build(&self, cfg: &SuiteConfig) -> SuiteBody {
        let mut checks = CheckSet::new();
        let cfg = *cfg;
        let mut s = sampler(&cfg, "prop6");
        let mut pairs = Vec::new();
        for fam in FAMILIES {
            for k in 0..3 {
                let (phi, psi) = fam.sample(&mut s);
                pairs.push((format!("{}/{k}", fam.as_str()), phi, psi));
            }
        }
        for k in 0..20 {
            let (tag, phi, psi) = non_member(&mut s, k);
            pairs.push((format!("{tag}/{}", k / 10), phi, psi));
        }
        for (tag, phi, psi) in pairs {
            checks.holds(format!("{tag}/equivalence"), move || {
                let crit = criterion(&phi, &psi)?;
                let conds = conditions(&phi, &psi, &ALL, &cfg)?;
                Ok(Outcome::exact(crit == conds.holds)
                    .with_detail(format!("criterion {crit}, conditions {}", conds.holds)))
            });
        }
        SuiteBody { checks, ..SuiteBody::default() }
    }
}

pub struct ConditionLemmas;

/// Records that the listed conditions hold (`positive`) or that one of them
/// fails with a witness.
fn add(
    checks: &mut CheckSet,
    cfg: &SuiteConfig,
    id: String,
    positive: bool,
    phi: IsoSpec,
    psi: IsoSpec,
    conds: &'static [Condition],
) {
    let cfg = *cfg;
    checks.expect(id, positive, move || conditions(&phi, &psi, conds, &cfg));
}

impl Suite for ConditionLemmas {
    fn id(&self) -> &'static str {
        "lemmas8_12"
    }

    fn claim(&self) -> &'static str {
        "case analysis of the three conditions by the type of φ and ψ, with witnesses for every excluded case"
    }

    fn formulas(&self) -> &'static [&'static str] {
        &[
            "φ(φ(x)x) = φ(x)x ⇔ φ ∈ {I} ∪ I1-",
            "(I, T_{a,b}) satisfies ψ-closure ⇔ a = b = ±1",
            "(I, ψ) satisfies all three ⇔ ψ ∈ {I} ∪ {−T_{a,a}∘σ}",
            "(σ, ψ) satisfies all three ⇔ ψ = ±I",
            "(T_{a,ā}∘σ, ψ) satisfies φ² condition ⇔ a² = ±1",
            "(T_{a,ā}∘σ, T_{b,c}) satisfies the ψ conditions ⇔ c = ±a",
            "(T_{a,ā}∘σ, T_{b,±b}∘σ) fails the mixed condition",
        ]
    }

    fn build(&self, cfg: &SuiteConfig) -> SuiteBody {
        let mut checks = CheckSet::new();
        let mut s = sampler(cfg, "lemmas8_12");
        let (i, j) = (Quat::i(), Quat::j());
        let one = Quat::one();
        let minus_one = -&one;
        let mut imag: Vec<(String, Quat)> = vec![("i".into(), i.clone()), ("j".into(), j.clone())];
        let mut units: Vec<(String, Quat)> = Vec::new();
        let mut generic: Vec<(String, Quat)> = Vec::new();
        for k in 0..SEEDED_OTHERS {
            imag.push((format!("s{k}"), s.unit_imag()));
            units.push((format!("s{k}"), s.unit_quat()));
            generic.push((format!("s{k}"), s.generic_unit_quat()));
        }
        const SQ: &[Condition] = &[PhiSquare];
        const CLOSURE: &[Condition] = &[PsiClosure];
        const MIXED: &[Condition] = &[PhiMixed];
        const PSI_SIDE: &[Condition] = &[PhiMixed, PsiClosure];
        const FIRST_TWO: &[Condition] = &[PhiSquare, PhiMixed];
        let id = IsoSpec::identity;

        // φ ∈ {I} ∪ I1- satisfies the φ² condition; proper T_{a,ā} ≠ I does not.
        add(&mut checks, cfg, "phi_square/if/identity".into(), true, id(), id(), SQ);
        add(&mut checks, cfg, "phi_square/if/sigma".into(), true, IsoSpec::sigma(), id(), SQ);
        for (tag, a) in &imag {
            add(&mut checks, cfg, format!("phi_square/if/twisted_{tag}"), true, twisted(a), id(), SQ);
            add(&mut checks, cfg, format!("phi_square/only_if/T_{tag}"), false, IsoSpec::t(a, &a.conj()), id(), SQ);
        }
        for (tag, a) in &generic {
            add(&mut checks, cfg, format!("phi_square/only_if/T_generic_{tag}"), false, IsoSpec::t(a, &a.conj()), id(), SQ);
        }

        // (I, T_{a,b}) satisfies ψ-closure only for a = b = ±1.
        add(&mut checks, cfg, "identity_closure/if/plus_one".into(), true, id(), IsoSpec::t(&one, &one), CLOSURE);
        add(&mut checks, cfg, "identity_closure/if/minus_one".into(), true, id(), IsoSpec::t(&minus_one, &minus_one), CLOSURE);
        add(&mut checks, cfg, "identity_closure/only_if/i_j".into(), false, id(), IsoSpec::t(&i, &j), CLOSURE);
        add(&mut checks, cfg, "identity_closure/only_if/i_i".into(), false, id(), IsoSpec::t(&i, &i), CLOSURE);
        add(&mut checks, cfg, "identity_closure/only_if/minus_identity".into(), false, id(), IsoSpec::neg_identity(), CLOSURE);
        for (tag, a) in &units {
            let b = s.unit_quat();
            add(&mut checks, cfg, format!("identity_closure/only_if/{tag}"), false, id(), IsoSpec::t(a, &b), CLOSURE);
        }

        // (I, ψ) satisfies all three iff ψ ∈ {I} ∪ {−T_{a,a}∘σ}.
        add(&mut checks, cfg, "identity_first/if/identity".into(), true, id(), id(), &ALL);
        for (tag, a) in [("i".to_string(), i.clone()), ("j".to_string(), j.clone())].into_iter().chain(units.clone()) {
            add(&mut checks, cfg, format!("identity_first/if/minus_Taa_sigma_{tag}"), true, id(), IsoSpec::t_sigma(&a, &a).negated(), &ALL);
            add(&mut checks, cfg, format!("identity_first/only_if/Taa_sigma_{tag}"), false, id(), IsoSpec::t_sigma(&a, &a), &ALL);
        }
        add(&mut checks, cfg, "identity_first/only_if/T_i_j".into(), false, id(), IsoSpec::t(&i, &j), &ALL);
        add(&mut checks, cfg, "identity_first/only_if/minus_identity".into(), false, id(), IsoSpec::neg_identity(), &ALL);
        for (tag, a) in &generic {
            let b = s.generic_unit_quat();
            add(&mut checks, cfg, format!("identity_first/only_if/T_{tag}"), false, id(), IsoSpec::t(a, &b), &ALL);
        }

        // (σ, ψ) satisfies all three iff ψ = ±I.
        let sigma = IsoSpec::sigma;
        add(&mut checks, cfg, "sigma_first/if/identity".into(), true, sigma(), id(), &ALL);
        add(&mut checks, cfg, "sigma_first/if/minus_identity".into(), true, sigma(), IsoSpec::neg_identity(), &ALL);
        add(&mut checks, cfg, "sigma_first/only_if/T_i_i".into(), false, sigma(), IsoSpec::t(&i, &i), &ALL);
        add(&mut checks, cfg, "sigma_first/only_if/T_i_j".into(), false, sigma(), IsoSpec::t(&i, &j), &ALL);
        add(&mut checks, cfg, "sigma_first/only_if/Tii_sigma".into(), false, sigma(), IsoSpec::t_sigma(&i, &i), &ALL);
        for (k, ((tag, c), (_, a))) in imag.iter().skip(2).zip(&units).enumerate() {
            let d = s.unit_imag();
            add(&mut checks, cfg, format!("sigma_first/only_if/T_{tag}"), false, sigma(), IsoSpec::t(c, &d), &ALL);
            let f = if k % 2 == 0 { IsoSpec::t_sigma(a, a) } else { IsoSpec::t_sigma(a, a).negated() };
            add(&mut checks, cfg, format!("sigma_first/only_if/Taa_sigma_{tag}"), false, sigma(), f, &ALL);
        }

        // (T_{a,ā}∘σ, ψ) satisfies the φ² condition iff a² = ±1.
        for (tag, a) in [("one".to_string(), one.clone()), ("minus_one".to_string(), minus_one.clone())]
            .into_iter()
            .chain(imag.clone())
        {
            add(&mut checks, cfg, format!("twisted_phi_square/if/{tag}"), true, twisted(&a), id(), SQ);
        }
        for (tag, a) in &generic {
            add(&mut checks, cfg, format!("twisted_phi_square/only_if/{tag}"), false, twisted(a), id(), SQ);
        }

        // a² = −1: (T_{a,ā}∘σ, T_{b,c}) satisfies the ψ conditions iff c = ±a.
        let mut twisted_cases: Vec<(String, Quat)> = vec![("i".into(), i.clone()), ("j".into(), j.clone())];
        for k in 0..SEEDED_OTHERS {
            twisted_cases.push((format!("s{k}"), s.unit_imag()));
        }
        for (tag, a) in &twisted_cases {
            let b = s.unit_imag();
            add(&mut checks, cfg, format!("twisted_proper_psi/if/{tag}/plus"), true, twisted(a), IsoSpec::t(&b, a), PSI_SIDE);
            add(&mut checks, cfg, format!("twisted_proper_psi/if/{tag}/minus"), true, twisted(a), IsoSpec::t(&b, &-a), PSI_SIDE);
            let c = imag_other_than(&mut s, a);
            add(&mut checks, cfg, format!("twisted_proper_psi/only_if/{tag}"), false, twisted(a), IsoSpec::t(&b, &c), PSI_SIDE);
            let u = s.unit_quat();
            add(&mut checks, cfg, format!("twisted_improper_psi/{tag}/plus"), false, twisted(a), IsoSpec::t_sigma(&u, &u), MIXED);
            add(&mut checks, cfg, format!("twisted_improper_psi/{tag}/minus"), false, twisted(a), IsoSpec::t_sigma(&u, &-&u), MIXED);
        }
        add(&mut checks, cfg, "twisted_proper_psi/only_if/i_j".into(), false, twisted(&i), IsoSpec::t(&j, &j), PSI_SIDE);

        // Particular pairs.
        for (tag, psi) in [
            ("identity".to_string(), id()),
            ("minus_identity".to_string(), IsoSpec::neg_identity()),
            ("sigma".to_string(), sigma()),
            ("T_i_j".to_string(), IsoSpec::t(&i, &j)),
        ] {
            add(&mut checks, cfg, format!("identity_first_any_psi/{tag}"), true, id(), psi, FIRST_TWO);
        }
        for (tag, a) in &units {
            let b = s.unit_quat();
            add(&mut checks, cfg, format!("identity_first_any_psi/T_{tag}"), true, id(), IsoSpec::t(a, &b), FIRST_TWO);
            add(&mut checks, cfg, format!("identity_first_any_psi/T_sigma_{tag}"), true, id(), IsoSpec::t_sigma(a, &b), FIRST_TWO);
        }
        add(&mut checks, cfg, "identity_identity".into(), true, id(), id(), &ALL);
        add(&mut checks, cfg, "identity_minus_identity".into(), false, id(), IsoSpec::neg_identity(), CLOSURE);
        add(&mut checks, cfg, "sigma_pm_identity/plus".into(), true, sigma(), id(), &ALL);
        add(&mut checks, cfg, "sigma_pm_identity/minus".into(), true, sigma(), IsoSpec::neg_identity(), &ALL);
        for (tag, a) in imag.iter().chain(&generic) {
            add(&mut checks, cfg, format!("twisted_minus_identity/{tag}"), false, twisted(a), IsoSpec::neg_identity(), CLOSURE);
        }
        for (tag, a) in &imag {
            let b = s.unit_imag();
            add(&mut checks, cfg, format!("twisted_matching_psi/{tag}"), true, twisted(a), IsoSpec::t(&b, a), PSI_SIDE);
        }
        SuiteBody { checks, ..SuiteBody::default() }
    }
}

pub struct NormalFamilies;

impl Suite for NormalFamilies {
    fn id(&self) -> &'static str {
        "prop7_families"
    }

    fn claim(&self) -> &'static str {
        "the pairs satisfying the three conditions are precisely the five families S1–S5"
    }

    fn formulas(&self) -> &'static [&'static str] {
        &[
            "S1 = (I, I)",
            "S2 = (I, −T_{a,a}∘σ)",
            "S3 = (σ, ±I)",
            "S4 = (T_{a,ā}∘σ, I), a² = −1",
            "S5 = (T_{a,ā}∘σ, T_{b,a}), a² = b² = −1",
        ]
    }

    fn build(&self, cfg: &SuiteConfig) -> SuiteBody {
        let mut checks = CheckSet::new();
        let cfg = *cfg;
        let mut s = sampler(&cfg, "prop7_families");
        for fam in FAMILIES {
            for k in 0..cfg.samples {
                let (phi, psi) = fam.sample(&mut s);
                checks.holds(format!("members/{}/{k:02}", fam.as_str()), move || {
                    let conds = conditions(&phi, &psi, &ALL, &cfg)?;
                    let crit = criterion(&phi, &psi)?;
                    let tag = match_family(&realize(&phi)?, &realize(&psi)?)?;
                    let matched = tag.as_ref().is_some_and(|t| t.family == fam);
                    Ok(Outcome::all([conds, Outcome::exact(crit && matched)]))
                });
            }
        }
        for k in 0..cfg.samples.max(10) {
            let (tag, phi, psi) = non_member(&mut s, k);
            checks.refutes(format!("non_members/{k:02}_{tag}"), move || {
                let conds = conditions(&phi, &psi, &ALL, &cfg)?;
                if match_family(&realize(&phi)?, &realize(&psi)?)?.is_some() {
                    return Ok(Outcome::exact(true).with_detail("matched a family"));
                }
                Ok(conds)
            });
        }
        SuiteBody { checks, ..SuiteBody::default() }
    }
}
