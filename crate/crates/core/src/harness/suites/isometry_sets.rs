//! Proper and improper isometries of ℍ, those fixing 1, and the involutive
//! ones among them.

use serde_json::json;

use super::{sampler, SuiteConfig};
use crate::arith::Quat;
use crate::harness::{CheckSet, Erratum, Outcome, Suite, SuiteBody};
use crate::isometry::{decompose_proper, involutivity_condition, IsoForm};

pub struct IsometrySets;

/// First basis index moved by `f∘f`, a witness that `f` is not involutive.
fn non_involution_witness(f: &IsoForm) -> Option<usize> {
    (0..4).find(|&i| f.apply(&f.apply(&Quat::basis(i))) != Quat::basis(i))
}

fn not_involutive(f: &IsoForm) -> Outcome {
    match non_involution_witness(f) {
        Some(i) => Outcome::exact(false).with_witness(json!({ "basis": i })),
        None => Outcome::exact(true),
    }
}

impl Suite for IsometrySets {
    fn id(&self) -> &'static str {
        "lemma3"
    }

    fn claim(&self) -> &'static str {
        "proper isometries are T_{a,b}, improper ones T_{a,b}σ; the involutive ones fixing 1 or not are as listed"
    }

    fn formulas(&self) -> &'static [&'static str] {
        &[
            "O+ = {T_{a,b}}",
            "O- = O+ ∘ σ",
            "O1+ = {T_{a,ā}}",
            "O1- = O1+ ∘ σ",
            "I+ = {±I} ∪ {T_{a,b} : a,b ∈ S(Im H)}",
            "I- = {±T_{a,a}∘σ}",
            "I1+ = {I} ∪ {T_{a,ā} : a ∈ S(Im H)}",
            "I1- = I1+ ∘ σ",
            "T_{a,b}^2 = T_{a²,b²}",
            "T_{a,b}∘σ = σ∘T_{b̄,ā}",
        ]
    }

    fn build(&self, cfg: &SuiteConfig) -> SuiteBody {
        let mut checks = CheckSet::new();
        let mut s = sampler(cfg, "lemma3");
        for k in 0..cfg.samples {
            let (a, b) = (s.unit_quat(), s.unit_quat());
            let (c, d) = (s.unit_imag(), s.unit_imag());
            let g = s.generic_unit_quat();

            let (a1, b1) = (a.clone(), b.clone());
            checks.holds(format!("o_plus/{k:02}"), move || {
                let t = IsoForm::tab(&a1, &b1)?;
                let (p, q) = decompose_proper(t.matrix())?;
                Ok(Outcome::exact(
                    t.matrix().is_orthogonal() && t.is_proper() && p.is_proportional(&a1) && q.is_proportional(&b1),
                ))
            });
            let (a1, b1) = (a.clone(), b.clone());
            checks.holds(format!("o_minus/{k:02}"), move || {
                let ts = IsoForm::tab_sigma(&a1, &b1)?;
                let swapped = IsoForm::sigma().compose(&IsoForm::tab(&b1.conj(), &a1.conj())?);
                Ok(Outcome::exact(!ts.is_proper() && ts.same_map(&swapped)))
            });
            let a1 = a.clone();
            checks.holds(format!("o1_plus/{k:02}"), move || {
                let t = IsoForm::tab_conj(&a1)?;
                Ok(Outcome::exact(t.is_proper() && t.fixes_one()))
            });
            let a1 = a.clone();
            checks.holds(format!("o1_minus/{k:02}"), move || {
                let t = IsoForm::tab_conj_sigma(&a1)?;
                Ok(Outcome::exact(!t.is_proper() && t.fixes_one()))
            });
            let (a1, b1) = (a.clone(), b.clone());
            checks.holds(format!("square/{k:02}"), move || {
                let t = IsoForm::tab(&a1, &b1)?;
                let sq = IsoForm::tab(&a1.mul(&a1), &b1.mul(&b1))?;
                Ok(Outcome::exact(t.compose(&t).same_map(&sq)))
            });
            let (a1, b1) = (a.clone(), b.clone());
            checks.holds(format!("sigma_square/{k:02}"), move || {
                let ts = IsoForm::tab_sigma(&a1, &b1)?;
                let expected = IsoForm::tab(&a1.mul(&b1.conj()), &a1.conj().mul(&b1))?;
                Ok(Outcome::exact(ts.compose(&ts).same_map(&expected)))
            });
            let (a1, b1, c1, d1) = (a.clone(), b.clone(), c.clone(), d.clone());
            checks.holds(format!("involutivity_predicates/{k:02}"), move || {
                let cases = [(&a1, &b1), (&c1, &d1), (&a1, &a1), (&a1, &-&a1), (&c1, &c1)];
                for (p, q) in cases {
                    if !involutivity_condition(p, q)?.consistent() {
                        return Ok(Outcome::exact(false).with_witness(json!({ "a": p, "b": q })));
                    }
                }
                Ok(Outcome::exact(true))
            });
            let (c1, d1) = (c.clone(), d.clone());
            checks.holds(format!("i_plus/{k:02}"), move || {
                let t = IsoForm::tab(&c1, &d1)?;
                Ok(Outcome::exact(t.is_involutive() && t.is_proper()))
            });
            let a1 = a.clone();
            checks.holds(format!("i_minus/{k:02}"), move || {
                let t = IsoForm::tab_sigma(&a1, &a1)?;
                Ok(Outcome::exact(t.is_involutive() && t.negate().is_involutive() && !t.is_proper()))
            });
            let c1 = c.clone();
            checks.holds(format!("i1_plus/{k:02}"), move || {
                let t = IsoForm::tab_conj(&c1)?;
                Ok(Outcome::exact(t.is_involutive() && t.fixes_one()))
            });
            let g1 = g.clone();
            checks.refutes(format!("i1_plus_generic/{k:02}"), move || Ok(not_involutive(&IsoForm::tab_conj(&g1)?)));
            let c1 = c.clone();
            checks.holds(format!("i1_minus/{k:02}"), move || {
                let t = IsoForm::tab_conj_sigma(&c1)?;
                Ok(Outcome::exact(t.is_involutive() && t.fixes_one() && !t.is_proper()))
            });
            let g1 = g.clone();
            checks.refutes(format!("i1_minus_generic/{k:02}"), move || {
                Ok(not_involutive(&IsoForm::tab_conj_sigma(&g1)?))
            });
        }
        checks.holds("identity_and_sigma", || {
            let (i, s) = (IsoForm::identity(), IsoForm::sigma());
            Ok(Outcome::exact(
                i.is_involutive() && s.is_involutive() && i.fixes_one() && s.fixes_one() && !s.is_proper(),
            ))
        });

        let sigma_square = sigma_square_erratum();
        SuiteBody { checks, errata: sigma_square.into_iter().collect(), tables: Vec::new() }
    }
}

/// The square of `T_{a,b}∘σ` written as `T_{āb̄,āb̄}` disagrees with the
/// composition `T_{a,b}∘T_{b̄,ā} = T_{ab̄,āb}` at `a = i`, `b = 1`.
fn sigma_square_erratum() -> Option<Erratum> {
    let (a, b) = (Quat::i(), Quat::one());
    let ts = IsoForm::tab_sigma(&a, &b).ok()?;
    let stated = IsoForm::tab(&a.conj().mul(&b.conj()), &a.conj().mul(&b.conj())).ok()?;
    let sq = ts.compose(&ts);
    if sq.same_map(&stated) {
        return None;
    }
    Some(Erratum {
        id: "sigma_square_formula".into(),
        statement: "(T_{a,b}∘σ)² as a single T map".into(),
        tabulated: "T_{āb̄,āb̄}".into(),
        computed: format!(
            "T_{{ab̄,āb}}; at a = i, b = 1 the square sends 1 to {} while T_{{āb̄,āb̄}} sends it to {}",
            sq.apply(&Quat::one()),
            stated.apply(&Quat::one())
        ),
    })
}
