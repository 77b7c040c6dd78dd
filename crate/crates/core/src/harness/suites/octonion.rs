//! One-sided octonion isotopes and the automorphisms that move them.

use serde_json::json;

use super::{sampler, SuiteConfig};
use crate::algebra::{isomorphism_counterexample, AlgSpec};
use crate::arith::{MatQ, Oct};
use crate::classify::{
    duplication_spec, duplication_transport, inner_automorphism, inner_automorphism_matrix, left_slot_automorphism,
    left_slot_automorphism_matrix, star_oct_left_to_right, star_oct_to_twisted_oct, star_oct_transport,
};
use crate::error::Error;
use crate::harness::{CheckSet, Erratum, Outcome, Suite, SuiteBody};
use crate::identity::check_quadratic_criterion;
use crate::isometry::IsoForm;

pub struct StarOctTransport;

impl Suite for StarOctTransport {
    fn id(&self) -> &'static str {
        "prop4"
    }

    fn claim(&self) -> &'static str {
        "an automorphism Φ of O with Φ(a) = b is an isomorphism *O_l(a,1) → *O_l(b,1); (x,y) ↦ (uxū, uyū) and (x,y) ↦ (x, ay) are automorphisms"
    }

    fn formulas(&self) -> &'static [&'static str] {
        &[
            "Φ(a) = b ⇒ *O_l(a,1) ≅ *O_l(b,1)",
            "(T_{u,ū}, T_{u,ū}) ∈ Aut(O)",
            "(x, y) ↦ (x, ay) ∈ Aut(O)",
            "Φ(A_e) = A_{Φ(e)}",
        ]
    }

    fn build(&self, cfg: &SuiteConfig) -> SuiteBody {
        let mut checks = CheckSet::new();
        let mut s = sampler(cfg, "prop4");
        for k in 0..cfg.samples {
            let a = s.unit_oct();
            let (u, c) = (s.unit_quat(), s.unit_quat());
            let (p, r) = (s.unit_imag(), s.unit_imag());
            let w = s.generic_unit_quat();

            let (a1, u1) = (a.clone(), u.clone());
            checks.holds(format!("inner/{k:02}"), move || {
                let aut = inner_automorphism(&u1)?;
                let t = star_oct_transport(&a1, &inner_automorphism_matrix(&u1)?)?;
                Ok(Outcome::exact(aut.verified && t.verified && t.transports_fixed_subspace()?))
            });
            let (a1, c1) = (a.clone(), c.clone());
            checks.holds(format!("left_slot/{k:02}"), move || {
                let aut = left_slot_automorphism(&c1)?;
                let t = star_oct_transport(&a1, &left_slot_automorphism_matrix(&c1)?)?;
                Ok(Outcome::exact(aut.verified && t.verified && t.transports_fixed_subspace()?))
            });
            let (p1, r1, w1) = (p.clone(), r.clone(), w.clone());
            checks.holds(format!("pair_transport/{k:02}"), move || {
                let phi = IsoForm::tab_conj_sigma(&p1)?;
                let psi = IsoForm::tab(&r1, &p1)?;
                let m = IsoForm::inner(&w1)?;
                let (wit, phi2, psi2) = duplication_transport("inner_automorphism", m.matrix(), m.matrix(), &phi, &psi)?;
                let (pa, ra) = (p1.conjugate_by(&w1), r1.conjugate_by(&w1));
                let predicted = phi2.same_map(&IsoForm::tab_conj_sigma(&pa)?) && psi2.same_map(&IsoForm::tab(&ra, &pa)?);
                Ok(Outcome::exact(wit.verified && predicted))
            });
            checks.refutes(format!("pair_transport_reversed/{k:02}"), move || {
                let phi = IsoForm::tab_conj_sigma(&p)?;
                let psi = IsoForm::tab(&r, &p)?;
                let m = IsoForm::inner(&w)?;
                let (pa, ra) = (p.conjugate_by(&w), r.conjugate_by(&w));
                let src = duplication_spec(&IsoForm::tab_conj_sigma(&pa)?, &IsoForm::tab(&ra, &pa)?).build()?;
                let dst = duplication_spec(&phi, &psi).build()?;
                let map = MatQ::block_diag(m.matrix(), m.matrix());
                Ok(match isomorphism_counterexample(&src, &dst, &map) {
                    Some((i, j)) => Outcome::exact(false).with_witness(json!({ "basis": [i, j], "u": w })),
                    None => Outcome::exact(true),
                })
            });
        }
        let errata = vec![Erratum {
            id: "inner_automorphism_transport_direction".into(),
            statement: "(T_{u,ū}, T_{u,ū}) between duplication algebras twisted by T_{a,b}∘f and T_{uaū,ubū}∘f".into(),
            tabulated: "maps the T_{uaū,ubū}-twisted algebra onto the T_{a,b}-twisted one".into(),
            computed: "maps the T_{a,b}-twisted algebra onto the T_{uaū,ubū}-twisted one; the stated direction fails for generic u (see pair_transport_reversed)".into(),
        }];
        SuiteBody { checks, errata, tables: Vec::new() }
    }
}

pub struct OneSidedStarOct;

fn criterion(spec: &AlgSpec) -> crate::error::Result<Outcome> {
    Ok(Outcome::from_report(&check_quadratic_criterion(&spec.build()?)?))
}

impl Suite for OneSidedStarOct {
    fn id(&self) -> &'static str {
        "prop5"
    }

    fn claim(&self) -> &'static str {
        "*O_l(a,1) and *O_r(a,1) satisfy x²e = x² iff a² = ±1; then x ↦ axā is an isomorphism between them, of degree 4 when a² = −1"
    }

    fn formulas(&self) -> &'static [&'static str] {
        &[
            "*O_l(a,1): (x̄a)y",
            "*O_r(a,1): x̄(ay)",
            "x²e = x² ⇔ a² = ±1",
            "x ↦ axā",
            "x ↦ āx : *O(a,1) → O_{T_{a,ā}∘σ}",
            "deg *O(a,1) = 4 for a² = −1",
        ]
    }

    fn build(&self, cfg: &SuiteConfig) -> SuiteBody {
        let mut checks = CheckSet::new();
        let cfg = *cfg;
        let mut s = sampler(&cfg, "prop5");
        let mut imaginary: Vec<(String, Oct)> =
            vec![("e1".into(), Oct::basis(1)), ("e4".into(), Oct::basis(4)), ("e7".into(), Oct::basis(7))];
        let mut generic: Vec<(String, Oct)> = Vec::new();
        for k in 0..cfg.samples {
            imaginary.push((format!("{k:02}"), s.unit_imag_oct()));
            generic.push((format!("{k:02}"), s.generic_unit_oct()));
        }
        for (tag, a) in imaginary {
            let a1 = a.clone();
            checks.holds(format!("imaginary/{tag}/criterion"), move || {
                Ok(Outcome::all([
                    criterion(&AlgSpec::star_oct_left(&a1))?,
                    criterion(&AlgSpec::star_oct_right(&a1))?,
                ]))
            });
            let a1 = a.clone();
            checks.holds(format!("imaginary/{tag}/left_to_right"), move || {
                Ok(Outcome::exact(star_oct_left_to_right(&a1)?.verified))
            });
            let a1 = a.clone();
            checks.holds(format!("imaginary/{tag}/twisted"), move || {
                let w = star_oct_to_twisted_oct(&a1)?;
                Ok(Outcome::exact(w.verified && w.transports_fixed_subspace()?))
            });
            checks.holds(format!("imaginary/{tag}/degree"), move || {
                let d = AlgSpec::star_oct_left(&a).build()?.degree_sampled(cfg.samples, cfg.seed);
                Ok(Outcome::sampled(d == 4).with_detail(format!("degree {d}")))
            });
        }
        for (tag, a) in [("plus_one", Oct::one()), ("minus_one", -&Oct::one())] {
            let a1 = a.clone();
            checks.holds(format!("real/{tag}/criterion"), move || {
                Ok(Outcome::all([
                    criterion(&AlgSpec::star_oct_left(&a1))?,
                    criterion(&AlgSpec::star_oct_right(&a1))?,
                ]))
            });
            let a1 = a.clone();
            checks.holds(format!("real/{tag}/witnesses"), move || {
                let lr = star_oct_left_to_right(&a1)?;
                let tw = star_oct_to_twisted_oct(&a1)?;
                Ok(Outcome::exact(lr.verified && lr.map.is_identity() && tw.verified))
            });
            checks.holds(format!("real/{tag}/degree"), move || {
                let d = AlgSpec::star_oct_left(&a).build()?.degree_sampled(cfg.samples, cfg.seed);
                Ok(Outcome::sampled(d == 2).with_detail(format!("degree {d}")))
            });
        }
        for (tag, a) in generic {
            let a1 = a.clone();
            checks.refutes(format!("generic/{tag}/left"), move || criterion(&AlgSpec::star_oct_left(&a1)));
            let a1 = a.clone();
            checks.refutes(format!("generic/{tag}/right"), move || criterion(&AlgSpec::star_oct_right(&a1)));
            checks.holds(format!("generic/{tag}/no_witness"), move || {
                Ok(Outcome::exact(matches!(star_oct_left_to_right(&a), Err(Error::SquareNotPlusMinusOne))))
            });
        }
        SuiteBody { checks, ..SuiteBody::default() }
    }
}
