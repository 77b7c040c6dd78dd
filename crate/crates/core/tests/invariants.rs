//! Seeded property tests for the duplication conditions and the criterion.

use ava_core::algebra::{duplication_algebra, AlgSpec};
use ava_core::arith::Quat;
use ava_core::classify::{match_family, FAMILIES};
use ava_core::identity::{
    check_quadratic_criterion, check_sextic_exact, duplication_conditions, sextic_map,
};
use ava_core::isometry::{realize, IsoForm, IsoSpec};
use ava_core::sample::Sampler;
use proptest::prelude::*;

/// A pair with `φ(1) = 1`: either a family member or a perturbation of one.
fn pair(seed: u64, pick: u8) -> (IsoForm, IsoForm) {
    let mut s = Sampler::new(seed);
    let (phi, psi) = match pick % 8 {
        k @ 0..=4 => FAMILIES[k as usize].sample(&mut s),
        5 => {
            let c = s.unit_imag();
            (IsoSpec::t_sigma(&c, &c.conj()), IsoSpec::t(&s.unit_quat(), &s.unit_quat()))
        }
        6 => (IsoSpec::identity(), IsoSpec::t_sigma(&s.unit_quat(), &s.unit_quat())),
        _ => {
            let a = s.unit_quat();
            (IsoSpec::t(&a, &a.conj()), IsoSpec::identity())
        }
    };
    (realize(&phi).unwrap(), realize(&psi).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn criterion_matches_conditions(seed in any::<u64>(), pick in any::<u8>()) {
        let (phi, psi) = pair(seed, pick);
        let conds = duplication_conditions(&phi, &psi).unwrap().iter().all(|r| r.holds);
        let crit = check_quadratic_criterion(&duplication_algebra(&phi, &psi)).unwrap().holds;
        prop_assert_eq!(conds, crit);
    }

    #[test]
    fn conditions_force_involutions(seed in any::<u64>(), pick in any::<u8>()) {
        let (phi, psi) = pair(seed, pick);
        if duplication_conditions(&phi, &psi).unwrap().iter().all(|r| r.holds) {
            prop_assert!(phi.is_involutive());
            prop_assert!(psi.is_involutive());
        }
    }

    #[test]
    fn solutions_are_family_members(seed in any::<u64>(), pick in any::<u8>()) {
        let (phi, psi) = pair(seed, pick);
        let conds = duplication_conditions(&phi, &psi).unwrap().iter().all(|r| r.holds);
        prop_assert_eq!(conds, match_family(&phi, &psi).unwrap().is_some());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    /// Exact polarization and pointwise evaluation of the sextic agree.
    #[test]
    fn sextic_polarization_is_sound(seed in any::<u64>(), a in 0u8..3) {
        let mut s = Sampler::new(seed);
        let u = s.generic_unit_quat();
        let spec = match a {
            0 => AlgSpec::isotope(1, &u, &Quat::one()),
            1 => AlgSpec::isotope(2, &s.unit_imag(), &Quat::one()),
            _ => AlgSpec::isotope(2, &u, &Quat::one()),
        };
        let alg = spec.build().unwrap();
        let exact = check_sextic_exact(&alg).holds;
        let pointwise = (0..20).all(|_| sextic_map(&alg, &s.rat_vec(4)).is_zero());
        prop_assert_eq!(exact, pointwise);
        prop_assert_eq!(exact, check_quadratic_criterion(&alg).unwrap().holds);
    }
}
