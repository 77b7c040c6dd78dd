use ava_core::algebra::{verify_isomorphism, AlgSpec, Named, ROSTER};
use ava_core::arith::{MatQ, Oct, Quat};
use ava_core::classify::{
    chain_to_otilde_i, chain_to_star_oct_i1, classify, classify_algebra, invariant_fingerprint,
    left_slot_automorphism, star_oct_left_to_right, star_oct_to_twisted_oct, ClassifyOptions, FamilyKind,
    Fingerprint, Route, StarOctCase, ERRATUM_FIXED_DIM, ERRATUM_SIGMA_IDENTITY,
};
use ava_core::error::Error;
use ava_core::isometry::{realize, IsoSpec};
use ava_core::sample::Sampler;

fn opts() -> ClassifyOptions {
    ClassifyOptions { samples: 8, seed: 1 }
}

fn dup(phi: IsoSpec, psi: IsoSpec) -> AlgSpec {
    AlgSpec::duplication(phi, psi)
}

#[test]
fn labels_of_the_pair_table() {
    let i = Quat::i();
    let cases = [
        (dup(IsoSpec::identity(), IsoSpec::identity()), Named::O),
        (dup(IsoSpec::sigma(), IsoSpec::neg_identity()), Named::StarO),
        (dup(IsoSpec::sigma(), IsoSpec::identity()), Named::OTilde),
        (dup(IsoSpec::identity(), IsoSpec::t_sigma(&i, &i).negated()), Named::StarOi),
        (dup(IsoSpec::t_sigma(&i, &i.conj()), IsoSpec::identity()), Named::StarOi),
        (dup(IsoSpec::t_sigma(&i, &i.conj()), IsoSpec::t(&Quat::j(), &i)), Named::OTildeI),
    ];
    for (spec, label) in cases {
        let c = classify(&spec, opts()).unwrap();
        assert_eq!(c.label, label, "{spec:?}");
        assert_eq!(c.route, Route::Family);
        assert!(c.witnesses.iter().all(|w| w.verified), "{spec:?}");
    }
}

#[test]
fn corrected_rows_carry_errata_flags() {
    let c = classify(&dup(IsoSpec::sigma(), IsoSpec::identity()), opts()).unwrap();
    assert_eq!(c.errata_flags, [ERRATUM_SIGMA_IDENTITY]);
    let i = Quat::i();
    let c = classify(&dup(IsoSpec::t_sigma(&i, &i.conj()), IsoSpec::t(&i, &i)), opts()).unwrap();
    assert_eq!(c.errata_flags, [ERRATUM_FIXED_DIM]);
    assert_eq!(c.family.unwrap().family, FamilyKind::S5);
}

#[test]
fn one_sided_octonion_isotopes_are_star_oct_i1() {
    let mut s = Sampler::new(11);
    let mut params: Vec<Oct> = (1..8).map(Oct::basis).collect();
    params.extend((0..3).map(|_| s.unit_imag_oct()));
    for a in params {
        for spec in [AlgSpec::star_oct_left(&a), AlgSpec::star_oct_right(&a)] {
            let c = classify(&spec, opts()).unwrap();
            assert_eq!(c.label, Named::StarOi, "{spec:?}");
            assert!(c.witnesses.iter().all(|w| w.verified), "{spec:?} {:?}", c.witnesses);
        }
    }
}

#[test]
fn roster_fingerprints() {
    let fp = |n: Named| invariant_fingerprint(&n.build(), 8, 1).unwrap();
    assert_eq!(fp(Named::O), Fingerprint { dim: 8, fixed_dim: 8, anti_fixed_dim: 0, degree: 2 });
    let fixed: Vec<usize> =
        [Named::O, Named::StarO, Named::StarOi, Named::OTilde, Named::OTildeI].iter().map(|&n| fp(n).fixed_dim).collect();
    assert_eq!(fixed, [8, 1, 7, 5, 5]);
    // The two twisted octonion algebras are not separated by these invariants.
    assert_eq!(fp(Named::OTilde), fp(Named::OTildeI));
}

#[test]
fn twisted_octonion_fixed_subspace_from_the_pair() {
    // A_e of the twisted octonions with parameter i, read off the pair:
    // fixed vectors of T_{i,ī}∘σ and of T_{i,i}, independently of the algebra.
    let i = Quat::i();
    let fixed = |spec: IsoSpec| (realize(&spec).unwrap().matrix() - &MatQ::identity(4)).kernel().len();
    let from_pair = fixed(IsoSpec::t_sigma(&i, &i.conj())) + fixed(IsoSpec::t(&i, &i));
    let a = Named::OTildeI.build();
    let e = a.left_unit().unwrap();
    assert_eq!(a.fixed_subspace(&e).unwrap().dim(), from_pair);
    assert_eq!(from_pair, 5);
}

#[test]
fn roster_classifies_to_itself() {
    for n in ROSTER {
        let c = classify(&AlgSpec::named(n), opts()).unwrap();
        assert_eq!(c.label, n);
    }
}

#[test]
fn rejects_algebras_outside_the_hypotheses() {
    let u = Sampler::new(5).generic_unit_quat();
    let err = classify(&AlgSpec::isotope(1, &u, &Quat::one()), opts()).unwrap_err();
    assert!(matches!(err, Error::HypothesesViolated { ref check } if check == "quadratic_criterion"));
}

#[test]
fn ambiguous_fingerprints_are_not_guessed() {
    // Õ(i) moved by a generic orthogonal change of basis that keeps e₀ but
    // mixes the quaternion halves escapes the pair reading.
    let a = Named::OTildeI.build();
    let c = classify_algebra(&a, opts()).unwrap();
    assert_eq!(c.label, Named::OTildeI);
    let mut s = Sampler::new(2);
    let u = s.unit_oct();
    let m = ava_core::classify::oct_sandwich(&u);
    let inv = m.transpose();
    let moved = ava_core::algebra::Algebra::from_bilinear(8, |x, y| m.mul_vec(&a.product(&inv.mul_vec(x), &inv.mul_vec(y))));
    match classify_algebra(&moved, opts()) {
        Ok(c) => {
            assert_eq!(c.label, Named::OTildeI);
            assert!(c.witnesses.iter().all(|w| w.verified));
        }
        Err(Error::Unclassified(msg)) => assert!(msg.contains("OTilde")),
        Err(e) => panic!("{e}"),
    }
}

#[test]
fn witness_chains_for_seeded_parameters() {
    let mut s = Sampler::new(21);
    for _ in 0..5 {
        let a = s.rotated_i();
        assert!(chain_to_star_oct_i1(&StarOctCase::TwistedFirst { a }).unwrap().verified());
        let b = s.unit_quat();
        assert!(chain_to_star_oct_i1(&StarOctCase::TwistedSecond { b }).unwrap().verified());
        let (a, b) = (s.rotated_i(), s.rotated_i());
        assert!(chain_to_otilde_i(&a, &b).unwrap().verified());
        let o = s.unit_imag_oct();
        assert!(star_oct_to_twisted_oct(&o).unwrap().verified);
        assert!(star_oct_left_to_right(&o).unwrap().verified);
        assert!(left_slot_automorphism(&s.unit_quat()).unwrap().verified);
    }
}

#[test]
fn witnesses_compose_to_isomorphisms() {
    let a = Quat::j();
    let chain = chain_to_star_oct_i1(&StarOctCase::TwistedFirst { a: a.clone() }).unwrap();
    let src = StarOctCase::TwistedFirst { a }.source().build().unwrap();
    assert!(verify_isomorphism(&src, &Named::StarOi.build(), &chain.composite.map));
    assert!(!verify_isomorphism(&src, &Named::OTilde.build(), &chain.composite.map));
}
