//! Explicit isomorphisms between eight-dimensional algebras, each checked on
//! all 64 basis pairs before it is reported as verified.

use serde::{Deserialize, Serialize};

use crate::algebra::{verify_isomorphism, AlgSpec, Algebra, Named};
use crate::arith::{MatQ, Oct, Quat, VecQ};
use crate::error::{Error, Result};
use crate::isometry::{conjugator, left_mul_matrix, unit_conjugator, IsoForm, IsoSpec};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsoWitness {
    pub role: String,
    pub source: AlgSpec,
    pub target: AlgSpec,
    pub map: MatQ,
    pub verified: bool,
}

impl IsoWitness {
    pub fn new(role: &str, source: AlgSpec, target: AlgSpec, map: MatQ) -> Result<Self> {
        let (a, b) = (source.build()?, target.build()?);
        let verified = verify_isomorphism(&a, &b, &map);
        Ok(IsoWitness { role: role.into(), source, target, map, verified })
    }

    /// Composite of a chain `steps[0]`, then `steps[1]`, ….
    pub fn compose(role: &str, steps: &[IsoWitness]) -> Result<Self> {
        let first = steps.first().ok_or_else(|| Error::InvalidParameter("empty chain".into()))?;
        let last = steps.last().expect("nonempty");
        let map = steps[1..].iter().fold(first.map.clone(), |acc, s| s.map.mul_mat(&acc));
        IsoWitness::new(role, first.source.clone(), last.target.clone(), map)
    }

    /// Checks that the map carries `A_e` of the source onto `B_{Φ(e)}` of the
    /// target.
    pub fn transports_fixed_subspace(&self) -> Result<bool> {
        let (a, b) = (self.source.build()?, self.target.build()?);
        let e = a.left_unit().ok_or(Error::NoLeftUnit)?;
        let fe = self.map.mul_vec(&e);
        Ok(a.fixed_subspace(&e)?.image(&self.map) == b.fixed_subspace(&fe)?)
    }
}

/// A chain of verified steps with its composite.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessChain {
    pub steps: Vec<IsoWitness>,
    pub composite: IsoWitness,
}

impl WitnessChain {
    fn new(role: &str, steps: Vec<IsoWitness>) -> Result<Self> {
        let composite = IsoWitness::compose(role, &steps)?;
        Ok(WitnessChain { steps, composite })
    }

    pub fn verified(&self) -> bool {
        self.composite.verified && self.steps.iter().all(|s| s.verified)
    }
}

/// Matrix of `z ↦ a z` on 𝕆.
pub fn oct_left_mul(a: &Oct) -> MatQ {
    let cols: Vec<VecQ> = (0..8).map(|k| a.cd_product(&Oct::basis(k)).to_vec()).collect();
    MatQ::from_columns(&cols)
}

/// Matrix of `z ↦ a z ā` on 𝕆.
pub fn oct_sandwich(a: &Oct) -> MatQ {
    let cols: Vec<VecQ> = (0..8).map(|k| Oct::sandwich(a, &Oct::basis(k)).to_vec()).collect();
    MatQ::from_columns(&cols)
}

fn square_is_pm_one(a: &Oct) -> bool {
    let s = a.cd_product(a);
    s == Oct::one() || s == -&Oct::one()
}

/// The twisted form `𝕆_φ` with `φ(z) = a z̄ ā`.
fn twisted_oct(a: &Oct) -> AlgSpec {
    let v = a.to_vec().0;
    let c = a.conj().to_vec().0;
    AlgSpec::APhi {
        base: crate::algebra::Base::O,
        phi: IsoSpec { form: crate::isometry::FormName::TSigma, a: Some(v), b: Some(c), negate: false },
    }
}

/// `x ↦ āx` from `*𝕆(a, 1)` onto `𝕆_φ`, `φ(z) = a z̄ ā`, for `a² = ±1`.
pub fn star_oct_to_twisted_oct(a: &Oct) -> Result<IsoWitness> {
    if !a.is_unit() {
        return Err(Error::NonUnitParameter(format!("|a|^2 = {}", a.norm2())));
    }
    if !square_is_pm_one(a) {
        return Err(Error::SquareNotPlusMinusOne);
    }
    IsoWitness::new("star_oct_to_twisted_oct", AlgSpec::star_oct_left(a), twisted_oct(a), oct_left_mul(&a.conj()))
}

/// `x ↦ a x ā` from the left to the right one-sided isotope, `a² = ±1`.
pub fn star_oct_left_to_right(a: &Oct) -> Result<IsoWitness> {
    if !a.is_unit() {
        return Err(Error::NonUnitParameter(format!("|a|^2 = {}", a.norm2())));
    }
    if !square_is_pm_one(a) {
        return Err(Error::SquareNotPlusMinusOne);
    }
    let map = if a.cd_product(a) == Oct::one() { MatQ::identity(8) } else { oct_sandwich(a) };
    IsoWitness::new("star_oct_left_to_right", AlgSpec::star_oct_left(a), AlgSpec::star_oct_right(a), map)
}

/// `(x, y) ↦ (u x u⁻¹, u y u⁻¹)`, an automorphism of 𝕆 for any nonzero `u`.
pub fn inner_automorphism_matrix(u: &Quat) -> Result<MatQ> {
    let p = IsoForm::inner(u)?;
    Ok(MatQ::block_diag(p.matrix(), p.matrix()))
}

pub fn inner_automorphism(u: &Quat) -> Result<IsoWitness> {
    let o = AlgSpec::named(Named::O);
    IsoWitness::new("inner_automorphism", o.clone(), o, inner_automorphism_matrix(u)?)
}

/// `(x, y) ↦ (x, a y)` for a unit `a`.
pub fn left_slot_automorphism_matrix(a: &Quat) -> Result<MatQ> {
    if !a.is_unit() {
        return Err(Error::NonUnitParameter(format!("|a|^2 = {}", a.norm2())));
    }
    Ok(MatQ::block_diag(&MatQ::identity(4), &left_mul_matrix(a)))
}

pub fn left_slot_automorphism(a: &Quat) -> Result<IsoWitness> {
    let o = AlgSpec::named(Named::O);
    IsoWitness::new("left_slot_automorphism", o.clone(), o, left_slot_automorphism_matrix(a)?)
}

/// An automorphism `Φ` of 𝕆 is an isomorphism `*𝕆ₗ(a,1) → *𝕆ₗ(Φ(a),1)`.
pub fn star_oct_transport(a: &Oct, automorphism: &MatQ) -> Result<IsoWitness> {
    let b = Oct::from_vec(&automorphism.mul_vec(&a.to_vec()))?;
    IsoWitness::new(
        "star_oct_transport",
        AlgSpec::star_oct_left(a),
        AlgSpec::star_oct_left(&b),
        automorphism.clone(),
    )
}

/// A block-diagonal automorphism `(P, Q)` of 𝕆 carries the duplication
/// algebra of `(φ, ψ)` onto that of `(PφP⁻¹, QψQ⁻¹)`.
pub fn duplication_transport(
    role: &str,
    p: &MatQ,
    q: &MatQ,
    phi: &IsoForm,
    psi: &IsoForm,
) -> Result<(IsoWitness, IsoForm, IsoForm)> {
    let conj = |m: &MatQ, f: &IsoForm| IsoForm::from_matrix(&m.mul_mat(f.matrix()).mul_mat(&m.transpose()));
    let (phi2, psi2) = (conj(p, phi)?, conj(q, psi)?);
    let w = IsoWitness::new(
        role,
        duplication_spec(phi, psi),
        duplication_spec(&phi2, &psi2),
        MatQ::block_diag(p, q),
    )?;
    Ok((w, phi2, psi2))
}

/// Duplication spec of a pair; falls back to raw structure constants when a
/// map has no rational unit-parameter description.
pub fn duplication_spec(phi: &IsoForm, psi: &IsoForm) -> AlgSpec {
    match (phi.to_spec(), psi.to_spec()) {
        (Some(f), Some(g)) => AlgSpec::duplication(f, g),
        _ => {
            let a = crate::algebra::duplication_algebra(phi, psi);
            AlgSpec::Structure { dim: 8, constants: a.constants().to_vec() }
        }
    }
}

/// A signed permutation of `e₁..e₇` that is an automorphism of 𝕆 and sends
/// `e_from` to `e_to`. Automorphisms are determined by the images of the
/// generators `e₁, e₂, e₄`; candidates are scanned in a fixed order.
pub fn signed_basis_automorphism(from: usize, to: usize) -> Option<MatQ> {
    let o = Named::O.build();
    let signed = |k: usize, s: bool| if s { -&Oct::basis(k) } else { Oct::basis(k) };
    let candidates: Vec<Oct> = (1..8).flat_map(|k| [signed(k, false), signed(k, true)]).collect();
    for f1 in &candidates {
        for f2 in &candidates {
            for f4 in &candidates {
                let f3 = f1.cd_product(f2);
                let images = [
                    Oct::one(),
                    f1.clone(),
                    f2.clone(),
                    f3.clone(),
                    f4.clone(),
                    f1.cd_product(f4),
                    f2.cd_product(f4),
                    f3.cd_product(f4),
                ];
                if images[from] != Oct::basis(to) {
                    continue;
                }
                let m = MatQ::from_columns(&images.iter().map(Oct::to_vec).collect::<Vec<_>>());
                if m.is_orthogonal() && verify_isomorphism(&o, &o, &m) {
                    return Some(m);
                }
            }
        }
    }
    None
}

fn require_unit_imag(name: &str, a: &Quat) -> Result<()> {
    if !a.is_unit() {
        return Err(Error::NonUnitParameter(format!("|{name}|^2 = {}", a.norm2())));
    }
    if !a.is_imaginary() {
        return Err(Error::InvalidParameter(format!("{name} = {a} must be purely imaginary")));
    }
    Ok(())
}

/// A unit `u` with `u a u⁻¹ = b` when a rational one exists, otherwise any
/// nonzero solution (inner conjugation is insensitive to scale).
fn rotation_taking(a: &Quat, b: &Quat) -> Result<Quat> {
    unit_conjugator(a, b).or_else(|_| conjugator(a, b))
}

/// The two chains onto `*𝕆(i, 1)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "case", rename_all = "snake_case")]
pub enum StarOctCase {
    /// `(T_{a,ā}σ, I)` with `a` an imaginary unit.
    TwistedFirst { a: Quat },
    /// `(I, −T_{b,b}σ)` with `b` a unit.
    TwistedSecond { b: Quat },
}

impl StarOctCase {
    pub fn source(&self) -> AlgSpec {
        match self {
            StarOctCase::TwistedFirst { a } => AlgSpec::duplication(IsoSpec::t_sigma(a, &a.conj()), IsoSpec::identity()),
            StarOctCase::TwistedSecond { b } => {
                AlgSpec::duplication(IsoSpec::identity(), IsoSpec::t_sigma(b, b).negated())
            }
        }
    }
}

/// Duplication algebra → `𝕆_φ` (same product) → `*𝕆(A, 1)` by `x ↦ Ax` →
/// `*𝕆(e₁, 1)` by automorphisms of 𝕆 moving `A` to `e₁`.
pub fn chain_to_star_oct_i1(case: &StarOctCase) -> Result<WitnessChain> {
    let (big_a, mut moves): (Oct, Vec<MatQ>) = match case {
        StarOctCase::TwistedFirst { a } => {
            require_unit_imag("a", a)?;
            let u = rotation_taking(a, &Quat::i())?;
            (Oct::from_quat(a.clone()), vec![inner_automorphism_matrix(&u)?])
        }
        StarOctCase::TwistedSecond { b } => {
            if !b.is_unit() {
                return Err(Error::NonUnitParameter(format!("|b|^2 = {}", b.norm2())));
            }
            let to_e1 = signed_basis_automorphism(4, 1).expect("octonion basis admits e4 -> e1");
            (Oct::new(Quat::zero(), b.clone()), vec![left_slot_automorphism_matrix(&b.conj())?, to_e1])
        }
    };
    let source = case.source();
    let mut steps = vec![IsoWitness::new("same_product", source, twisted_oct(&big_a), MatQ::identity(8))?];
    let back = star_oct_to_twisted_oct(&big_a)?;
    steps.push(IsoWitness::new(
        "twisted_oct_to_star_oct",
        back.target.clone(),
        back.source.clone(),
        oct_left_mul(&big_a),
    )?);
    let mut current = big_a;
    for m in moves.drain(..) {
        let w = star_oct_transport(&current, &m)?;
        current = Oct::from_vec(&m.mul_vec(&current.to_vec()))?;
        steps.push(w);
    }
    debug_assert_eq!(current, Oct::basis(1));
    let mut chain = WitnessChain::new("chain_to_star_oct_i1", steps)?;
    chain.composite.target = AlgSpec::named(Named::StarOi);
    chain.composite.verified = verify_isomorphism(
        &chain.composite.source.build()?,
        &Named::StarOi.build(),
        &chain.composite.map,
    );
    Ok(chain)
}

/// `(T_{a,ā}σ, T_{b,a})` → `(T_{i,ī}σ, T_{b′,i})` by an inner automorphism
/// moving `a` to `i`, then → `(T_{i,ī}σ, T_{i,i})` by `(x, y) ↦ (x, vy)` with
/// `v b′ v̄ = i`.
pub fn chain_to_otilde_i(a: &Quat, b: &Quat) -> Result<WitnessChain> {
    require_unit_imag("a", a)?;
    require_unit_imag("b", b)?;
    let phi = IsoForm::tab_conj_sigma(a)?;
    let psi = IsoForm::tab(b, a)?;
    let u = rotation_taking(a, &Quat::i())?;
    let p = IsoForm::inner(&u)?;
    let (w1, phi1, psi1) = duplication_transport("inner_automorphism", p.matrix(), p.matrix(), &phi, &psi)?;
    let b1 = b.conjugate_by(&u);
    let v = unit_conjugator(&b1, &Quat::i())?;
    let (w2, _, _) = duplication_transport(
        "left_slot_automorphism",
        &MatQ::identity(4),
        &left_mul_matrix(&v),
        &phi1,
        &psi1,
    )?;
    let mut chain = WitnessChain::new("chain_to_otilde_i", vec![w1, w2])?;
    chain.composite.target = AlgSpec::named(Named::OTildeI);
    chain.composite.verified =
        verify_isomorphism(&chain.composite.source.build()?, &Named::OTildeI.build(), &chain.composite.map);
    Ok(chain)
}

/// Outcome of the four-dimensional isomorphism criterion for principal
/// isotopes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsotopeCheck {
    pub equations_hold: bool,
    pub same_family: bool,
    /// Whether `x ↦ εδ p x p⁻¹` is a verified isomorphism; absent when the
    /// equations fail.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub induced_verified: Option<bool>,
}

impl IsotopeCheck {
    pub fn holds(&self) -> bool {
        self.equations_hold && self.same_family && self.induced_verified == Some(true)
    }
}

/// Checks `a′p = εpa`, `b′p = δpb` and, when they hold and the families
/// agree, verifies the induced map between the two isotopes.
#[allow(clippy::too_many_arguments)]
pub fn isotope_isomorphism_check(
    m: u8,
    a: &Quat,
    b: &Quat,
    m2: u8,
    a2: &Quat,
    b2: &Quat,
    p: &Quat,
    eps: i8,
    delta: i8,
) -> Result<IsotopeCheck> {
    if ![1, -1].contains(&eps) || ![1, -1].contains(&delta) {
        return Err(Error::InvalidParameter("signs must be +-1".into()));
    }
    if p.is_zero() {
        return Err(Error::InvalidParameter("p must be nonzero".into()));
    }
    let sgn = |s: i8, q: &Quat| if s < 0 { -q } else { q.clone() };
    let equations_hold = a2.mul(p) == sgn(eps, &p.mul(a)) && b2.mul(p) == sgn(delta, &p.mul(b));
    let same_family = m == m2;
    let induced_verified = if equations_hold && same_family {
        let inner = IsoForm::inner(p)?;
        let map = if eps * delta < 0 { -inner.matrix() } else { inner.matrix().clone() };
        let src = AlgSpec::isotope(m, a, b).build()?;
        let dst = AlgSpec::isotope(m2, a2, b2).build()?;
        Some(verify_isomorphism(&src, &dst, &map))
    } else {
        None
    };
    Ok(IsotopeCheck { equations_hold, same_family, induced_verified })
}

/// Algebra on which every step above is evaluated; exposed for tests.
pub fn build(spec: &AlgSpec) -> Result<Algebra> {
    spec.build()
}
