//! Classification of absolute-valued algebras with a left unit satisfying
//! `x²e = x²`.
//!
//! Eight-dimensional inputs are first moved so that the left unit becomes
//! `e₀`; the product is then read as `φ(x)•y` and, when `φ` preserves the two
//! quaternion halves, as a duplication pair `(φ, ψ)`. The pair is matched
//! against five normal forms and each match comes with a verified isomorphism
//! onto the canonical representative. Inputs that resist normalization fall
//! back to an invariant fingerprint, which is reported as such.

pub mod witness;

use serde::{Deserialize, Serialize};

use crate::algebra::{verify_isomorphism, AlgSpec, Algebra, Named, ROSTER};
use crate::arith::{MatQ, Oct, Quat, Rat, VecQ};
use crate::error::{Error, Result};
use crate::identity::check_quadratic_criterion;
use crate::isometry::{decompose_proper, FormName, IsoForm, IsoSpec};
use crate::sample::Sampler;

pub use witness::{
    chain_to_otilde_i, chain_to_star_oct_i1, duplication_spec, duplication_transport, inner_automorphism,
    inner_automorphism_matrix, isotope_isomorphism_check, left_slot_automorphism,
    left_slot_automorphism_matrix, oct_left_mul, oct_sandwich, signed_basis_automorphism,
    star_oct_left_to_right, star_oct_to_twisted_oct, star_oct_transport, IsoWitness, IsotopeCheck,
    StarOctCase, WitnessChain,
};

pub type ClassLabel = Named;

/// Raised when a pair `(σ, I)` is labelled: it is the twisted octonions, not
/// the one-sided isotope listed for it in the summary table.
pub const ERRATUM_SIGMA_IDENTITY: &str = "sigma_identity_pair_is_otilde";
/// Raised for the twisted octonions with a parameter: the computed fixed
/// subspace of the left unit has dimension 5, not 3.
pub const ERRATUM_FIXED_DIM: &str = "otilde_i_fixed_subspace_dim_5";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FamilyKind {
    /// `(I, I)`
    S1,
    /// `(I, −T_{a,a}σ)`
    S2,
    /// `(σ, ±I)`
    S3,
    /// `(T_{a,ā}σ, I)`, `a² = −1`
    S4,
    /// `(T_{a,ā}σ, T_{b,a})`, `a² = b² = −1`
    S5,
}

/// A matched normal form. Parameters are projective: normalized so the
/// leading coordinate has absolute value 1.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyTag {
    pub family: FamilyKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub a: Option<Quat>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub b: Option<Quat>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub psi_sign: Option<i8>,
}

impl FamilyTag {
    fn bare(family: FamilyKind) -> Self {
        FamilyTag { family, a: None, b: None, psi_sign: None }
    }

    pub fn label(&self) -> Named {
        match (self.family, self.psi_sign) {
            (FamilyKind::S1, _) => Named::O,
            (FamilyKind::S2 | FamilyKind::S4, _) => Named::StarOi,
            (FamilyKind::S3, Some(-1)) => Named::StarO,
            (FamilyKind::S3, _) => Named::OTilde,
            (FamilyKind::S5, _) => Named::OTildeI,
        }
    }

    pub fn errata(&self) -> Vec<String> {
        let mut out = Vec::new();
        if self.family == FamilyKind::S3 && self.psi_sign == Some(1) {
            out.push(ERRATUM_SIGMA_IDENTITY.to_string());
        }
        if self.family == FamilyKind::S5 {
            out.push(ERRATUM_FIXED_DIM.to_string());
        }
        out
    }
}

/// Proper part `(a, b)` of `m` when `m = T_{a,b}∘σ` (improper), normalized.
fn improper_params(m: &IsoForm) -> Option<(Quat, Quat)> {
    if m.is_proper() {
        return None;
    }
    decompose_proper(&m.compose(&IsoForm::sigma()).matrix().clone()).ok()
}

/// Matches `(φ, ψ)` against the five normal forms.
pub fn match_family(phi: &IsoForm, psi: &IsoForm) -> Result<Option<FamilyTag>> {
    if !phi.fixes_one() {
        return Err(Error::PhiDoesNotFixOne);
    }
    let id = IsoForm::identity();
    let sigma = IsoForm::sigma();
    if phi.same_map(&id) {
        if psi.same_map(&id) {
            return Ok(Some(FamilyTag::bare(FamilyKind::S1)));
        }
        if let Some((a, b)) = improper_params(&psi.negate()) {
            if a == b {
                return Ok(Some(FamilyTag { a: Some(a), ..FamilyTag::bare(FamilyKind::S2) }));
            }
        }
        return Ok(None);
    }
    if phi.same_map(&sigma) {
        let sign = if psi.same_map(&id) {
            1
        } else if psi.same_map(&id.negate()) {
            -1
        } else {
            return Ok(None);
        };
        return Ok(Some(FamilyTag { psi_sign: Some(sign), ..FamilyTag::bare(FamilyKind::S3) }));
    }
    let Some((a, abar)) = improper_params(phi) else { return Ok(None) };
    if !a.is_imaginary() || abar != -&a {
        return Ok(None);
    }
    if psi.same_map(&id) {
        return Ok(Some(FamilyTag { a: Some(a), ..FamilyTag::bare(FamilyKind::S4) }));
    }
    if !psi.is_proper() {
        return Ok(None);
    }
    let (b, c) = decompose_proper(psi.matrix())?;
    let b = if c == a {
        b
    } else if c == -&a {
        -&b
    } else {
        return Ok(None);
    };
    if !b.is_imaginary() {
        return Ok(None);
    }
    Ok(Some(FamilyTag { a: Some(a), b: Some(b), ..FamilyTag::bare(FamilyKind::S5) }))
}

pub const FAMILIES: [FamilyKind; 5] =
    [FamilyKind::S1, FamilyKind::S2, FamilyKind::S3, FamilyKind::S4, FamilyKind::S5];

impl FamilyKind {
    pub fn as_str(self) -> &'static str {
        match self {
            FamilyKind::S1 => "S1",
            FamilyKind::S2 => "S2",
            FamilyKind::S3 => "S3",
            FamilyKind::S4 => "S4",
            FamilyKind::S5 => "S5",
        }
    }

    /// A seeded member of the family. Imaginary parameters are drawn as
    /// `w̄ i w` so that the rotations onto `i` have rational unit
    /// representatives.
    pub fn sample(self, s: &mut Sampler) -> (IsoSpec, IsoSpec) {
        let twisted = |a: &Quat| IsoSpec::t_sigma(a, &a.conj());
        match self {
            FamilyKind::S1 => (IsoSpec::identity(), IsoSpec::identity()),
            FamilyKind::S2 => {
                let a = s.unit_quat();
                (IsoSpec::identity(), IsoSpec::t_sigma(&a, &a).negated())
            }
            FamilyKind::S3 => {
                let psi = if s.coin() { IsoSpec::identity() } else { IsoSpec::neg_identity() };
                (IsoSpec::sigma(), psi)
            }
            FamilyKind::S4 => (twisted(&s.rotated_i()), IsoSpec::identity()),
            FamilyKind::S5 => {
                let (a, b) = (s.rotated_i(), s.rotated_i());
                (twisted(&a), IsoSpec::t(&b, &a))
            }
        }
    }
}

pub fn family_to_class(tag: &FamilyTag) -> Named {
    tag.label()
}

/// Isomorphism invariants: dimension, `dim A_e`, the dimension of the
/// `−1`-eigenspace of `x ↦ xe`, and a sampled lower bound on the degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Fingerprint {
    pub dim: usize,
    pub fixed_dim: usize,
    pub anti_fixed_dim: usize,
    pub degree: usize,
}

pub fn invariant_fingerprint(a: &Algebra, samples: usize, seed: u64) -> Result<Fingerprint> {
    let e = a.left_unit().ok_or(Error::NoLeftUnit)?;
    Ok(Fingerprint {
        dim: a.dim(),
        fixed_dim: a.fixed_subspace(&e)?.dim(),
        anti_fixed_dim: a.anti_fixed_subspace(&e)?.dim(),
        degree: a.degree_sampled(samples, seed),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Route {
    /// Decided by dimension, commutativity or `dim A_e` (dimension ≤ 4).
    Invariants,
    /// Decided by a matched duplication normal form.
    Family,
    /// Decided by comparing fingerprints with the roster.
    Fingerprint,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessOutcome {
    pub role: String,
    pub target: Named,
    pub verified: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub label: Named,
    pub route: Route,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<FamilyTag>,
    pub fingerprint: Fingerprint,
    pub witnesses: Vec<WitnessOutcome>,
    pub errata_flags: Vec<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClassifyOptions {
    pub samples: usize,
    pub seed: u64,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        ClassifyOptions { samples: 20, seed: 7 }
    }
}

/// Form `(T, φ)` with `T` orthogonal and `T(A)` having product `φ(x)•y` on 𝕆.
#[derive(Debug, Clone)]
pub struct OctNormalForm {
    pub transport: MatQ,
    pub phi: MatQ,
}

impl OctNormalForm {
    /// The duplication pair when `φ` preserves both quaternion halves.
    pub fn duplication_pair(&self) -> Option<(IsoForm, IsoForm)> {
        let off = |r, c| self.phi.sub_block(r, c, 4, 4).is_zero();
        if !off(0, 4) || !off(4, 0) {
            return None;
        }
        let p = IsoForm::from_matrix(&self.phi.sub_block(0, 0, 4, 4)).ok()?;
        let q = IsoForm::from_matrix(&self.phi.sub_block(4, 4, 4, 4)).ok()?;
        Some((p, q))
    }
}

fn transported(a: &Algebra, t: &MatQ) -> Algebra {
    let inv = t.transpose();
    Algebra::from_bilinear(a.dim(), |x, y| t.mul_vec(&a.product(&inv.mul_vec(x), &inv.mul_vec(y))))
}

/// Moves the left unit to `e₀` by `x ↦ ē x` and reads off `φ = R_{e₀}`.
pub fn oct_normal_form(a: &Algebra) -> Option<OctNormalForm> {
    if a.dim() != 8 {
        return None;
    }
    let e = a.left_unit()?;
    let e_oct = Oct::from_vec(&e).ok()?;
    if !e_oct.is_unit() {
        return None;
    }
    let t = if e == VecQ::basis(8, 0) { MatQ::identity(8) } else { oct_left_mul(&e_oct.conj()) };
    let b = transported(a, &t);
    let phi = b.right_mul(&VecQ::basis(8, 0));
    if !phi.is_orthogonal() {
        return None;
    }
    let o = Named::O.build();
    let twisted = Algebra::from_bilinear(8, |x, y| o.product(&phi.mul_vec(x), y));
    (twisted.constants() == b.constants()).then_some(OctNormalForm { transport: t, phi })
}

/// Verified map from the duplication algebra of `(φ, ψ)` onto the canonical
/// representative of its family.
pub fn family_witness(tag: &FamilyTag, phi: &IsoForm, psi: &IsoForm) -> Result<IsoWitness> {
    let source = duplication_spec(phi, psi);
    let target = tag.label();
    match tag.family {
        FamilyKind::S1 | FamilyKind::S3 => {
            IsoWitness::new("same_product", source, AlgSpec::named(target), MatQ::identity(8))
        }
        FamilyKind::S4 => {
            let a = unit_first_param(phi)?;
            let chain = chain_to_star_oct_i1(&StarOctCase::TwistedFirst { a })?;
            Ok(chain.composite)
        }
        FamilyKind::S2 => {
            let b = unit_first_param(&psi.negate())?;
            let chain = chain_to_star_oct_i1(&StarOctCase::TwistedSecond { b })?;
            Ok(chain.composite)
        }
        FamilyKind::S5 => {
            let a = unit_first_param(phi)?;
            let (b, c) = unit_params(psi)?;
            let b = if c == a { b } else { -&b };
            Ok(chain_to_otilde_i(&a, &b)?.composite)
        }
    }
}

/// Rational units `(a, b)` with `f = T_{a,b}` or `f = T_{a,b}∘σ`.
fn unit_params(f: &IsoForm) -> Result<(Quat, Quat)> {
    let spec = f.to_spec().ok_or_else(|| Error::NoRationalUnit("isometry parameters".into()))?;
    let get = |v: &Option<Vec<Rat>>| -> Result<Quat> {
        v.as_deref().map_or_else(|| Ok(Quat::one()), Quat::from_slice)
    };
    let (a, b) = (get(&spec.a)?, get(&spec.b)?);
    // T_{−a,b} = −T_{a,b}
    let flip = spec.negate != (spec.form == FormName::NegIdentity);
    Ok((if flip { -&a } else { a }, b))
}

fn unit_first_param(f: &IsoForm) -> Result<Quat> {
    Ok(unit_params(f)?.0)
}

/// Checks the standing hypotheses: absolute-valued, left unit, `x²e = x²`.
pub fn check_hypotheses(a: &Algebra) -> Result<()> {
    let violated = |check: &str| Error::HypothesesViolated { check: check.into() };
    if !a.is_absolute_valued() {
        return Err(violated("absolute_valued"));
    }
    if a.left_unit().is_none() {
        return Err(violated("left_unit"));
    }
    if !check_quadratic_criterion(a)?.holds {
        return Err(violated("quadratic_criterion"));
    }
    Ok(())
}

fn is_commutative(a: &Algebra) -> bool {
    let n = a.dim();
    (0..n).all(|i| (i + 1..n).all(|j| a.constant(i, j) == a.constant(j, i)))
}

/// Fingerprints of the eleven representatives.
pub fn roster_fingerprints(samples: usize, seed: u64) -> Vec<(Named, Fingerprint)> {
    use rayon::prelude::*;
    ROSTER
        .par_iter()
        .map(|&n| (n, invariant_fingerprint(&n.build(), samples, seed).expect("roster has left units")))
        .collect()
}

pub fn classify(spec: &AlgSpec, opts: ClassifyOptions) -> Result<Classification> {
    let a = spec.build()?;
    classify_algebra(&a, opts)
}

pub fn classify_algebra(a: &Algebra, opts: ClassifyOptions) -> Result<Classification> {
    check_hypotheses(a)?;
    let fingerprint = invariant_fingerprint(a, opts.samples, opts.seed)?;
    let by_invariants = |label: Named| Classification {
        label,
        route: Route::Invariants,
        family: None,
        fingerprint,
        witnesses: Vec::new(),
        errata_flags: Vec::new(),
    };
    match (a.dim(), fingerprint.fixed_dim) {
        (1, _) => return Ok(by_invariants(Named::R)),
        (2, _) => return Ok(by_invariants(if is_commutative(a) { Named::C } else { Named::StarC })),
        (4, 4) => return Ok(by_invariants(Named::H)),
        (4, 1) => return Ok(by_invariants(Named::StarH)),
        (4, 3) => return Ok(by_invariants(Named::StarHi)),
        (8, _) => {}
        (d, f) => return Err(Error::Unclassified(format!("dim {d}, dim A_e {f}"))),
    }
    if let Some(c) = classify_by_family(a, fingerprint)? {
        return Ok(c);
    }
    classify_by_fingerprint(fingerprint, opts)
}

fn classify_by_family(a: &Algebra, fingerprint: Fingerprint) -> Result<Option<Classification>> {
    let Some(nf) = oct_normal_form(a) else { return Ok(None) };
    let Some((phi, psi)) = nf.duplication_pair() else { return Ok(None) };
    let Some(tag) = match_family(&phi, &psi)? else { return Ok(None) };
    let label = tag.label();
    let outcome = match family_witness(&tag, &phi, &psi) {
        Ok(w) => {
            let map = w.map.mul_mat(&nf.transport);
            WitnessOutcome {
                role: w.role,
                target: label,
                verified: verify_isomorphism(a, &label.build(), &map),
                error: None,
            }
        }
        Err(e) => WitnessOutcome { role: "family_chain".into(), target: label, verified: false, error: Some(e.to_string()) },
    };
    Ok(Some(Classification {
        label,
        route: Route::Family,
        errata_flags: tag.errata(),
        family: Some(tag),
        fingerprint,
        witnesses: vec![outcome],
    }))
}

fn classify_by_fingerprint(fp: Fingerprint, opts: ClassifyOptions) -> Result<Classification> {
    let hits: Vec<Named> =
        roster_fingerprints(opts.samples, opts.seed).into_iter().filter(|(_, f)| *f == fp).map(|(n, _)| n).collect();
    match hits.as_slice() {
        [label] => Ok(Classification {
            label: *label,
            route: Route::Fingerprint,
            family: None,
            fingerprint: fp,
            witnesses: Vec::new(),
            errata_flags: Vec::new(),
        }),
        [] => Err(Error::Unclassified(format!("no representative has fingerprint {fp:?}"))),
        many => Err(Error::Unclassified(format!(
            "fingerprint {fp:?} is shared by {}",
            many.iter().map(|n| n.as_str()).collect::<Vec<_>>().join(", ")
        ))),
    }
}

/// The duplication spec of a matched pair, for reporting.
pub fn pair_spec(phi: &IsoSpec, psi: &IsoSpec) -> AlgSpec {
    AlgSpec::duplication(phi.clone(), psi.clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::isometry::realize;

    fn pair(phi: IsoSpec, psi: IsoSpec) -> (IsoForm, IsoForm) {
        (realize(&phi).unwrap(), realize(&psi).unwrap())
    }

    #[test]
    fn families_match() {
        let (i, j, k) = (Quat::i(), Quat::j(), Quat::k());
        let cases = [
            (IsoSpec::identity(), IsoSpec::identity(), FamilyKind::S1),
            (IsoSpec::identity(), IsoSpec::t_sigma(&j, &j).negated(), FamilyKind::S2),
            (IsoSpec::sigma(), IsoSpec::identity(), FamilyKind::S3),
            (IsoSpec::sigma(), IsoSpec::neg_identity(), FamilyKind::S3),
            (IsoSpec::t_sigma(&i, &-&i), IsoSpec::identity(), FamilyKind::S4),
            (IsoSpec::t_sigma(&k, &-&k), IsoSpec::t(&j, &k), FamilyKind::S5),
        ];
        for (f, g, kind) in cases {
            let (p, q) = pair(f, g);
            assert_eq!(match_family(&p, &q).unwrap().unwrap().family, kind);
        }
        let (p, q) = pair(IsoSpec::identity(), IsoSpec::sigma());
        assert_eq!(match_family(&p, &q).unwrap(), None);
        let (p, q) = pair(IsoSpec::neg_identity(), IsoSpec::identity());
        assert_eq!(match_family(&p, &q).unwrap_err(), Error::PhiDoesNotFixOne);
    }

    #[test]
    fn roster_classifies_to_itself() {
        let opts = ClassifyOptions { samples: 4, seed: 7 };
        for n in ROSTER {
            let c = classify(&AlgSpec::named(n), opts).unwrap();
            assert_eq!(c.label, n, "{n}");
            assert!(c.witnesses.iter().all(|w| w.verified), "{n}: {:?}", c.witnesses);
        }
    }

    #[test]
    fn hypotheses_rejected() {
        let s = AlgSpec::isotope(1, &Quat::i(), &Quat::one());
        assert!(matches!(
            classify(&s, ClassifyOptions::default()).unwrap_err(),
            Error::HypothesesViolated { .. }
        ));
    }
}
