//! Linear isometries of Euclidean ℍ.
//!
//! An [`IsoForm`] carries a symbolic description (identity, the standard
//! involution σ, `T_{a,b}: x ↦ axb`, inner conjugations and compositions) and
//! the exact 4×4 orthogonal matrix it denotes on the basis `(1, i, j, k)`.
//! All predicates are evaluated on the matrix, so the symbolic tag does not
//! need to be canonical.
//!
//! Recovering `(a, b)` from a proper isometry is done projectively: a rational
//! orthogonal matrix may only be reachable from irrational unit quaternions,
//! but the rank-one coefficient matrix `K = a bᵀ` is always rational.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{MatQ, Quat, Rat, VecQ};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum IsoKind {
    Identity,
    Sigma,
    /// `x ↦ a x b` with unit `a`, `b`.
    Tab { a: Quat, b: Quat },
    /// `x ↦ u x u⁻¹` for any nonzero `u`.
    InnerConj { u: Quat },
    /// `outer ∘ inner`
    Compose { outer: Box<IsoForm>, inner: Box<IsoForm> },
    /// Only the matrix is known.
    Explicit,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsoForm {
    pub kind: IsoKind,
    pub negated: bool,
    matrix: MatQ,
}

fn sigma_matrix() -> MatQ {
    MatQ::diag(&[Rat::one(), -Rat::one(), -Rat::one(), -Rat::one()])
}

/// Matrix of `x ↦ a x b` (no normalization).
pub fn sandwich_matrix(a: &Quat, b: &Quat) -> MatQ {
    let cols: Vec<VecQ> = (0..4).map(|k| a.mul(&Quat::basis(k)).mul(b).to_vec()).collect();
    MatQ::from_columns(&cols)
}

/// Matrix of `x ↦ a x`.
pub fn left_mul_matrix(a: &Quat) -> MatQ {
    sandwich_matrix(a, &Quat::one())
}

/// Matrix of `x ↦ x b`.
pub fn right_mul_matrix(b: &Quat) -> MatQ {
    sandwich_matrix(&Quat::one(), b)
}

fn require_unit(name: &str, q: &Quat) -> Result<()> {
    if q.is_unit() {
        Ok(())
    } else {
        Err(Error::NonUnitParameter(format!("|{name}|^2 = {} for {name} = {q}", q.norm2())))
    }
}

impl IsoForm {
    pub fn identity() -> Self {
        IsoForm { kind: IsoKind::Identity, negated: false, matrix: MatQ::identity(4) }
    }

    pub fn neg_identity() -> Self {
        Self::identity().negate()
    }

    pub fn sigma() -> Self {
        IsoForm { kind: IsoKind::Sigma, negated: false, matrix: sigma_matrix() }
    }

    pub fn tab(a: &Quat, b: &Quat) -> Result<Self> {
        require_unit("a", a)?;
        require_unit("b", b)?;
        Ok(IsoForm {
            kind: IsoKind::Tab { a: a.clone(), b: b.clone() },
            negated: false,
            matrix: sandwich_matrix(a, b),
        })
    }

    /// `T_{a,b} ∘ σ`
    pub fn tab_sigma(a: &Quat, b: &Quat) -> Result<Self> {
        Ok(Self::tab(a, b)?.compose(&Self::sigma()))
    }

    /// `T_{a,ā}`
    pub fn tab_conj(a: &Quat) -> Result<Self> {
        Self::tab(a, &a.conj())
    }

    /// `T_{a,ā} ∘ σ`
    pub fn tab_conj_sigma(a: &Quat) -> Result<Self> {
        Self::tab_sigma(a, &a.conj())
    }

    /// `x ↦ u x u⁻¹`
    pub fn inner(u: &Quat) -> Result<Self> {
        if u.is_zero() {
            return Err(Error::InvalidParameter("inner conjugation by zero".into()));
        }
        let m = sandwich_matrix(u, &u.conj()).scale(&u.norm2().recip());
        Ok(IsoForm { kind: IsoKind::InnerConj { u: u.clone() }, negated: false, matrix: m })
    }

    /// Wraps an orthogonal matrix; the symbolic form is recognized when possible.
    pub fn from_matrix(m: &MatQ) -> Result<Self> {
        if m.rows() != 4 || !m.is_orthogonal() {
            return Err(Error::InvalidParameter("not an orthogonal 4x4 matrix".into()));
        }
        Ok(recognize(m))
    }

    /// `self ∘ inner`
    pub fn compose(&self, inner: &IsoForm) -> IsoForm {
        IsoForm {
            kind: IsoKind::Compose { outer: Box::new(self.clone()), inner: Box::new(inner.clone()) },
            negated: false,
            matrix: self.matrix.mul_mat(&inner.matrix),
        }
    }

    pub fn negate(&self) -> IsoForm {
        IsoForm { kind: self.kind.clone(), negated: !self.negated, matrix: -&self.matrix }
    }

    pub fn matrix(&self) -> &MatQ {
        &self.matrix
    }

    pub fn apply(&self, x: &Quat) -> Quat {
        Quat::from_vec(&self.matrix.mul_vec(&x.to_vec())).expect("4x4")
    }

    pub fn det(&self) -> Rat {
        self.matrix.det()
    }

    pub fn is_proper(&self) -> bool {
        self.det().is_one()
    }

    pub fn fixes_one(&self) -> bool {
        self.apply(&Quat::one()) == Quat::one()
    }

    pub fn is_involutive(&self) -> bool {
        self.matrix.mul_mat(&self.matrix).is_identity()
    }

    pub fn same_map(&self, other: &IsoForm) -> bool {
        self.matrix == other.matrix
    }

    /// Inverse isometry (the transpose), recognized symbolically when possible.
    pub fn inverse(&self) -> IsoForm {
        recognize(&self.matrix.transpose())
    }

    /// `x ↦ u f(u⁻¹ x u) u⁻¹`, tracked structurally.
    pub fn conjugate_inner(&self, u: &Quat) -> IsoForm {
        let kind = match &self.kind {
            IsoKind::Identity => IsoKind::Identity,
            IsoKind::Sigma => IsoKind::Sigma,
            IsoKind::Tab { a, b } => IsoKind::Tab { a: a.conjugate_by(u), b: b.conjugate_by(u) },
            IsoKind::InnerConj { u: w } => IsoKind::InnerConj { u: w.conjugate_by(u) },
            IsoKind::Compose { outer, inner } => IsoKind::Compose {
                outer: Box::new(outer.conjugate_inner(u)),
                inner: Box::new(inner.conjugate_inner(u)),
            },
            IsoKind::Explicit => IsoKind::Explicit,
        };
        let p = IsoForm::inner(u).expect("nonzero u");
        let matrix = p.matrix.mul_mat(&self.matrix).mul_mat(&p.matrix.transpose());
        IsoForm { kind, negated: self.negated, matrix }
    }

    /// Describes the map as an [`IsoSpec`] when it is `±I`, `±σ`, `±T_{a,b}`
    /// or `±T_{a,b}∘σ` with rational unit parameters.
    pub fn to_spec(&self) -> Option<IsoSpec> {
        let r = recognize(&self.matrix);
        let (form, a, b) = match &r.kind {
            IsoKind::Identity => (FormName::Identity, None, None),
            IsoKind::Sigma => (FormName::Sigma, None, None),
            IsoKind::Tab { a, b } => (FormName::T, Some(a.clone()), Some(b.clone())),
            IsoKind::Compose { outer, inner } => match (&outer.kind, &inner.kind) {
                (IsoKind::Tab { a, b }, IsoKind::Sigma) if !outer.negated && !inner.negated => {
                    (FormName::TSigma, Some(a.clone()), Some(b.clone()))
                }
                _ => return None,
            },
            _ => return None,
        };
        let (form, negate) = match (form, r.negated) {
            (FormName::Identity, true) => (FormName::NegIdentity, false),
            (f, n) => (f, n),
        };
        Some(IsoSpec {
            form,
            a: a.map(|q| q.0.to_vec()),
            b: b.map(|q| q.0.to_vec()),
            negate,
        })
    }
}

/// Best-effort symbolic recognition of an orthogonal 4×4 matrix.
fn recognize(m: &MatQ) -> IsoForm {
    let explicit = || IsoForm { kind: IsoKind::Explicit, negated: false, matrix: m.clone() };
    if m.is_identity() {
        return IsoForm::identity();
    }
    if (-m).is_identity() {
        return IsoForm::neg_identity();
    }
    let s = sigma_matrix();
    if *m == s {
        return IsoForm::sigma();
    }
    if -m == s {
        return IsoForm::sigma().negate();
    }
    let proper = m.det().is_one();
    let core = if proper { m.clone() } else { m.mul_mat(&s) };
    let Ok((a, b)) = decompose_proper(&core) else { return explicit() };
    let (Some(na), Some(nb)) = (a.norm2().sqrt_exact(), b.norm2().sqrt_exact()) else {
        return explicit();
    };
    let (a, b) = (a.scale(&na.recip()), b.scale(&nb.recip()));
    let t = IsoForm::tab(&a, &b).expect("unit by construction");
    let form = if proper { t } else { t.compose(&IsoForm::sigma()) };
    debug_assert_eq!(&form.matrix, m);
    form
}

/// The JSON-facing description of an isometry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum FormName {
    #[serde(rename = "identity")]
    Identity,
    #[serde(rename = "neg_identity")]
    NegIdentity,
    #[serde(rename = "sigma")]
    Sigma,
    #[serde(rename = "T")]
    T,
    #[serde(rename = "T_sigma")]
    TSigma,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsoSpec {
    pub form: FormName,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub a: Option<Vec<Rat>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub b: Option<Vec<Rat>>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub negate: bool,
}

impl IsoSpec {
    pub fn simple(form: FormName) -> Self {
        IsoSpec { form, a: None, b: None, negate: false }
    }

    pub fn identity() -> Self {
        Self::simple(FormName::Identity)
    }

    pub fn neg_identity() -> Self {
        Self::simple(FormName::NegIdentity)
    }

    pub fn sigma() -> Self {
        Self::simple(FormName::Sigma)
    }

    pub fn t(a: &Quat, b: &Quat) -> Self {
        IsoSpec { form: FormName::T, a: Some(a.0.to_vec()), b: Some(b.0.to_vec()), negate: false }
    }

    pub fn t_sigma(a: &Quat, b: &Quat) -> Self {
        IsoSpec { form: FormName::TSigma, a: Some(a.0.to_vec()), b: Some(b.0.to_vec()), negate: false }
    }

    pub fn negated(mut self) -> Self {
        self.negate = !self.negate;
        self
    }
}

/// Builds the isometry described by `spec`.
pub fn realize(spec: &IsoSpec) -> Result<IsoForm> {
    let needs_params = matches!(spec.form, FormName::T | FormName::TSigma);
    if needs_params != (spec.a.is_some() && spec.b.is_some()) || spec.a.is_some() != spec.b.is_some() {
        return Err(Error::InvalidParameter(format!(
            "form {:?}: parameters a, b must be given exactly for T and T_sigma",
            spec.form
        )));
    }
    let param = |v: &Option<Vec<Rat>>| -> Result<Quat> {
        Quat::from_slice(v.as_deref().expect("checked above"))
    };
    let f = match spec.form {
        FormName::Identity => IsoForm::identity(),
        FormName::NegIdentity => IsoForm::neg_identity(),
        FormName::Sigma => IsoForm::sigma(),
        FormName::T => IsoForm::tab(&param(&spec.a)?, &param(&spec.b)?)?,
        FormName::TSigma => IsoForm::tab_sigma(&param(&spec.a)?, &param(&spec.b)?)?,
    };
    Ok(if spec.negate { f.negate() } else { f })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsoClass {
    pub proper: bool,
    pub involutive: bool,
    pub fixes_one: bool,
}

pub fn classify_isometry(f: &IsoForm) -> IsoClass {
    IsoClass { proper: f.is_proper(), involutive: f.is_involutive(), fixes_one: f.fixes_one() }
}

/// Involutivity of `T_{a,b}` and `T_{a,b}∘σ`, computed by squaring the
/// matrices, next to the closed-form predictions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Involutivity {
    pub t_involutive: bool,
    pub t_sigma_involutive: bool,
    /// `a² = b² = ±1`
    pub squares_predict: bool,
    /// `b = ±a`
    pub proportional_predict: bool,
}

impl Involutivity {
    pub fn consistent(&self) -> bool {
        self.t_involutive == self.squares_predict && self.t_sigma_involutive == self.proportional_predict
    }
}

pub fn involutivity_condition(a: &Quat, b: &Quat) -> Result<Involutivity> {
    let t = IsoForm::tab(a, b)?;
    let ts = IsoForm::tab_sigma(a, b)?;
    let (a2, b2) = (a.mul(a), b.mul(b));
    let squares_predict = a2 == b2 && a2.is_real() && a2.re().abs().is_one();
    let proportional_predict = *b == *a || *b == -a;
    Ok(Involutivity {
        t_involutive: t.is_involutive(),
        t_sigma_involutive: ts.is_involutive(),
        squares_predict,
        proportional_predict,
    })
}

/// Coefficients `K[p][q] = ⟨M, L_{e_p} R_{e_q}⟩ / 4`. For `M = T_{a,b}` this
/// is the rank-one matrix `a bᵀ`; the sixteen maps `x ↦ e_p x e_q` are an
/// orthogonal basis of the 4×4 matrices with squared Frobenius norm 4.
fn tab_coefficients(m: &MatQ) -> MatQ {
    let quarter = Rat::new(1, 4);
    let mut k = MatQ::zeros(4, 4);
    for p in 0..4 {
        for q in 0..4 {
            let basis = sandwich_matrix(&Quat::basis(p), &Quat::basis(q));
            let mut s = Rat::zero();
            for i in 0..4 {
                for j in 0..4 {
                    if !basis[(i, j)].is_zero() && !m[(i, j)].is_zero() {
                        s += &basis[(i, j)] * &m[(i, j)];
                    }
                }
            }
            k[(p, q)] = s * &quarter;
        }
    }
    k
}

/// Recovers `(a, b)` with `m = T_{a/|a|, b/|b|}` from a proper isometry.
///
/// The pair is returned unnormalized; each component is scaled so that its
/// first nonzero coordinate has absolute value one, and the global sign is
/// fixed by making the first nonzero coordinate of `a` positive.
pub fn decompose_proper(m: &MatQ) -> Result<(Quat, Quat)> {
    if m.rows() != 4 || m.cols() != 4 || !m.is_orthogonal() {
        return Err(Error::InvalidParameter("not an orthogonal 4x4 matrix".into()));
    }
    let det = m.det();
    if !det.is_one() {
        return Err(Error::NotProper(det.to_string()));
    }
    let k = tab_coefficients(m);
    let (p0, q0) = (0..16)
        .map(|n| (n / 4, n % 4))
        .find(|&(p, q)| !k[(p, q)].is_zero())
        .expect("orthogonal matrix has a nonzero coefficient");
    let mut a = Quat::from_vec(&k.column(q0))?;
    let mut b = Quat::from_vec(&k.row(p0))?;
    if k[(p0, q0)].is_negative() {
        b = -&b;
    }
    a = a.scale(&lead_abs(&a).recip());
    b = b.scale(&lead_abs(&b).recip());
    if lead(&a).is_negative() {
        a = -&a;
        b = -&b;
    }
    Ok((a, b))
}

fn lead(q: &Quat) -> &Rat {
    q.0.iter().find(|x| !x.is_zero()).expect("nonzero quaternion")
}

fn lead_abs(q: &Quat) -> Rat {
    lead(q).abs()
}

/// Whether `m = T_{a/|a|, b/|b|}` for projective (unnormalized) `a`, `b`.
pub fn matches_projective(a: &Quat, b: &Quat, m: &MatQ) -> bool {
    if a.is_zero() || b.is_zero() {
        return false;
    }
    let p = sandwich_matrix(a, b);
    let Some((i, j)) = (0..16).map(|n| (n / 4, n % 4)).find(|&(i, j)| !m[(i, j)].is_zero()) else {
        return false;
    };
    let s = &p[(i, j)] / &m[(i, j)];
    s.is_positive() && s.square() == a.norm2() * b.norm2() && m.scale(&s) == p
}

/// Basis of the solution space of `u a = b u`.
pub fn conjugator_space(a: &Quat, b: &Quat) -> Vec<Quat> {
    // u ↦ u a − b u
    let m = &right_mul_matrix(a) - &left_mul_matrix(b);
    m.kernel().iter().map(|v| Quat::from_vec(v).expect("dim 4")).collect()
}

/// A nonzero `u` with `u a = b u`, returned unnormalized.
pub fn conjugator(a: &Quat, b: &Quat) -> Result<Quat> {
    conjugator_space(a, b).into_iter().next().ok_or(Error::NotConjugate)
}

/// A rational unit `u` with `u a = b u`, when one exists.
///
/// For a non-real `a` the solutions form the plane `u₀·span{1, a − Re(a)}`,
/// on which the norm is `n(u₀)(α² + β²)`; a rational unit exists exactly when
/// `n(u₀)` is a sum of two rational squares.
pub fn unit_conjugator(a: &Quat, b: &Quat) -> Result<Quat> {
    if a.is_real() {
        return if a == b { Ok(Quat::one()) } else { Err(Error::NotConjugate) };
    }
    let u0 = primitive(&conjugator(a, b)?);
    let n = u0.norm2();
    if let Some(s) = n.sqrt_exact() {
        return Ok(u0.scale(&s.recip()));
    }
    let n_int = n.numer().clone();
    debug_assert!(n.denom().is_one());
    let (s, t) = two_squares(&n_int).ok_or_else(|| Error::NoRationalUnit(n.to_string()))?;
    let imag = a - &Quat::real(a.re().clone());
    let imag = imag.scale(&imag.norm2().sqrt_exact().map(|r| r.recip()).unwrap_or_else(Rat::one));
    if !imag.is_unit() {
        return Err(Error::NoRationalUnit(format!("imaginary part of {a} has irrational norm")));
    }
    let alpha = Rat::from(s) / Rat::from(n_int.clone());
    let beta = Rat::from(t) / Rat::from(n_int);
    let u = u0.mul(&(&Quat::real(alpha) + &imag.scale(&beta)));
    debug_assert!(u.is_unit());
    Ok(u)
}

/// Integer multiple of `q` with coprime integer coordinates.
fn primitive(q: &Quat) -> Quat {
    let lcm = q.0.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = q.0.iter().map(|x| (x.inner() * &lcm).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    Quat(ints.map_array(|x| Rat::from(x / &g)))
}

trait MapArray {
    fn map_array(self, f: impl Fn(&BigInt) -> Rat) -> [Rat; 4];
}

impl MapArray for Vec<BigInt> {
    fn map_array(self, f: impl Fn(&BigInt) -> Rat) -> [Rat; 4] {
        [f(&self[0]), f(&self[1]), f(&self[2]), f(&self[3])]
    }
}

/// `(s, t)` with `s² + t² = n`, from the prime factorization of `n`.
pub fn two_squares(n: &BigInt) -> Option<(BigInt, BigInt)> {
    let n = n.to_biguint()?;
    if n.is_zero() {
        return Some((BigInt::zero(), BigInt::zero()));
    }
    // Running product in the Gaussian integers.
    let mut acc = (BigInt::one(), BigInt::zero());
    let times = |acc: (BigInt, BigInt), z: &(BigInt, BigInt)| {
        (&acc.0 * &z.0 - &acc.1 * &z.1, &acc.0 * &z.1 + &acc.1 * &z.0)
    };
    let four = BigUint::from(4u8);
    for (p, e) in num_prime::nt_funcs::factorize(n) {
        let pi = BigInt::from(p.clone());
        let factor = if p == BigUint::from(2u8) {
            (BigInt::one(), BigInt::one())
        } else if &p % &four == BigUint::from(3u8) {
            if e % 2 == 1 {
                return None;
            }
            for _ in 0..e / 2 {
                acc = times(acc, &(pi.clone(), BigInt::zero()));
            }
            continue;
        } else {
            prime_two_squares(&p)
        };
        for _ in 0..e {
            acc = times(acc, &factor);
        }
    }
    Some((acc.0.abs(), acc.1.abs()))
}

/// Cornacchia's method for a prime `p ≡ 1 (mod 4)`.
fn prime_two_squares(p: &BigUint) -> (BigInt, BigInt) {
    let minus_one = p - 1u8;
    let quarter = &minus_one / 4u8;
    let mut c = BigUint::from(2u8);
    let t = loop {
        let t = c.modpow(&quarter, p);
        if (&t * &t) % p == minus_one {
            break t;
        }
        c += 1u8;
    };
    let (mut r0, mut r1) = (p.clone(), t);
    while &r1 * &r1 > *p {
        let r2 = &r0 % &r1;
        r0 = r1;
        r1 = r2;
    }
    let rest = p - &r1 * &r1;
    (BigInt::from(r1), BigInt::from(rest.sqrt()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{q, sphere_point};

    fn r(n: i64) -> Rat {
        Rat::from_int(n)
    }

    fn diag(xs: &[i64]) -> MatQ {
        MatQ::diag(&xs.iter().map(|&x| r(x)).collect::<Vec<_>>())
    }

    #[test]
    fn realize_examples() {
        let i = Quat::i();
        let t = realize(&IsoSpec::t(&i, &-&i)).unwrap();
        assert_eq!(t.matrix(), &diag(&[1, 1, -1, -1]));
        assert_eq!(realize(&IsoSpec::sigma()).unwrap().matrix(), &diag(&[1, -1, -1, -1]));
        let t2 = realize(&IsoSpec::t(&i, &i)).unwrap();
        assert_eq!(t2.matrix(), &diag(&[-1, -1, 1, 1]));
    }

    #[test]
    fn realize_rejects_bad_specs() {
        let two = Quat::from_ints(2, 0, 0, 0);
        assert!(matches!(
            realize(&IsoSpec::t(&two, &Quat::one())),
            Err(Error::NonUnitParameter(_))
        ));
        let missing = IsoSpec { form: FormName::T, a: None, b: None, negate: false };
        assert!(matches!(realize(&missing), Err(Error::InvalidParameter(_))));
        let extra = IsoSpec { a: Some(Quat::one().0.to_vec()), ..IsoSpec::sigma() };
        assert!(matches!(realize(&extra), Err(Error::InvalidParameter(_))));
    }

    #[test]
    fn spec_json_shape() {
        let spec = IsoSpec::t_sigma(&Quat::i(), &-&Quat::i()).negated();
        let json = serde_json::to_string(&spec).unwrap();
        assert_eq!(json, r#"{"form":"T_sigma","a":["0","1","0","0"],"b":["0","-1","0","0"],"negate":true}"#);
        let back: IsoSpec = serde_json::from_str(&json).unwrap();
        assert_eq!(back, spec);
        let plain: IsoSpec = serde_json::from_str(r#"{"form":"sigma"}"#).unwrap();
        assert_eq!(plain, IsoSpec::sigma());
    }

    #[test]
    fn classification_of_standard_isometries() {
        let a = sphere_point(&[q(1, 2), r(1), q(-1, 3)]);
        let b = sphere_point(&[r(2), r(0), q(1, 5)]);
        assert!(classify_isometry(&IsoForm::tab(&a, &b).unwrap()).proper);
        assert!(!classify_isometry(&IsoForm::tab_sigma(&a, &b).unwrap()).proper);
        let c = classify_isometry(&IsoForm::tab_conj(&Quat::i()).unwrap());
        assert!(c.proper && c.involutive && c.fixes_one);
    }

    #[test]
    fn involutivity_examples() {
        let (i, j) = (Quat::i(), Quat::j());
        let r1 = involutivity_condition(&i, &i).unwrap();
        assert!(r1.t_involutive && r1.consistent());
        let r2 = involutivity_condition(&i, &j).unwrap();
        assert!(r2.t_involutive && !r2.t_sigma_involutive && r2.consistent());
        let a = sphere_point(&[r(1), r(1), r(1)]);
        let r3 = involutivity_condition(&a, &a).unwrap();
        assert!(r3.t_sigma_involutive && r3.consistent());
    }

    #[test]
    fn decompose_examples() {
        let (a, b) = decompose_proper(&diag(&[1, 1, -1, -1])).unwrap();
        assert!(a.is_proportional(&Quat::i()));
        assert!(b.is_proportional(&Quat::i()));
        assert!(matches_projective(&a, &b, &diag(&[1, 1, -1, -1])));
        // T_{i,-i}: the recovered pair, normalized with a positive, is (i, -i).
        assert_eq!((a, b), (Quat::i(), -&Quat::i()));

        let (a, b) = decompose_proper(&MatQ::identity(4)).unwrap();
        assert_eq!((a, b), (Quat::one(), Quat::one()));

        let a = Quat::new(q(-1, 2), q(1, 2), q(1, 2), q(1, 2));
        let m = IsoForm::tab_conj(&a).unwrap();
        let (ra, rb) = decompose_proper(m.matrix()).unwrap();
        assert!(ra.is_proportional(&a));
        assert!(rb.is_proportional(&a.conj()));
        assert!(matches_projective(&ra, &rb, m.matrix()));
    }

    #[test]
    fn decompose_rejects_improper() {
        assert!(matches!(decompose_proper(&sigma_matrix()), Err(Error::NotProper(_))));
    }

    #[test]
    fn conjugator_examples() {
        let (i, j) = (Quat::i(), Quat::j());
        let u = conjugator(&i, &i).unwrap();
        assert_eq!(u.mul(&i), i.mul(&u));
        let u = conjugator(&i, &j).unwrap();
        assert!(!u.is_zero());
        assert_eq!(u.mul(&i), j.mul(&u));
        let b = Quat::new(r(0), q(3, 5), q(4, 5), r(0));
        let u = conjugator(&i, &b).unwrap();
        assert_eq!(u.mul(&i), b.mul(&u));
        assert_eq!(conjugator(&i, &Quat::one()), Err(Error::NotConjugate));
    }

    #[test]
    fn unit_conjugators() {
        let (i, j, k) = (Quat::i(), Quat::j(), Quat::k());
        for (a, b) in [(&i, &j), (&j, &k), (&k, &-&i), (&i, &i), (&-&i, &i)] {
            let u = unit_conjugator(a, b).unwrap();
            assert!(u.is_unit());
            assert_eq!(u.mul(a), b.mul(&u));
        }
        assert_eq!(two_squares(&BigInt::from(3)), None);
        assert_eq!(two_squares(&BigInt::from(21)), None);
    }

    #[test]
    fn two_squares_against_search() {
        let brute = |n: i64| (0..=n).any(|s| (0..=s).any(|t| s * s + t * t == n));
        for n in 0..400i64 {
            let found = two_squares(&BigInt::from(n));
            assert_eq!(found.is_some(), brute(n), "n = {n}");
            if let Some((s, t)) = found {
                assert_eq!(&s * &s + &t * &t, BigInt::from(n));
            }
        }
        // A product of two large primes ≡ 1 (mod 4).
        let n = BigInt::from(1_000_000_009u64) * BigInt::from(998_244_353u64);
        let (s, t) = two_squares(&n).unwrap();
        assert_eq!(&s * &s + &t * &t, n);
    }

    #[test]
    fn symbolic_recognition() {
        let a = sphere_point(&[q(1, 2), r(1), q(-1, 3)]);
        let b = sphere_point(&[r(2), r(0), q(1, 5)]);
        let t = IsoForm::tab_sigma(&a, &b).unwrap().negate();
        let spec = t.to_spec().unwrap();
        assert_eq!(realize(&spec).unwrap().matrix(), t.matrix());
        assert_eq!(IsoForm::neg_identity().to_spec(), Some(IsoSpec::neg_identity()));
        assert_eq!(IsoForm::sigma().to_spec(), Some(IsoSpec::sigma()));
    }

    #[test]
    fn inner_conjugation_transport() {
        let u = Quat::from_ints(1, 2, 0, -1);
        let f = IsoForm::tab_conj_sigma(&Quat::j()).unwrap();
        let g = f.conjugate_inner(&u);
        let p = IsoForm::inner(&u).unwrap();
        let expected = p.matrix().mul_mat(f.matrix()).mul_mat(&p.matrix().transpose());
        assert_eq!(g.matrix(), &expected);
        match &g.kind {
            IsoKind::Compose { outer, .. } => match &outer.kind {
                IsoKind::Tab { a, .. } => assert_eq!(a, &Quat::j().conjugate_by(&u)),
                k => panic!("unexpected {k:?}"),
            },
            k => panic!("unexpected {k:?}"),
        }
    }
}
