use serde::{Deserialize, Serialize};

use super::Algebra;
use crate::arith::{MatQ, Oct, Quat, Rat, VecQ};
use crate::error::{Error, Result};
use crate::isometry::{realize, FormName, IsoForm, IsoSpec};

/// The classical division algebras used as underlying spaces.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Base {
    R,
    C,
    H,
    O,
}

impl Base {
    pub fn dim(self) -> usize {
        match self {
            Base::R => 1,
            Base::C => 2,
            Base::H => 4,
            Base::O => 8,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StarVariant {
    /// `x̄y`
    Left,
    /// `xȳ`
    Right,
    /// `x̄ȳ`
    Both,
}

/// The eleven algebras of the classification, by name.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Named {
    R,
    C,
    StarC,
    H,
    StarH,
    #[serde(rename = "StarH_i1")]
    StarHi,
    O,
    StarO,
    #[serde(rename = "StarO_i1")]
    StarOi,
    OTilde,
    #[serde(rename = "OTilde_i")]
    OTildeI,
}

pub const ROSTER: [Named; 11] = [
    Named::R,
    Named::C,
    Named::StarC,
    Named::H,
    Named::StarH,
    Named::StarHi,
    Named::O,
    Named::StarO,
    Named::StarOi,
    Named::OTilde,
    Named::OTildeI,
];

impl Named {
    pub fn as_str(self) -> &'static str {
        match self {
            Named::R => "R",
            Named::C => "C",
            Named::StarC => "StarC",
            Named::H => "H",
            Named::StarH => "StarH",
            Named::StarHi => "StarH_i1",
            Named::O => "O",
            Named::StarO => "StarO",
            Named::StarOi => "StarO_i1",
            Named::OTilde => "OTilde",
            Named::OTildeI => "OTilde_i",
        }
    }

    /// The constructive description this name abbreviates.
    pub fn definition(self) -> AlgSpec {
        let i = Quat::i();
        match self {
            Named::R => AlgSpec::APhi { base: Base::R, phi: IsoSpec::identity() },
            Named::C => AlgSpec::APhi { base: Base::C, phi: IsoSpec::identity() },
            Named::StarC => AlgSpec::Star { base: Base::C, variant: StarVariant::Left },
            Named::H => AlgSpec::APhi { base: Base::H, phi: IsoSpec::identity() },
            Named::StarH => AlgSpec::Star { base: Base::H, variant: StarVariant::Left },
            Named::StarHi => AlgSpec::isotope(2, &i, &Quat::one()),
            Named::O => AlgSpec::Duplication { phi: IsoSpec::identity(), psi: IsoSpec::identity() },
            Named::StarO => AlgSpec::Star { base: Base::O, variant: StarVariant::Left },
            Named::StarOi => AlgSpec::StarOctLeft { a: Oct::basis(1).to_vec().0 },
            Named::OTilde => AlgSpec::Duplication { phi: IsoSpec::sigma(), psi: IsoSpec::identity() },
            Named::OTildeI => AlgSpec::Duplication {
                phi: IsoSpec::t_sigma(&i, &i.conj()),
                psi: IsoSpec::t(&i, &i),
            },
        }
    }

    pub fn build(self) -> Algebra {
        self.definition().build().expect("roster definitions are valid").with_label(self.as_str())
    }
}

impl std::fmt::Display for Named {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// JSON-facing description of an algebra.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum AlgSpec {
    #[serde(rename = "named")]
    Named { name: Named },
    #[serde(rename = "star")]
    Star { base: Base, variant: StarVariant },
    /// Principal isotopes of ℍ: `axyb`, `x̄ayb`, `axbȳ`, `ax̄ȳb` for families 1–4.
    #[serde(rename = "isotope")]
    Isotope { family: u8, a: Vec<Rat>, b: Vec<Rat> },
    /// `x ⊙ y = φ(x)y` with `φ(1) = 1`.
    #[serde(rename = "A_phi")]
    APhi { base: Base, phi: IsoSpec },
    /// `x ⊙ y = (x̄a)y` on 𝕆.
    #[serde(rename = "star_oct_left")]
    StarOctLeft { a: Vec<Rat> },
    /// `x ⊙ y = x̄(ay)` on 𝕆.
    #[serde(rename = "star_oct_right")]
    StarOctRight { a: Vec<Rat> },
    /// `(x, y) ⊛ (u, v) = (φ(x), ψ(y)) • (u, v)` on ℍ × ℍ.
    #[serde(rename = "duplication")]
    Duplication { phi: IsoSpec, psi: IsoSpec },
    #[serde(rename = "structure")]
    Structure { dim: usize, constants: Vec<Vec<VecQ>> },
}

impl AlgSpec {
    pub fn named(name: Named) -> Self {
        AlgSpec::Named { name }
    }

    pub fn isotope(family: u8, a: &Quat, b: &Quat) -> Self {
        AlgSpec::Isotope { family, a: a.0.to_vec(), b: b.0.to_vec() }
    }

    pub fn star_oct_left(a: &Oct) -> Self {
        AlgSpec::StarOctLeft { a: a.to_vec().0 }
    }

    pub fn star_oct_right(a: &Oct) -> Self {
        AlgSpec::StarOctRight { a: a.to_vec().0 }
    }

    pub fn duplication(phi: IsoSpec, psi: IsoSpec) -> Self {
        AlgSpec::Duplication { phi, psi }
    }

    pub fn build(&self) -> Result<Algebra> {
        match self {
            AlgSpec::Named { name } => Ok(name.build()),
            AlgSpec::Star { base, variant } => {
                let (b, v) = (*base, *variant);
                let f = move |x: &VecQ, y: &VecQ| match v {
                    StarVariant::Left => base_product(b, &base_conj(x), y),
                    StarVariant::Right => base_product(b, x, &base_conj(y)),
                    StarVariant::Both => base_product(b, &base_conj(x), &base_conj(y)),
                };
                Ok(Algebra::from_bilinear(b.dim(), f))
            }
            AlgSpec::Isotope { family, a, b } => {
                let a = unit_quat("a", a)?;
                let b = unit_quat("b", b)?;
                let fam = *family;
                if !(1..=4).contains(&fam) {
                    return Err(Error::InvalidParameter(format!("isotope family {fam} not in 1..4")));
                }
                Ok(Algebra::from_bilinear(4, move |x, y| {
                    let (x, y) = (as_quat(x), as_quat(y));
                    let p = match fam {
                        1 => a.mul(&x).mul(&y).mul(&b),
                        2 => x.conj().mul(&a).mul(&y).mul(&b),
                        3 => a.mul(&x).mul(&b).mul(&y.conj()),
                        _ => a.mul(&x.conj()).mul(&y.conj()).mul(&b),
                    };
                    p.to_vec()
                }))
            }
            AlgSpec::APhi { base, phi } => {
                let m = base_isometry_matrix(*base, phi)?;
                if !fixes_one(&m) {
                    return Err(Error::InvalidParameter("phi does not fix 1".into()));
                }
                let b = *base;
                Ok(Algebra::from_bilinear(b.dim(), move |x, y| base_product(b, &m.mul_vec(x), y)))
            }
            AlgSpec::StarOctLeft { a } => {
                let a = unit_oct(a)?;
                Ok(Algebra::from_bilinear(8, move |x, y| {
                    let (x, y) = (as_oct(x), as_oct(y));
                    x.conj().cd_product(&a).cd_product(&y).to_vec()
                }))
            }
            AlgSpec::StarOctRight { a } => {
                let a = unit_oct(a)?;
                Ok(Algebra::from_bilinear(8, move |x, y| {
                    let (x, y) = (as_oct(x), as_oct(y));
                    x.conj().cd_product(&a.cd_product(&y)).to_vec()
                }))
            }
            AlgSpec::Duplication { phi, psi } => {
                let phi = realize(phi)?;
                let psi = realize(psi)?;
                if !phi.fixes_one() {
                    return Err(Error::InvalidParameter("phi does not fix 1".into()));
                }
                Ok(duplication_algebra(&phi, &psi))
            }
            AlgSpec::Structure { dim, constants } => {
                if ![1, 2, 4, 8].contains(dim) {
                    return Err(Error::InvalidParameter(format!("dimension {dim} not in {{1,2,4,8}}")));
                }
                Algebra::new(*dim, constants.clone())
            }
        }
    }
}

/// `(x, y) ⊛ (u, v) = (φ(x), ψ(y)) • (u, v)`
pub fn duplication_algebra(phi: &IsoForm, psi: &IsoForm) -> Algebra {
    let m = MatQ::block_diag(phi.matrix(), psi.matrix());
    Algebra::from_bilinear(8, move |x, y| as_oct(&m.mul_vec(x)).cd_product(&as_oct(y)).to_vec())
}

fn fixes_one(m: &MatQ) -> bool {
    m.column(0) == VecQ::basis(m.rows(), 0)
}

fn as_quat(v: &VecQ) -> Quat {
    Quat::from_vec(v).expect("dim 4")
}

fn as_oct(v: &VecQ) -> Oct {
    Oct::from_vec(v).expect("dim 8")
}

fn unit_quat(name: &str, v: &[Rat]) -> Result<Quat> {
    let q = Quat::from_slice(v)?;
    if !q.is_unit() {
        return Err(Error::NonUnitParameter(format!("|{name}|^2 = {}", q.norm2())));
    }
    Ok(q)
}

fn unit_oct(v: &[Rat]) -> Result<Oct> {
    let a = Oct::from_slice(v)?;
    if !a.is_unit() {
        return Err(Error::NonUnitParameter(format!("|a|^2 = {}", a.norm2())));
    }
    Ok(a)
}

/// Standard involution on a coordinate vector.
pub fn base_conj(x: &VecQ) -> VecQ {
    VecQ(x.iter().enumerate().map(|(k, c)| if k == 0 { c.clone() } else { -c }).collect())
}

/// Product of ℝ, ℂ, ℍ or 𝕆 on coordinate vectors.
pub fn base_product(base: Base, x: &VecQ, y: &VecQ) -> VecQ {
    match base {
        Base::O => as_oct(x).cd_product(&as_oct(y)).to_vec(),
        Base::H => as_quat(x).mul(&as_quat(y)).to_vec(),
        Base::R | Base::C => {
            let n = base.dim();
            let pad = |v: &VecQ| {
                let mut c = v.0.clone();
                c.resize(4, Rat::zero());
                Quat::from_slice(&c).expect("dim 4")
            };
            VecQ(pad(x).mul(&pad(y)).0[..n].to_vec())
        }
    }
}

fn base_isometry_matrix(base: Base, spec: &IsoSpec) -> Result<MatQ> {
    match base {
        Base::H => Ok(realize(spec)?.matrix().clone()),
        Base::O => oct_isometry_matrix(spec),
        Base::R | Base::C => {
            let n = base.dim();
            let m = match (spec.form, spec.negate) {
                (FormName::Identity, false) => MatQ::identity(n),
                (FormName::Sigma, false) => MatQ::diag(&base_conj(&VecQ(vec![Rat::one(); n])).0),
                _ => {
                    return Err(Error::InvalidParameter(format!(
                        "form {:?} is not available on {base:?}",
                        spec.form
                    )))
                }
            };
            Ok(m)
        }
    }
}

/// Isometries of 𝕆 fixing 1 built from an [`IsoSpec`]: identity, σ,
/// `T: x ↦ a x ā` and `T_sigma: x ↦ a x̄ ā` with `a` an octonion unit and
/// `b = ā`.
pub fn oct_isometry_matrix(spec: &IsoSpec) -> Result<MatQ> {
    let conj_mat = MatQ::diag(&base_conj(&VecQ(vec![Rat::one(); 8])).0);
    let sandwich = || -> Result<MatQ> {
        let a = unit_oct(spec.a.as_deref().unwrap_or_default())?;
        let b = Oct::from_slice(spec.b.as_deref().unwrap_or_default())?;
        if b != a.conj() {
            return Err(Error::InvalidParameter("on O the T forms require b = conj(a)".into()));
        }
        let cols: Vec<VecQ> = (0..8).map(|k| Oct::sandwich(&a, &Oct::basis(k)).to_vec()).collect();
        Ok(MatQ::from_columns(&cols))
    };
    let params = spec.a.is_some() || spec.b.is_some();
    let m = match spec.form {
        FormName::Identity if !params => MatQ::identity(8),
        FormName::NegIdentity if !params => -&MatQ::identity(8),
        FormName::Sigma if !params => conj_mat,
        FormName::T => sandwich()?,
        FormName::TSigma => sandwich()?.mul_mat(&conj_mat),
        _ => return Err(Error::InvalidParameter("parameters given for a parameterless form".into())),
    };
    Ok(if spec.negate { -&m } else { m })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::q;

    #[test]
    fn spec_json_round_trip() {
        let specs = [
            r#"{"kind":"named","name":"OTilde_i"}"#,
            r#"{"kind":"star","base":"H","variant":"left"}"#,
            r#"{"kind":"isotope","family":2,"a":["0","1","0","0"],"b":["1","0","0","0"]}"#,
            r#"{"kind":"duplication","phi":{"form":"sigma"},"psi":{"form":"neg_identity"}}"#,
            r#"{"kind":"star_oct_left","a":["0","0","0","0","1","0","0","0"]}"#,
            r#"{"kind":"A_phi","base":"O","phi":{"form":"sigma"}}"#,
        ];
        for s in specs {
            let spec: AlgSpec = serde_json::from_str(s).unwrap();
            assert_eq!(serde_json::to_string(&spec).unwrap(), s);
            spec.build().unwrap();
        }
    }

    #[test]
    fn rejects_invalid_parameters() {
        let two = Quat::from_ints(2, 0, 0, 0);
        assert!(matches!(
            AlgSpec::isotope(1, &two, &Quat::one()).build(),
            Err(Error::NonUnitParameter(_))
        ));
        let bad_phi = AlgSpec::duplication(IsoSpec::t(&Quat::i(), &Quat::i()), IsoSpec::identity());
        assert!(matches!(bad_phi.build(), Err(Error::InvalidParameter(_))));
        let bad = AlgSpec::Structure { dim: 3, constants: vec![] };
        assert!(bad.build().is_err());
    }

    #[test]
    fn isotope_left_units() {
        let a = Quat::new(q(3, 5), q(4, 5), Rat::zero(), Rat::zero());
        let h1 = AlgSpec::isotope(1, &a, &Quat::one()).build().unwrap();
        assert_eq!(h1.left_unit(), Some(a.conj().to_vec()));
        let h2 = AlgSpec::isotope(2, &a, &Quat::one()).build().unwrap();
        assert_eq!(h2.left_unit(), Some(a.to_vec()));
        let y = VecQ::from_ints(&[1, -2, 0, 5]);
        assert_eq!(h1.product(&a.conj().to_vec(), &y), y);
    }

    #[test]
    fn duplication_has_left_unit_one() {
        let o = Named::OTilde.build();
        assert_eq!(o.left_unit(), Some(VecQ::basis(8, 0)));
        let a = Named::O.build();
        let direct = Algebra::from_bilinear(8, |x, y| base_product(Base::O, x, y));
        assert_eq!(a.constants(), direct.constants());
    }

    #[test]
    fn star_oct_left_unit() {
        let a = Oct::basis(4);
        let s = AlgSpec::star_oct_left(&a).build().unwrap();
        assert_eq!(s.left_unit(), Some(a.to_vec()));
        let s = AlgSpec::star_oct_right(&a).build().unwrap();
        assert_eq!(s.left_unit(), Some(a.to_vec()));
    }
}
