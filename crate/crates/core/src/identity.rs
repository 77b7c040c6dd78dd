//! Exact polynomial identity checks.
//!
//! Every identity here is either multilinear in basis vectors after
//! polarization, in which case it is decided exactly on basis tuples
//! ([`Method::ExactPolarized`]), or it is evaluated at seeded rational points
//! ([`Method::Sampled`]) and then only ever refutes.

use std::collections::HashMap;

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::Algebra;
use crate::arith::{Quat, VecQ};
use crate::error::{Error, Result};
use crate::isometry::IsoForm;
use crate::sample::Sampler;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    ExactPolarized,
    Sampled,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Witness {
    /// Basis indices (a pair, or the multiset of a polarization).
    Basis { indices: Vec<usize> },
    Point {
        x: VecQ,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        y: Option<VecQ>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub id: String,
    pub holds: bool,
    pub method: Method,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl IdentityReport {
    fn exact(id: &str, witness: Option<Witness>) -> Self {
        IdentityReport { id: id.into(), holds: witness.is_none(), method: Method::ExactPolarized, witness }
    }

    fn sampled(id: &str, witness: Option<Witness>) -> Self {
        IdentityReport { id: id.into(), holds: witness.is_none(), method: Method::Sampled, witness }
    }
}

/// `x²e = x²` for all `x`, decided on symmetrized basis pairs.
pub fn check_quadratic_criterion(a: &Algebra) -> Result<IdentityReport> {
    let e = a.left_unit().ok_or(Error::NoLeftUnit)?;
    let n = a.dim();
    let witness = (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).find(|&(i, j)| {
        let s = a.constant(i, j) + a.constant(j, i);
        a.product(&s, &e) != s
    });
    Ok(IdentityReport::exact(
        "quadratic_criterion",
        witness.map(|(i, j)| Witness::Basis { indices: vec![i, j] }),
    ))
}

/// `(x², x², x²)` evaluated at a point.
pub fn sextic_map(a: &Algebra, x: &VecQ) -> VecQ {
    let s = a.square(x);
    let t = a.square(&s);
    &a.product(&t, &s) - &a.product(&s, &t)
}

fn int_product(table: &[Vec<Vec<BigInt>>], x: &[BigInt], y: &[BigInt]) -> Vec<BigInt> {
    let n = x.len();
    let mut out = vec![BigInt::zero(); n];
    for (i, xi) in x.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
        for (j, yj) in y.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            let c = xi * yj;
            for (o, t) in out.iter_mut().zip(&table[i][j]) {
                if !t.is_zero() {
                    *o += &c * t;
                }
            }
        }
    }
    out
}

/// The sextic map on integer points with the product scaled to integer
/// constants; a positive multiple of the true value.
fn int_sextic(table: &[Vec<Vec<BigInt>>], x: &[BigInt]) -> Vec<BigInt> {
    let s = int_product(table, x, x);
    let t = int_product(table, &s, &s);
    let l = int_product(table, &t, &s);
    let r = int_product(table, &s, &t);
    l.into_iter().zip(r).map(|(a, b)| a - b).collect()
}

/// Nonnegative integer vectors of length `n` with coordinate sum `≤ total`.
fn lattice_points(n: usize, total: u8) -> Vec<Vec<u8>> {
    fn rec(n: usize, left: u8, cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for v in 0..=left {
            cur.push(v);
            rec(n, left - v, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, total, &mut Vec::with_capacity(n), &mut out);
    out
}

fn binomial(n: u8, k: u8) -> i64 {
    (0..k).fold(1i64, |acc, i| acc * i64::from(n - i) / i64::from(i + 1))
}

/// Exact decision of `(x², x², x²) = 0` by full polarization.
///
/// For each multiset of six basis vectors the alternating sum
/// `Σ_{S ⊆ [6]} (−1)^{6−|S|} F(Σ_{i∈S} x_i)` equals `6!` times the symmetric
/// multilinear form of `F`; all of them vanish exactly when `F` does. Equal
/// subset sums are grouped, with multiplicity `Π C(cᵢ, dᵢ)`.
pub fn check_sextic_exact(a: &Algebra) -> IdentityReport {
    let n = a.dim();
    let (_, table) = a.integer_constants();
    let points = lattice_points(n, 6);
    let values: HashMap<Vec<u8>, Vec<BigInt>> = points
        .par_iter()
        .map(|p| {
            let x: Vec<BigInt> = p.iter().map(|&c| BigInt::from(c)).collect();
            (p.clone(), int_sextic(&table, &x))
        })
        .collect();
    let multisets: Vec<Vec<usize>> = (0..n).combinations_with_replacement(6).collect();
    let failing = multisets.par_iter().find_first(|m| {
        let mut counts = vec![0u8; n];
        for &i in m.iter() {
            counts[i] += 1;
        }
        let mut acc = vec![BigInt::zero(); n];
        for d in counts.iter().map(|&c| 0..=c).multi_cartesian_product() {
            let size: u8 = d.iter().sum();
            let mult: i64 = counts.iter().zip(&d).map(|(&c, &k)| binomial(c, k)).product();
            let coef = if (6 - size) % 2 == 0 { mult } else { -mult };
            let coef = BigInt::from(coef);
            for (o, v) in acc.iter_mut().zip(&values[&d]) {
                *o += &coef * v;
            }
        }
        acc.iter().any(|v| !v.is_zero())
    });
    IdentityReport::exact("sextic", failing.map(|m| Witness::Basis { indices: m.clone() }))
}

/// The sextic map at seeded random points.
pub fn check_sextic_sampled(a: &Algebra, samples: usize, seed: u64) -> IdentityReport {
    let mut s = Sampler::salted(seed, "sextic");
    let points: Vec<VecQ> = (0..samples).map(|_| s.rat_vec(a.dim())).collect();
    let bad = points.par_iter().find_first(|x| !sextic_map(a, x).is_zero());
    IdentityReport::sampled("sextic_sampled", bad.map(|x| Witness::Point { x: x.clone(), y: None }))
}

fn assoc(a: &Algebra, x: &VecQ, y: &VecQ, z: &VecQ) -> VecQ {
    &a.product(&a.product(x, y), z) - &a.product(x, &a.product(y, z))
}

/// Coefficient of `λ` in `((x+λy)², (x+λy)², (x+λy)²)`.
pub fn first_linearization(a: &Algebra, x: &VecQ, y: &VecQ) -> VecQ {
    let s = a.square(x);
    let p = &a.product(x, y) + &a.product(y, x);
    &(&assoc(a, &s, &s, &p) + &assoc(a, &s, &p, &s)) + &assoc(a, &p, &s, &s)
}

/// Coefficient of `λ²` in `((x+λy)², (x+λy)², (x+λy)²)`.
pub fn second_linearization(a: &Algebra, x: &VecQ, y: &VecQ) -> VecQ {
    let s = a.square(x);
    let q = a.square(y);
    let p = &a.product(x, y) + &a.product(y, x);
    [
        assoc(a, &s, &s, &q),
        assoc(a, &s, &p, &p),
        assoc(a, &s, &q, &s),
        assoc(a, &p, &s, &p),
        assoc(a, &p, &p, &s),
        assoc(a, &q, &s, &s),
    ]
    .iter()
    .fold(VecQ::zeros(a.dim()), |acc, v| &acc + v)
}

/// Both linearizations at seeded pairs.
pub fn check_linearizations(a: &Algebra, samples: usize, seed: u64) -> IdentityReport {
    let mut s = Sampler::salted(seed, "linearizations");
    let pairs: Vec<(VecQ, VecQ)> = (0..samples).map(|_| (s.rat_vec(a.dim()), s.rat_vec(a.dim()))).collect();
    let bad = pairs.par_iter().find_first(|(x, y)| {
        !first_linearization(a, x, y).is_zero() || !second_linearization(a, x, y).is_zero()
    });
    IdentityReport::sampled(
        "linearizations",
        bad.map(|(x, y)| Witness::Point { x: x.clone(), y: Some(y.clone()) }),
    )
}

/// The three conditions on a pair `(φ, ψ)` equivalent to the quadratic
/// criterion for the duplication algebra of the pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Condition {
    /// `φ(φ(x)x) = φ(x)x`
    PhiSquare,
    /// `φ(x̄ψ(x)) = x̄ψ(x)`
    PhiMixed,
    /// `ψ(ψ(y)x̄ + yφ(x)) = ψ(y)x̄ + yφ(x)`
    PsiClosure,
}

pub const CONDITIONS: [Condition; 3] = [Condition::PhiSquare, Condition::PhiMixed, Condition::PsiClosure];

impl Condition {
    pub fn id(self) -> &'static str {
        match self {
            Condition::PhiSquare => "phi_square",
            Condition::PhiMixed => "phi_mixed",
            Condition::PsiClosure => "psi_closure",
        }
    }

    /// Whether the condition involves `x` only.
    fn is_quadratic(self) -> bool {
        !matches!(self, Condition::PsiClosure)
    }

    /// `f(v) − v` for the map and bilinear expression of the condition;
    /// for the quadratic conditions this is the polarization at `(x, y)`.
    fn polarized_residual(self, phi: &IsoForm, psi: &IsoForm, x: &Quat, y: &Quat) -> Quat {
        let (map, v) = match self {
            Condition::PhiSquare => (phi, &phi.apply(x).mul(y) + &phi.apply(y).mul(x)),
            Condition::PhiMixed => (phi, &x.conj().mul(&psi.apply(y)) + &y.conj().mul(&psi.apply(x))),
            Condition::PsiClosure => (psi, &psi.apply(y).mul(&x.conj()) + &y.mul(&phi.apply(x))),
        };
        &map.apply(&v) - &v
    }

    /// The condition evaluated literally at a point.
    pub fn residual(self, phi: &IsoForm, psi: &IsoForm, x: &Quat, y: &Quat) -> Quat {
        if self.is_quadratic() {
            // Half the polarization at (x, x).
            self.polarized_residual(phi, psi, x, x).scale(&crate::arith::q(1, 2))
        } else {
            self.polarized_residual(phi, psi, x, y)
        }
    }
}

fn require_fixes_one(phi: &IsoForm) -> Result<()> {
    if phi.fixes_one() {
        Ok(())
    } else {
        Err(Error::PhiDoesNotFixOne)
    }
}

/// Exact check of one condition on basis pairs.
pub fn check_condition(cond: Condition, phi: &IsoForm, psi: &IsoForm) -> Result<IdentityReport> {
    require_fixes_one(phi)?;
    let pairs: Vec<(usize, usize)> = if cond.is_quadratic() {
        (0..4).flat_map(|i| (i..4).map(move |j| (i, j))).collect()
    } else {
        (0..4).flat_map(|i| (0..4).map(move |j| (i, j))).collect()
    };
    let bad = pairs
        .into_iter()
        .find(|&(i, j)| !cond.polarized_residual(phi, psi, &Quat::basis(i), &Quat::basis(j)).is_zero());
    Ok(IdentityReport::exact(cond.id(), bad.map(|(i, j)| Witness::Basis { indices: vec![i, j] })))
}

pub fn check_phi_square(phi: &IsoForm) -> Result<IdentityReport> {
    check_condition(Condition::PhiSquare, phi, &IsoForm::identity())
}

pub fn check_phi_mixed(phi: &IsoForm, psi: &IsoForm) -> Result<IdentityReport> {
    check_condition(Condition::PhiMixed, phi, psi)
}

pub fn check_psi_closure(phi: &IsoForm, psi: &IsoForm) -> Result<IdentityReport> {
    check_condition(Condition::PsiClosure, phi, psi)
}

pub fn duplication_conditions(phi: &IsoForm, psi: &IsoForm) -> Result<Vec<IdentityReport>> {
    CONDITIONS.iter().map(|&c| check_condition(c, phi, psi)).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum WitnessSearch {
    Holds,
    Found {
        x: Quat,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        y: Option<Quat>,
    },
    NotFound { budget: usize },
}

/// A rational point violating the condition: basis vectors and sums of two
/// basis vectors first, then `budget` seeded random points.
pub fn find_witness(
    cond: Condition,
    phi: &IsoForm,
    psi: &IsoForm,
    budget: usize,
    seed: u64,
) -> Result<WitnessSearch> {
    if check_condition(cond, phi, psi)?.holds {
        return Ok(WitnessSearch::Holds);
    }
    let fails = |x: &Quat, y: &Quat| !cond.residual(phi, psi, x, y).is_zero();
    let found = |x: Quat, y: Quat| {
        if cond.is_quadratic() {
            WitnessSearch::Found { x, y: None }
        } else {
            WitnessSearch::Found { x, y: Some(y) }
        }
    };
    for i in 0..4 {
        for j in 0..4 {
            let (x, y) = if cond.is_quadratic() {
                let x = if i == j { Quat::basis(i) } else { &Quat::basis(i) + &Quat::basis(j) };
                (x.clone(), x)
            } else {
                (Quat::basis(i), Quat::basis(j))
            };
            if fails(&x, &y) {
                return Ok(found(x, y));
            }
        }
    }
    let mut s = Sampler::salted(seed, cond.id());
    for _ in 0..budget {
        let (x, y) = (s.quat(), s.quat());
        if fails(&x, &y) {
            return Ok(found(x, y));
        }
    }
    Ok(WitnessSearch::NotFound { budget })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{AlgSpec, Named};
    use crate::arith::{q, Rat};

    fn h_a1() -> Algebra {
        let a = Quat::new(q(3, 5), q(4, 5), Rat::zero(), Rat::zero());
        AlgSpec::isotope(1, &a, &Quat::one()).build().unwrap()
    }

    #[test]
    fn lattice_point_count() {
        assert_eq!(lattice_points(8, 6).len(), 3003);
        assert_eq!((0..8usize).combinations_with_replacement(6).count(), 1716);
    }

    #[test]
    fn quadratic_criterion_examples() {
        for name in [Named::O, Named::StarO, Named::StarOi, Named::OTilde, Named::OTildeI, Named::StarHi] {
            assert!(check_quadratic_criterion(&name.build()).unwrap().holds, "{name:?}");
        }
        let r = check_quadratic_criterion(&h_a1()).unwrap();
        assert!(!r.holds);
        assert!(matches!(r.witness, Some(Witness::Basis { .. })));
    }

    #[test]
    fn sextic_examples() {
        assert!(check_sextic_exact(&Named::H.build()).holds);
        assert!(!check_sextic_exact(&h_a1()).holds);
    }

    #[test]
    fn linearizations_match_finite_differences() {
        // f₁ and f₂ are the λ and λ² coefficients of F(x + λy); recover them
        // from F at λ = 0, ±1, ±2, ±3 (degree 6 in λ) and compare.
        let a = h_a1();
        let x = VecQ::from_ints(&[1, 2, 0, -1]);
        let y = VecQ::from_ints(&[0, 1, 3, 1]);
        let f = |l: i64| sextic_map(&a, &(&x + &y.scale(&Rat::from_int(l))));
        // Vandermonde solve for coefficients c₀..c₆.
        let lams: Vec<i64> = vec![0, 1, -1, 2, -2, 3, -3];
        let rows: Vec<VecQ> = lams.iter().map(|&l| VecQ((0..7).map(|k| Rat::from_int(l.pow(k))).collect())).collect();
        let m = crate::arith::MatQ::from_rows(rows);
        let vals: Vec<VecQ> = lams.iter().map(|&l| f(l)).collect();
        let mut c1 = VecQ::zeros(4);
        let mut c2 = VecQ::zeros(4);
        for comp in 0..4 {
            let rhs = VecQ(vals.iter().map(|v| v[comp].clone()).collect());
            let sol = m.solve(&rhs).unwrap();
            c1[comp] = sol[1].clone();
            c2[comp] = sol[2].clone();
        }
        assert_eq!(first_linearization(&a, &x, &y), c1);
        assert_eq!(second_linearization(&a, &x, &y), c2);
        assert!(!check_linearizations(&a, 20, 0).holds);
        assert!(check_linearizations(&Named::StarOi.build(), 20, 0).holds);
    }

    #[test]
    fn duplication_condition_examples() {
        let (i, j) = (Quat::i(), Quat::j());
        let id = IsoForm::identity();
        let sigma = IsoForm::sigma();
        assert!(check_phi_square(&id).unwrap().holds);
        assert!(check_phi_square(&IsoForm::tab_conj_sigma(&i).unwrap()).unwrap().holds);
        assert!(!check_phi_square(&IsoForm::tab_conj(&i).unwrap()).unwrap().holds);
        let s5 = (IsoForm::tab_conj_sigma(&i).unwrap(), IsoForm::tab(&j, &i).unwrap());
        assert!(check_phi_mixed(&s5.0, &s5.1).unwrap().holds);
        assert!(check_psi_closure(&s5.0, &s5.1).unwrap().holds);
        assert!(check_psi_closure(&sigma, &IsoForm::neg_identity()).unwrap().holds);
        assert!(!check_psi_closure(&id, &IsoForm::neg_identity()).unwrap().holds);
        assert!(!check_psi_closure(&id, &IsoForm::tab(&i, &i).unwrap()).unwrap().holds);
        assert_eq!(
            check_phi_square(&IsoForm::tab(&i, &i).unwrap()).unwrap_err(),
            Error::PhiDoesNotFixOne
        );
    }

    #[test]
    fn witnesses() {
        let i = Quat::i();
        let id = IsoForm::identity();
        let sigma = IsoForm::sigma();
        let w = find_witness(Condition::PsiClosure, &id, &IsoForm::tab_sigma(&i, &i).unwrap(), 1000, 0).unwrap();
        match w {
            WitnessSearch::Found { x, y: Some(y) } => {
                assert!(!Condition::PsiClosure.residual(&id, &IsoForm::tab_sigma(&i, &i).unwrap(), &x, &y).is_zero())
            }
            other => panic!("{other:?}"),
        }
        let w = find_witness(Condition::PhiMixed, &sigma, &IsoForm::tab(&i, &i).unwrap(), 1000, 0).unwrap();
        assert!(matches!(w, WitnessSearch::Found { .. }));
        assert_eq!(
            find_witness(Condition::PsiClosure, &sigma, &id, 1000, 0).unwrap(),
            WitnessSearch::Holds
        );
    }
}
