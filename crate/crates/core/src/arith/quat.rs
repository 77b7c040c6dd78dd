//! Quaternions with exact rational components over the basis `(1, i, j, k)`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use super::linalg::VecQ;
use super::rat::Rat;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Quat(pub [Rat; 4]);

impl Quat {
    pub fn new(a: Rat, b: Rat, c: Rat, d: Rat) -> Self {
        Quat([a, b, c, d])
    }

    pub fn from_ints(a: i64, b: i64, c: i64, d: i64) -> Self {
        Quat([a.into(), b.into(), c.into(), d.into()])
    }

    pub fn zero() -> Self {
        Quat::default()
    }

    pub fn one() -> Self {
        Self::real(Rat::one())
    }

    pub fn real(r: Rat) -> Self {
        Quat([r, Rat::zero(), Rat::zero(), Rat::zero()])
    }

    pub fn i() -> Self {
        Self::basis(1)
    }

    pub fn j() -> Self {
        Self::basis(2)
    }

    pub fn k() -> Self {
        Self::basis(3)
    }

    pub fn basis(n: usize) -> Self {
        let mut q = Quat::zero();
        q.0[n] = Rat::one();
        q
    }

    pub fn from_vec(v: &VecQ) -> Result<Self> {
        if v.len() != 4 {
            return Err(Error::DimensionMismatch { expected: 4, got: v.len() });
        }
        Ok(Quat([v[0].clone(), v[1].clone(), v[2].clone(), v[3].clone()]))
    }

    pub fn from_slice(v: &[Rat]) -> Result<Self> {
        if v.len() != 4 {
            return Err(Error::DimensionMismatch { expected: 4, got: v.len() });
        }
        Ok(Quat([v[0].clone(), v[1].clone(), v[2].clone(), v[3].clone()]))
    }

    pub fn to_vec(&self) -> VecQ {
        VecQ(self.0.to_vec())
    }

    pub fn re(&self) -> &Rat {
        &self.0[0]
    }

    pub fn conj(&self) -> Quat {
        let [a, b, c, d] = &self.0;
        Quat([a.clone(), -b, -c, -d])
    }

    pub fn norm2(&self) -> Rat {
        self.0.iter().map(Rat::square).sum()
    }

    pub fn dot(&self, other: &Quat) -> Rat {
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    /// `T(x) = x + x̄`, twice the real part.
    pub fn trace(&self) -> Rat {
        &self.0[0] + &self.0[0]
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Rat::is_zero)
    }

    pub fn is_real(&self) -> bool {
        self.0[1..].iter().all(Rat::is_zero)
    }

    pub fn is_imaginary(&self) -> bool {
        self.0[0].is_zero()
    }

    pub fn is_unit(&self) -> bool {
        self.norm2().is_one()
    }

    pub fn scale(&self, s: &Rat) -> Quat {
        Quat(self.0.clone().map(|x| x * s))
    }

    /// Multiplicative inverse of a nonzero quaternion.
    pub fn inverse(&self) -> Quat {
        let n = self.norm2();
        assert!(!n.is_zero(), "inverse of zero quaternion");
        self.conj().scale(&n.recip())
    }

    pub fn mul(&self, rhs: &Quat) -> Quat {
        let [a1, b1, c1, d1] = &self.0;
        let [a2, b2, c2, d2] = &rhs.0;
        Quat([
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        ])
    }

    /// `u x u⁻¹`, a rotation of the imaginary part for any nonzero `u`.
    pub fn conjugate_by(&self, u: &Quat) -> Quat {
        u.mul(self).mul(&u.inverse())
    }

    pub fn is_proportional(&self, other: &Quat) -> bool {
        self.to_vec().is_proportional(&other.to_vec())
    }
}

impl fmt::Debug for Quat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = &self.0;
        write!(f, "({a}, {b}, {c}, {d})")
    }
}

impl fmt::Display for Quat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl Mul<&Quat> for &Quat {
    type Output = Quat;
    fn mul(self, rhs: &Quat) -> Quat {
        Quat::mul(self, rhs)
    }
}

impl Add<&Quat> for &Quat {
    type Output = Quat;
    fn add(self, rhs: &Quat) -> Quat {
        let [a, b, c, d] = &self.0;
        let [e, f, g, h] = &rhs.0;
        Quat([a + e, b + f, c + g, d + h])
    }
}

impl Add for Quat {
    type Output = Quat;
    fn add(self, rhs: Quat) -> Quat {
        &self + &rhs
    }
}

impl Sub<&Quat> for &Quat {
    type Output = Quat;
    fn sub(self, rhs: &Quat) -> Quat {
        let [a, b, c, d] = &self.0;
        let [e, f, g, h] = &rhs.0;
        Quat([a - e, b - f, c - g, d - h])
    }
}

impl Sub for Quat {
    type Output = Quat;
    fn sub(self, rhs: Quat) -> Quat {
        &self - &rhs
    }
}

impl Neg for &Quat {
    type Output = Quat;
    fn neg(self) -> Quat {
        Quat(self.0.clone().map(|x| -x))
    }
}

impl Neg for Quat {
    type Output = Quat;
    fn neg(self) -> Quat {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat::q;

    #[test]
    fn defining_relations() {
        let (i, j, k) = (Quat::i(), Quat::j(), Quat::k());
        let m1 = Quat::real(Rat::from_int(-1));
        assert_eq!(&i * &i, m1);
        assert_eq!(&j * &j, m1);
        assert_eq!(&k * &k, m1);
        assert_eq!(&i * &j, k);
        assert_eq!(&j * &k, i);
        assert_eq!(&k * &i, j);
        assert_eq!(&j * &i, -&k);
    }

    #[test]
    fn conjugation_of_i_under_i() {
        // i · conj(i) · (−i) = i · (−i) · (−i) = −i
        let i = Quat::i();
        let x = Quat::i();
        assert_eq!(i.mul(&x.conj()).mul(&-&i), -&i);
    }

    #[test]
    fn pythagorean_point_has_unit_norm() {
        let p = Quat::new(q(3, 5), q(4, 5), q(0, 1), q(0, 1));
        assert_eq!(p.mul(&p.conj()), Quat::one());
        assert!(p.is_unit());
    }

    #[test]
    fn inverse_and_conjugate_by() {
        let u = Quat::from_ints(1, 2, -1, 3);
        assert_eq!(u.mul(&u.inverse()), Quat::one());
        let r = Quat::j().conjugate_by(&u);
        assert!(r.is_imaginary());
        assert_eq!(r.norm2(), Rat::one());
    }
}
