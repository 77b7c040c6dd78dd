//! Octonions as pairs of quaternions.
//!
//! The basis `e0..e7` is `(1,0), (i,0), (j,0), (k,0), (0,1), (0,i), (0,j), (0,k)`
//! and the product is the doubling rule
//! `(x, y)(u, v) = (xu − v̄y, yū + vx)`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use super::linalg::VecQ;
use super::quat::Quat;
use super::rat::Rat;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct Oct {
    pub x: Quat,
    pub y: Quat,
}

impl Oct {
    pub fn new(x: Quat, y: Quat) -> Self {
        Oct { x, y }
    }

    pub fn zero() -> Self {
        Oct::default()
    }

    pub fn one() -> Self {
        Oct::new(Quat::one(), Quat::zero())
    }

    pub fn real(r: Rat) -> Self {
        Oct::new(Quat::real(r), Quat::zero())
    }

    pub fn basis(n: usize) -> Self {
        assert!(n < 8, "octonion basis index out of range");
        if n < 4 {
            Oct::new(Quat::basis(n), Quat::zero())
        } else {
            Oct::new(Quat::zero(), Quat::basis(n - 4))
        }
    }

    pub fn from_quat(x: Quat) -> Self {
        Oct::new(x, Quat::zero())
    }

    pub fn from_vec(v: &VecQ) -> Result<Self> {
        if v.len() != 8 {
            return Err(Error::DimensionMismatch { expected: 8, got: v.len() });
        }
        Ok(Oct::new(Quat::from_slice(&v.0[..4])?, Quat::from_slice(&v.0[4..])?))
    }

    pub fn from_slice(v: &[Rat]) -> Result<Self> {
        Self::from_vec(&VecQ(v.to_vec()))
    }

    pub fn to_vec(&self) -> VecQ {
        VecQ(self.x.0.iter().chain(self.y.0.iter()).cloned().collect())
    }

    pub fn re(&self) -> &Rat {
        self.x.re()
    }

    /// `conj(x, y) = (x̄, −y)`
    pub fn conj(&self) -> Oct {
        Oct::new(self.x.conj(), -&self.y)
    }

    pub fn norm2(&self) -> Rat {
        self.x.norm2() + self.y.norm2()
    }

    pub fn dot(&self, other: &Oct) -> Rat {
        self.x.dot(&other.x) + self.y.dot(&other.y)
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    pub fn is_unit(&self) -> bool {
        self.norm2().is_one()
    }

    pub fn is_imaginary(&self) -> bool {
        self.re().is_zero()
    }

    pub fn scale(&self, s: &Rat) -> Oct {
        Oct::new(self.x.scale(s), self.y.scale(s))
    }

    /// The doubling product `(x, y)(u, v) = (xu − v̄y, yū + vx)`.
    pub fn cd_product(&self, rhs: &Oct) -> Oct {
        let (x, y) = (&self.x, &self.y);
        let (u, v) = (&rhs.x, &rhs.y);
        Oct::new(&x.mul(u) - &v.conj().mul(y), &y.mul(&u.conj()) + &v.mul(x))
    }

    /// `x ↦ a x ā`; well defined since octonions are flexible.
    pub fn sandwich(a: &Oct, x: &Oct) -> Oct {
        a.cd_product(x).cd_product(&a.conj())
    }
}

impl fmt::Debug for Oct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{:?}; {:?}]", self.x, self.y)
    }
}

impl Mul<&Oct> for &Oct {
    type Output = Oct;
    fn mul(self, rhs: &Oct) -> Oct {
        self.cd_product(rhs)
    }
}

impl Add<&Oct> for &Oct {
    type Output = Oct;
    fn add(self, rhs: &Oct) -> Oct {
        Oct::new(&self.x + &rhs.x, &self.y + &rhs.y)
    }
}

impl Sub<&Oct> for &Oct {
    type Output = Oct;
    fn sub(self, rhs: &Oct) -> Oct {
        Oct::new(&self.x - &rhs.x, &self.y - &rhs.y)
    }
}

impl Neg for &Oct {
    type Output = Oct;
    fn neg(self) -> Oct {
        Oct::new(-&self.x, -&self.y)
    }
}

/// `(xy)z − x(yz)` under an arbitrary bilinear product.
pub fn associator<T, F>(x: &T, y: &T, z: &T, mul: F) -> T
where
    F: Fn(&T, &T) -> T,
    for<'a> &'a T: Sub<&'a T, Output = T>,
{
    let left = mul(&mul(x, y), z);
    let right = mul(x, &mul(y, z));
    &left - &right
}
