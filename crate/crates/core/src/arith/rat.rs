//! Exact rational scalars.
//!
//! [`Rat`] wraps an arbitrary-precision fraction that is always kept in
//! lowest terms with a positive denominator. It serializes as the string
//! `"p/q"`, or `"p"` when the denominator is one.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rat(BigRational);

impl Rat {
    pub fn new(numer: i64, denom: i64) -> Self {
        assert!(denom != 0, "zero denominator");
        Rat(BigRational::new(BigInt::from(numer), BigInt::from(denom)))
    }

    pub fn from_int(n: i64) -> Self {
        Rat(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_bigs(numer: BigInt, denom: BigInt) -> Self {
        assert!(!denom.is_zero(), "zero denominator");
        Rat(BigRational::new(numer, denom))
    }

    pub fn zero() -> Self {
        Rat(BigRational::zero())
    }

    pub fn one() -> Self {
        Rat(BigRational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn abs(&self) -> Self {
        Rat(self.0.abs())
    }

    pub fn recip(&self) -> Self {
        assert!(!self.is_zero(), "reciprocal of zero");
        Rat(self.0.recip())
    }

    pub fn square(&self) -> Self {
        Rat(&self.0 * &self.0)
    }

    /// +1, 0 or -1.
    pub fn signum(&self) -> i32 {
        if self.is_zero() {
            0
        } else if self.is_negative() {
            -1
        } else {
            1
        }
    }

    /// Exact rational square root, when one exists.
    pub fn sqrt_exact(&self) -> Option<Rat> {
        if self.is_negative() {
            return None;
        }
        let n = self.numer().sqrt();
        let d = self.denom().sqrt();
        if &(&n * &n) == self.numer() && &(&d * &d) == self.denom() {
            Some(Rat::from_bigs(n, d))
        } else {
            None
        }
    }

    pub fn inner(&self) -> &BigRational {
        &self.0
    }
}

impl From<BigRational> for Rat {
    fn from(r: BigRational) -> Self {
        Rat(r)
    }
}

impl From<i64> for Rat {
    fn from(n: i64) -> Self {
        Rat::from_int(n)
    }
}

impl From<BigInt> for Rat {
    fn from(n: BigInt) -> Self {
        Rat(BigRational::from_integer(n))
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let bad = || Error::Parse(format!("not a rational: {s:?}"));
        match s.split_once('/') {
            Some((p, q)) => {
                let p: BigInt = p.trim().parse().map_err(|_| bad())?;
                let q: BigInt = q.trim().parse().map_err(|_| bad())?;
                if q.is_zero() {
                    return Err(bad());
                }
                Ok(Rat::from_bigs(p, q))
            }
            None => {
                let p: BigInt = s.parse().map_err(|_| bad())?;
                Ok(Rat::from(p))
            }
        }
    }
}

impl Serialize for Rat {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rat {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        // Accept "p/q" strings as well as bare JSON integers.
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Str(String),
            Int(i64),
        }
        match Raw::deserialize(deserializer)? {
            Raw::Str(s) => s.parse().map_err(serde::de::Error::custom),
            Raw::Int(n) => Ok(Rat::from_int(n)),
        }
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident) => {
        impl $tr<&Rat> for &Rat {
            type Output = Rat;
            fn $method(self, rhs: &Rat) -> Rat {
                Rat((&self.0).$method(&rhs.0))
            }
        }
        impl $tr<Rat> for Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                Rat(self.0.$method(rhs.0))
            }
        }
        impl $tr<&Rat> for Rat {
            type Output = Rat;
            fn $method(self, rhs: &Rat) -> Rat {
                Rat(self.0.$method(&rhs.0))
            }
        }
        impl $tr<Rat> for &Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                Rat((&self.0).$method(rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl AddAssign<&Rat> for Rat {
    fn add_assign(&mut self, rhs: &Rat) {
        self.0 += &rhs.0;
    }
}

impl AddAssign for Rat {
    fn add_assign(&mut self, rhs: Rat) {
        self.0 += rhs.0;
    }
}

impl SubAssign<&Rat> for Rat {
    fn sub_assign(&mut self, rhs: &Rat) {
        self.0 -= &rhs.0;
    }
}

impl MulAssign<&Rat> for Rat {
    fn mul_assign(&mut self, rhs: &Rat) {
        self.0 *= &rhs.0;
    }
}

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-self.0)
    }
}

impl Neg for &Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-&self.0)
    }
}

impl Sum for Rat {
    fn sum<I: Iterator<Item = Rat>>(iter: I) -> Rat {
        iter.fold(Rat::zero(), |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a Rat> for Rat {
    fn sum<I: Iterator<Item = &'a Rat>>(iter: I) -> Rat {
        iter.fold(Rat::zero(), |acc, x| acc + x)
    }
}

/// Shorthand for `Rat::new(p, q)`.
pub fn q(p: i64, den: i64) -> Rat {
    Rat::new(p, den)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lowest_terms_and_positive_denominator() {
        let r = Rat::new(6, -8);
        assert_eq!(r.numer(), &BigInt::from(-3));
        assert_eq!(r.denom(), &BigInt::from(4));
        assert_eq!(r.to_string(), "-3/4");
        assert_eq!(Rat::new(10, 5).to_string(), "2");
    }

    #[test]
    fn parse_and_serde() {
        let r: Rat = "-12/16".parse().unwrap();
        assert_eq!(r, Rat::new(-3, 4));
        assert!("1/0".parse::<Rat>().is_err());
        assert!("abc".parse::<Rat>().is_err());
        let json = serde_json::to_string(&r).unwrap();
        assert_eq!(json, "\"-3/4\"");
        let back: Rat = serde_json::from_str(&json).unwrap();
        assert_eq!(back, r);
        let int: Rat = serde_json::from_str("7").unwrap();
        assert_eq!(int, Rat::from_int(7));
    }

    #[test]
    fn exact_square_roots() {
        assert_eq!(Rat::new(9, 25).sqrt_exact(), Some(Rat::new(3, 5)));
        assert_eq!(Rat::new(2, 1).sqrt_exact(), None);
        assert_eq!(Rat::new(-1, 1).sqrt_exact(), None);
    }
}
