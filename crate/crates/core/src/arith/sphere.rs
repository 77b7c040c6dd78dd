//! Rational points on unit spheres by inverse stereographic projection.

use super::linalg::VecQ;
use super::quat::Quat;
use super::rat::Rat;

/// Maps `v ∈ ℚⁿ` to the point `((1 − |v|²), 2v) / (1 + |v|²)` of the unit
/// sphere in `ℚⁿ⁺¹`. The origin goes to the first basis vector.
pub fn sphere_point_n(v: &[Rat]) -> VecQ {
    let n2: Rat = v.iter().map(Rat::square).sum();
    let denom = (Rat::one() + &n2).recip();
    let two = Rat::from_int(2);
    let mut out = Vec::with_capacity(v.len() + 1);
    out.push((Rat::one() - &n2) * &denom);
    out.extend(v.iter().map(|x| &two * x * &denom));
    VecQ(out)
}

/// A unit quaternion `((1 − |v|²) + 2v₁i + 2v₂j + 2v₃k) / (1 + |v|²)`.
pub fn sphere_point(v: &[Rat; 3]) -> Quat {
    Quat::from_vec(&sphere_point_n(v)).expect("four components")
}

/// A purely imaginary unit quaternion; `(0, 0)` maps to `i`.
pub fn im_sphere_point(u: &[Rat; 2]) -> Quat {
    let p = sphere_point_n(u);
    Quat::new(Rat::zero(), p[0].clone(), p[1].clone(), p[2].clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat::q;

    fn r(n: i64) -> Rat {
        Rat::from_int(n)
    }

    #[test]
    fn sphere_point_examples() {
        assert_eq!(sphere_point(&[r(0), r(0), r(0)]), Quat::one());
        assert_eq!(
            sphere_point(&[r(1), r(1), r(1)]),
            Quat::new(q(-1, 2), q(1, 2), q(1, 2), q(1, 2))
        );
        assert_eq!(sphere_point(&[r(1), r(0), r(0)]), Quat::i());
    }

    #[test]
    fn im_sphere_point_examples() {
        assert_eq!(im_sphere_point(&[r(0), r(0)]), Quat::i());
        let a = im_sphere_point(&[r(1), r(1)]);
        assert!(a.is_imaginary());
        assert!(a.is_unit());
        assert_eq!(a.mul(&a), Quat::real(r(-1)));
        assert_eq!(im_sphere_point(&[r(2), r(0)]), Quat::new(q(0, 1), q(-3, 5), q(4, 5), q(0, 1)));
    }

    #[test]
    fn higher_spheres() {
        let p = sphere_point_n(&[q(1, 2), q(-3, 7), r(2), q(5, 3), r(0), q(1, 9), r(-1)]);
        assert_eq!(p.len(), 8);
        assert_eq!(p.norm2(), Rat::one());
    }
}
