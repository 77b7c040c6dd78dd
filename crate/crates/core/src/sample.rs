//! Seeded sampling of rational test points.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::arith::{im_sphere_point, sphere_point, sphere_point_n, Oct, Quat, Rat, VecQ};

/// Deterministic source of small rationals and rational sphere points.
///
/// Streams are derived from a numeric seed plus a text salt, so that
/// independent consumers (suites, checks) get reproducible, uncorrelated
/// samples regardless of evaluation order.
pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    pub fn salted(seed: u64, salt: &str) -> Self {
        Self::new(seed ^ fnv1a(salt))
    }

    pub fn int(&mut self, lo: i64, hi: i64) -> i64 {
        self.rng.gen_range(lo..=hi)
    }

    pub fn coin(&mut self) -> bool {
        self.rng.gen_bool(0.5)
    }

    /// A rational `p/q` with `|p| ≤ 5`, `1 ≤ q ≤ 4`.
    pub fn small_rat(&mut self) -> Rat {
        let p = self.int(-5, 5);
        let q = self.int(1, 4);
        Rat::new(p, q)
    }

    /// Integer vector with entries in `[-3, 3]`, never zero.
    pub fn int_vec(&mut self, dim: usize) -> VecQ {
        loop {
            let v = VecQ((0..dim).map(|_| Rat::from_int(self.int(-3, 3))).collect());
            if !v.is_zero() {
                return v;
            }
        }
    }

    /// Nonzero rational vector.
    pub fn rat_vec(&mut self, dim: usize) -> VecQ {
        loop {
            let v = VecQ((0..dim).map(|_| self.small_rat()).collect());
            if !v.is_zero() {
                return v;
            }
        }
    }

    pub fn quat(&mut self) -> Quat {
        Quat::from_vec(&self.rat_vec(4)).expect("dim 4")
    }

    /// Unit quaternion; generic (neither real nor imaginary) with high probability.
    pub fn unit_quat(&mut self) -> Quat {
        let v = [self.small_rat(), self.small_rat(), self.small_rat()];
        sphere_point(&v)
    }

    /// Unit quaternion that is neither real nor purely imaginary.
    pub fn generic_unit_quat(&mut self) -> Quat {
        loop {
            let a = self.unit_quat();
            if !a.is_real() && !a.is_imaginary() {
                return a;
            }
        }
    }

    /// Purely imaginary unit quaternion.
    pub fn unit_imag(&mut self) -> Quat {
        let u = [self.small_rat(), self.small_rat()];
        let a = im_sphere_point(&u);
        if self.coin() {
            -&a
        } else {
            a
        }
    }

    /// Purely imaginary unit of the form `w̄ i w` with `w` a rational unit.
    /// Every rotation taking such a point to `i` has a rational unit
    /// quaternion representative.
    pub fn rotated_i(&mut self) -> Quat {
        let w = self.unit_quat();
        w.conj().mul(&Quat::i()).mul(&w)
    }

    /// Unit octonion.
    pub fn unit_oct(&mut self) -> Oct {
        let v: Vec<Rat> = (0..7).map(|_| self.small_rat()).collect();
        Oct::from_vec(&sphere_point_n(&v)).expect("dim 8")
    }

    /// Unit imaginary octonion.
    pub fn unit_imag_oct(&mut self) -> Oct {
        let v: Vec<Rat> = (0..6).map(|_| self.small_rat()).collect();
        let p = sphere_point_n(&v);
        let mut out = vec![Rat::zero()];
        out.extend(p.0);
        Oct::from_vec(&VecQ(out)).expect("dim 8")
    }

    /// Unit octonion whose square is not ±1.
    pub fn generic_unit_oct(&mut self) -> Oct {
        loop {
            let a = self.unit_oct();
            if !a.re().is_zero() && !a.x.is_real() {
                return a;
            }
        }
    }
}

fn fnv1a(s: &str) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in s.bytes() {
        h ^= u64::from(b);
        h = h.wrapping_mul(0x0100_0000_01b3);
    }
    h
}
