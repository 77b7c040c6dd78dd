//! Finite-dimensional real algebras given by exact structure constants on an
//! orthonormal basis, with the Euclidean inner product of that basis.

mod left_unit;
mod spec;

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith::{MatQ, Rat, Subspace, VecQ};
use crate::error::{Error, Result};
use crate::sample::Sampler;

pub use left_unit::{
    left_unit_inner_product_checks, left_unit_product_table, left_unit_square_identities, CellCheck,
    NamedCheck, ProductTable, TABLE_LABELS,
};
pub use spec::{
    base_conj, base_product, duplication_algebra, oct_isometry_matrix, AlgSpec, Base, Named, StarVariant, ROSTER,
};

#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Algebra {
    dim: usize,
    /// `constants[i][j] = eᵢ ⊙ eⱼ`
    constants: Vec<Vec<VecQ>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    label: Option<String>,
}

/// A basis quadruple violating the polarized norm identity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct NormWitness {
    pub side: Side,
    pub indices: [usize; 4],
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    Left,
    Right,
}

impl Algebra {
    pub fn new(dim: usize, constants: Vec<Vec<VecQ>>) -> Result<Self> {
        if constants.len() != dim {
            return Err(Error::DimensionMismatch { expected: dim, got: constants.len() });
        }
        for row in &constants {
            if row.len() != dim {
                return Err(Error::DimensionMismatch { expected: dim, got: row.len() });
            }
            if let Some(v) = row.iter().find(|v| v.len() != dim) {
                return Err(Error::DimensionMismatch { expected: dim, got: v.len() });
            }
        }
        Ok(Algebra { dim, constants, label: None })
    }

    /// Tabulates a bilinear map on the standard basis.
    pub fn from_bilinear(dim: usize, f: impl Fn(&VecQ, &VecQ) -> VecQ) -> Self {
        let basis: Vec<VecQ> = (0..dim).map(|i| VecQ::basis(dim, i)).collect();
        let constants = basis.iter().map(|x| basis.iter().map(|y| f(x, y)).collect()).collect();
        Algebra { dim, constants, label: None }
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn constant(&self, i: usize, j: usize) -> &VecQ {
        &self.constants[i][j]
    }

    pub fn constants(&self) -> &[Vec<VecQ>] {
        &self.constants
    }

    /// Copy with one structure constant replaced.
    pub fn with_constant(&self, i: usize, j: usize, v: VecQ) -> Self {
        let mut out = self.clone();
        out.constants[i][j] = v;
        out.label = None;
        out
    }

    pub fn basis(&self, i: usize) -> VecQ {
        VecQ::basis(self.dim, i)
    }

    pub fn product(&self, x: &VecQ, y: &VecQ) -> VecQ {
        let mut out = VecQ::zeros(self.dim);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                out.axpy(&(xi * yj), &self.constants[i][j]);
            }
        }
        out
    }

    pub fn square(&self, x: &VecQ) -> VecQ {
        self.product(x, x)
    }

    /// Matrix of `y ↦ a ⊙ y`.
    pub fn left_mul(&self, a: &VecQ) -> MatQ {
        let cols: Vec<VecQ> = (0..self.dim).map(|k| self.product(a, &self.basis(k))).collect();
        MatQ::from_columns(&cols)
    }

    /// Matrix of `x ↦ x ⊙ a`.
    pub fn right_mul(&self, a: &VecQ) -> MatQ {
        let cols: Vec<VecQ> = (0..self.dim).map(|k| self.product(&self.basis(k), a)).collect();
        MatQ::from_columns(&cols)
    }

    /// Checks `⟨eᵢeⱼ|eₖeₗ⟩ + ⟨eₖeⱼ|eᵢeₗ⟩ = 2δᵢₖδⱼₗ` and the mirrored family
    /// `⟨eⱼeᵢ|eₗeₖ⟩ + ⟨eⱼeₖ|eₗeᵢ⟩ = 2δᵢₖδⱼₗ` on all basis quadruples.
    pub fn absolute_value_witness(&self) -> Option<NormWitness> {
        let n = self.dim;
        let gram: Vec<Vec<Rat>> = (0..n * n)
            .into_par_iter()
            .map(|p| (0..n * n).map(|q| self.constants[p / n][p % n].dot(&self.constants[q / n][q % n])).collect())
            .collect();
        let g = |a: usize, b: usize, c: usize, d: usize| &gram[a * n + b][c * n + d];
        let two = Rat::from_int(2);
        let quads: Vec<[usize; 4]> = (0..n.pow(4))
            .map(|t| [t / (n * n * n), (t / (n * n)) % n, (t / n) % n, t % n])
            .collect();
        quads.into_iter().find_map(|[i, j, k, l]| {
            let expected = if i == k && j == l { two.clone() } else { Rat::zero() };
            if g(i, j, k, l) + g(k, j, i, l) != expected {
                return Some(NormWitness { side: Side::Left, indices: [i, j, k, l] });
            }
            if g(j, i, l, k) + g(j, k, l, i) != expected {
                return Some(NormWitness { side: Side::Right, indices: [i, j, k, l] });
            }
            None
        })
    }

    pub fn is_absolute_valued(&self) -> bool {
        self.absolute_value_witness().is_none()
    }

    /// The element `e` with `e ⊙ y = y` for all `y`, when it exists.
    pub fn left_unit(&self) -> Option<VecQ> {
        // Σ_c e_c (e_c ⊙ e_j) = e_j for every j: n² equations in n unknowns.
        let n = self.dim;
        let mut rows = Vec::with_capacity(n * n);
        let mut rhs = Vec::with_capacity(n * n);
        for j in 0..n {
            for r in 0..n {
                rows.push(VecQ((0..n).map(|c| self.constants[c][j][r].clone()).collect()));
                rhs.push(if r == j { Rat::one() } else { Rat::zero() });
            }
        }
        MatQ::from_rows(rows).solve(&VecQ(rhs)).ok()
    }

    pub fn is_left_unit(&self, e: &VecQ) -> bool {
        self.left_mul(e).is_identity()
    }

    /// `A_e = {x : x ⊙ e = x}`.
    pub fn fixed_subspace(&self, e: &VecQ) -> Result<Subspace> {
        if !self.is_left_unit(e) {
            return Err(Error::NotLeftUnit);
        }
        let m = &self.right_mul(e) - &MatQ::identity(self.dim);
        Ok(Subspace::span(self.dim, &m.kernel()))
    }

    /// `{x : x ⊙ e = −x}`.
    pub fn anti_fixed_subspace(&self, e: &VecQ) -> Result<Subspace> {
        if !self.is_left_unit(e) {
            return Err(Error::NotLeftUnit);
        }
        let m = &self.right_mul(e) + &MatQ::identity(self.dim);
        Ok(Subspace::span(self.dim, &m.kernel()))
    }

    /// Smallest product-closed subspace containing `x`.
    pub fn single_generated(&self, x: &VecQ) -> Subspace {
        let mut s = Subspace::span(self.dim, std::slice::from_ref(x));
        loop {
            let b = s.basis().to_vec();
            let products: Vec<VecQ> =
                b.iter().flat_map(|u| b.iter().map(move |v| (u, v))).map(|(u, v)| self.product(u, v)).collect();
            let next = s.sum(&Subspace::span(self.dim, &products));
            if next.dim() == s.dim() {
                return s;
            }
            s = next;
        }
    }

    pub fn is_closed(&self, s: &Subspace) -> bool {
        let b = s.basis();
        b.iter().all(|u| b.iter().all(|v| s.contains(&self.product(u, v))))
    }

    /// Largest dimension of `single_generated(x)` over seeded sample points;
    /// a lower bound for the degree.
    pub fn degree_sampled(&self, samples: usize, seed: u64) -> usize {
        let mut sampler = Sampler::salted(seed, "degree");
        let points: Vec<VecQ> = (0..samples.max(1)).map(|_| sampler.rat_vec(self.dim)).collect();
        points.par_iter().map(|x| self.single_generated(x).dim()).max().unwrap_or(0)
    }

    /// Integer structure constants `D·cᵢⱼ` with `D` the common denominator.
    pub fn integer_constants(&self) -> (num_bigint::BigInt, Vec<Vec<Vec<num_bigint::BigInt>>>) {
        use num_integer::Integer;
        let d = self
            .constants
            .iter()
            .flatten()
            .flat_map(|v| v.iter())
            .fold(num_bigint::BigInt::from(1), |acc, r| acc.lcm(r.denom()));
        let scaled = self
            .constants
            .iter()
            .map(|row| {
                row.iter()
                    .map(|v| v.iter().map(|r| (r.inner() * &d).to_integer()).collect())
                    .collect()
            })
            .collect();
        (d, scaled)
    }
}

impl fmt::Debug for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Algebra(dim {}, {})", self.dim, self.label.as_deref().unwrap_or("unlabeled"))
    }
}

/// Whether `m` is an isomorphism `a → b`: orthogonal and multiplicative on
/// all basis pairs.
pub fn verify_isomorphism(a: &Algebra, b: &Algebra, m: &MatQ) -> bool {
    isomorphism_counterexample(a, b, m).is_none() && m.rows() == a.dim() && m.is_orthogonal()
}

/// First basis pair `(i, j)` with `m(eᵢ ⊙ eⱼ) ≠ m(eᵢ) ⊛ m(eⱼ)`.
pub fn isomorphism_counterexample(a: &Algebra, b: &Algebra, m: &MatQ) -> Option<(usize, usize)> {
    let n = a.dim();
    if b.dim() != n || m.rows() != n || m.cols() != n {
        return Some((0, 0));
    }
    let images: Vec<VecQ> = (0..n).map(|i| m.column(i)).collect();
    (0..n * n).into_par_iter().find_first(|&p| {
        let (i, j) = (p / n, p % n);
        m.mul_vec(a.constant(i, j)) != b.product(&images[i], &images[j])
    })
    .map(|p| (p / n, p % n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::q;

    fn r(n: i64) -> Rat {
        Rat::from_int(n)
    }

    #[test]
    fn roster_left_units() {
        for name in ROSTER {
            let a = AlgSpec::Named { name }.build().unwrap();
            assert!(a.is_absolute_valued(), "{name:?}");
            let e = a.left_unit().unwrap_or_else(|| panic!("{name:?} has no left unit"));
            assert!(a.is_left_unit(&e));
            assert_eq!(e.norm2(), Rat::one());
        }
    }

    #[test]
    fn star_products() {
        let so = AlgSpec::Named { name: Named::StarO }.build().unwrap();
        let e0 = so.basis(0);
        let e1 = so.basis(1);
        let x = VecQ((0..8).map(|k| q(k as i64 - 3, 2)).collect());
        assert_eq!(so.product(&e0, &x), x);
        assert_eq!(so.product(&e1, &e0), -&e1);
        let right = AlgSpec::Star { base: Base::O, variant: StarVariant::Right }.build().unwrap();
        assert_eq!(right.left_unit(), None);
    }

    #[test]
    fn perturbation_breaks_absolute_value() {
        let h = AlgSpec::Named { name: Named::H }.build().unwrap();
        let mut v = h.constant(1, 2).clone();
        v[0] = &v[0] + &r(1);
        let bad = h.with_constant(1, 2, v);
        let w = bad.absolute_value_witness().unwrap();
        assert!(w.indices.contains(&1) || w.indices.contains(&2));
    }

    #[test]
    fn fixed_subspaces() {
        let so = AlgSpec::Named { name: Named::StarO }.build().unwrap();
        let e = so.left_unit().unwrap();
        assert_eq!(so.fixed_subspace(&e).unwrap().dim(), 1);
        let soi = AlgSpec::Named { name: Named::StarOi }.build().unwrap();
        let e = soi.left_unit().unwrap();
        assert_eq!(e, soi.basis(1));
        assert_eq!(soi.fixed_subspace(&e).unwrap().dim(), 7);
        assert_eq!(soi.fixed_subspace(&soi.basis(0)), Err(Error::NotLeftUnit));
    }

    #[test]
    fn single_generated_examples() {
        let so = AlgSpec::Named { name: Named::StarO }.build().unwrap();
        let x = VecQ::from_ints(&[1, 2, -1, 0, 3, 1, 1, -2]);
        let s = so.single_generated(&x);
        assert!(s.dim() <= 2 && s.contains(&x) && so.is_closed(&s));
        let shi = AlgSpec::Named { name: Named::StarHi }.build().unwrap();
        assert_eq!(shi.single_generated(&VecQ::from_ints(&[1, 2, -1, 3])).dim(), 4);
        let e = shi.left_unit().unwrap();
        assert_eq!(shi.single_generated(&e).dim(), 1);
    }

    #[test]
    fn isomorphism_check_rejects_non_multiplicative() {
        let o = AlgSpec::Named { name: Named::O }.build().unwrap();
        let so = AlgSpec::Named { name: Named::StarO }.build().unwrap();
        assert!(verify_isomorphism(&o, &o, &MatQ::identity(8)));
        assert!(!verify_isomorphism(&o, &so, &MatQ::identity(8)));
        assert!(isomorphism_counterexample(&o, &so, &MatQ::identity(8)).is_some());
    }
}
