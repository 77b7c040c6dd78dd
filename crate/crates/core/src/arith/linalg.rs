//! Dense exact linear algebra over [`Rat`].
//!
//! Everything here is small (dimension at most 64 in practice), so the
//! routines favour clarity: Gauss-Jordan elimination to reduced row echelon
//! form gives rank, kernel, solutions and determinants without rounding.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Neg, Sub};

use serde::{Deserialize, Serialize};

use super::rat::Rat;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VecQ(pub Vec<Rat>);

impl VecQ {
    pub fn zeros(n: usize) -> Self {
        VecQ(vec![Rat::zero(); n])
    }

    pub fn basis(n: usize, i: usize) -> Self {
        let mut v = Self::zeros(n);
        v.0[i] = Rat::one();
        v
    }

    pub fn from_ints(xs: &[i64]) -> Self {
        VecQ(xs.iter().map(|&x| Rat::from_int(x)).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Rat::is_zero)
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Rat> {
        self.0.iter()
    }

    pub fn dot(&self, other: &VecQ) -> Rat {
        debug_assert_eq!(self.len(), other.len());
        self.0
            .iter()
            .zip(&other.0)
            .filter(|(a, b)| !a.is_zero() && !b.is_zero())
            .map(|(a, b)| a * b)
            .sum()
    }

    pub fn norm2(&self) -> Rat {
        self.dot(self)
    }

    pub fn scale(&self, s: &Rat) -> VecQ {
        VecQ(self.0.iter().map(|x| x * s).collect())
    }

    /// `self += s * other`
    pub fn axpy(&mut self, s: &Rat, other: &VecQ) {
        if s.is_zero() {
            return;
        }
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            if !b.is_zero() {
                *a += s * b;
            }
        }
    }

    /// Index of the first nonzero entry.
    pub fn leading_index(&self) -> Option<usize> {
        self.0.iter().position(|x| !x.is_zero())
    }

    /// Whether `self` and `other` are nonzero multiples of each other.
    pub fn is_proportional(&self, other: &VecQ) -> bool {
        if self.is_zero() || other.is_zero() || self.len() != other.len() {
            return false;
        }
        let Some(p) = self.leading_index() else { return false };
        if other.0[p].is_zero() {
            return false;
        }
        let s = &other.0[p] / &self.0[p];
        self.scale(&s) == *other
    }
}

impl fmt::Debug for VecQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.0.iter()).finish()
    }
}

impl fmt::Display for VecQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, x) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

impl Index<usize> for VecQ {
    type Output = Rat;
    fn index(&self, i: usize) -> &Rat {
        &self.0[i]
    }
}

impl IndexMut<usize> for VecQ {
    fn index_mut(&mut self, i: usize) -> &mut Rat {
        &mut self.0[i]
    }
}

impl Add<&VecQ> for &VecQ {
    type Output = VecQ;
    fn add(self, rhs: &VecQ) -> VecQ {
        debug_assert_eq!(self.len(), rhs.len());
        VecQ(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Add for VecQ {
    type Output = VecQ;
    fn add(self, rhs: VecQ) -> VecQ {
        &self + &rhs
    }
}

impl Sub<&VecQ> for &VecQ {
    type Output = VecQ;
    fn sub(self, rhs: &VecQ) -> VecQ {
        debug_assert_eq!(self.len(), rhs.len());
        VecQ(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Sub for VecQ {
    type Output = VecQ;
    fn sub(self, rhs: VecQ) -> VecQ {
        &self - &rhs
    }
}

impl Neg for &VecQ {
    type Output = VecQ;
    fn neg(self) -> VecQ {
        VecQ(self.0.iter().map(|x| -x).collect())
    }
}

impl Neg for VecQ {
    type Output = VecQ;
    fn neg(self) -> VecQ {
        -&self
    }
}

/// Row-major dense matrix. Serializes as a list of rows of `"p/q"` strings.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MatQ {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl MatQ {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        MatQ { rows, cols, data: vec![Rat::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rat::one();
        }
        m
    }

    pub fn diag(entries: &[Rat]) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n, n);
        for (i, x) in entries.iter().enumerate() {
            m[(i, i)] = x.clone();
        }
        m
    }

    pub fn from_rows(rows: Vec<VecQ>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, VecQ::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        MatQ { rows: r, cols: c, data: rows.into_iter().flat_map(|v| v.0).collect() }
    }

    pub fn from_columns(cols: &[VecQ]) -> Self {
        let c = cols.len();
        let r = cols.first().map_or(0, VecQ::len);
        let mut m = Self::zeros(r, c);
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), r, "ragged columns");
            for i in 0..r {
                m[(i, j)] = col[i].clone();
            }
        }
        m
    }

    pub fn from_ints(rows: &[&[i64]]) -> Self {
        Self::from_rows(rows.iter().map(|r| VecQ::from_ints(r)).collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> VecQ {
        VecQ(self.data[i * self.cols..(i + 1) * self.cols].to_vec())
    }

    pub fn column(&self, j: usize) -> VecQ {
        VecQ((0..self.rows).map(|i| self[(i, j)].clone()).collect())
    }

    pub fn row_vectors(&self) -> Vec<VecQ> {
        (0..self.rows).map(|i| self.row(i)).collect()
    }

    pub fn transpose(&self) -> MatQ {
        let mut t = MatQ::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &VecQ) -> VecQ {
        assert_eq!(self.cols, v.len(), "dimension mismatch");
        VecQ(
            (0..self.rows)
                .map(|i| {
                    self.data[i * self.cols..(i + 1) * self.cols]
                        .iter()
                        .zip(v.iter())
                        .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                        .map(|(a, b)| a * b)
                        .sum()
                })
                .collect(),
        )
    }

    pub fn mul_mat(&self, other: &MatQ) -> MatQ {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = MatQ::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn scale(&self, s: &Rat) -> MatQ {
        MatQ { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x * s).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Rat::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == MatQ::identity(self.rows)
    }

    /// `MᵀM = I`, exactly.
    pub fn is_orthogonal(&self) -> bool {
        self.is_square() && self.transpose().mul_mat(self).is_identity()
    }

    /// Block-diagonal matrix with the given square blocks.
    pub fn block_diag(a: &MatQ, b: &MatQ) -> MatQ {
        let n = a.rows + b.rows;
        let mut m = MatQ::zeros(n, n);
        for i in 0..a.rows {
            for j in 0..a.cols {
                m[(i, j)] = a[(i, j)].clone();
            }
        }
        for i in 0..b.rows {
            for j in 0..b.cols {
                m[(a.rows + i, a.cols + j)] = b[(i, j)].clone();
            }
        }
        m
    }

    /// The square sub-block starting at `(offset, offset)` of size `n`.
    pub fn sub_block(&self, row0: usize, col0: usize, n_rows: usize, n_cols: usize) -> MatQ {
        let mut m = MatQ::zeros(n_rows, n_cols);
        for i in 0..n_rows {
            for j in 0..n_cols {
                m[(i, j)] = self[(row0 + i, col0 + j)].clone();
            }
        }
        m
    }

    /// Reduced row echelon form and the pivot columns.
    pub fn rref(&self) -> (MatQ, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m[(r, c)].recip();
            for j in c..m.cols {
                let v = &m[(r, j)] * &inv;
                m[(r, j)] = v;
            }
            for i in 0..m.rows {
                if i == r || m[(i, c)].is_zero() {
                    continue;
                }
                let f = m[(i, c)].clone();
                for j in c..m.cols {
                    if m[(r, j)].is_zero() {
                        continue;
                    }
                    let v = &f * &m[(r, j)];
                    m[(i, j)] -= &v;
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// A basis of `{v : M v = 0}`, one vector per free column, in column order.
    pub fn kernel(&self) -> Vec<VecQ> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = VecQ::zeros(self.cols);
                v[f] = Rat::one();
                for (row, &pc) in pivots.iter().enumerate() {
                    v[pc] = -&r[(row, f)];
                }
                v
            })
            .collect()
    }

    /// One solution of `M x = b`.
    pub fn solve(&self, b: &VecQ) -> Result<VecQ> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch { expected: self.rows, got: b.len() });
        }
        let mut aug = MatQ::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, self.cols)] = b[i].clone();
        }
        let (r, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return Err(Error::InconsistentSystem);
        }
        let mut x = VecQ::zeros(self.cols);
        for (row, &pc) in pivots.iter().enumerate() {
            x[pc] = r[(row, self.cols)].clone();
        }
        Ok(x)
    }

    /// Determinant by elimination with row swaps.
    pub fn det(&self) -> Rat {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let n = self.rows;
        let mut m = self.clone();
        let mut det = Rat::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m[(i, c)].is_zero()) else {
                return Rat::zero();
            };
            if p != c {
                m.swap_rows(p, c);
                det = -det;
            }
            let piv = m[(c, c)].clone();
            det *= &piv;
            let inv = piv.recip();
            for i in c + 1..n {
                if m[(i, c)].is_zero() {
                    continue;
                }
                let f = &m[(i, c)] * &inv;
                for j in c..n {
                    if m[(c, j)].is_zero() {
                        continue;
                    }
                    let v = &f * &m[(c, j)];
                    m[(i, j)] -= &v;
                }
            }
        }
        det
    }

    /// Inverse of a square matrix; `None` when singular.
    pub fn inverse(&self) -> Option<MatQ> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut aug = MatQ::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = Rat::one();
        }
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        Some(r.sub_block(0, n, n, n))
    }
}

impl Index<(usize, usize)> for MatQ {
    type Output = Rat;
    fn index(&self, (i, j): (usize, usize)) -> &Rat {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for MatQ {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rat {
        &mut self.data[i * self.cols + j]
    }
}

impl Add<&MatQ> for &MatQ {
    type Output = MatQ;
    fn add(self, rhs: &MatQ) -> MatQ {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        MatQ {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub<&MatQ> for &MatQ {
    type Output = MatQ;
    fn sub(self, rhs: &MatQ) -> MatQ {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        MatQ {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &MatQ {
    type Output = MatQ;
    fn neg(self) -> MatQ {
        self.scale(&-Rat::one())
    }
}

impl fmt::Debug for MatQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.row_vectors()).finish()
    }
}

impl Serialize for MatQ {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.row_vectors().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for MatQ {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let rows = Vec::<VecQ>::deserialize(deserializer)?;
        if let Some(first) = rows.first() {
            if rows.iter().any(|r| r.len() != first.len()) {
                return Err(serde::de::Error::custom("ragged matrix rows"));
            }
        }
        Ok(MatQ::from_rows(rows))
    }
}

/// Exact rank, kernel basis and (when consistent) one preimage of `rhs`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinalgSummary {
    pub rank: usize,
    pub kernel_basis: Vec<VecQ>,
    pub solution: Option<Result<VecQ>>,
}

pub fn linalg_suite(m: &MatQ, rhs: Option<&VecQ>) -> LinalgSummary {
    LinalgSummary { rank: m.rank(), kernel_basis: m.kernel(), solution: rhs.map(|b| m.solve(b)) }
}

/// A linear subspace held by its reduced row echelon basis, so that two
/// subspaces are equal exactly when their bases are equal.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<VecQ>,
}

impl Subspace {
    pub fn span(ambient: usize, vectors: &[VecQ]) -> Subspace {
        if vectors.is_empty() {
            return Subspace { ambient, basis: Vec::new() };
        }
        let (r, pivots) = MatQ::from_rows(vectors.to_vec()).rref();
        Subspace { ambient, basis: (0..pivots.len()).map(|i| r.row(i)).collect() }
    }

    pub fn zero(ambient: usize) -> Subspace {
        Subspace { ambient, basis: Vec::new() }
    }

    pub fn whole(ambient: usize) -> Subspace {
        Subspace { ambient, basis: (0..ambient).map(|i| VecQ::basis(ambient, i)).collect() }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn basis(&self) -> &[VecQ] {
        &self.basis
    }

    pub fn contains(&self, v: &VecQ) -> bool {
        if v.is_zero() {
            return true;
        }
        let mut rows = self.basis.clone();
        rows.push(v.clone());
        MatQ::from_rows(rows).rank() == self.dim()
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut all = self.basis.clone();
        all.extend(other.basis.iter().cloned());
        Subspace::span(self.ambient, &all)
    }

    /// Image under a linear map.
    pub fn image(&self, m: &MatQ) -> Subspace {
        let imgs: Vec<VecQ> = self.basis.iter().map(|v| m.mul_vec(v)).collect();
        Subspace::span(m.rows(), &imgs)
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(dim {} in {}: {:?})", self.dim(), self.ambient, self.basis)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat::q;

    #[test]
    fn identity_has_full_rank_and_empty_kernel() {
        let s = linalg_suite(&MatQ::identity(4), None);
        assert_eq!(s.rank, 4);
        assert!(s.kernel_basis.is_empty());
    }

    #[test]
    fn zero_matrix_kernel_is_everything() {
        let m = MatQ::zeros(4, 4);
        assert_eq!(m.rank(), 0);
        let k = m.kernel();
        assert_eq!(k.len(), 4);
        assert_eq!(Subspace::span(4, &k), Subspace::whole(4));
    }

    #[test]
    fn kernel_vectors_are_annihilated() {
        let m = MatQ::from_ints(&[&[1, 2, 3, 4], &[2, 4, 6, 8], &[0, 1, 1, 0]]);
        assert_eq!(m.rank(), 2);
        let k = m.kernel();
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(m.mul_vec(v).is_zero());
        }
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let m = MatQ::from_ints(&[&[1, 1], &[1, -1]]);
        let x = m.solve(&VecQ::from_ints(&[3, 1])).unwrap();
        assert_eq!(x, VecQ::from_ints(&[2, 1]));
        let singular = MatQ::from_ints(&[&[1, 1], &[2, 2]]);
        assert_eq!(singular.solve(&VecQ::from_ints(&[1, 3])), Err(Error::InconsistentSystem));
        let sol = singular.solve(&VecQ::from_ints(&[1, 2])).unwrap();
        assert_eq!(singular.mul_vec(&sol), VecQ::from_ints(&[1, 2]));
    }

    #[test]
    fn determinant_and_inverse() {
        let m = MatQ::from_rows(vec![
            VecQ(vec![q(1, 2), q(1, 3)]),
            VecQ(vec![q(2, 1), q(5, 1)]),
        ]);
        // 5/2 - 2/3
        assert_eq!(m.det(), q(11, 6));
        let inv = m.inverse().unwrap();
        assert!(m.mul_mat(&inv).is_identity());
        assert!(MatQ::from_ints(&[&[1, 2], &[2, 4]]).inverse().is_none());
        let perm = MatQ::from_ints(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, 1]]);
        assert_eq!(perm.det(), Rat::from_int(-1));
    }

    #[test]
    fn subspace_equality_is_canonical() {
        let a = Subspace::span(3, &[VecQ::from_ints(&[1, 1, 0]), VecQ::from_ints(&[0, 1, 1])]);
        let b = Subspace::span(3, &[VecQ::from_ints(&[1, 2, 1]), VecQ::from_ints(&[1, 0, -1])]);
        assert_eq!(a, b);
        assert!(a.contains(&VecQ::from_ints(&[2, 3, 1])));
        assert!(!a.contains(&VecQ::from_ints(&[0, 0, 1])));
    }

    #[test]
    fn matrix_serializes_row_major() {
        let m = MatQ::from_rows(vec![VecQ(vec![q(1, 2), q(0, 1)]), VecQ(vec![q(-3, 1), q(7, 4)])]);
        let json = serde_json::to_string(&m).unwrap();
        assert_eq!(json, r#"[["1/2","0"],["-3","7/4"]]"#);
        let back: MatQ = serde_json::from_str(&json).unwrap();
        assert_eq!(back, m);
    }
}
