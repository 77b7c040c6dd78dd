//! Identities of absolute-valued algebras with a left unit `e`.
//!
//! Closed forms are stated for arbitrary (not normalized) `x`; every cell of
//! the product table below is already homogeneous in `x`, so no square roots
//! of norms appear.

use serde::{Deserialize, Serialize};

use super::Algebra;
use crate::arith::{Rat, VecQ};
use crate::error::{Error, Result};
use crate::identity::check_quadratic_criterion;
use crate::sample::Sampler;

pub const TABLE_LABELS: [&str; 4] = ["e", "x", "xe", "x^2"];

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellCheck {
    pub row: String,
    pub col: String,
    pub computed: VecQ,
    pub expected: VecQ,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProductTable {
    pub x: VecQ,
    pub cells: Vec<CellCheck>,
}

impl ProductTable {
    pub fn all_hold(&self) -> bool {
        self.cells.iter().all(|c| c.holds)
    }

    pub fn cell(&self, row: &str, col: &str) -> Option<&CellCheck> {
        self.cells.iter().find(|c| c.row == row && c.col == col)
    }
}

/// An identity evaluated at a point, with the point kept when it fails.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NamedCheck {
    pub id: String,
    pub holds: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<VecQ>>,
}

impl NamedCheck {
    fn new(id: &str, holds: bool, point: &[&VecQ]) -> Self {
        NamedCheck {
            id: id.to_string(),
            holds,
            witness: (!holds).then(|| point.iter().map(|v| (*v).clone()).collect()),
        }
    }
}

fn unit_of(a: &Algebra) -> Result<VecQ> {
    a.left_unit().ok_or(Error::NoLeftUnit)
}

/// `v − ⟨e|v⟩e`, for a unit `e`.
fn orthogonal_part(e: &VecQ, v: &VecQ) -> VecQ {
    let mut out = v.clone();
    out.axpy(&-e.dot(v), e);
    out
}

fn lin(terms: &[(Rat, &VecQ)], dim: usize) -> VecQ {
    let mut out = VecQ::zeros(dim);
    for (c, v) in terms {
        out.axpy(c, v);
    }
    out
}

/// The sixteen products among `{e, x, xe, x²}` against their closed forms.
pub fn left_unit_product_table(a: &Algebra, x: &VecQ) -> Result<ProductTable> {
    let e = unit_of(a)?;
    if !check_quadratic_criterion(a)?.holds {
        return Err(Error::CriterionFails);
    }
    if !e.dot(x).is_zero() {
        return Err(Error::InvalidParameter("x must be orthogonal to the left unit".into()));
    }
    let n = a.dim();
    let xe = a.product(x, &e);
    let x2 = a.square(x);
    let elems = [&e, x, &xe, &x2];
    let nx = x.norm2();
    let t = e.dot(&x2);
    let two_t = Rat::from_int(2) * &t;
    let one = Rat::one();
    let neg_n = -&nx;
    let expected: [[VecQ; 4]; 4] = [
        [e.clone(), x.clone(), xe.clone(), x2.clone()],
        [xe.clone(), x2.clone(), e.scale(&neg_n), x.scale(&neg_n)],
        [
            x.clone(),
            e.scale(&neg_n),
            lin(&[(two_t.clone(), &e), (-&one, &x2)], n),
            lin(&[(two_t.clone(), x), (nx.clone(), &xe)], n),
        ],
        [
            x2.clone(),
            xe.scale(&neg_n),
            lin(&[(nx.clone(), x), (two_t.clone(), &xe)], n),
            lin(&[(-nx.square(), &e), (two_t, &x2)], n),
        ],
    ];
    let mut cells = Vec::with_capacity(16);
    for (r, row) in expected.iter().enumerate() {
        for (c, exp) in row.iter().enumerate() {
            let computed = a.product(elems[r], elems[c]);
            cells.push(CellCheck {
                row: TABLE_LABELS[r].to_string(),
                col: TABLE_LABELS[c].to_string(),
                holds: computed == *exp,
                computed,
                expected: exp.clone(),
            });
        }
    }
    Ok(ProductTable { x: x.clone(), cells })
}

/// The adjoint law `⟨xy|z⟩ = ⟨y|x*z⟩` and inverse law `x*(xy) = ‖x‖²y`
/// (with `x* = 2⟨e|x⟩e − x`) on all basis tuples, followed by their
/// consequences at seeded sample points.
pub fn left_unit_inner_product_checks(a: &Algebra, samples: usize, seed: u64) -> Result<Vec<NamedCheck>> {
    let e = unit_of(a)?;
    let n = a.dim();
    let two = Rat::from_int(2);
    let star = |x: &VecQ| lin(&[(&two * &e.dot(x), &e), (-Rat::one(), x)], n);
    let basis: Vec<VecQ> = (0..n).map(|i| a.basis(i)).collect();

    let mut out = Vec::new();
    let mut adjoint = NamedCheck::new("adjoint", true, &[]);
    'outer: for x in &basis {
        for y in &basis {
            for z in &basis {
                if a.product(x, y).dot(z) != y.dot(&a.product(&star(x), z)) {
                    adjoint = NamedCheck::new("adjoint", false, &[x, y, z]);
                    break 'outer;
                }
            }
        }
    }
    out.push(adjoint);

    // Polarized in x: x*(x'y) + x'*(xy) = 2⟨x|x'⟩y.
    let mut inverse = NamedCheck::new("inverse_law", true, &[]);
    'outer2: for (i, x) in basis.iter().enumerate() {
        for x2 in &basis[i..] {
            for y in &basis {
                let lhs = &a.product(&star(x), &a.product(x2, y)) + &a.product(&star(x2), &a.product(x, y));
                if lhs != y.scale(&(&two * &x.dot(x2))) {
                    inverse = NamedCheck::new("inverse_law", false, &[x, x2, y]);
                    break 'outer2;
                }
            }
        }
    }
    out.push(inverse);

    let mut sampler = Sampler::salted(seed, "inner-product");
    let mut sampled: Vec<NamedCheck> = Vec::new();
    for _ in 0..samples {
        let x = orthogonal_part(&e, &sampler.rat_vec(n));
        let y = orthogonal_part(&e, &sampler.rat_vec(n));
        let z = sampler.rat_vec(n);
        let (gx, gy) = (sampler.rat_vec(n), sampler.rat_vec(n));
        let m = |p: &VecQ, q: &VecQ| a.product(p, q);
        let nx = x.norm2();
        let x2 = m(&x, &x);
        let checks = [
            ("imaginary_adjoint", m(&x, &y).dot(&z) == -y.dot(&m(&x, &z)), vec![&x, &y, &z]),
            ("imaginary_left_inverse", m(&x, &m(&x, &y)) == y.scale(&-&nx), vec![&x, &y]),
            ("square_trace", m(&x, &e).dot(&x) == -e.dot(&x2), vec![&x]),
            ("imaginary_cube", m(&x, &x2) == x.scale(&-&nx), vec![&x]),
            (
                "imaginary_cube_linearized",
                &m(&x, &m(&y, &z)) + &m(&y, &m(&x, &z)) == z.scale(&(-&two * &x.dot(&y))),
                vec![&x, &y, &z],
            ),
            (
                "unit_square",
                m(&gx, &m(&gx, &e))
                    == lin(&[(&two * &e.dot(&gx), &m(&gx, &e)), (-gx.norm2(), &e)], n),
                vec![&gx],
            ),
            (
                "unit_square_linearized",
                &m(&gx, &m(&gy, &e)) + &m(&gy, &m(&gx, &e))
                    == lin(
                        &[
                            (&two * &e.dot(&gx), &m(&gy, &e)),
                            (&two * &e.dot(&gy), &m(&gx, &e)),
                            (-&two * &gx.dot(&gy), &e),
                        ],
                        n,
                    ),
                vec![&gx, &gy],
            ),
        ];
        for (id, holds, point) in checks {
            match sampled.iter_mut().find(|c| c.id == id) {
                Some(c) if !c.holds => {}
                Some(c) => *c = NamedCheck::new(id, holds, &point),
                None => sampled.push(NamedCheck::new(id, holds, &point)),
            }
        }
    }
    out.extend(sampled);
    Ok(out)
}

/// Identities for `x` and its orthogonal part that hold when `(xe)e = x`
/// (first group) and when the quadratic criterion holds (second group).
pub fn left_unit_square_identities(a: &Algebra, x: &VecQ) -> Result<Vec<NamedCheck>> {
    let e = unit_of(a)?;
    let n = a.dim();
    let two = Rat::from_int(2);
    let m = |p: &VecQ, q: &VecQ| a.product(p, q);
    let comm = |p: &VecQ, q: &VecQ| &m(p, q) - &m(q, p);

    let xe = m(x, &e);
    let general = [
        ("right_unit_swap", m(&m(&xe, x), &e) == m(x, &xe)),
        ("right_unit_swap_dual", m(&m(x, &xe), &e) == m(&xe, x)),
        ("commutator_shift", comm(&xe, x) == comm(&e, &(x - &xe)).scale(&e.dot(x))),
        (
            "fourth_power",
            m(&m(x, x), &m(x, x))
                == lin(&[(-x.norm2().square(), &e), (&two * &e.dot(&m(x, x)), &m(x, x))], n),
        ),
    ];

    let u = orthogonal_part(&e, x);
    let (ue, u2, nu) = (m(&u, &e), m(&u, &u), u.norm2());
    let t2 = &two * &e.dot(&u2);
    let orthogonal = [
        ("commutator_vanishes", comm(&ue, &u).is_zero()),
        ("mixed_cube", m(&ue, &u2) == lin(&[(t2.clone(), &u), (nu.clone(), &ue)], n)),
        ("right_unit_square", m(&ue, &ue) == lin(&[(t2.clone(), &e), (-Rat::one(), &u2)], n)),
        ("square_times_x", m(&u2, &u) == ue.scale(&-&nu)),
        ("square_times_xe", m(&u2, &ue) == lin(&[(nu.clone(), &u), (t2, &ue)], n)),
    ];
    let mut out: Vec<NamedCheck> = general.iter().map(|(id, h)| NamedCheck::new(id, *h, &[x])).collect();
    out.extend(orthogonal.iter().map(|(id, h)| NamedCheck::new(id, *h, &[&u])));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{AlgSpec, Named};
    use crate::arith::Quat;

    #[test]
    fn table_cells_in_roster() {
        let o = Named::OTildeI.build();
        let x = VecQ::from_ints(&[0, 1, -2, 0, 3, 1, 0, -1]);
        let t = left_unit_product_table(&o, &x).unwrap();
        assert!(t.all_hold(), "{:?}", t.cells.iter().filter(|c| !c.holds).collect::<Vec<_>>());
        assert_eq!(t.cell("x", "x").unwrap().computed, o.square(&x));
    }

    #[test]
    fn table_requires_criterion_and_orthogonality() {
        let a = Quat::new(Rat::new(3, 5), Rat::new(4, 5), Rat::zero(), Rat::zero());
        let h = AlgSpec::isotope(1, &a, &Quat::one()).build().unwrap();
        let e = h.left_unit().unwrap();
        let x = VecQ::from_ints(&[0, 0, 1, 0]);
        assert_eq!(e.dot(&x), Rat::zero());
        assert_eq!(left_unit_product_table(&h, &x), Err(Error::CriterionFails));
        let o = Named::O.build();
        assert!(matches!(left_unit_product_table(&o, &o.basis(0)), Err(Error::InvalidParameter(_))));
    }

    #[test]
    fn inner_product_identities() {
        for name in [Named::O, Named::StarOi, Named::StarHi] {
            let a = name.build();
            let checks = left_unit_inner_product_checks(&a, 5, 1).unwrap();
            assert_eq!(checks.len(), 9);
            assert!(checks.iter().all(|c| c.holds), "{name:?}: {checks:?}");
        }
        let right_only = AlgSpec::Star { base: crate::algebra::Base::H, variant: crate::algebra::StarVariant::Right }
            .build()
            .unwrap();
        assert_eq!(left_unit_inner_product_checks(&right_only, 1, 0), Err(Error::NoLeftUnit));
    }

    #[test]
    fn square_identities() {
        let a = Named::OTilde.build();
        let x = VecQ::from_ints(&[2, 1, -1, 0, 1, 3, 0, 1]);
        let checks = left_unit_square_identities(&a, &x).unwrap();
        assert!(checks.iter().all(|c| c.holds), "{checks:?}");
    }
}
