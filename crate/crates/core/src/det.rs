//! Determinant engines over exact polynomial matrices.
//!
//! Three routes with different contracts: cofactor expansion (small sizes
//! only, capped), fraction-free Bareiss elimination (relies on exact
//! division), and the Hessenberg recurrence special to the banded minors
//! with consecutive trailing rows.

use crate::error::Error;
use crate::matrix::PolyMatrix;
use crate::poly::MultiPoly;
use crate::symm::{signed_elementary, VariableSet};

/// Largest size `det_cofactor` accepts. Laplace expansion is factorial.
pub const COFACTOR_CAP: usize = 8;

/// Determinant by first-column Laplace expansion. Skips zero entries so
/// banded matrices expand quickly despite the cap.
pub fn det_cofactor(m: &PolyMatrix) -> Result<MultiPoly, Error> {
    if m.rows() != m.cols() {
        return Err(Error::NonSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    if m.rows() > COFACTOR_CAP {
        return Err(Error::CofactorCap {
            size: m.rows(),
            cap: COFACTOR_CAP,
        });
    }
    Ok(cofactor_rec(m))
}

fn cofactor_rec(m: &PolyMatrix) -> MultiPoly {
    let n = m.rows();
    if n == 0 {
        return MultiPoly::one(m.num_vars());
    }
    if n == 1 {
        return m.get(0, 0).clone();
    }
    let mut acc = MultiPoly::zero(m.num_vars());
    for row in 0..n {
        let entry = m.get(row, 0);
        if entry.is_zero() {
            continue;
        }
        let sub = cofactor_rec(&m.minor_without(row, 0));
        let term = entry.mul(&sub);
        if row % 2 == 0 {
            acc = acc.add(&term);
        } else {
            acc = acc.sub(&term);
        }
    }
    acc
}

/// Determinant by fraction-free Bareiss elimination with row-swap pivoting.
///
/// Every intermediate division is exact over the integers by construction;
/// a failed division means the input broke an invariant and is reported as
/// an error, never absorbed.
pub fn det_bareiss(m: &PolyMatrix) -> Result<MultiPoly, Error> {
    if m.rows() != m.cols() {
        return Err(Error::NonSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let n = m.rows();
    if n == 0 {
        return Ok(MultiPoly::one(m.num_vars()));
    }
    let mut work = m.clone();
    let mut sign_flip = false;
    let mut prev_pivot = MultiPoly::one(m.num_vars());
    for k in 0..n - 1 {
        if work.get(k, k).is_zero() {
            // pivot search below the diagonal; an all-zero column kills det
            let swap = (k + 1..n).find(|&row| !work.get(row, k).is_zero());
            match swap {
                Some(row) => {
                    work.swap_rows(k, row);
                    sign_flip = !sign_flip;
                }
                None => return Ok(MultiPoly::zero(m.num_vars())),
            }
        }
        let pivot = work.get(k, k).clone();
        for i in k + 1..n {
            for j in k + 1..n {
                let num = pivot
                    .mul(work.get(i, j))
                    .sub(&work.get(i, k).mul(work.get(k, j)));
                let quot = num
                    .exact_div(&prev_pivot)
                    .map_err(|_| Error::FractionFreeDivision)?;
                work.set(i, j, quot);
            }
            work.set(i, k, MultiPoly::zero(m.num_vars()));
        }
        prev_pivot = pivot;
    }
    let det = work.get(n - 1, n - 1).clone();
    Ok(if sign_flip { det.negate() } else { det })
}

/// Determinant of the banded minor with rows `{n, ..., n+r-1}` via the
/// recurrence `q_s = sum_{k=1}^{min(s,n)} e_k * q_{s-k}`, `q_0 = 1`.
///
/// The result is the complete homogeneous symmetric polynomial `h_r` in
/// `n` variables; `r = 0` yields the constant `1`.
pub fn det_hessenberg(n: usize, r: usize) -> MultiPoly {
    assert!(n >= 1, "needs at least one variable");
    let vars = VariableSet::new(n);
    let e: Vec<MultiPoly> = (0..=n).map(|k| signed_elementary(&vars, k)).collect();
    let mut q: Vec<MultiPoly> = Vec::with_capacity(r + 1);
    q.push(MultiPoly::one(n));
    for s in 1..=r {
        let mut acc = MultiPoly::zero(n);
        for k in 1..=s.min(n) {
            acc = acc.add(&e[k].mul(&q[s - k]));
        }
        q.push(acc);
    }
    q.pop().expect("q has r+1 entries")
}
