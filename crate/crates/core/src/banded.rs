//! The banded matrix of signed elementary symmetric polynomials and its
//! row-selected minors.
//!
//! A single entry rule defines the whole matrix: `P[k, l] = e_{n-k+l}` with
//! `e_0 = -1` and `e_m = 0` for `m < 0` or `m > n` (1-indexed `k`, `l`). The
//! first column reads `e_n, e_{n-1}, ..., e_1, -1, 0, ...` top to bottom and
//! each later column is the previous one shifted down by one.

use crate::error::Error;
use crate::matrix::PolyMatrix;
use crate::poly::MultiPoly;
use crate::symm::{signed_elementary, VariableSet};

/// Entry `e_m` with the band conventions: `-1` at `m = 0`, zero out of range.
fn band_entry(vars: &VariableSet, m: i64) -> MultiPoly {
    if m < 0 || m > vars.n() as i64 {
        MultiPoly::zero(vars.n())
    } else {
        signed_elementary(vars, m as usize)
    }
}

/// The `(n+r-1) x r` banded matrix over `n` variables.
pub fn build_p(n: usize, r: usize) -> PolyMatrix {
    assert!(n >= 1 && r >= 1, "banded matrix needs positive dimensions");
    let vars = VariableSet::new(n);
    PolyMatrix::from_fn(n + r - 1, r, n, |row, col| {
        // 1-indexed entry rule e_{n-k+l} with k = row+1, l = col+1
        band_entry(&vars, n as i64 - (row as i64 + 1) + (col as i64 + 1))
    })
}

/// The square minor lying in rows `j_1, ..., j_r` (1-indexed, sorted).
pub fn minor_rows(p: &PolyMatrix, j_set: &[usize]) -> Result<PolyMatrix, Error> {
    if j_set.len() != p.cols() {
        return Err(Error::InvalidMinor(format!(
            "{} rows selected from a matrix with {} columns",
            j_set.len(),
            p.cols()
        )));
    }
    for &j in j_set {
        if j < 1 || j > p.rows() {
            return Err(Error::InvalidMinor(format!(
                "row {j} outside 1..={}",
                p.rows()
            )));
        }
    }
    Ok(PolyMatrix::from_fn(
        j_set.len(),
        p.cols(),
        p.num_vars(),
        |row, col| p.get(j_set[row] - 1, col).clone(),
    ))
}

/// Checks that the minor's entries vanish exactly where the band rule says:
/// entry `(t, l)` is zero iff `n - j_t + l` falls outside `0..=n`.
pub fn row_zero_pattern_check(n: usize, r: usize, j_set: &[usize]) -> bool {
    let p = build_p(n, r);
    let q = minor_rows(&p, j_set).expect("valid j_set");
    for t in 1..=j_set.len() {
        for l in 1..=r {
            let m = n as i64 - j_set[t - 1] as i64 + l as i64;
            let should_vanish = m < 0 || m > n as i64;
            if q.get(t - 1, l - 1).is_zero() != should_vanish {
                return false;
            }
        }
    }
    true
}
