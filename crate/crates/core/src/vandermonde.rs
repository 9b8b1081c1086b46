//! The extended Vandermonde matrix, its column-selected minors, minor signs,
//! the closed-form Vandermonde determinant, and the column recurrence that
//! expresses each extension column through the first `n`.
//!
//! Columns are 1-indexed throughout: every sign formula sums the stored
//! 1-based indices directly, so no silent off-by-one can creep into the
//! exponent arithmetic.

use itertools::Itertools;

use crate::error::Error;
use crate::matrix::PolyMatrix;
use crate::poly::MultiPoly;
use crate::symm::{signed_elementary, VariableSet};

/// A choice of `n-1` kept columns (`i_set`) among `{1, ..., n+r-1}`, fixing
/// an `n x n` minor of the extended Vandermonde matrix; the complement
/// (`j_set`, size `r`) selects the matching rows of the banded matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColumnSelection {
    n: usize,
    r: usize,
    i_set: Vec<usize>,
    j_set: Vec<usize>,
}

impl ColumnSelection {
    /// Validates and builds a selection; `i_set` must be strictly increasing
    /// with `n-1` entries inside `{1, ..., n+r-1}`. The complement `j_set` is
    /// derived and stored.
    pub fn new(n: usize, r: usize, i_set: Vec<usize>) -> Result<Self, Error> {
        if n < 1 {
            return Err(Error::InvalidSelection("n must be at least 1".into()));
        }
        if r < 1 {
            return Err(Error::InvalidSelection("r must be at least 1".into()));
        }
        if i_set.len() != n - 1 {
            return Err(Error::InvalidSelection(format!(
                "i_set has {} entries, expected n-1 = {}",
                i_set.len(),
                n - 1
            )));
        }
        let top = n + r - 1;
        for w in i_set.windows(2) {
            if w[0] >= w[1] {
                return Err(Error::InvalidSelection(format!(
                    "i_set not strictly increasing at {} >= {}",
                    w[0], w[1]
                )));
            }
        }
        for &i in &i_set {
            if i < 1 || i > top {
                return Err(Error::InvalidSelection(format!(
                    "index {i} outside 1..={top}"
                )));
            }
        }
        let j_set: Vec<usize> = (1..=top).filter(|c| !i_set.contains(c)).collect();
        debug_assert_eq!(j_set.len(), r);
        Ok(ColumnSelection { n, r, i_set, j_set })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn i_set(&self) -> &[usize] {
        &self.i_set
    }

    pub fn j_set(&self) -> &[usize] {
        &self.j_set
    }

    /// Minor sign from the kept columns: `(-1)^(n(n-1)/2 + i_1 + ... + i_{n-1})`.
    pub fn sign_from_i(&self) -> i8 {
        let exp: usize = self.n * (self.n - 1) / 2 + self.i_set.iter().sum::<usize>();
        if exp % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Minor sign from the omitted columns:
    /// `(-1)^(nr + r(r-1)/2 + j_1 + ... + j_r)`; always equals
    /// [`sign_from_i`](Self::sign_from_i).
    pub fn sign_from_j(&self) -> i8 {
        let exp: usize =
            self.n * self.r + self.r * (self.r - 1) / 2 + self.j_set.iter().sum::<usize>();
        if exp % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

/// Every selection for the given `n`, `r`, ordered by increasing `i_set`.
pub fn all_selections(n: usize, r: usize) -> Vec<ColumnSelection> {
    assert!(n >= 1 && r >= 1);
    (1..=n + r - 1)
        .combinations(n - 1)
        .map(|i_set| ColumnSelection::new(n, r, i_set).expect("combination is valid"))
        .collect()
}

/// The `n x (n+r)` extended Vandermonde matrix with entry
/// `(k, c) = x_k^(c-1)` for rows `k = 1..n` and columns `c = 1..n+r`.
///
/// `r = 0` gives the square Vandermonde matrix.
pub fn build_extended(n: usize, r: usize) -> PolyMatrix {
    assert!(n >= 1, "extended Vandermonde needs at least one row");
    PolyMatrix::from_fn(n, n + r, n, |row, col| {
        MultiPoly::var(n, row).pow(col as u32)
    })
}

/// The `n x n` minor of the extended Vandermonde matrix lying in columns
/// `i_1, ..., i_{n-1}, n+r`.
pub fn minor_matrix(sel: &ColumnSelection) -> PolyMatrix {
    let n = sel.n();
    let v = build_extended(n, sel.r());
    let mut cols: Vec<usize> = sel.i_set().to_vec();
    cols.push(n + sel.r());
    PolyMatrix::from_fn(n, n, n, |row, col| v.get(row, cols[col] - 1).clone())
}

/// The closed-form Vandermonde determinant `prod_{1<=i<j<=n} (x_j - x_i)`.
pub fn vandermonde_det(n: usize) -> MultiPoly {
    assert!(n >= 1);
    let mut out = MultiPoly::one(n);
    for i in 0..n {
        for j in (i + 1)..n {
            out = &out * &(&MultiPoly::var(n, j) - &MultiPoly::var(n, i));
        }
    }
    out
}

/// Checks the column identity
/// `K_{n+p} = sum_{i=1}^n e_{n-i+1}(X) * K_{i+p-1}` entry by entry.
///
/// Realized over all preceding columns `1..n+p-1` with zero coefficients
/// outside the window `p..=n+p-1`, so the extension column is literally a
/// linear combination of everything before it.
pub fn verify_column_relation(n: usize, r: usize, p: usize) -> bool {
    assert!(n >= 1);
    assert!((1..=r).contains(&p), "p={p} out of 1..={r}");
    let vars = VariableSet::new(n);
    let v = build_extended(n, r);
    let target_col = n + p; // 1-indexed
    for row in 0..n {
        let mut sum = MultiPoly::zero(n);
        for c in 1..target_col {
            // coefficient of column c: e_{n+p-c} inside the window, else 0
            if c >= p {
                let k = n + p - c;
                debug_assert!((1..=n).contains(&k));
                let coeff = signed_elementary(&vars, k);
                sum = &sum + &(&coeff * v.get(row, c - 1));
            }
        }
        if &sum != v.get(row, target_col - 1) {
            return false;
        }
    }
    true
}
