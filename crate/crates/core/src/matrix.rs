//! Dense rectangular matrices of polynomials.

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::poly::MultiPoly;

/// Row-major grid of [`MultiPoly`] entries sharing one variable count.
///
/// Serializes as nested JSON arrays of polynomial objects.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    num_vars: usize,
    entries: Vec<MultiPoly>,
}

impl PolyMatrix {
    /// Builds a matrix from a 0-indexed entry function.
    pub fn from_fn(
        rows: usize,
        cols: usize,
        num_vars: usize,
        mut f: impl FnMut(usize, usize) -> MultiPoly,
    ) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                let e = f(i, j);
                assert_eq!(e.num_vars(), num_vars, "entry ({i},{j}) has wrong variable count");
                entries.push(e);
            }
        }
        PolyMatrix {
            rows,
            cols,
            num_vars,
            entries,
        }
    }

    /// Builds a matrix from rows, which must be rectangular and uniform in
    /// variable count.
    pub fn from_rows(num_vars: usize, rows: Vec<Vec<MultiPoly>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), ncols, "row {i} has wrong length");
        }
        let mut flat = Vec::with_capacity(nrows * ncols);
        for row in rows {
            for e in row {
                assert_eq!(e.num_vars(), num_vars, "entry has wrong variable count");
                flat.push(e);
            }
        }
        PolyMatrix {
            rows: nrows,
            cols: ncols,
            num_vars,
            entries: flat,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Entry at 0-indexed `(i, j)`.
    pub fn get(&self, i: usize, j: usize) -> &MultiPoly {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of range");
        &self.entries[i * self.cols + j]
    }

    pub(crate) fn set(&mut self, i: usize, j: usize, value: MultiPoly) {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of range");
        assert_eq!(value.num_vars(), self.num_vars);
        self.entries[i * self.cols + j] = value;
    }

    pub(crate) fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// The submatrix with row `i` and column `j` removed.
    pub(crate) fn minor_without(&self, i: usize, j: usize) -> PolyMatrix {
        PolyMatrix::from_fn(self.rows - 1, self.cols - 1, self.num_vars, |r, c| {
            let rr = if r < i { r } else { r + 1 };
            let cc = if c < j { c } else { c + 1 };
            self.get(rr, cc).clone()
        })
    }

    /// Evaluates every entry at an integer point.
    pub fn eval(&self, point: &[num_bigint::BigInt]) -> Vec<Vec<num_bigint::BigInt>> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j).eval(point)).collect())
            .collect()
    }
}

impl Serialize for PolyMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let nested: Vec<Vec<&MultiPoly>> = (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j)).collect())
            .collect();
        nested.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for PolyMatrix {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let nested = Vec::<Vec<MultiPoly>>::deserialize(deserializer)?;
        let rows = nested.len();
        let cols = nested.first().map_or(0, Vec::len);
        let num_vars = nested
            .first()
            .and_then(|r| r.first())
            .map_or(0, MultiPoly::num_vars);
        for row in &nested {
            if row.len() != cols {
                return Err(D::Error::custom("ragged matrix rows"));
            }
            for e in row {
                if e.num_vars() != num_vars {
                    return Err(D::Error::custom("mixed variable counts in matrix"));
                }
            }
        }
        let _ = rows;
        Ok(PolyMatrix::from_rows(num_vars, nested))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str, n: usize) -> MultiPoly {
        MultiPoly::parse(s, n).unwrap()
    }

    #[test]
    fn json_round_trip() {
        let m = PolyMatrix::from_rows(
            2,
            vec![
                vec![p("x1", 2), p("x1^2", 2)],
                vec![p("x2", 2), p("x2^2", 2)],
            ],
        );
        let json = serde_json::to_string(&m).unwrap();
        let back: PolyMatrix = serde_json::from_str(&json).unwrap();
        assert_eq!(back, m);
    }

    #[test]
    fn minor_without_drops_row_and_column() {
        let m = PolyMatrix::from_fn(3, 3, 1, |i, j| {
            MultiPoly::constant(1, (3 * i + j) as i64)
        });
        let sub = m.minor_without(1, 0);
        assert_eq!(sub.rows(), 2);
        assert_eq!(sub.get(0, 0), &MultiPoly::constant(1, 1));
        assert_eq!(sub.get(1, 1), &MultiPoly::constant(1, 8));
    }

    #[test]
    #[should_panic(expected = "wrong length")]
    fn from_rows_rejects_ragged() {
        PolyMatrix::from_rows(1, vec![vec![MultiPoly::one(1)], vec![]]);
    }
}
