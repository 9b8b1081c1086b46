//! Semistandard Young tableaux and the content-generating Schur oracle.
//!
//! Deliberately determinant-free: values obtained here are independent
//! ground truth for the alternant quotient and the banded-minor route.
//! Enumeration is plain backtracking over cells in row-major order, capped
//! at desk scale.

use crate::error::Error;
use crate::partition::Partition;
use crate::poly::MultiPoly;

/// Cell cap for enumeration; shapes with more cells are refused unless the
/// caller raises the cap explicitly.
pub const DEFAULT_MAX_CELLS: usize = 12;

/// Hard cap on the entry alphabet size.
pub const MAX_VARIABLES: usize = 5;

/// A semistandard filling: rows weakly increase left to right, columns
/// strictly increase top to bottom, entries in `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tableau {
    shape: Partition,
    rows: Vec<Vec<usize>>,
}

impl Tableau {
    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// Content monomial: exponent of `x_i` is the number of entries equal
    /// to `i`.
    pub fn monomial(&self, num_vars: usize) -> MultiPoly {
        let mut exps = vec![0u32; num_vars];
        for row in &self.rows {
            for &v in row {
                exps[v - 1] += 1;
            }
        }
        MultiPoly::monomial(num_vars, 1, exps)
    }
}

/// All semistandard tableaux of the given shape with entries in `1..=n`,
/// under the default cell cap.
pub fn enumerate_ssyt(shape: &Partition, n: usize) -> Result<Vec<Tableau>, Error> {
    enumerate_ssyt_with_cap(shape, n, DEFAULT_MAX_CELLS)
}

/// Enumeration with an explicit cell cap.
pub fn enumerate_ssyt_with_cap(
    shape: &Partition,
    n: usize,
    max_cells: usize,
) -> Result<Vec<Tableau>, Error> {
    if shape.size() > max_cells {
        return Err(Error::EnumerationCap(format!(
            "shape {shape} has {} cells, cap is {max_cells}",
            shape.size()
        )));
    }
    if n > MAX_VARIABLES {
        return Err(Error::EnumerationCap(format!(
            "{n} variables exceed the cap of {MAX_VARIABLES}"
        )));
    }
    // strict column increase forces length(shape) <= n; no fillings otherwise
    if shape.len() > n {
        return Ok(Vec::new());
    }
    let parts = shape.parts().to_vec();
    let mut rows: Vec<Vec<usize>> = parts.iter().map(|&w| vec![0; w]).collect();
    let mut out = Vec::new();
    fill(&parts, n, 0, 0, &mut rows, shape, &mut out);
    Ok(out)
}

fn fill(
    parts: &[usize],
    n: usize,
    row: usize,
    col: usize,
    rows: &mut Vec<Vec<usize>>,
    shape: &Partition,
    out: &mut Vec<Tableau>,
) {
    if row == parts.len() {
        out.push(Tableau {
            shape: shape.clone(),
            rows: rows.clone(),
        });
        return;
    }
    if col == parts[row] {
        fill(parts, n, row + 1, 0, rows, shape, out);
        return;
    }
    let mut lo = 1;
    if col > 0 {
        lo = lo.max(rows[row][col - 1]); // weak increase along the row
    }
    if row > 0 {
        lo = lo.max(rows[row - 1][col] + 1); // strict increase down the column
    }
    for v in lo..=n {
        rows[row][col] = v;
        fill(parts, n, row, col + 1, rows, shape, out);
    }
    rows[row][col] = 0;
}

/// The Schur polynomial as the SSYT content-generating sum, default cap.
pub fn schur_tableaux(shape: &Partition, n: usize) -> Result<MultiPoly, Error> {
    schur_tableaux_with_cap(shape, n, DEFAULT_MAX_CELLS)
}

/// The Schur polynomial as the SSYT content-generating sum with an explicit
/// cell cap.
pub fn schur_tableaux_with_cap(
    shape: &Partition,
    n: usize,
    max_cells: usize,
) -> Result<MultiPoly, Error> {
    let tableaux = enumerate_ssyt_with_cap(shape, n, max_cells)?;
    let mut acc = MultiPoly::zero(n);
    for t in &tableaux {
        acc = acc.add(&t.monomial(n));
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn lam(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn poly(s: &str, n: usize) -> MultiPoly {
        MultiPoly::parse(s, n).unwrap()
    }

    #[test]
    fn single_cell_two_values() {
        let ts = enumerate_ssyt(&lam(&[1]), 2).unwrap();
        assert_eq!(ts.len(), 2);
        assert_eq!(ts[0].rows(), &[vec![1]]);
        assert_eq!(ts[1].rows(), &[vec![2]]);
    }

    #[test]
    fn strict_column_forces_single_filling() {
        let ts = enumerate_ssyt(&lam(&[1, 1]), 2).unwrap();
        assert_eq!(ts.len(), 1);
        assert_eq!(ts[0].rows(), &[vec![1], vec![2]]);
    }

    #[test]
    fn hook_two_one_has_eight_fillings() {
        let ts = enumerate_ssyt(&lam(&[2, 1]), 3).unwrap();
        assert_eq!(ts.len(), 8);
        for t in &ts {
            let r = t.rows();
            assert!(r[0][0] <= r[0][1]);
            assert!(r[0][0] < r[1][0]);
        }
        let mut seen = std::collections::HashSet::new();
        for t in &ts {
            assert!(seen.insert(t.rows().to_vec()));
        }
    }

    #[test]
    fn shape_longer_than_alphabet_is_empty() {
        assert!(enumerate_ssyt(&lam(&[1, 1, 1]), 2).unwrap().is_empty());
        assert!(schur_tableaux(&lam(&[1, 1, 1]), 2).unwrap().is_zero());
    }

    #[test]
    fn empty_shape_gives_constant_one() {
        let ts = enumerate_ssyt(&Partition::empty(), 3).unwrap();
        assert_eq!(ts.len(), 1);
        assert_eq!(
            schur_tableaux(&Partition::empty(), 3).unwrap(),
            MultiPoly::one(3)
        );
    }

    #[test]
    fn generating_sums_match_known_polynomials() {
        assert_eq!(
            schur_tableaux(&lam(&[1]), 3).unwrap(),
            poly("x1 + x2 + x3", 3)
        );
        assert_eq!(
            schur_tableaux(&lam(&[1, 1, 1]), 3).unwrap(),
            poly("x1*x2*x3", 3)
        );
        assert_eq!(
            schur_tableaux(&lam(&[2]), 2).unwrap(),
            poly("x1^2 + x1*x2 + x2^2", 2)
        );
    }

    #[test]
    fn count_equals_value_at_all_ones() {
        for (shape, n) in [
            (lam(&[2, 1]), 3),
            (lam(&[3, 1]), 3),
            (lam(&[2, 2]), 4),
            (lam(&[1, 1]), 5),
        ] {
            let count = enumerate_ssyt(&shape, n).unwrap().len();
            let ones = vec![BigInt::from(1); n];
            let value = schur_tableaux(&shape, n).unwrap().eval(&ones);
            assert_eq!(BigInt::from(count), value, "shape {shape} n={n}");
        }
    }

    #[test]
    fn caps_are_enforced_and_adjustable() {
        let wide = lam(&[13]);
        assert!(matches!(
            enumerate_ssyt(&wide, 1),
            Err(Error::EnumerationCap(_))
        ));
        let ts = enumerate_ssyt_with_cap(&wide, 1, 13).unwrap();
        assert_eq!(ts.len(), 1);
        assert!(matches!(
            enumerate_ssyt(&lam(&[1]), 6),
            Err(Error::EnumerationCap(_))
        ));
    }
}
