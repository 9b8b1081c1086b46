//! Schur polynomials by two determinantal routes, and the bijection between
//! column selections and partitions.
//!
//! The bijection sends a selection with parameters `(n, r, i_set)` to
//! `λ_1 = r`, `λ_k = i_{n-k+1} - (n-k+1)` for `k >= 2`; strict growth of
//! `i_set` makes the parts weakly decreasing. The empty partition never
//! corresponds to a selection (it would need r = 0) and is short-circuited
//! to the constant 1 by both Schur routes.

use crate::banded::{build_p, minor_rows};
use crate::det::det_bareiss;
use crate::error::Error;
use crate::partition::Partition;
use crate::poly::MultiPoly;
use crate::vandermonde::{minor_matrix, vandermonde_det, ColumnSelection};

/// The partition attached to a selection: `λ_1 = r`, and for `k >= 2`
/// `λ_k = i_{n-k+1} - (n-k+1)`; trailing zeros are trimmed.
pub fn partition_from_selection(sel: &ColumnSelection) -> Partition {
    let n = sel.n();
    let mut parts = vec![sel.r()];
    for k in 2..=n {
        let t = n - k + 1; // 1-indexed position into i_set
        parts.push(sel.i_set()[t - 1] - t);
    }
    Partition::new(parts).expect("selection yields weakly decreasing parts")
}

/// The inverse bijection: `r = λ_1` and `i_t = λ_{n-t+1} + t` with the
/// partition padded to length `n`.
pub fn selection_from_partition(lam: &Partition, n: usize) -> Result<ColumnSelection, Error> {
    if lam.is_empty() {
        return Err(Error::InvalidPartition(
            "empty partition has no selection; its Schur value is 1".into(),
        ));
    }
    if lam.len() > n {
        return Err(Error::InvalidPartition(format!(
            "partition {lam} has more than {n} parts"
        )));
    }
    let r = lam.part(1);
    let padded = lam.padded(n);
    let i_set: Vec<usize> = (1..=n - 1).map(|t| padded[n - t] + t).collect();
    ColumnSelection::new(n, r, i_set)
}

/// Schur polynomial as the bialternant quotient: the determinant of the
/// selected Vandermonde columns divided exactly by the Vandermonde
/// determinant.
pub fn schur_bialternant(lam: &Partition, n: usize) -> Result<MultiPoly, Error> {
    if lam.is_empty() {
        return Ok(MultiPoly::one(n));
    }
    let sel = selection_from_partition(lam, n)?;
    let alternant = det_bareiss(&minor_matrix(&sel))?;
    alternant.exact_div(&vandermonde_det(n))
}

/// Schur polynomial as the signed minor of the banded matrix: the second
/// Jacobi-Trudi identity.
pub fn schur_jacobi_trudi(lam: &Partition, n: usize) -> Result<MultiPoly, Error> {
    if lam.is_empty() {
        return Ok(MultiPoly::one(n));
    }
    let sel = selection_from_partition(lam, n)?;
    let q = minor_rows(&build_p(n, sel.r()), sel.j_set())?;
    let det = det_bareiss(&q)?;
    Ok(if sel.sign_from_j() < 0 {
        det.negate()
    } else {
        det
    })
}

/// The narrative's sign exponent for a selection:
/// `nr + j_1 + ... + j_r + r(r-1)/2 + floor(n/2)`.
pub fn nu_from_selection(sel: &ColumnSelection) -> u64 {
    let n = sel.n() as u64;
    let r = sel.r() as u64;
    let sum_j: u64 = sel.j_set().iter().map(|&j| j as u64).sum();
    n * r + sum_j + r * (r - 1) / 2 + n / 2
}

/// The narrative's sign exponent for a nonempty partition with at most `n`
/// parts.
pub fn nu_exponent(lam: &Partition, n: usize) -> u64 {
    assert!(!lam.is_empty(), "exponent needs a nonempty partition");
    let sel = selection_from_partition(lam, n).expect("valid nonempty partition");
    nu_from_selection(&sel)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::partitions_in_box;
    use crate::symm::{elementary, product_power, VariableSet};
    use crate::tableau::schur_tableaux;

    fn lam(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn sel(n: usize, r: usize, i_set: &[usize]) -> ColumnSelection {
        ColumnSelection::new(n, r, i_set.to_vec()).unwrap()
    }

    fn poly(s: &str, n: usize) -> MultiPoly {
        MultiPoly::parse(s, n).unwrap()
    }

    #[test]
    fn partition_from_selection_examples() {
        assert_eq!(partition_from_selection(&sel(2, 1, &[2])), lam(&[1, 1]));
        assert_eq!(partition_from_selection(&sel(2, 1, &[1])), lam(&[1]));
        for (n, r) in [(2usize, 3usize), (3, 2), (4, 1)] {
            let i_set: Vec<usize> = (r + 1..r + n).collect();
            let expect = lam(&vec![r; n]);
            assert_eq!(partition_from_selection(&sel(n, r, &i_set)), expect);
        }
    }

    #[test]
    fn selection_from_partition_examples() {
        let s = selection_from_partition(&lam(&[1, 1]), 2).unwrap();
        assert_eq!((s.r(), s.i_set()), (1, &[2][..]));
        let s = selection_from_partition(&lam(&[2]), 2).unwrap();
        assert_eq!((s.r(), s.i_set()), (2, &[1][..]));
        let s = selection_from_partition(&lam(&[2, 2, 2]), 3).unwrap();
        assert_eq!(s.i_set(), &[3, 4]);
    }

    #[test]
    fn selection_from_partition_rejects() {
        assert!(selection_from_partition(&Partition::empty(), 2).is_err());
        assert!(selection_from_partition(&lam(&[1, 1, 1]), 2).is_err());
    }

    #[test]
    fn bijection_round_trip() {
        for n in 1..=4usize {
            for lam in partitions_in_box(4, n) {
                if lam.is_empty() {
                    continue;
                }
                let s = selection_from_partition(&lam, n).unwrap();
                assert_eq!(partition_from_selection(&s), lam, "n={n} lam={lam}");
            }
        }
    }

    #[test]
    fn bialternant_examples() {
        assert_eq!(schur_bialternant(&lam(&[1]), 2).unwrap(), poly("x1 + x2", 2));
        assert_eq!(schur_bialternant(&lam(&[1, 1]), 2).unwrap(), poly("x1*x2", 2));
        let s21 = schur_bialternant(&lam(&[2, 1]), 3).unwrap();
        let expect = poly(
            "x1^2*x2 + x1^2*x3 + x2^2*x1 + x2^2*x3 + x3^2*x1 + x3^2*x2 + 2*x1*x2*x3",
            3,
        );
        assert_eq!(s21, expect);
        assert_eq!(
            schur_bialternant(&Partition::empty(), 3).unwrap(),
            MultiPoly::one(3)
        );
    }

    #[test]
    fn jacobi_trudi_examples() {
        assert_eq!(
            schur_jacobi_trudi(&lam(&[1, 1]), 2).unwrap(),
            poly("x1*x2", 2)
        );
        assert_eq!(
            schur_jacobi_trudi(&lam(&[3]), 2).unwrap(),
            poly("x1^3 + x1^2*x2 + x1*x2^2 + x2^3", 2)
        );
        for n in 1..=3usize {
            for r in 1..=3usize {
                let rect = lam(&vec![r; n]);
                let vars = VariableSet::new(n);
                assert_eq!(
                    schur_jacobi_trudi(&rect, n).unwrap(),
                    product_power(&vars, r as u32),
                    "n={n} r={r}"
                );
            }
        }
    }

    #[test]
    fn single_column_shapes_are_elementaries() {
        let vars = VariableSet::new(4);
        for k in 1..=4usize {
            let col = lam(&vec![1; k]);
            assert_eq!(schur_jacobi_trudi(&col, 4).unwrap(), elementary(&vars, k));
        }
    }

    #[test]
    fn routes_agree_with_oracle() {
        for (shape, n) in [
            (lam(&[2, 1]), 3),
            (lam(&[3, 2]), 2),
            (lam(&[2, 2, 1]), 3),
            (lam(&[4]), 3),
        ] {
            let a = schur_bialternant(&shape, n).unwrap();
            let b = schur_jacobi_trudi(&shape, n).unwrap();
            let c = schur_tableaux(&shape, n).unwrap();
            assert_eq!(a, b, "shape {shape} n={n}");
            assert_eq!(a, c, "shape {shape} n={n}");
        }
    }

    #[test]
    fn nu_exponent_examples() {
        assert_eq!(nu_exponent(&lam(&[1, 1]), 2), 4);
        assert_eq!(nu_exponent(&lam(&[1]), 2), 5);
        assert_eq!(nu_exponent(&lam(&[2, 2]), 2), 9);
    }

    #[test]
    #[should_panic(expected = "nonempty")]
    fn nu_exponent_rejects_empty() {
        nu_exponent(&Partition::empty(), 2);
    }
}
