//! Elementary symmetric polynomials over a fixed variable set, their signed
//! variant, and the expansion of `prod_i (x - x_i)`.
//!
//! The signed variant `e_k = (-1)^(k-1) * ebar_k` is what the banded matrix
//! is built from; extending the formula to `k = 0` gives `e_0 = -1`, which is
//! exactly the subdiagonal entry of that matrix.

use num_bigint::BigInt;
use num_traits::One;

use crate::poly::MultiPoly;

/// The variable set `X = {x1, ..., xn}`, `n >= 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VariableSet {
    n: usize,
}

impl VariableSet {
    pub fn new(n: usize) -> Self {
        assert!(n >= 1, "variable set must be nonempty");
        VariableSet { n }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `x{k}` for `k` in `1..=n` (1-based to match the display names).
    pub fn var(&self, k: usize) -> MultiPoly {
        assert!((1..=self.n).contains(&k), "variable index {k} out of 1..={}", self.n);
        MultiPoly::var(self.n, k - 1)
    }
}

/// Elementary symmetric polynomial `ebar_k(X)`.
///
/// `ebar_0 = 1`, `ebar_n = x1*x2*...*xn`, and `ebar_k = 0` for `k > n` (the
/// banded matrix construction needs out-of-range entries to vanish).
///
/// Built by the iterative product `prod_i (1 + x_i t)`, reading off the
/// coefficient of `t^k`, so moderately large `n` stays cheap.
pub fn elementary(vars: &VariableSet, k: usize) -> MultiPoly {
    let n = vars.n();
    if k > n {
        return MultiPoly::zero(n);
    }
    let mut coeffs = vec![MultiPoly::zero(n); k + 1];
    coeffs[0] = MultiPoly::one(n);
    for i in 1..=n {
        let xi = vars.var(i);
        for j in (1..=k.min(i)).rev() {
            coeffs[j] = &coeffs[j] + &(&coeffs[j - 1] * &xi);
        }
    }
    coeffs.pop().expect("k+1 coefficients")
}

/// Signed elementary symmetric polynomial `e_k(X) = (-1)^(k-1) * ebar_k(X)`.
///
/// `e_0 = -1` by the same formula. Panics for `k > n`.
pub fn signed_elementary(vars: &VariableSet, k: usize) -> MultiPoly {
    assert!(k <= vars.n(), "signed elementary index {k} out of 0..={}", vars.n());
    if k == 0 {
        return MultiPoly::constant(vars.n(), -1);
    }
    let ebar = elementary(vars, k);
    if (k - 1) % 2 == 0 {
        ebar
    } else {
        ebar.negate()
    }
}

/// Coefficients of `p_n(x) = prod_{i=1}^n (x - x_i)` in ascending powers of
/// `x`: the coefficient of `x^i` is `(-1)^(n-i) * ebar_{n-i}(X)`.
pub fn char_poly_coeffs(vars: &VariableSet) -> Vec<MultiPoly> {
    let n = vars.n();
    (0..=n)
        .map(|i| {
            let ebar = elementary(vars, n - i);
            if (n - i) % 2 == 0 {
                ebar
            } else {
                ebar.negate()
            }
        })
        .collect()
}

/// Checks the exact identity obtained from `p_n(x_k) = 0`:
/// `x_k^n = sum_{i=1}^n (-1)^(n-i) * ebar_{n-i+1}(X) * x_k^(i-1)`.
pub fn verify_root_relation(vars: &VariableSet, k: usize) -> bool {
    let n = vars.n();
    assert!((1..=n).contains(&k), "root index {k} out of 1..={n}");
    let xk = vars.var(k);
    let lhs = xk.pow(n as u32);
    let mut rhs = MultiPoly::zero(n);
    for i in 1..=n {
        let mut term = elementary(vars, n - i + 1);
        if (n - i) % 2 == 1 {
            term = term.negate();
        }
        rhs = &rhs + &(&term * &xk.pow(i as u32 - 1));
    }
    lhs == rhs
}

/// `(x1*...*xn)^r`, used by the closed-form checks.
pub fn product_power(vars: &VariableSet, r: u32) -> MultiPoly {
    MultiPoly::monomial(vars.n(), BigInt::one(), vec![r; vars.n()])
}

#[cfg(test)]
mod tests {
    use super::*;
    use itertools::Itertools;

    fn p(s: &str, n: usize) -> MultiPoly {
        MultiPoly::parse(s, n).unwrap()
    }

    #[test]
    fn elementary_boundary_values() {
        for n in 1..=4 {
            let x = VariableSet::new(n);
            assert_eq!(elementary(&x, 0), MultiPoly::one(n));
            assert!(elementary(&x, n + 1).is_zero());
        }
        assert_eq!(elementary(&VariableSet::new(2), 1), p("x1 + x2", 2));
        assert_eq!(elementary(&VariableSet::new(3), 3), p("x1*x2*x3", 3));
    }

    #[test]
    fn elementary_matches_direct_enumeration() {
        // sum over all k-subsets of the variables, n <= 5
        for n in 1..=5usize {
            let x = VariableSet::new(n);
            for k in 0..=n {
                let mut direct = MultiPoly::zero(n);
                for subset in (1..=n).combinations(k) {
                    let prod = subset
                        .iter()
                        .fold(MultiPoly::one(n), |acc, &i| &acc * &x.var(i));
                    direct = &direct + &prod;
                }
                assert_eq!(elementary(&x, k), direct, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn signed_elementary_examples() {
        assert_eq!(
            signed_elementary(&VariableSet::new(3), 1),
            p("x1 + x2 + x3", 3)
        );
        assert_eq!(signed_elementary(&VariableSet::new(2), 2), p("-x1*x2", 2));
        let x4 = VariableSet::new(4);
        assert_eq!(signed_elementary(&x4, 3), elementary(&x4, 3));
        assert_eq!(
            signed_elementary(&x4, 0),
            MultiPoly::constant(4, -1)
        );
    }

    #[test]
    fn signed_elementary_sign_rule() {
        for n in 1..=5usize {
            let x = VariableSet::new(n);
            for k in 1..=n {
                let expected = if (k - 1) % 2 == 0 {
                    elementary(&x, k)
                } else {
                    elementary(&x, k).negate()
                };
                assert_eq!(signed_elementary(&x, k), expected);
            }
        }
    }

    #[test]
    #[should_panic(expected = "out of 0..=")]
    fn signed_elementary_rejects_k_beyond_n() {
        signed_elementary(&VariableSet::new(2), 3);
    }

    #[test]
    fn char_poly_small_cases() {
        let c1 = char_poly_coeffs(&VariableSet::new(1));
        assert_eq!(c1, vec![p("-x1", 1), MultiPoly::one(1)]);
        let c2 = char_poly_coeffs(&VariableSet::new(2));
        assert_eq!(
            c2,
            vec![p("x1*x2", 2), p("-x1 - x2", 2), MultiPoly::one(2)]
        );
        let c3 = char_poly_coeffs(&VariableSet::new(3));
        assert_eq!(c3[0], p("-x1*x2*x3", 3));
    }

    #[test]
    fn char_poly_matches_expanded_product() {
        // expand prod (x - x_i) with x adjoined as the last variable, then
        // compare coefficients of each power of x
        for n in 1..=4usize {
            let x = VariableSet::new(n);
            let nv = n + 1;
            let xvar = MultiPoly::var(nv, n);
            let mut prod = MultiPoly::one(nv);
            for i in 0..n {
                prod = &prod * &(&xvar - &MultiPoly::var(nv, i));
            }
            let coeffs = char_poly_coeffs(&x);
            for (i, coeff) in coeffs.iter().enumerate() {
                // collect terms of prod with x-exponent i, drop the x slot
                let extracted = MultiPoly::from_terms(
                    n,
                    prod.terms().filter(|(e, _)| e[n] == i as u32).map(|(e, c)| {
                        (e[..n].to_vec(), c.clone())
                    }),
                );
                assert_eq!(&extracted, coeff, "n={n} power={i}");
            }
        }
    }

    #[test]
    fn generating_function_identity() {
        // coefficient of t^k in prod (1 + x_i t) equals ebar_k, t adjoined last
        for n in 1..=5usize {
            let x = VariableSet::new(n);
            let nv = n + 1;
            let t = MultiPoly::var(nv, n);
            let mut prod = MultiPoly::one(nv);
            for i in 0..n {
                prod = &prod * &(&MultiPoly::one(nv) + &(&MultiPoly::var(nv, i) * &t));
            }
            for k in 0..=n {
                let extracted = MultiPoly::from_terms(
                    n,
                    prod.terms().filter(|(e, _)| e[n] == k as u32).map(|(e, c)| {
                        (e[..n].to_vec(), c.clone())
                    }),
                );
                assert_eq!(extracted, elementary(&x, k), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn elementary_is_symmetric_under_swaps() {
        let x = VariableSet::new(4);
        for k in 0..=4usize {
            let e = elementary(&x, k);
            for a in 0..4 {
                for b in (a + 1)..4 {
                    let swapped = MultiPoly::from_terms(
                        4,
                        e.terms().map(|(exps, c)| {
                            let mut v = exps.to_vec();
                            v.swap(a, b);
                            (v, c.clone())
                        }),
                    );
                    assert_eq!(swapped, e, "k={k} swap ({a},{b})");
                }
            }
        }
    }

    #[test]
    fn root_relation_all_small_cases() {
        assert!(verify_root_relation(&VariableSet::new(1), 1));
        assert!(verify_root_relation(&VariableSet::new(2), 1));
        assert!(verify_root_relation(&VariableSet::new(3), 2));
        for n in 1..=6usize {
            let x = VariableSet::new(n);
            for k in 1..=n {
                assert!(verify_root_relation(&x, k), "n={n} k={k}");
            }
        }
    }
}
