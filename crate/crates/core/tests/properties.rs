//! Property tests: ring axioms for the polynomial type, serialization
//! round trips, the selection/partition bijection, and the structural
//! properties of Schur polynomials.

use num_bigint::BigInt;
use proptest::prelude::*;

use schurkit::{
    all_selections, det_bareiss, minor_matrix, partition_from_selection, partitions_in_box,
    schur_jacobi_trudi, selection_from_partition, vandermonde_det, IdentityReport, MultiPoly,
    Partition, PolyMatrix, Tableau,
};

fn arb_poly(num_vars: usize) -> impl Strategy<Value = MultiPoly> {
    let term = (
        prop::collection::vec(0u32..=3, num_vars),
        -9i64..=9i64,
    );
    prop::collection::vec(term, 0..=6).prop_map(move |terms| {
        MultiPoly::from_terms(
            num_vars,
            terms.into_iter().map(|(e, c)| (e, BigInt::from(c))),
        )
    })
}

fn shared_vars() -> impl Strategy<Value = (usize, MultiPoly, MultiPoly, MultiPoly)> {
    (1usize..=4).prop_flat_map(|nv| {
        (Just(nv), arb_poly(nv), arb_poly(nv), arb_poly(nv))
    })
}

proptest! {
    #[test]
    fn addition_commutes((_, a, b, _) in shared_vars()) {
        prop_assert_eq!(a.add(&b), b.add(&a));
    }

    #[test]
    fn addition_associates((_, a, b, c) in shared_vars()) {
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
    }

    #[test]
    fn multiplication_commutes((_, a, b, _) in shared_vars()) {
        prop_assert_eq!(a.mul(&b), b.mul(&a));
    }

    #[test]
    fn multiplication_associates((_, a, b, c) in shared_vars()) {
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
    }

    #[test]
    fn multiplication_distributes((_, a, b, c) in shared_vars()) {
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
    }

    #[test]
    fn additive_inverse_and_unit((nv, a, _, _) in shared_vars()) {
        prop_assert!(a.add(&a.negate()).is_zero());
        prop_assert_eq!(MultiPoly::one(nv).mul(&a), a);
    }

    #[test]
    fn product_divides_back((_, a, b, _) in shared_vars()) {
        prop_assume!(!b.is_zero());
        let quotient = a.mul(&b).exact_div(&b).unwrap();
        prop_assert_eq!(quotient, a);
    }

    #[test]
    fn evaluation_is_a_homomorphism(
        (nv, a, b, _) in shared_vars().no_shrink(),
        seed in any::<u64>(),
    ) {
        // derive the point from the seed so arity always matches
        let point: Vec<BigInt> = (0..nv)
            .map(|i| BigInt::from((seed.rotate_left(i as u32 * 7) % 11) as i64 - 5))
            .collect();
        prop_assert_eq!(a.add(&b).eval(&point), a.eval(&point) + b.eval(&point));
        prop_assert_eq!(a.mul(&b).eval(&point), a.eval(&point) * b.eval(&point));
    }

    #[test]
    fn text_round_trip((nv, a, _, _) in shared_vars()) {
        let rendered = a.to_string();
        let parsed = MultiPoly::parse(&rendered, nv).unwrap();
        prop_assert_eq!(parsed, a);
    }

    #[test]
    fn json_round_trip((_, a, _, _) in shared_vars()) {
        let json = serde_json::to_string(&a).unwrap();
        let back: MultiPoly = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn partition_selection_round_trip(
        mut parts in prop::collection::vec(1usize..=4, 0..=4),
        extra in 0usize..=3,
    ) {
        parts.sort_unstable_by(|x, y| y.cmp(x));
        let lam = Partition::new(parts).unwrap();
        prop_assume!(!lam.is_empty());
        let n = (lam.len() + extra).max(1).min(4);
        prop_assume!(lam.len() <= n);
        let sel = selection_from_partition(&lam, n).unwrap();
        prop_assert_eq!(partition_from_selection(&sel), lam);
    }

    #[test]
    fn schur_values_are_homogeneous_and_symmetric(
        idx in 0usize..20,
    ) {
        let lam = partitions_in_box(3, 3)[idx].clone();
        let n = 3;
        let s = schur_jacobi_trudi(&lam, n).unwrap();
        let weight = lam.size() as u64;
        for (exps, _) in s.terms() {
            prop_assert_eq!(exps.iter().map(|&e| e as u64).sum::<u64>(), weight);
        }
        for swap in 0..n - 1 {
            prop_assert_eq!(transpose_vars(&s, swap, swap + 1), s.clone());
        }
    }

    #[test]
    fn schur_values_are_stable_under_var_removal(idx in 0usize..20) {
        let lam = partitions_in_box(3, 3)[idx].clone();
        let n = 3;
        let s = schur_jacobi_trudi(&lam, n).unwrap();
        let restricted = drop_last_var(&s);
        if lam.len() < n {
            prop_assert_eq!(restricted, schur_jacobi_trudi(&lam, n - 1).unwrap());
        } else {
            prop_assert!(restricted.is_zero());
        }
    }

    #[test]
    fn minor_determinant_is_divisible_by_vandermonde(
        n in 2usize..=4,
        r in 1usize..=3,
        pick in any::<prop::sample::Index>(),
    ) {
        let sels = all_selections(n, r);
        let sel = &sels[pick.index(sels.len())];
        let det = det_bareiss(&minor_matrix(sel)).unwrap();
        let quotient = det.exact_div(&vandermonde_det(n));
        prop_assert!(quotient.is_ok());
    }
}

/// Swaps two variables by permuting exponent vectors.
fn transpose_vars(p: &MultiPoly, a: usize, b: usize) -> MultiPoly {
    MultiPoly::from_terms(
        p.num_vars(),
        p.terms().map(|(exps, c)| {
            let mut e = exps.to_vec();
            e.swap(a, b);
            (e, c.clone())
        }),
    )
}

/// Sets the last variable to zero and forgets it.
fn drop_last_var(p: &MultiPoly) -> MultiPoly {
    let nv = p.num_vars();
    MultiPoly::from_terms(
        nv - 1,
        p.terms().filter_map(|(exps, c)| {
            if exps[nv - 1] == 0 {
                Some((exps[..nv - 1].to_vec(), c.clone()))
            } else {
                None
            }
        }),
    )
}

#[test]
fn public_types_are_send_and_sync() {
    fn check<T: Send + Sync>() {}
    check::<MultiPoly>();
    check::<PolyMatrix>();
    check::<Partition>();
    check::<Tableau>();
    check::<IdentityReport>();
}
