use num_bigint::BigUint;
use num_traits::Zero;
use product_engine::{
    a_sum, b_sum, classical_product, log_partial_product, nu_b_classical, partial_product,
    PartialFactorization,
};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn stabilization_beyond_n(n in 1u64..200, extra in 0u64..1000) {
        let at_n = partial_product(n, n as f64);
        let beyond = partial_product(n, (n + extra) as f64 + 0.5);
        prop_assert_eq!(at_n, beyond);
    }

    #[test]
    fn value_monotone_divisible_in_cutoff(n in 2u64..120, x1 in 2u64..120, x2 in 2u64..120) {
        let (lo, hi) = (x1.min(x2), x1.max(x2));
        let small = partial_product(n, lo as f64).value();
        let large = partial_product(n, hi as f64).value();
        prop_assert!((&large % &small).is_zero());
    }

    #[test]
    fn json_round_trip(n in 1u64..250, x in 2u64..250) {
        let pf = partial_product(n, x as f64);
        let back = PartialFactorization::from_canonical_json(&pf.to_canonical_json()).unwrap();
        prop_assert_eq!(back, pf);
    }

    #[test]
    fn log_identity(n in 2u64..500, frac in 0.0f64..1.0) {
        let x = 2.0 + frac * (n as f64 - 2.0).max(0.0);
        let lhs = log_partial_product(n, x).value();
        let rhs = a_sum(n, x).value() - b_sum(n, x).value();
        let tol = 1e-9 * rhs.abs().max(1.0);
        prop_assert!((lhs - rhs).abs() <= tol, "n={} x={}: {} vs {}", n, x, lhs, rhs);
    }

    #[test]
    fn row_product_divisibility_matches_big_integer(n in 1u64..40, b in 2u64..20) {
        let g = classical_product(n);
        let k = nu_b_classical(n, b);
        let bk = num_traits::pow(BigUint::from(b), usize::try_from(k).unwrap());
        prop_assert!((&g % &bk).is_zero());
        prop_assert!(!(&g % (&bk * b)).is_zero());
    }
}
