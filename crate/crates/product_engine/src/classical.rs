use num_bigint::BigUint;
use num_traits::One;
use radix_core::nu_bar_u128;

/// Product of all binomial coefficients in row `n` of Pascal's triangle,
/// exact.
pub fn classical_product(n: u64) -> BigUint {
    let mut binom = BigUint::one();
    let mut prod = BigUint::one();
    for k in 1..=n {
        // C(n,k) = C(n,k-1) * (n-k+1) / k, each division exact
        binom *= n - k + 1;
        binom /= k;
        prod *= &binom;
    }
    prod
}

/// Largest k such that b^k divides the classical row product at level n.
///
/// For a prime p the exponent of p is exactly the generalized exponent at
/// base p, so for composite b the answer is the min over prime factors p of
/// floor(nu(p) / multiplicity of p in b). The huge integer is never factored.
pub fn nu_b_classical(n: u64, b: u64) -> u128 {
    assert!(n >= 1, "level must be at least 1, got {n}");
    assert!(b >= 2, "base must be at least 2, got {b}");
    let mut best = u128::MAX;
    let mut m = b;
    let mut p = 2u64;
    while p * p <= m {
        if m % p == 0 {
            let mut mult = 0u128;
            while m % p == 0 {
                m /= p;
                mult += 1;
            }
            best = best.min(nu_bar_u128(n, p) / mult);
        }
        p += 1;
    }
    if m > 1 {
        best = best.min(nu_bar_u128(n, m));
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;
    use num_traits::{Pow, Zero};

    #[test]
    fn small_row_products() {
        assert_eq!(classical_product(0), BigUint::from(1u32));
        assert_eq!(classical_product(1), BigUint::from(1u32));
        assert_eq!(classical_product(4), BigUint::from(96u32)); // 1*4*6*4*1
        assert_eq!(classical_product(6), BigUint::from(162000u32));
    }

    #[test]
    fn row_product_equals_prime_exponent_product() {
        // The row product factors as the product of p^nu(p) over primes
        // p <= n; rebuilding it that way cross-checks both sides.
        for n in 1..=60u64 {
            let mut prod = BigUint::from(1u32);
            for p in 2..=n {
                if (2..p).all(|d| p % d != 0) {
                    let e = u64::try_from(nu_bar_u128(n, p)).unwrap();
                    prod *= Pow::pow(BigUint::from(p), e);
                }
            }
            assert_eq!(classical_product(n), prod, "n={n}");
        }
    }

    #[test]
    fn divisibility_exponents() {
        assert_eq!(nu_b_classical(4, 4), 2);
        assert_eq!(nu_b_classical(6, 4), 2);
        assert_eq!(nu_b_classical(4, 2), 5); // 96 = 2^5 * 3
        assert_eq!(nu_b_classical(4, 3), 1);
        assert_eq!(nu_b_classical(1, 7), 0);
    }

    #[test]
    fn generalized_exponent_differs_from_divisibility_both_ways() {
        // At n=4 the generalized exponent of base 4 exceeds the divisibility
        // exponent; at n=6 it falls short.
        assert_eq!(nu_bar_u128(4, 4), 3);
        assert_eq!(nu_b_classical(4, 4), 2);
        assert_eq!(nu_bar_u128(6, 4), 1);
        assert_eq!(nu_b_classical(6, 4), 2);
    }

    #[test]
    fn matches_repeated_division_oracle() {
        for n in 1..=30u64 {
            let g = classical_product(n);
            for b in 2..=12u64 {
                let bb = BigUint::from(b);
                let mut k = 0u128;
                let mut m = g.clone();
                while (&m % &bb).is_zero() {
                    m /= &bb;
                    k += 1;
                }
                assert_eq!(nu_b_classical(n, b), k, "n={n} b={b}");
            }
        }
    }
}
