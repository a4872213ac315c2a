//! The generalized exponent: nu(n,b) = (2 S_b(n) - (n-1) d_b(n)) / (b-1).
//!
//! The divisibility by b-1 and the nonnegativity are theorems, not inputs;
//! this module asserts both at runtime so any violation is a loud fault
//! rather than a silently wrong exponent.

use num_bigint::BigUint;
use thiserror::Error;

use crate::stats::{digit_sum, running_digit_sum};

/// A computed exponent keyed by its inputs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NuRecord {
    pub n: u64,
    pub b: u64,
    pub nu: BigUint,
}

/// Raised when the exponent formula violates its own integrality or sign
/// guarantees — which can only happen through an implementation bug.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConsistencyFault {
    #[error("2*S_{b}({n}) - ({n}-1)*d_{b}({n}) = {numerator} is not divisible by {divisor}")]
    InexactDivision { n: u64, b: u64, numerator: u128, divisor: u64 },
    #[error("exponent numerator for (n={n}, b={b}) is negative")]
    NegativeNumerator { n: u64, b: u64 },
}

fn nu_bar_inner(n: u64, b: u64) -> Result<u128, ConsistencyFault> {
    assert!(n >= 1, "exponents are defined for n >= 1, got {n}");
    assert!(b >= 2, "radix base must be at least 2, got {b}");
    let s = running_digit_sum(n, b);
    let d = digit_sum(n, b) as u128;
    let numerator = (2 * s)
        .checked_sub((n as u128 - 1) * d)
        .ok_or(ConsistencyFault::NegativeNumerator { n, b })?;
    let divisor = b as u128 - 1;
    if numerator % divisor != 0 {
        return Err(ConsistencyFault::InexactDivision { n, b, numerator, divisor: b - 1 });
    }
    Ok(numerator / divisor)
}

/// Exponent as a plain machine word; exact for every `u64` input since the
/// numerator is below n^2 < 2^128. This is the hot path used by scans.
pub fn nu_bar_u128(n: u64, b: u64) -> u128 {
    nu_bar_inner(n, b).expect("exponent consistency fault")
}

/// Exponent with its key, as an arbitrary-precision integer.
pub fn nu_bar(n: u64, b: u64) -> NuRecord {
    NuRecord { n, b, nu: BigUint::from(nu_bar_u128(n, b)) }
}

/// Non-panicking variant for harnesses that must report rather than abort.
pub fn nu_bar_checked(n: u64, b: u64) -> Result<NuRecord, ConsistencyFault> {
    Ok(NuRecord { n, b, nu: BigUint::from(nu_bar_inner(n, b)?) })
}

/// Independent brute-force evaluation as the double sum
/// sum_{i>=1} sum_{j=1}^{n-1} (floor(n/b^i) - floor(j/b^i) - floor((n-j)/b^i)).
/// Every summand is nonnegative by floor superadditivity; the sum is
/// asserted nonnegative rather than assumed.
pub fn nu_bar_oracle(n: u64, b: u64) -> u128 {
    assert!(n >= 1, "exponents are defined for n >= 1, got {n}");
    assert!(b >= 2, "radix base must be at least 2, got {b}");
    let mut total: i128 = 0;
    let mut p = b;
    while p <= n {
        let np = (n / p) as i128;
        for j in 1..n {
            total += np - (j / p) as i128 - ((n - j) / p) as i128;
        }
        match p.checked_mul(b) {
            Some(next) => p = next,
            None => break,
        }
    }
    assert!(total >= 0, "oracle sum must be nonnegative");
    total as u128
}

/// Decides whether n = a*b^k + b^k - 1 for some a in 1..=b-1 and k >= 0,
/// equivalently n + 1 = c*b^k with c in 2..=b — the exact characterization
/// of the exponent being zero. Pure integer arithmetic, no logarithms.
pub fn is_nu_zero_form(n: u64, b: u64) -> bool {
    assert!(n >= 1, "zero-form test is defined for n >= 1, got {n}");
    assert!(b >= 2, "radix base must be at least 2, got {b}");
    let target = n as u128 + 1;
    let b = b as u128;
    let mut p: u128 = 1; // b^k
    while p <= target {
        if target % p == 0 {
            let c = target / p;
            if (2..=b).contains(&c) {
                return true;
            }
        }
        p *= b;
    }
    false
}
