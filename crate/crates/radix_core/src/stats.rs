//! Digit sums d_b(n) and running digit sums S_b(n).

use crate::digits::digits;
use crate::kernel::floor_div_sum;

/// d_b(n): sum of the base-`b` digits of `n`, computed by the floor-series
/// form d_b(n) = n - (b-1) * sum_{i>=1} floor(n/b^i).
///
/// Panics if `n < 1` or `b < 2`.
pub fn digit_sum(n: u64, b: u64) -> u64 {
    assert!(n >= 1, "digit sums are defined for n >= 1, got {n}");
    assert!(b >= 2, "radix base must be at least 2, got {b}");
    let mut floors: u128 = 0;
    let mut p = b;
    while p <= n {
        floors += (n / p) as u128;
        match p.checked_mul(b) {
            Some(next) => p = next,
            None => break,
        }
    }
    let d = n as u128 - (b as u128 - 1) * floors;
    debug_assert!(d >= 1 && d <= n as u128);
    d as u64
}

/// d_b(n) by literally adding up the digit vector. Independent route used
/// for cross-checking and as the deliberately naive baseline.
pub fn digit_sum_direct(n: u64, b: u64) -> u64 {
    assert!(n >= 1, "digit sums are defined for n >= 1, got {n}");
    digits(n, b).digits().iter().sum()
}

/// S_b(n) = sum_{j=1}^{n-1} d_b(j), via the closed form
/// S_b(n) = n(n-1)/2 - (b-1) * sum_{i>=1} floor_div_sum(n-1, b^i),
/// which costs O(log_b n) kernel calls.
///
/// Panics if `n < 1` or `b < 2`.
pub fn running_digit_sum(n: u64, b: u64) -> u128 {
    assert!(n >= 1, "running digit sums are defined for n >= 1, got {n}");
    assert!(b >= 2, "radix base must be at least 2, got {b}");
    let top = n - 1;
    let mut inner: u128 = 0;
    let mut p = b;
    while p <= top {
        inner += floor_div_sum(top, p);
        match p.checked_mul(b) {
            Some(next) => p = next,
            None => break,
        }
    }
    let triangle = n as u128 * (n as u128 - 1) / 2;
    triangle
        .checked_sub((b as u128 - 1) * inner)
        .expect("running digit sum must be nonnegative")
}

/// S_b(n) by direct summation of per-integer digit sums. Quadratic-ish and
/// only suitable for tests and baseline benchmarks.
pub fn running_digit_sum_direct(n: u64, b: u64) -> u128 {
    assert!(n >= 1 && b >= 2);
    let mut acc: u128 = 0;
    for j in 1..n {
        let mut x = j;
        let mut d = 0u64;
        while x > 0 {
            d += x % b;
            x /= b;
        }
        acc += d as u128;
    }
    acc
}
