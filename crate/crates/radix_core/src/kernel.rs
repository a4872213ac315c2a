//! Closed-form floor-division summation kernels.
//!
//! These are the O(1)/O(log) building blocks that make running digit sums —
//! and everything built on top of them — sublinear per base.

/// Sum of floor(j/m) for j = 1..=n, in O(1) arithmetic.
///
/// Write n = q*m + r with 0 <= r < m. The quotient takes each value
/// k = 0..q-1 on exactly m values of j, and the value q on the remaining
/// r + 1 values, so the sum is m*q*(q-1)/2 + q*(r+1).
///
/// Panics if `m == 0`.
pub fn floor_div_sum(n: u64, m: u64) -> u128 {
    assert!(m >= 1, "divisor must be positive");
    let q = (n / m) as u128;
    if q == 0 {
        return 0;
    }
    let r = (n % m) as u128;
    m as u128 * q * (q - 1) / 2 + q * (r + 1)
}

/// Sum of floor(j*q/p) for j = 1..=t — the dilated floor sum with rational
/// dilation u = p/q, i.e. sum of floor(j/u).
///
/// Evaluated exactly by the Euclidean floor-sum recurrence (lattice-point
/// counting under a line), so it stays fast even for large t, p, q.
///
/// Panics if `p == 0` or `q == 0`.
pub fn dilated_floor_sum(t: u64, p: u64, q: u64) -> u128 {
    assert!(p >= 1 && q >= 1, "dilation must be a positive rational");
    // sum_{j=1}^{t} floor(j*q/p) = sum_{i=0}^{t-1} floor((q*i + q)/p)
    floor_sum(t as u128, p as u128, q as u128, q as u128)
}

/// Sum of floor((a*i + b)/m) for i = 0..n-1, all arguments nonnegative.
fn floor_sum(mut n: u128, mut m: u128, mut a: u128, mut b: u128) -> u128 {
    let mut ans: u128 = 0;
    loop {
        if n == 0 {
            return ans;
        }
        if a >= m {
            ans += n * (n - 1) / 2 * (a / m);
            a %= m;
        }
        if b >= m {
            ans += n * (b / m);
            b %= m;
        }
        let y_max = a * n + b;
        if y_max < m {
            return ans;
        }
        // Count the lattice points below the line by transposing axes.
        n = y_max / m;
        b = y_max % m;
        std::mem::swap(&mut m, &mut a);
    }
}
