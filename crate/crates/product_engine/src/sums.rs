use radix_core::{digit_sum, nu_bar_u128, running_digit_sum};

use crate::accumulate::LogAccumulator;
use crate::real::{floor_guarded, Real};

/// Weighted running-digit-sum aggregate: sum over 2 <= b <= min(floor(x), n)
/// of (2/(b-1)) * S_b(n) * log b.
pub fn a_sum(n: u64, x: f64) -> LogAccumulator {
    assert!(n >= 2, "level must be at least 2, got {n}");
    assert!(x.is_finite() && x >= 2.0, "cutoff must be >= 2, got {x}");
    let cutoff = floor_guarded(x).min(n);
    let mut acc = LogAccumulator::new();
    for b in 2..=cutoff {
        let s = running_digit_sum(n, b) as f64;
        acc.add(2.0 * s / (b - 1) as f64 * (b as f64).ln());
    }
    acc
}

/// Weighted digit-sum aggregate: sum over 2 <= b <= min(floor(x), n) of
/// ((n-1)/(b-1)) * d_b(n) * log b.
pub fn b_sum(n: u64, x: f64) -> LogAccumulator {
    assert!(n >= 2, "level must be at least 2, got {n}");
    assert!(x.is_finite() && x >= 2.0, "cutoff must be >= 2, got {x}");
    let cutoff = floor_guarded(x).min(n);
    let mut acc = LogAccumulator::new();
    for b in 2..=cutoff {
        let d = digit_sum(n, b) as f64;
        acc.add((n - 1) as f64 * d / (b - 1) as f64 * (b as f64).ln());
    }
    acc
}

/// Harmonic-like log aggregate: sum over 1 <= b <= x of floor(n/b) * log b.
/// Both arguments are real; exact variants floor in integer arithmetic.
/// Stabilizes for x >= n since floor(n/b) = 0 beyond n.
pub fn c_sum(n: impl Into<Real>, x: impl Into<Real>) -> LogAccumulator {
    let n = n.into();
    let x = x.into();
    assert!(n.as_f64() >= 1.0, "first argument must be >= 1");
    assert!(x.as_f64() >= 1.0, "cutoff must be >= 1");
    let cutoff = x.floor().min(n.floor());
    let mut acc = LogAccumulator::new();
    for b in 1..=cutoff {
        acc.add(n.floor_div(b) as f64 * (b as f64).ln());
    }
    acc
}

/// log of the partial product, from the exponents directly: sum of
/// nu_bar(n,b) * log b without materializing the big integer.
pub fn log_partial_product(n: u64, x: f64) -> LogAccumulator {
    assert!(n >= 1, "level must be at least 1, got {n}");
    assert!(x.is_finite() && x >= 1.0, "cutoff must be >= 1, got {x}");
    let cutoff = floor_guarded(x).min(n);
    let mut acc = LogAccumulator::new();
    for b in 2..=cutoff {
        acc.add(nu_bar_u128(n, b) as f64 * (b as f64).ln());
    }
    acc
}

/// The three independently computed parts of the full digit-sum aggregate,
/// split at sqrt(n): b1 - b2 + br reassembles b_sum(n, n).
pub struct BSumParts {
    pub b1: f64,
    pub b2: f64,
    pub br: f64,
}

/// Splits the full aggregate B(n) at sqrt(n). Above the square root n has
/// exactly two digits in base b, so d_b(n) = n - j(b-1) with j = floor(n/b);
/// that substitution yields a main part over sqrt(n) < b <= n and a
/// correction summed over floor(n/b) values j, plus the unmodified remainder
/// over 2 <= b <= sqrt(n).
pub fn b_sum_decomposition(n: u64) -> BSumParts {
    assert!(n >= 2, "level must be at least 2, got {n}");
    let root = n.isqrt();

    // main part: n(n-1) * sum of log b / (b-1) over sqrt(n) < b <= n
    let mut main = LogAccumulator::new();
    for b in root + 1..=n {
        main.add((b as f64).ln() / (b - 1) as f64);
    }
    let b1 = n as f64 * (n - 1) as f64 * main.value();

    // correction: (n-1) * sum over j of j * sum of log b over the bases with
    // floor(n/b) = j, restricted to b > sqrt(n)
    let mut corr = LogAccumulator::new();
    for j in 1..=root {
        let lo = (n / (j + 1)).max(root) + 1;
        let hi = n / j;
        let mut inner = LogAccumulator::new();
        for b in lo..=hi {
            inner.add((b as f64).ln());
        }
        corr.add(j as f64 * inner.value());
    }
    let b2 = (n - 1) as f64 * corr.value();

    // remainder: untouched terms up to sqrt(n)
    let mut rem = LogAccumulator::new();
    for b in 2..=root {
        let d = digit_sum(n, b) as f64;
        rem.add((n - 1) as f64 * d / (b - 1) as f64 * (b as f64).ln());
    }
    BSumParts { b1, b2, br: rem.value() }
}
