use crate::alpha::floor_guarded;
use crate::constants::{EULER_GAMMA, STIELTJES_GAMMA1};

/// Largest index summed directly; beyond it the asymptotic expansions take
/// over with error far below the evaluation tolerance.
const DIRECT_LIMIT: u64 = 10_000_000;

fn kahan<I: Iterator<Item = f64>>(terms: I) -> f64 {
    let mut sum = 0.0f64;
    let mut c = 0.0f64;
    for t in terms {
        let y = t - c;
        let s = sum + y;
        c = (s - sum) - y;
        sum = s;
    }
    sum
}

/// Harmonic number H_m. Direct compensated summation up to 1e7; beyond that
/// log m + gamma + 1/(2m), whose error 1/(12 m^2) is below 1e-15 there.
pub fn harmonic(m: u64) -> f64 {
    if m <= DIRECT_LIMIT {
        kahan((1..=m).map(|b| 1.0 / b as f64))
    } else {
        let mf = m as f64;
        mf.ln() + EULER_GAMMA + 1.0 / (2.0 * mf)
    }
}

/// H_{floor(x)}.
pub fn harmonic_step(x: f64) -> f64 {
    assert!(x >= 1.0, "harmonic step needs x >= 1, got {x}");
    harmonic(floor_guarded(x))
}

/// J(x) = sum of log b / b over 1 <= b <= x. Direct summation up to 1e7;
/// beyond that (log x)^2 / 2 + gamma_1 with error O(log x / x).
pub fn j_sum(x: f64) -> f64 {
    assert!(x >= 1.0, "series cutoff must be >= 1, got {x}");
    let m = floor_guarded(x);
    if m <= DIRECT_LIMIT {
        j_direct(m)
    } else {
        0.5 * x.ln() * x.ln() + STIELTJES_GAMMA1
    }
}

/// Direct-summation J_m, used by the limit functions where the index is
/// always small and approximation error is unwelcome.
pub(crate) fn j_direct(m: u64) -> f64 {
    kahan((2..=m).map(|b| {
        let bf = b as f64;
        bf.ln() / bf
    }))
}

pub(crate) fn h_direct(m: u64) -> f64 {
    kahan((1..=m).map(|b| 1.0 / b as f64))
}

/// L_i(n) = sum of b (log b)^i over 2 <= b <= n, for i in {1, 2}.
pub fn l_sum(i: u32, n: u64) -> f64 {
    assert!(i == 1 || i == 2, "weight exponent must be 1 or 2, got {i}");
    assert!(n >= 2, "summation limit must be >= 2, got {n}");
    kahan((2..=n).map(|b| {
        let bf = b as f64;
        bf * bf.ln().powi(i as i32)
    }))
}

/// Integral main term for l_sum: the integral of u (log u)^i from 1 to n.
/// The sum lies between this and this plus n (log n)^i.
pub fn l_sum_main_term(i: u32, n: u64) -> f64 {
    assert!(i == 1 || i == 2, "weight exponent must be 1 or 2, got {i}");
    let nf = n as f64;
    let ln = nf.ln();
    match i {
        1 => 0.5 * nf * nf * ln - 0.25 * nf * nf + 0.25,
        _ => 0.5 * nf * nf * ln * ln - 0.5 * nf * nf * ln + 0.25 * nf * nf - 0.25,
    }
}
