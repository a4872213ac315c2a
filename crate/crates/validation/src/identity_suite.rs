//! Sampled cross-checks of exact identities: the log-product difference
//! form, the square-root split of the digit aggregate, the cutoff functional
//! equation, and the closed-form floor-log integral.

use asymptotics::{harmonic, j_sum};
use product_engine::{
    a_sum, b_sum, b_sum_decomposition, c_sum, log_partial_product, LogAccumulator, Real,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::report::{SuiteFailure, SuiteResult};

const SEED: u64 = u64::from_le_bytes(*b"radixval");

/// Relative tolerance for identities that hold exactly in real arithmetic.
const REL_TOL: f64 = 1e-9;
/// Extra absolute allowance for the integral check, per unit of length.
const QUAD_ABS_PER_UNIT: f64 = 1e-8;

fn rel_close(lhs: f64, rhs: f64) -> bool {
    (lhs - rhs).abs() <= REL_TOL * lhs.abs().max(rhs.abs()).max(1.0)
}

/// log(m!) for every m <= top, cumulatively compensated.
fn ln_factorial_table(top: u64) -> Vec<f64> {
    let mut table = Vec::with_capacity(top as usize + 1);
    let mut acc = LogAccumulator::new();
    table.push(0.0);
    for k in 1..=top {
        acc.add((k as f64).ln());
        table.push(acc.value());
    }
    table
}

/// Exact value of int_1^t {u}/u du for rational t = tp/tq >= 1, via
/// t - 1 - floor(t) log t + log(floor(t)!).
fn frac_part_integral(tp: u64, tq: u64, lf: &[f64]) -> f64 {
    let m = (tp / tq) as usize;
    let t = tp as f64 / tq as f64;
    t - 1.0 - m as f64 * t.ln() + lf[m]
}

/// Both sides of the cutoff functional equation for rational n = np/nq and
/// x = xp/xq with 1 <= x <= n:
///
///   C(n,n) + C(n,x) - C(n, n/x)
///     = (log n) sum_{b<=x} floor(n/b) - floor(x) log(floor(n/x)!)
///       - n H(floor(x)) + floor(x) + sum_{b<=x} int_1^{n/b} {u}/u du
///
/// where C(n,y) = sum_{1<=b<=y} floor(n/b) log b. Each side is evaluated
/// independently: the left from three cutoff sums, the right from harmonic
/// numbers, log-factorials, and the fractional-part integrals.
fn functional_equation_sides(np: u64, nq: u64, xp: u64, xq: u64) -> (f64, f64) {
    assert!(xp >= xq, "x must be at least 1");
    assert!(
        xp as u128 * nq as u128 <= np as u128 * xq as u128,
        "x must not exceed n"
    );
    let n_real = Real::ratio(np, nq);
    let lhs = c_sum(n_real, n_real).value() + c_sum(n_real, Real::ratio(xp, xq)).value()
        - c_sum(n_real, Real::ratio(np * xq, nq * xp)).value();

    let nf = np as f64 / nq as f64;
    let floor_x = xp / xq;
    let m_div = (np * xq) / (nq * xp); // floor(n/x)
    let lf = ln_factorial_table(np / nq);
    let mut floor_sum: u128 = 0;
    let mut tail = LogAccumulator::new();
    for b in 1..=floor_x {
        floor_sum += n_real.floor_div(b) as u128;
        tail.add(frac_part_integral(np, nq * b, &lf));
    }
    let rhs = nf.ln() * floor_sum as f64 - floor_x as f64 * lf[m_div as usize]
        - nf * harmonic(floor_x)
        + floor_x as f64
        + tail.value();
    (lhs, rhs)
}

/// Closed form for int_x^n floor(n/u) log u du with M = floor(n/x):
/// (H_M - (x/n) M)(n log n - n) - (J_M - (x/n) M log(n/x)) n.
fn floor_log_integral_closed(n: u64, x: f64) -> f64 {
    let nf = n as f64;
    assert!(x >= 1.0 && x <= nf, "integration range needs 1 <= x <= n");
    let m = (nf / x).floor();
    let r = x / nf;
    let h = harmonic(m as u64);
    let j = j_sum(m);
    (h - r * m) * (nf * nf.ln() - nf) - (j - r * m * (nf / x).ln()) * nf
}

/// The same integral by exact integration on every constancy interval of
/// floor(n/u): the strip (n/(j+1), n/j] contributes j * d(u log u - u).
fn floor_log_integral_piecewise(n: u64, x: f64) -> f64 {
    let nf = n as f64;
    let m = (nf / x).floor() as u64;
    let anti = |u: f64| u * u.ln() - u;
    let mut acc = LogAccumulator::new();
    for j in 1..=m {
        let lo = (nf / (j + 1) as f64).max(x);
        let hi = nf / j as f64;
        if hi > lo {
            acc.add(j as f64 * (anti(hi) - anti(lo)));
        }
    }
    acc.value()
}

/// Sampled quadrature endpoints step off breakpoints of floor(n/x) so a
/// float division cannot land on the wrong side of an integer.
fn nudge_off_breakpoints(nf: f64, mut x: f64) -> f64 {
    for _ in 0..16 {
        let v = nf / x;
        if (v - v.round()).abs() > 1e-7 * v.round().max(1.0) {
            break;
        }
        x = (x + 1e-5 * nf).min(nf);
    }
    x
}

struct Job {
    n: u64,
    log_xs: Vec<f64>,
    /// (np, nq, xp, xq) rational pairs for the functional equation
    eq_cases: Vec<(u64, u64, u64, u64)>,
    quad_xs: Vec<f64>,
}

fn build_jobs(max_n: u64, rng: &mut ChaCha8Rng) -> Vec<Job> {
    let mut levels: Vec<u64> = vec![4, 5, max_n];
    if max_n >= 100 {
        levels.push(100);
    }
    for _ in 0..40 {
        levels.push(rng.gen_range(4..=max_n));
    }
    levels.sort_unstable();
    levels.dedup();

    levels
        .into_iter()
        .map(|n| {
            let nf = n as f64;
            let mut log_xs = vec![nf.sqrt(), nf / 2.0, nf, rng.gen_range(2.0..=nf)];
            log_xs.retain(|&x| x >= 2.0);

            let mut eq_cases = vec![
                (n, 1, n, 1), // x = n: the left side collapses to 2 C(n,n)
                (n, 1, 1, 1),
                (n, 1, rng.gen_range(1..=n), 1),
                (n, 1, 2 * rng.gen_range(1..=n - 1) + 1, 2), // half-integer cutoff
                (2 * n + 1, 2, rng.gen_range(1..=n), 1),     // half-integer level
            ];
            if n == 100 {
                eq_cases.push((100, 1, 10, 1));
            }

            let mut quad_xs = vec![1.0, nf];
            for k in 2..=5u64 {
                if n % k == 0 {
                    quad_xs.push(nf / k as f64);
                }
            }
            for _ in 0..3 {
                quad_xs.push(nudge_off_breakpoints(nf, rng.gen_range(1.0..nf)));
            }

            Job { n, log_xs, eq_cases, quad_xs }
        })
        .collect()
}

fn run_job(job: &Job) -> (u64, Vec<SuiteFailure>) {
    let n = job.n;
    let nf = n as f64;
    let mut cases = 0u64;
    let mut fails = Vec::new();

    for &x in &job.log_xs {
        cases += 1;
        let lhs = log_partial_product(n, x).value();
        let rhs = a_sum(n, x).value() - b_sum(n, x).value();
        if !rel_close(lhs, rhs) {
            fails.push(SuiteFailure {
                inputs: format!("n={n} x={x}"),
                expected: format!("{rhs}"),
                got: format!("{lhs}"),
                rule: "log of the partial product equals the aggregate difference".into(),
            });
        }
    }

    cases += 1;
    let parts = b_sum_decomposition(n);
    let together = parts.b1 - parts.b2 + parts.br;
    let whole = b_sum(n, nf).value();
    if !rel_close(together, whole) {
        fails.push(SuiteFailure {
            inputs: format!("n={n}"),
            expected: format!("{whole}"),
            got: format!("{together}"),
            rule: "square-root split reassembles the digit aggregate".into(),
        });
    }

    for &(np, nq, xp, xq) in &job.eq_cases {
        cases += 1;
        let (lhs, rhs) = functional_equation_sides(np, nq, xp, xq);
        if !rel_close(lhs, rhs) {
            fails.push(SuiteFailure {
                inputs: format!("n={np}/{nq} x={xp}/{xq}"),
                expected: format!("{rhs}"),
                got: format!("{lhs}"),
                rule: "cutoff functional equation".into(),
            });
        }
    }

    for &x in &job.quad_xs {
        cases += 1;
        let closed = floor_log_integral_closed(n, x);
        let piece = floor_log_integral_piecewise(n, x);
        let tol = (REL_TOL * closed.abs().max(piece.abs()))
            .max(QUAD_ABS_PER_UNIT * (nf - x).max(1.0));
        if (closed - piece).abs() > tol {
            fails.push(SuiteFailure {
                inputs: format!("n={n} x={x}"),
                expected: format!("{piece}"),
                got: format!("{closed}"),
                rule: "floor-log integral closed form matches piecewise integration".into(),
            });
        }
    }

    (cases, fails)
}

/// Checks, on a seeded deterministic sample of levels up to max_n, that
/// log G(n,x) = A(n,x) - B(n,x); that the square-root split B1 - B2 + BR
/// reassembles B(n,n); that the cutoff functional equation holds for
/// rational (including half-integer) levels and cutoffs; and that the
/// floor-log integral's closed form matches piecewise-exact integration.
pub fn run_identity_suite(max_n: u64) -> SuiteResult {
    assert!(max_n >= 4, "suite needs max_n >= 4, got {max_n}");
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let jobs = build_jobs(max_n, &mut rng);
    let shards: Vec<(u64, Vec<SuiteFailure>)> = jobs.par_iter().map(run_job).collect();
    let mut cases_run = 0;
    let mut failures = Vec::new();
    for (cases, fails) in shards {
        cases_run += cases;
        failures.extend(fails);
    }
    SuiteResult { suite_name: "identities".into(), cases_run, failures }
}
