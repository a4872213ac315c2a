//! Wall-clock comparison of the floor-series kernel against naive digit
//! extraction, plus the log-product series timing.

use std::time::Instant;

use product_engine::log_partial_product;
use radix_core::{digit_sum_direct, nu_bar_u128, running_digit_sum_direct};
use rayon::prelude::*;

/// Timing of {nu(n,b) : 2 <= b <= n} along both routes. The checksum is the
/// wrapping sum of all exponents, kept so the work cannot be optimized away.
#[derive(Debug, Clone, Copy)]
pub struct KernelBench {
    pub n: u64,
    pub bases: u64,
    pub fast_seconds: f64,
    pub naive_seconds: f64,
    pub speedup: f64,
    pub agree: bool,
    pub checksum: u128,
}

fn naive_nu(n: u64, b: u64) -> u128 {
    // per-integer digit extraction for S and d, then the same quotient
    let s = running_digit_sum_direct(n, b);
    let d = digit_sum_direct(n, b) as u128;
    let numerator = 2 * s - (n as u128 - 1) * d;
    numerator / (b as u128 - 1)
}

/// Timings run on a private pool of the configured width: jobs injected
/// into a busy shared pool can otherwise queue behind unrelated work and
/// report wait time as compute time.
fn private_pool() -> rayon::ThreadPool {
    rayon::ThreadPoolBuilder::new()
        .num_threads(rayon::current_num_threads())
        .build()
        .expect("thread pool construction")
}

/// Measures every exponent at level n over 2 <= b <= n twice: through the
/// floor-series kernel and through per-integer digit summation. Both routes
/// run under the same parallel sharding so the comparison is fair.
pub fn bench_nu_kernel(n: u64) -> KernelBench {
    assert!(n >= 2, "kernel bench needs n >= 2, got {n}");
    let pool = private_pool();

    let started = Instant::now();
    let fast: Vec<u128> =
        pool.install(|| (2..=n).into_par_iter().map(|b| nu_bar_u128(n, b)).collect());
    let fast_seconds = started.elapsed().as_secs_f64();

    let started = Instant::now();
    let naive: Vec<u128> =
        pool.install(|| (2..=n).into_par_iter().map(|b| naive_nu(n, b)).collect());
    let naive_seconds = started.elapsed().as_secs_f64();

    let agree = fast == naive;
    let checksum = fast.iter().fold(0u128, |acc, &v| acc.wrapping_add(v));
    KernelBench {
        n,
        bases: n - 1,
        fast_seconds,
        naive_seconds,
        speedup: naive_seconds / fast_seconds.max(1e-12),
        agree,
        checksum,
    }
}

/// Timing of the full log-product series log G(n, n) for 1 <= n <= max_n.
#[derive(Debug, Clone, Copy)]
pub struct SeriesBench {
    pub max_n: u64,
    pub seconds: f64,
    pub last_log: f64,
}

pub fn bench_log_series(max_n: u64) -> SeriesBench {
    assert!(max_n >= 1, "series bench needs max_n >= 1, got {max_n}");
    let pool = private_pool();
    let started = Instant::now();
    let logs: Vec<f64> = pool.install(|| {
        (1..=max_n)
            .into_par_iter()
            .map(|n| log_partial_product(n, n as f64).value())
            .collect()
    });
    let seconds = started.elapsed().as_secs_f64();
    SeriesBench { max_n, seconds, last_log: *logs.last().expect("nonempty range") }
}
