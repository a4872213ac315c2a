//! Alpha sweep of exact versus predicted values for the three families.

use asymptotics::Alpha;
use rayon::prelude::*;

use crate::remainder::measure_one;
use crate::report::{sort_reports, RemainderReport, ReportFamily};

/// Sweeps alpha over the uniform grid {k * grid_step} in (0, 1], the
/// endpoint 1, and the flanks 1/k +- grid_step of every breakpoint with
/// 1/k >= 1/sqrt(n). Emits one report per (family, alpha) for families
/// A, B, G. Alphas whose cutoff would fall below 2 carry no terms and are
/// dropped.
pub fn scan_alpha(n: u64, grid_step: f64) -> Vec<RemainderReport> {
    assert!(n >= 16, "scan needs n >= 16, got {n}");
    assert!(
        grid_step > 0.0 && grid_step <= 0.1,
        "grid step must lie in (0, 0.1], got {grid_step}"
    );

    let mut alphas: Vec<f64> = Vec::new();
    let mut k = 1u64;
    loop {
        let a = k as f64 * grid_step;
        if a > 1.0 {
            break;
        }
        alphas.push(a);
        k += 1;
    }
    alphas.push(1.0);
    let k_max = n.isqrt(); // 1/k >= 1/sqrt(n)
    for k in 1..=k_max {
        let inv = 1.0 / k as f64;
        for a in [inv - grid_step, inv + grid_step] {
            if a > 0.0 && a <= 1.0 {
                alphas.push(a);
            }
        }
    }
    alphas.retain(|&a| a * n as f64 >= 2.0);
    alphas.sort_by(|p, q| p.partial_cmp(q).expect("grid alphas are finite"));
    alphas.dedup();

    let mut reports: Vec<RemainderReport> = [ReportFamily::A, ReportFamily::B, ReportFamily::G]
        .into_iter()
        .flat_map(|family| alphas.iter().map(move |&a| (family, a)).collect::<Vec<_>>())
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|(family, a)| measure_one(family, n, Alpha::Float(a)))
        .collect();
    sort_reports(&mut reports);
    reports
}
