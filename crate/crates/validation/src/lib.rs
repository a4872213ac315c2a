//! Theorem harness: exhaustive exact checks at small levels, identity
//! cross-checks on seeded samples, and remainder measurement for the
//! asymptotic main terms.
//!
//! Nothing here trusts the kernels it exercises. Every suite recomputes its
//! target along an independent route — per-integer digit extraction, floor
//! double sums, piecewise-exact integration — and reports disagreements as
//! data instead of panicking mid-run.

mod bench;
mod identity_suite;
mod remainder;
mod report;
mod scan;
mod theorem_suite;

pub use bench::{bench_log_series, bench_nu_kernel, KernelBench, SeriesBench};
pub use identity_suite::run_identity_suite;
pub use remainder::{
    frozen_bound, measure_remainders, shows_growth_trend, ASSERT_MIN_N, FROZEN_BOUND_A,
    FROZEN_BOUND_B, FROZEN_BOUND_G,
};
pub use report::{
    reports_to_csv, reports_to_json, sort_reports, suite_to_json, RemainderReport, ReportFamily,
    SuiteFailure, SuiteResult,
};
pub use scan::scan_alpha;
pub use theorem_suite::run_theorem_suite;
