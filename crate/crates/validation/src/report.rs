//! Report types shared by the suites, plus CSV/JSON emission.

use serde::Serialize;
use std::fmt;

/// Which aggregate a remainder report measures. The `*Full` variants label
/// the x = n specialization of the same three sums.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum ReportFamily {
    A,
    B,
    G,
    #[serde(rename = "B_full")]
    BFull,
    #[serde(rename = "A_full")]
    AFull,
    #[serde(rename = "G_full")]
    GFull,
}

impl fmt::Display for ReportFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ReportFamily::A => "A",
            ReportFamily::B => "B",
            ReportFamily::G => "G",
            ReportFamily::BFull => "B_full",
            ReportFamily::AFull => "A_full",
            ReportFamily::GFull => "G_full",
        };
        f.write_str(s)
    }
}

/// One measured data point: an exactly computed aggregate against its
/// two-term main formula, with the remainder normalized by n^{3/2} log n.
#[derive(Debug, Clone, Serialize)]
pub struct RemainderReport {
    pub family: ReportFamily,
    pub n: u64,
    pub alpha: f64,
    pub exact: f64,
    pub predicted: f64,
    pub remainder: f64,
    pub normalized: f64,
}

impl RemainderReport {
    pub fn new(family: ReportFamily, n: u64, alpha: f64, exact: f64, predicted: f64) -> Self {
        assert!(n >= 2, "reports need n >= 2 so the normalizer is positive");
        assert!(exact.is_finite() && predicted.is_finite(), "report values must be finite");
        let remainder = exact - predicted;
        let nf = n as f64;
        let normalized = remainder.abs() / (nf.powf(1.5) * nf.ln());
        RemainderReport { family, n, alpha, exact, predicted, remainder, normalized }
    }
}

/// One failed check: the offending inputs, both sides, and which rule broke.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteFailure {
    pub inputs: String,
    pub expected: String,
    pub got: String,
    pub rule: String,
}

/// Outcome of a whole suite; the suite passes exactly when no case failed.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteResult {
    pub suite_name: String,
    pub cases_run: u64,
    pub failures: Vec<SuiteFailure>,
}

impl SuiteResult {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Canonical emission order: (family, n, alpha). Alphas are finite by
/// construction, so the comparison is total.
pub fn sort_reports(reports: &mut [RemainderReport]) {
    reports.sort_by(|a, b| {
        (a.family, a.n)
            .cmp(&(b.family, b.n))
            .then(a.alpha.partial_cmp(&b.alpha).expect("alpha is never NaN"))
    });
}

const CSV_HEADER: &str = "family,n,alpha,exact,predicted,remainder,normalized\n";

pub fn reports_to_csv(reports: &[RemainderReport]) -> String {
    let mut sorted = reports.to_vec();
    sort_reports(&mut sorted);
    if sorted.is_empty() {
        return CSV_HEADER.to_string();
    }
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in &sorted {
        w.serialize(r).expect("csv serialization cannot fail");
    }
    String::from_utf8(w.into_inner().expect("csv flush")).expect("csv output is utf-8")
}

pub fn reports_to_json(reports: &[RemainderReport]) -> String {
    let mut sorted = reports.to_vec();
    sort_reports(&mut sorted);
    serde_json::to_string_pretty(&sorted).expect("serialization cannot fail")
}

pub fn suite_to_json(result: &SuiteResult) -> String {
    serde_json::to_string_pretty(result).expect("serialization cannot fail")
}
