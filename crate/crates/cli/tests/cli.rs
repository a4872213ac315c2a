//! End-to-end runs of the compiled binary: documented input/output pairs,
//! exit-code contract, format switches, and file emission.

use std::process::{Command, Output};

fn radix(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_radix"))
        .args(args)
        .output()
        .expect("binary should run")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 stdout")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

#[test]
fn nu_matches_documented_value() {
    let out = radix(&["nu", "--n", "4", "--b", "4"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "3\n");
}

#[test]
fn nu_csv_has_header_row() {
    let out = radix(&["nu", "--n", "4", "--b", "4", "--format", "csv"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "n,b,nu\n4,4,3\n");
}

#[test]
fn nu_rejects_degenerate_base() {
    let out = radix(&["nu", "--n", "4", "--b", "1"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn unknown_flag_is_usage_error() {
    let out = radix(&["nu", "--n", "4", "--b", "4", "--bogus"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn digits_reports_expansion_and_stats() {
    // 6 = 2 + 1*4, d_4(6) = 3, S_4(6) = 1+2+3+1+2 = 9.
    let out = radix(&["digits", "--n", "6", "--b", "4"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("digits (least significant first): 2 1"), "{text}");
    assert!(text.contains("digit_sum = 3"), "{text}");
    assert!(text.contains("running_digit_sum = 9"), "{text}");
}

#[test]
fn product_value_matches_hand_expansion() {
    let out = radix(&["product", "--n", "4", "--x", "4", "--representation", "value"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "6144\n");
}

#[test]
fn product_factor_list_is_empty_when_all_exponents_vanish() {
    let human = radix(&["product", "--n", "3", "--x", "2"]);
    assert_eq!(code(&human), 0);
    assert_eq!(stdout(&human), "1\n");

    let csv = radix(&["product", "--n", "3", "--x", "2", "--format", "csv"]);
    assert_eq!(stdout(&csv), "base,exponent\n");
}

#[test]
fn product_json_round_trips_through_canonical_form() {
    let out = radix(&["product", "--n", "4", "--x", "4", "--format", "json"]);
    assert_eq!(code(&out), 0);
    let parsed = product_engine::PartialFactorization::from_canonical_json(&stdout(&out))
        .expect("canonical json");
    assert_eq!(parsed, product_engine::partial_product(4, 4.0));
    assert_eq!(parsed.value().to_string(), "6144");
}

#[test]
fn product_log_matches_value_logarithm() {
    let out = radix(&["product", "--n", "4", "--x", "4", "--representation", "log"]);
    let lg: f64 = stdout(&out).trim().parse().expect("float");
    assert!((lg - 6144f64.ln()).abs() < 1e-9, "log was {lg}");
}

#[test]
fn sums_difference_reproduces_log_product() {
    let out = radix(&["sums", "--n", "64", "--x", "64", "--format", "json"]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("json");
    let a = v["a_sum"].as_f64().unwrap();
    let b = v["b_sum"].as_f64().unwrap();
    let lg = v["log_product"].as_f64().unwrap();
    assert!((a - b - lg).abs() <= 1e-9 * lg.abs().max(1.0), "a={a} b={b} log={lg}");
    assert!(v["c_sum"].as_f64().unwrap() > 0.0);
}

#[test]
fn scan_emits_sorted_csv_with_header_and_many_rows() {
    let out = radix(&["scan", "--n", "1024", "--step", "0.01"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "family,n,alpha,exact,predicted,remainder,normalized"
    );
    let rows: Vec<&str> = lines.collect();
    assert!(rows.len() > 100, "only {} rows", rows.len());

    let again = radix(&["scan", "--n", "1024", "--step", "0.01"]);
    assert_eq!(stdout(&again), text, "scan output must be deterministic");
}

#[test]
fn validate_theorem_suite_exits_zero() {
    let out = radix(&["validate", "--suite", "theorems", "--max-n", "150"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("failures: 0"), "{text}");
    assert!(text.ends_with("PASS\n"), "{text}");
}

#[test]
fn validate_identity_suite_exits_zero_with_empty_failure_list() {
    let out = radix(&["validate", "--suite", "identities", "--max-n", "60", "--format", "json"]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("json");
    assert_eq!(v["failures"].as_array().unwrap().len(), 0);
    assert!(v["cases_run"].as_u64().unwrap() > 0);
}

#[test]
fn plotdata_fg_hits_endpoint_and_half_alpha_bound() {
    let out = radix(&[
        "plotdata", "--function", "fG", "--grid", "0.01", "--lo", "0.01", "--hi", "1",
    ]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), "alpha,value");
    let rows: Vec<(f64, f64)> = lines
        .map(|l| {
            let (a, v) = l.split_once(',').expect("two columns");
            (a.parse().unwrap(), v.parse().unwrap())
        })
        .collect();
    assert!((99..=101).contains(&rows.len()), "{} rows", rows.len());
    let (last_alpha, last_value) = *rows.last().unwrap();
    assert!((last_alpha - 1.0).abs() < 1e-9, "last alpha was {last_alpha}");
    assert!((last_value - 0.5).abs() < 1e-9, "f_G(1) was {last_value}");
    for (a, v) in rows {
        assert!(v <= a / 2.0 + 1e-12, "f_G({a}) = {v} exceeds alpha/2");
    }
}

#[test]
fn plotdata_gb_endpoint_matches_printed_constant() {
    let out = radix(&[
        "plotdata", "--function", "gB", "--grid", "0.25", "--lo", "0.5", "--hi", "1",
    ]);
    let text = stdout(&out);
    let last = text.lines().last().unwrap();
    let (a, v) = last.split_once(',').unwrap();
    assert_eq!(a.parse::<f64>().unwrap(), 1.0);
    assert!((v.parse::<f64>().unwrap() - (-0.49560)).abs() < 1e-4, "row {last}");
}

#[test]
fn plotdata_derivative_stays_finite_across_a_kink() {
    let out = radix(&[
        "plotdata", "--function", "fA_deriv", "--grid", "0.001", "--lo", "0.3", "--hi", "0.35",
    ]);
    assert_eq!(code(&out), 0);
    for line in stdout(&out).lines().skip(1) {
        let (a, v) = line.split_once(',').unwrap();
        let v: f64 = v.parse().unwrap();
        assert!(v.is_finite() && v.abs() < 50.0, "f_A'({a}) = {v}");
    }
}

#[test]
fn plotdata_rejects_bad_ranges() {
    let backwards = radix(&["plotdata", "--function", "fG", "--lo", "0.5", "--hi", "0.2"]);
    assert_eq!(code(&backwards), 2);
    let above_one = radix(&["plotdata", "--function", "fG", "--lo", "0.5", "--hi", "1.5"]);
    assert_eq!(code(&above_one), 2);
    let zero_lo = radix(&["plotdata", "--function", "fG", "--lo", "0", "--hi", "1"]);
    assert_eq!(code(&zero_lo), 2);
}

#[test]
fn output_flag_writes_the_same_bytes_to_a_file() {
    let dir = tempfile::tempdir().expect("tempdir");
    let path = dir.path().join("nu.csv");
    let direct = radix(&["nu", "--n", "10", "--b", "3", "--format", "csv"]);
    let to_file = radix(&[
        "nu", "--n", "10", "--b", "3", "--format", "csv", "--output",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code(&to_file), 0);
    assert_eq!(stdout(&to_file), "");
    let written = std::fs::read_to_string(&path).expect("file written");
    assert_eq!(written, stdout(&direct));
}

#[test]
fn worker_cap_env_is_honored() {
    let out = Command::new(env!("CARGO_BIN_EXE_radix"))
        .args(["scan", "--n", "64", "--step", "0.05"])
        .env("RADIX_THREADS", "1")
        .output()
        .expect("binary should run");
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).lines().count() > 10);
}

#[test]
fn bench_small_level_reports_agreement() {
    let out = radix(&["bench", "--max-n", "512", "--format", "json"]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("json");
    assert_eq!(v["kernel"]["agree"], serde_json::Value::Bool(true));
    assert_eq!(v["kernel"]["n"].as_u64().unwrap(), 512);
    assert_eq!(v["series"]["max_n"].as_u64().unwrap(), 512);
    assert!(v["series"]["last_log"].as_f64().unwrap() > 0.0);
}
