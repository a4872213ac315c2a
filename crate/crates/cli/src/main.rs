//! Command-line front end over the digit-statistics kernels: exponents,
//! partial-product factorizations, aggregate sums, limit-function plot data,
//! validation suites, and timing comparisons.
//!
//! Exit codes are a stable contract: 0 success, 1 validation or consistency
//! failure, 2 usage error. `RADIX_THREADS` caps the worker count used by the
//! parallel subcommands.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

#[derive(Parser)]
#[command(
    name = "radix",
    version,
    about = "Digit statistics, generalized binomial products, and their asymptotics"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Human)]
    format: Format,

    /// Write output to this file instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    output: Option<PathBuf>,

    #[command(subcommand)]
    command: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Human,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Cmd {
    /// Exponent of base b in the level-n generalized binomial product.
    Nu {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        b: u64,
    },
    /// Base-b digit expansion of n with its digit-sum statistics.
    Digits {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        b: u64,
    },
    /// Partial product over bases 2..=x at level n.
    Product {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        x: f64,
        /// How to render the product.
        #[arg(long, value_enum, default_value_t = Representation::Factors)]
        representation: Representation,
        /// Warn before materializing a value above this many bits.
        #[arg(long, default_value_t = 100_000_000)]
        bit_cap: u64,
    },
    /// Weighted digit aggregates and the log partial product at (n, x).
    Sums {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        x: f64,
    },
    /// Sweep cutoff fractions at one level and report exact vs predicted.
    Scan {
        #[arg(long)]
        n: u64,
        /// Grid spacing for the fraction sweep, in (0, 0.1].
        #[arg(long)]
        step: f64,
    },
    /// Run a verification suite; exits 0 only when every case passes.
    Validate {
        #[arg(long, value_enum)]
        suite: Suite,
        #[arg(long, default_value_t = 200)]
        max_n: u64,
    },
    /// Emit limit-function samples as (alpha, value) rows for plotting.
    Plotdata {
        #[arg(long, value_enum)]
        function: PlotFn,
        /// Sample spacing.
        #[arg(long, default_value_t = 0.01)]
        grid: f64,
        /// Left edge of the sampled range; must satisfy 0 < lo <= hi <= 1.
        #[arg(long, default_value_t = 0.01)]
        lo: f64,
        /// Right edge of the sampled range.
        #[arg(long, default_value_t = 1.0)]
        hi: f64,
    },
    /// Time the fast exponent kernel against naive digit summation, plus the
    /// log-product series.
    Bench {
        #[arg(long, default_value_t = 100_000)]
        max_n: u64,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Representation {
    Factors,
    Value,
    Log,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    Theorems,
    Identities,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PlotFn {
    #[value(name = "fG")]
    FG,
    #[value(name = "gG")]
    GG,
    #[value(name = "fA")]
    FA,
    #[value(name = "gA")]
    GA,
    #[value(name = "fB")]
    FB,
    #[value(name = "gB")]
    GB,
    #[value(name = "fA_deriv")]
    FADeriv,
}

struct Rendered {
    text: String,
    failed: bool,
}

impl Rendered {
    fn ok(text: String) -> Self {
        Rendered { text, failed: false }
    }
}

enum Failure {
    Usage(String),
    Consistency(String),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    init_thread_pool();
    let rendered = match run(&cli) {
        Ok(r) => r,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
        Err(Failure::Consistency(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(1);
        }
    };
    match &cli.output {
        Some(path) => {
            if let Err(e) = std::fs::write(path, rendered.text.as_bytes()) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(1);
            }
        }
        None => print!("{}", rendered.text),
    }
    if rendered.failed {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}

/// RADIX_THREADS caps the worker count for scan/validate/bench.
fn init_thread_pool() {
    let Ok(raw) = std::env::var("RADIX_THREADS") else { return };
    match raw.parse::<usize>() {
        Ok(k) if k >= 1 => {
            let _ = rayon::ThreadPoolBuilder::new().num_threads(k).build_global();
        }
        _ => eprintln!("warning: ignoring RADIX_THREADS={raw}; expected a positive integer"),
    }
}

fn run(cli: &Cli) -> Result<Rendered, Failure> {
    let fmt = cli.format;
    match &cli.command {
        Cmd::Nu { n, b } => cmd_nu(*n, *b, fmt),
        Cmd::Digits { n, b } => cmd_digits(*n, *b, fmt),
        Cmd::Product { n, x, representation, bit_cap } => {
            cmd_product(*n, *x, *representation, *bit_cap, fmt)
        }
        Cmd::Sums { n, x } => cmd_sums(*n, *x, fmt),
        Cmd::Scan { n, step } => cmd_scan(*n, *step, fmt),
        Cmd::Validate { suite, max_n } => cmd_validate(*suite, *max_n, fmt),
        Cmd::Plotdata { function, grid, lo, hi } => cmd_plotdata(*function, *grid, *lo, *hi, fmt),
        Cmd::Bench { max_n } => cmd_bench(*max_n, fmt),
    }
}

fn require(cond: bool, msg: &str) -> Result<(), Failure> {
    if cond {
        Ok(())
    } else {
        Err(Failure::Usage(msg.to_string()))
    }
}

fn pretty(v: serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(&v).expect("json serialization");
    s.push('\n');
    s
}

fn finish(mut s: String) -> String {
    if !s.ends_with('\n') {
        s.push('\n');
    }
    s
}

fn cmd_nu(n: u64, b: u64, fmt: Format) -> Result<Rendered, Failure> {
    require(n >= 1, "--n must be at least 1")?;
    require(b >= 2, "--b must be at least 2")?;
    let record =
        radix_core::nu_bar_checked(n, b).map_err(|f| Failure::Consistency(f.to_string()))?;
    let text = match fmt {
        Format::Human => format!("{}\n", record.nu),
        Format::Json => pretty(json!({ "n": n, "b": b, "nu": record.nu.to_string() })),
        Format::Csv => format!("n,b,nu\n{n},{b},{}\n", record.nu),
    };
    Ok(Rendered::ok(text))
}

fn cmd_digits(n: u64, b: u64, fmt: Format) -> Result<Rendered, Failure> {
    require(n >= 1, "--n must be at least 1")?;
    require(b >= 2, "--b must be at least 2")?;
    let expansion = radix_core::digits(n, b);
    let d = radix_core::digit_sum(n, b);
    let s = radix_core::running_digit_sum(n, b);
    let digit_list = expansion
        .digits()
        .iter()
        .map(|d| d.to_string())
        .collect::<Vec<_>>()
        .join(" ");
    let text = match fmt {
        Format::Human => format!(
            "n = {n}\nbase = {b}\ndigits (least significant first): {digit_list}\n\
             digit_sum = {d}\nrunning_digit_sum = {s}\n"
        ),
        // Counts that may exceed 64 bits are serialized as decimal strings.
        Format::Json => pretty(json!({
            "n": n,
            "b": b,
            "digits": expansion.digits(),
            "digit_sum": d,
            "running_digit_sum": s.to_string(),
        })),
        Format::Csv => format!(
            "n,b,digits,digit_sum,running_digit_sum\n{n},{b},{digit_list},{d},{s}\n"
        ),
    };
    Ok(Rendered::ok(text))
}

fn cmd_product(
    n: u64,
    x: f64,
    repr: Representation,
    bit_cap: u64,
    fmt: Format,
) -> Result<Rendered, Failure> {
    require(n >= 1, "--n must be at least 1")?;
    require(x.is_finite() && x >= 1.0, "--x must be a finite number >= 1")?;
    let pf = product_engine::partial_product(n, x);
    let text = match repr {
        Representation::Factors => match fmt {
            Format::Human => {
                if pf.exponents().is_empty() {
                    "1\n".to_string()
                } else {
                    let parts: Vec<String> =
                        pf.exponents().iter().map(|(b, e)| format!("{b}^{e}")).collect();
                    format!("{}\n", parts.join(" * "))
                }
            }
            Format::Json => finish(pf.to_canonical_json()),
            Format::Csv => {
                let mut out = String::from("base,exponent\n");
                for (b, e) in pf.exponents() {
                    writeln!(out, "{b},{e}").unwrap();
                }
                out
            }
        },
        Representation::Value => {
            let bits = pf.log_value() / std::f64::consts::LN_2;
            if bits > bit_cap as f64 {
                eprintln!(
                    "warning: value is roughly {bits:.3e} bits, above the {bit_cap}-bit cap; \
                     expect a large, slow result"
                );
            }
            let v = pf.value();
            match fmt {
                Format::Human => format!("{v}\n"),
                Format::Json => {
                    pretty(json!({ "n": n, "cutoff": pf.cutoff(), "value": v.to_string() }))
                }
                Format::Csv => format!("n,cutoff,value\n{n},{},{v}\n", pf.cutoff()),
            }
        }
        Representation::Log => {
            let lg = pf.log_value();
            match fmt {
                Format::Human => format!("{lg}\n"),
                Format::Json => pretty(json!({ "n": n, "cutoff": pf.cutoff(), "log_value": lg })),
                Format::Csv => format!("n,cutoff,log_value\n{n},{},{lg}\n", pf.cutoff()),
            }
        }
    };
    Ok(Rendered::ok(text))
}

fn cmd_sums(n: u64, x: f64, fmt: Format) -> Result<Rendered, Failure> {
    require(n >= 2, "--n must be at least 2")?;
    require(x.is_finite() && x >= 2.0, "--x must be a finite number >= 2")?;
    let a = product_engine::a_sum(n, x).value();
    let b = product_engine::b_sum(n, x).value();
    let c = product_engine::c_sum(n, x).value();
    let lg = product_engine::log_partial_product(n, x).value();
    let text = match fmt {
        Format::Human => format!(
            "n = {n}, x = {x}\na_sum = {a}\nb_sum = {b}\nc_sum = {c}\nlog_product = {lg}\n"
        ),
        Format::Json => pretty(json!({
            "n": n,
            "x": x,
            "a_sum": a,
            "b_sum": b,
            "c_sum": c,
            "log_product": lg,
        })),
        Format::Csv => {
            format!("quantity,value\na_sum,{a}\nb_sum,{b}\nc_sum,{c}\nlog_product,{lg}\n")
        }
    };
    Ok(Rendered::ok(text))
}

fn cmd_scan(n: u64, step: f64, fmt: Format) -> Result<Rendered, Failure> {
    require(n >= 16, "--n must be at least 16")?;
    require(
        step.is_finite() && step > 0.0 && step <= 0.1,
        "--step must lie in (0, 0.1]",
    )?;
    let reports = validation::scan_alpha(n, step);
    let text = match fmt {
        Format::Json => finish(validation::reports_to_json(&reports)),
        _ => validation::reports_to_csv(&reports),
    };
    Ok(Rendered::ok(text))
}

fn cmd_validate(suite: Suite, max_n: u64, fmt: Format) -> Result<Rendered, Failure> {
    let result = match suite {
        Suite::Theorems => {
            require(max_n >= 1, "--max-n must be at least 1 for the theorem suite")?;
            validation::run_theorem_suite(max_n)
        }
        Suite::Identities => {
            require(max_n >= 4, "--max-n must be at least 4 for the identity suite")?;
            validation::run_identity_suite(max_n)
        }
    };
    let failed = !result.passed();
    let text = match fmt {
        Format::Human => {
            let mut out = format!(
                "suite: {}\ncases run: {}\nfailures: {}\n",
                result.suite_name,
                result.cases_run,
                result.failures.len()
            );
            for f in &result.failures {
                writeln!(
                    out,
                    "  [{}] inputs: {} | expected: {} | got: {}",
                    f.rule, f.inputs, f.expected, f.got
                )
                .unwrap();
            }
            out.push_str(if failed { "FAIL\n" } else { "PASS\n" });
            out
        }
        Format::Json => finish(validation::suite_to_json(&result)),
        Format::Csv => {
            if result.failures.is_empty() {
                "inputs,expected,got,rule\n".to_string()
            } else {
                let mut w = csv::Writer::from_writer(Vec::new());
                for f in &result.failures {
                    w.serialize(f).expect("csv row");
                }
                String::from_utf8(w.into_inner().expect("csv flush")).expect("utf8 csv")
            }
        }
    };
    Ok(Rendered { text, failed })
}

const DERIV_STEP: f64 = 1e-6;
const KINK_ZONE: f64 = 1e-5;
const MAX_PLOT_ROWS: usize = 2_000_000;

fn cmd_plotdata(
    function: PlotFn,
    grid: f64,
    lo: f64,
    hi: f64,
    fmt: Format,
) -> Result<Rendered, Failure> {
    require(grid.is_finite() && grid > 0.0, "--grid must be a positive number")?;
    require(
        lo.is_finite() && hi.is_finite() && lo > 0.0 && lo <= hi && hi <= 1.0,
        "range must satisfy 0 < lo <= hi <= 1",
    )?;
    let estimate = ((hi - lo) / grid) as usize + 2;
    require(estimate <= MAX_PLOT_ROWS, "grid too fine for the requested range")?;

    let mut alphas = Vec::with_capacity(estimate);
    let mut k = 0u64;
    loop {
        let a = lo + k as f64 * grid;
        if a > hi + grid * 1e-9 {
            break;
        }
        alphas.push(a.min(hi));
        k += 1;
    }
    if let Some(&last) = alphas.last() {
        if hi - last > grid * 1e-6 {
            alphas.push(hi);
        }
    }

    let zone = grid.max(KINK_ZONE);
    let rows: Vec<(f64, f64)> =
        alphas.iter().map(|&a| (a, eval_plot_fn(function, a, zone))).collect();
    let text = match fmt {
        Format::Json => {
            let items: Vec<serde_json::Value> =
                rows.iter().map(|&(a, v)| json!({ "alpha": a, "value": v })).collect();
            pretty(serde_json::Value::Array(items))
        }
        _ => {
            let mut out = String::from("alpha,value\n");
            for (a, v) in &rows {
                writeln!(out, "{a},{v}").unwrap();
            }
            out
        }
    };
    Ok(Rendered::ok(text))
}

fn eval_plot_fn(function: PlotFn, a: f64, zone: f64) -> f64 {
    match function {
        PlotFn::FG => asymptotics::f_g(a),
        PlotFn::GG => asymptotics::g_g(a),
        PlotFn::FA => asymptotics::f_a(a),
        PlotFn::GA => asymptotics::g_a(a),
        PlotFn::FB => asymptotics::f_b(a),
        PlotFn::GB => asymptotics::g_b(a),
        PlotFn::FADeriv => f_a_derivative(a, zone),
    }
}

/// Finite-difference derivative of f_A. Central differences in the smooth
/// interior; within `zone` of a kink at 1/k (or of the right edge of the
/// domain) the stencil stays on one side so it never straddles a kink.
fn f_a_derivative(a: f64, zone: f64) -> f64 {
    let h = DERIV_STEP;
    let k = (1.0 / a).round();
    let kink = if k >= 1.0 { 1.0 / k } else { f64::INFINITY };
    let near_kink = (a - kink).abs() <= zone;
    let forward_ok = a + h <= 1.0;
    let backward_ok = a - h > 0.0;
    if near_kink {
        if a >= kink && forward_ok {
            (asymptotics::f_a(a + h) - asymptotics::f_a(a)) / h
        } else if backward_ok {
            (asymptotics::f_a(a) - asymptotics::f_a(a - h)) / h
        } else {
            (asymptotics::f_a(a + h) - asymptotics::f_a(a)) / h
        }
    } else if forward_ok && backward_ok {
        (asymptotics::f_a(a + h) - asymptotics::f_a(a - h)) / (2.0 * h)
    } else if backward_ok {
        (asymptotics::f_a(a) - asymptotics::f_a(a - h)) / h
    } else {
        (asymptotics::f_a(a + h) - asymptotics::f_a(a)) / h
    }
}

fn cmd_bench(max_n: u64, fmt: Format) -> Result<Rendered, Failure> {
    require(max_n >= 2, "--max-n must be at least 2")?;
    let kernel = validation::bench_nu_kernel(max_n);
    let series = validation::bench_log_series(max_n.min(4096));
    let failed = !kernel.agree;
    if failed {
        eprintln!(
            "error: fast and naive exponent routes disagree at n = {}",
            kernel.n
        );
    }
    let text = match fmt {
        Format::Human => format!(
            "exponent kernel at n = {} ({} bases)\n  fast    {:.3} s\n  naive   {:.3} s\n  \
             speedup {:.1}x\n  routes agree: {}\nlog-product series for n <= {}\n  total   \
             {:.3} s\n  final log value {}\n",
            kernel.n,
            kernel.bases,
            kernel.fast_seconds,
            kernel.naive_seconds,
            kernel.speedup,
            kernel.agree,
            series.max_n,
            series.seconds,
            series.last_log,
        ),
        Format::Json => pretty(json!({
            "kernel": {
                "n": kernel.n,
                "bases": kernel.bases,
                "fast_seconds": kernel.fast_seconds,
                "naive_seconds": kernel.naive_seconds,
                "speedup": kernel.speedup,
                "agree": kernel.agree,
                "checksum": kernel.checksum.to_string(),
            },
            "series": {
                "max_n": series.max_n,
                "seconds": series.seconds,
                "last_log": series.last_log,
            },
        })),
        Format::Csv => format!(
            "metric,value\nkernel_n,{}\nkernel_bases,{}\nkernel_fast_seconds,{}\n\
             kernel_naive_seconds,{}\nkernel_speedup,{}\nkernel_agree,{}\nseries_max_n,{}\n\
             series_seconds,{}\nseries_last_log,{}\n",
            kernel.n,
            kernel.bases,
            kernel.fast_seconds,
            kernel.naive_seconds,
            kernel.speedup,
            kernel.agree,
            series.max_n,
            series.seconds,
            series.last_log,
        ),
    };
    Ok(Rendered { text, failed })
}
