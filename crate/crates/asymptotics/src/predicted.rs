use crate::alpha::Alpha;
use crate::limits::{f_a, f_b, f_g, g_a, g_b, g_g};

/// The three aggregate families whose logs the two-term main formula
/// predicts: running digit sums (A), digit sums (B), and the partial
/// product (G).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    A,
    B,
    G,
}

/// Two-term main formula f(alpha) n^2 log n + g(alpha) n^2.
///
/// Callers are responsible for checking [`main_term_applies`]: below
/// alpha = 1/sqrt(n) the formula still evaluates but the aggregate is only
/// bounded by O(n^{3/2} log n), so the prediction carries no content there.
pub fn predicted_log(family: Family, n: u64, alpha: impl Into<Alpha>) -> f64 {
    assert!(n >= 2, "level must be at least 2, got {n}");
    let alpha = alpha.into();
    let (f, g) = match family {
        Family::A => (f_a(alpha), g_a(alpha)),
        Family::B => (f_b(alpha), g_b(alpha)),
        Family::G => (f_g(alpha), g_g(alpha)),
    };
    let nf = n as f64;
    f * nf * nf * nf.ln() + g * nf * nf
}

/// Whether alpha >= 1/sqrt(n), the region where the two-term main formula
/// holds; exact for rational alpha.
pub fn main_term_applies(n: u64, alpha: impl Into<Alpha>) -> bool {
    match alpha.into() {
        Alpha::Ratio(p, q) => (p as u128 * p as u128) * n as u128 >= q as u128 * q as u128,
        Alpha::Float(a) => a * a * n as f64 >= 1.0 - 1e-12,
    }
}

/// One evaluated point of a scale function, optionally paired with the
/// prediction at a concrete n and (by the validation layer) with the exact
/// value and normalized remainder.
#[derive(Clone, Copy, Debug)]
pub struct ScaleEval {
    pub alpha: f64,
    pub f_value: f64,
    pub g_value: f64,
    pub n: Option<u64>,
    pub predicted_log: Option<f64>,
    pub exact_log: Option<f64>,
    pub normalized_remainder: Option<f64>,
}

impl ScaleEval {
    pub fn evaluate(family: Family, alpha: impl Into<Alpha>) -> Self {
        let alpha = alpha.into();
        let (f_value, g_value) = match family {
            Family::A => (f_a(alpha), g_a(alpha)),
            Family::B => (f_b(alpha), g_b(alpha)),
            Family::G => (f_g(alpha), g_g(alpha)),
        };
        ScaleEval {
            alpha: alpha.value(),
            f_value,
            g_value,
            n: None,
            predicted_log: None,
            exact_log: None,
            normalized_remainder: None,
        }
    }

    pub fn with_n(mut self, n: u64) -> Self {
        let nf = n as f64;
        self.n = Some(n);
        self.predicted_log = Some(self.f_value * nf * nf * nf.ln() + self.g_value * nf * nf);
        self
    }
}
