//! Closed-form limit and scale functions for the growth of the generalized
//! binomial products, plus the auxiliary series they are built from
//! (harmonic numbers, the log-over-b series, and weighted log sums).
//!
//! The six one-variable limit functions come in pairs (f, g): the log of each
//! aggregate at cutoff `x = alpha * n` grows like `f(alpha) n^2 log n +
//! g(alpha) n^2`. Each is a sum of floor terms that are individually
//! discontinuous at alpha = 1/k but whose total is continuous; evaluation
//! therefore computes `floor(1/alpha)` in integer arithmetic when alpha is
//! supplied as an exact rational, and through an ulp-scale snap guard when it
//! is a float.

mod alpha;
mod constants;
mod limits;
mod predicted;
mod scale;
mod series;

pub use alpha::Alpha;
pub use constants::{Constants, EULER_GAMMA, STIELTJES_GAMMA1};
pub use limits::{f_a, f_b, f_g, f_g_alternate, f_g_piecewise, g_a, g_b, g_g};
pub use predicted::{main_term_applies, predicted_log, Family, ScaleEval};
pub use scale::{scale_two_var, ScaleFamily};
pub use series::{harmonic, harmonic_step, j_sum, l_sum, l_sum_main_term};
