//! Exact construction of the generalized binomial products and compensated
//! evaluation of their logarithmic aggregate sums.
//!
//! The central object is [`PartialFactorization`]: the exponent map
//! `{b -> nu_bar(n, b) : 2 <= b <= min(floor(x), n), nu_bar > 0}` representing
//! the product of `b^nu_bar(n,b)` over integer bases up to a real cutoff `x`.
//! The map is the primary representation; materializing the big integer via
//! [`PartialFactorization::value`] is opt-in because the full product at level
//! `n` has on the order of `n^2 log n` bits.
//!
//! Aggregate sums over bases ([`a_sum`], [`b_sum`], [`c_sum`],
//! [`log_partial_product`]) use compensated summation in a deterministic
//! base-ascending order so results are reproducible to the documented error
//! bound across platforms.

mod accumulate;
mod classical;
mod factorization;
mod real;
mod sums;

pub use accumulate::LogAccumulator;
pub use classical::{classical_product, nu_b_classical};
pub use factorization::{partial_product, PartialFactorization};
pub use real::Real;
pub use sums::{a_sum, b_sum, b_sum_decomposition, c_sum, log_partial_product, BSumParts};
