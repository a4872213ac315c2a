//! Exact integer computation of base-b digit statistics: digit expansions,
//! digit sums, running digit sums, floor-division summation kernels, and the
//! generalized exponent built from them.
//!
//! Everything here is pure integer arithmetic. Inputs are `u64`; internal
//! accumulation uses `u128`, which is provably wide enough for every
//! statistic of a `u64` argument (the largest intermediate, twice a running
//! digit sum, is below n² < 2^128).

mod digits;
mod kernel;
mod nu;
mod stats;

pub use digits::{digits, DigitExpansion};
pub use kernel::{dilated_floor_sum, floor_div_sum};
pub use nu::{is_nu_zero_form, nu_bar, nu_bar_checked, nu_bar_oracle, nu_bar_u128, ConsistencyFault, NuRecord};
pub use stats::{digit_sum, digit_sum_direct, running_digit_sum, running_digit_sum_direct};
