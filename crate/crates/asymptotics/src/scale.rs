use crate::alpha::floor_guarded;
use crate::constants::{EULER_GAMMA, STIELTJES_GAMMA1};
use crate::series::{h_direct, j_direct};

/// The six two-variable scale functions: leading (0) and second-order (1)
/// coefficients for the running-digit-sum aggregate (A), the digit-sum
/// aggregate (B), and the log of the partial product (G).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ScaleFamily {
    A0,
    A1,
    B0,
    B1,
    G0,
    G1,
}

/// Literal evaluation of the requested scale function at (n, x). Each
/// depends on n and x only through the ratio x/n, which the scale-invariance
/// tests pin against the one-variable forms.
pub fn scale_two_var(family: ScaleFamily, n: u64, x: f64) -> f64 {
    assert!(n >= 2, "level must be at least 2, got {n}");
    assert!(
        x >= 2.0 && x <= n as f64,
        "cutoff must lie in [2, n], got x={x} n={n}"
    );
    let nf = n as f64;
    let m = floor_guarded(nf / x) as f64;
    let r = x / nf;
    let li = (nf / x).ln();
    let h = h_direct(m as u64);
    let mm1 = r * r * m * (m + 1.0);
    match family {
        ScaleFamily::B0 => (1.0 - EULER_GAMMA) + (h - li) - r * m,
        ScaleFamily::B1 => {
            let j = j_direct(m as u64);
            (EULER_GAMMA + STIELTJES_GAMMA1 - 1.0) - (h - li) - (j - 0.5 * li * li) - li
                + li * r * m
                + r * m
        }
        ScaleFamily::A0 => (1.5 - EULER_GAMMA) + (h - li) + 0.5 * mm1 - 2.0 * r * m,
        ScaleFamily::A1 => {
            let j = j_direct(m as u64);
            (1.5 * EULER_GAMMA + STIELTJES_GAMMA1 - 1.75) - 1.5 * (h - li)
                - (j - 0.5 * li * li)
                - 1.5 * li
                - 0.5 * li * mm1
                + 2.0 * li * r * m
                - 0.25 * mm1
                + 2.0 * r * m
        }
        ScaleFamily::G0 => 0.5 + 0.5 * mm1 - r * m,
        ScaleFamily::G1 => {
            (0.5 * EULER_GAMMA - 0.75) - 0.5 * (h - li) - 0.5 * li - 0.5 * li * mm1
                + li * r * m
                - 0.25 * mm1
                + r * m
        }
    }
}
