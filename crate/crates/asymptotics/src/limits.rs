use crate::alpha::Alpha;
use crate::constants::{EULER_GAMMA, STIELTJES_GAMMA1};
use crate::series::{h_direct, j_direct};

/// Shared pieces of the six limit functions at a given alpha: the floor
/// m = floor(1/alpha), log(1/alpha), and the step sums H_m and J_m (always
/// summed directly — m is small, and approximation error here would
/// contaminate every g-function).
struct Ctx {
    a: f64,
    m: f64,
    li: f64,
    h: f64,
    j: f64,
}

/// None encodes alpha = 0, where every limit function is 0 by the removable
/// limit convention rather than by formula evaluation.
fn prepare(alpha: Alpha) -> Option<Ctx> {
    let a = alpha.value();
    assert!(
        (0.0..=1.0).contains(&a),
        "scale parameter must lie in [0,1], got {a}"
    );
    if a == 0.0 {
        return None;
    }
    let m = alpha.inv_floor();
    Some(Ctx {
        a,
        m: m as f64,
        li: alpha.inv_log(),
        h: h_direct(m),
        j: j_direct(m),
    })
}

/// Leading coefficient for the log of the partial product:
/// 1/2 + (1/2) a^2 m^2 + (1/2) a^2 m - a m with m = floor(1/a).
pub fn f_g(alpha: impl Into<Alpha>) -> f64 {
    match prepare(alpha.into()) {
        None => 0.0,
        Some(c) => {
            0.5 + 0.5 * c.a * c.a * c.m * c.m + 0.5 * c.a * c.a * c.m - c.a * c.m
        }
    }
}

/// Alternate closed form (1/2) a^2 (m + {1/a}^2); must agree with f_g.
pub fn f_g_alternate(alpha: impl Into<Alpha>) -> f64 {
    let alpha = alpha.into();
    match prepare(alpha) {
        None => 0.0,
        Some(c) => {
            let fr = alpha.inv_fract();
            0.5 * c.a * c.a * (c.m + fr * fr)
        }
    }
}

/// Quadratic piece of f_g on the interval [1/(j+1), 1/j].
pub fn f_g_piecewise(alpha: f64, j: u64) -> f64 {
    let jf = j as f64;
    0.5 - jf * alpha + jf * (jf + 1.0) / 2.0 * alpha * alpha
}

/// Second-order coefficient for the log of the partial product.
pub fn g_g(alpha: impl Into<Alpha>) -> f64 {
    match prepare(alpha.into()) {
        None => 0.0,
        Some(c) => {
            let mm1 = c.m * (c.m + 1.0);
            (0.5 * EULER_GAMMA - 0.75) - 0.5 * (c.h - c.li)
                + c.li * (-0.5 - 0.5 * c.a * c.a * mm1 + c.a * c.m)
                - 0.25 * c.a * c.a * mm1
                + c.a * c.m
        }
    }
}

/// Leading coefficient for the digit-sum aggregate.
pub fn f_b(alpha: impl Into<Alpha>) -> f64 {
    match prepare(alpha.into()) {
        None => 0.0,
        Some(c) => (1.0 - EULER_GAMMA) + (c.h - c.li) - c.a * c.m,
    }
}

/// Second-order coefficient for the digit-sum aggregate.
pub fn g_b(alpha: impl Into<Alpha>) -> f64 {
    match prepare(alpha.into()) {
        None => 0.0,
        Some(c) => {
            (EULER_GAMMA + STIELTJES_GAMMA1 - 1.0) - (c.h - c.li)
                - (c.j - 0.5 * c.li * c.li)
                + c.li * (-1.0 + c.a * c.m)
                + c.a * c.m
        }
    }
}

/// Leading coefficient for the running-digit-sum aggregate.
pub fn f_a(alpha: impl Into<Alpha>) -> f64 {
    match prepare(alpha.into()) {
        None => 0.0,
        Some(c) => {
            (1.5 - EULER_GAMMA) + (c.h - c.li) + 0.5 * c.a * c.a * c.m * c.m
                + 0.5 * c.a * c.a * c.m
                - 2.0 * c.a * c.m
        }
    }
}

/// Second-order coefficient for the running-digit-sum aggregate.
pub fn g_a(alpha: impl Into<Alpha>) -> f64 {
    match prepare(alpha.into()) {
        None => 0.0,
        Some(c) => {
            let mm1 = c.m * (c.m + 1.0);
            (1.5 * EULER_GAMMA + STIELTJES_GAMMA1 - 1.75) - 1.5 * (c.h - c.li)
                - (c.j - 0.5 * c.li * c.li)
                + c.li * (-1.5 - 0.5 * c.a * c.a * mm1 + 2.0 * c.a * c.m)
                - 0.25 * c.a * c.a * mm1
                + 2.0 * c.a * c.m
        }
    }
}
