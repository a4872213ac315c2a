/// A real argument supplied either exactly (integer or ratio of integers) or
/// as a float. Floor operations on the exact variants use pure integer
/// arithmetic; the float variant goes through a half-ulp guard so values that
/// sit a rounding error below an integer floor to that integer.
#[derive(Clone, Copy, Debug)]
pub enum Real {
    Int(u64),
    /// Numerator and positive denominator.
    Ratio(u64, u64),
    Float(f64),
}

impl Real {
    pub fn ratio(p: u64, q: u64) -> Self {
        assert!(q >= 1, "ratio denominator must be positive");
        Real::Ratio(p, q)
    }

    pub fn as_f64(self) -> f64 {
        match self {
            Real::Int(v) => v as f64,
            Real::Ratio(p, q) => p as f64 / q as f64,
            Real::Float(f) => f,
        }
    }

    pub fn floor(self) -> u64 {
        match self {
            Real::Int(v) => v,
            Real::Ratio(p, q) => p / q,
            Real::Float(f) => floor_guarded(f),
        }
    }

    /// floor(self / b) for a positive integer b.
    pub fn floor_div(self, b: u64) -> u64 {
        assert!(b >= 1, "divisor must be positive");
        match self {
            Real::Int(v) => v / b,
            Real::Ratio(p, q) => (p as u128 / (q as u128 * b as u128)) as u64,
            Real::Float(f) => floor_guarded(f / b as f64),
        }
    }
}

impl From<u64> for Real {
    fn from(v: u64) -> Self {
        Real::Int(v)
    }
}

impl From<f64> for Real {
    fn from(f: f64) -> Self {
        Real::Float(f)
    }
}

/// Floor with an ulp-scale snap: if `x` lies within one relative epsilon of
/// an integer (a couple of ulps), return that integer rather than truncating
/// a value that is an integer up to representation error.
pub(crate) fn floor_guarded(x: f64) -> u64 {
    assert!(
        x.is_finite() && x >= 0.0,
        "floor argument must be finite and nonnegative, got {x}"
    );
    let r = x.round();
    let tol = f64::EPSILON * r.max(1.0);
    if (x - r).abs() <= tol {
        r as u64
    } else {
        x.floor() as u64
    }
}
