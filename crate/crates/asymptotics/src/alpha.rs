/// A scale parameter in (0, 1], exact rational or floating.
///
/// The limit functions are sums of terms discontinuous at alpha = 1/k, so
/// misrounding floor(1/alpha) produces O(1) errors. The rational variant
/// floors in integer arithmetic; the float variant snaps values within an
/// ulp-scale tolerance of an integer.
#[derive(Clone, Copy, Debug)]
pub enum Alpha {
    /// p/q with 1 <= p <= q.
    Ratio(u64, u64),
    Float(f64),
}

impl Alpha {
    pub fn ratio(p: u64, q: u64) -> Self {
        assert!(p >= 1 && q >= p, "ratio must satisfy 1 <= p <= q");
        Alpha::Ratio(p, q)
    }

    pub fn value(self) -> f64 {
        match self {
            Alpha::Ratio(p, q) => p as f64 / q as f64,
            Alpha::Float(a) => a,
        }
    }

    /// floor(1/alpha), exact for rationals.
    pub fn inv_floor(self) -> u64 {
        match self {
            Alpha::Ratio(p, q) => q / p,
            Alpha::Float(a) => floor_guarded(1.0 / a),
        }
    }

    /// fractional part of 1/alpha, exact for rationals. When the floor guard
    /// snaps, the residue snaps to zero with it.
    pub fn inv_fract(self) -> f64 {
        match self {
            Alpha::Ratio(p, q) => (q % p) as f64 / p as f64,
            Alpha::Float(a) => {
                let inv = 1.0 / a;
                let m = self.inv_floor() as f64;
                let fr = inv - m;
                if fr.abs() <= f64::EPSILON * m.max(1.0) {
                    0.0
                } else {
                    fr
                }
            }
        }
    }

    /// log(1/alpha), computed as a difference of logs for rationals.
    pub fn inv_log(self) -> f64 {
        match self {
            Alpha::Ratio(p, q) => (q as f64).ln() - (p as f64).ln(),
            Alpha::Float(a) => -a.ln(),
        }
    }
}

impl From<f64> for Alpha {
    fn from(a: f64) -> Self {
        Alpha::Float(a)
    }
}

/// Floor with an ulp-scale snap toward the nearest integer.
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

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_floors_are_exact() {
        assert_eq!(Alpha::ratio(1, 3).inv_floor(), 3);
        assert_eq!(Alpha::ratio(2, 7).inv_floor(), 3);
        assert_eq!(Alpha::ratio(2, 7).inv_fract(), 0.5);
        assert_eq!(Alpha::ratio(1, 1).inv_floor(), 1);
        assert_eq!(Alpha::ratio(1, 1).inv_fract(), 0.0);
    }

    #[test]
    fn float_round_trip_through_reciprocal_snaps() {
        // 1/(1/49) lands one rounding error below 49; without the guard the
        // floor would come out 48.
        for k in 2u64..200 {
            let a = 1.0 / k as f64;
            assert_eq!(Alpha::from(a).inv_floor(), k, "k={k}");
            assert_eq!(Alpha::from(a).inv_fract(), 0.0, "k={k}");
        }
    }

    #[test]
    fn genuinely_interior_values_do_not_snap() {
        assert_eq!(Alpha::from(0.4).inv_floor(), 2);
        assert!((Alpha::from(0.4).inv_fract() - 0.5).abs() < 1e-15);
        assert_eq!(Alpha::from(0.30001).inv_floor(), 3);
    }

    #[test]
    #[should_panic(expected = "1 <= p <= q")]
    fn improper_ratio_rejected() {
        Alpha::ratio(3, 2);
    }
}
