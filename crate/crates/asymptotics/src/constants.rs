/// Euler–Mascheroni constant, 30 significant digits.
pub const EULER_GAMMA: f64 = 0.577215664901532860606512090082;

/// First Stieltjes constant gamma_1, 30 significant digits.
pub const STIELTJES_GAMMA1: f64 = -0.0728158454836767248605863758749;

#[derive(Clone, Copy, Debug)]
pub struct Constants {
    pub euler_gamma: f64,
    pub stieltjes_gamma1: f64,
}

impl Default for Constants {
    fn default() -> Self {
        Constants {
            euler_gamma: EULER_GAMMA,
            stieltjes_gamma1: STIELTJES_GAMMA1,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn printed_digits() {
        // one unit in the last quoted digit
        assert!((EULER_GAMMA - 0.57721).abs() < 1e-5);
        assert!((STIELTJES_GAMMA1 - (-0.0728158)).abs() < 1e-7);
        let c = Constants::default();
        assert_eq!(c.euler_gamma, EULER_GAMMA);
        assert_eq!(c.stieltjes_gamma1, STIELTJES_GAMMA1);
    }
}
