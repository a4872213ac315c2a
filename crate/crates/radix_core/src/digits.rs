/// Base-`b` positional expansion of a nonnegative integer.
///
/// Digits are stored least-significant first. Zero is represented by an
/// empty digit vector; for any positive value the top (last) digit is
/// nonzero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DigitExpansion {
    base: u64,
    value: u64,
    digits: Vec<u64>,
}

/// Computes the unique base-`b` expansion of `n`.
///
/// Panics if `b < 2`.
pub fn digits(n: u64, b: u64) -> DigitExpansion {
    assert!(b >= 2, "radix base must be at least 2, got {b}");
    let mut ds = Vec::new();
    let mut x = n;
    while x > 0 {
        ds.push(x % b);
        x /= b;
    }
    DigitExpansion { base: b, value: n, digits: ds }
}

impl DigitExpansion {
    pub fn base(&self) -> u64 {
        self.base
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    /// Digits, least-significant first. Empty exactly when the value is 0.
    pub fn digits(&self) -> &[u64] {
        &self.digits
    }

    /// Number of digits; equals floor(log(value)/log(base)) + 1 for value >= 1.
    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.digits.is_empty()
    }

    /// The positional digit a_i = floor(n/b^i) - b*floor(n/b^(i+1)),
    /// returning 0 for every `i` beyond the top digit.
    pub fn digit(&self, i: usize) -> u64 {
        self.digits.get(i).copied().unwrap_or(0)
    }

    /// Reconstructs the value as sum of digit[i]*base^i, in u128 to keep the
    /// round-trip independent of the forward direction.
    pub fn reconstruct(&self) -> u128 {
        let mut acc: u128 = 0;
        let mut pow: u128 = 1;
        for &d in &self.digits {
            acc += d as u128 * pow;
            pow *= self.base as u128;
        }
        acc
    }
}
