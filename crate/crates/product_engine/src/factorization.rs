use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::{One, Pow};
use radix_core::nu_bar_u128;
use serde::{Deserialize, Serialize};

use crate::real::floor_guarded;

/// Exponent-map representation of the product of `b^nu_bar(n,b)` over integer
/// bases `2 <= b <= min(floor(x), n)`.
///
/// Bases with zero exponent are omitted, so the map is canonical: two values
/// compare equal iff they denote the same product. The stored cutoff is
/// clamped to `n` — exponents vanish for every base beyond `n`, so the map for
/// any cutoff `>= n` is literally the map at cutoff `n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Wire", into = "Wire")]
pub struct PartialFactorization {
    n: u64,
    cutoff: u64,
    exponents: BTreeMap<u64, BigUint>,
}

pub fn partial_product(n: u64, x: f64) -> PartialFactorization {
    assert!(n >= 1, "level must be at least 1, got {n}");
    assert!(
        x.is_finite() && x >= 1.0,
        "cutoff must be a finite real >= 1, got {x}"
    );
    let cutoff = floor_guarded(x).min(n);
    let mut exponents = BTreeMap::new();
    for b in 2..=cutoff {
        let nu = nu_bar_u128(n, b);
        if nu > 0 {
            exponents.insert(b, BigUint::from(nu));
        }
    }
    PartialFactorization { n, cutoff, exponents }
}

impl PartialFactorization {
    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn cutoff(&self) -> u64 {
        self.cutoff
    }

    pub fn exponents(&self) -> &BTreeMap<u64, BigUint> {
        &self.exponents
    }

    /// Materialize the exact integer. Opt-in: at cutoff `n` the result has on
    /// the order of `n^2 log n` bits.
    pub fn value(&self) -> BigUint {
        let mut prod = BigUint::one();
        for (&b, e) in &self.exponents {
            let e = u64::try_from(e).expect("exponent too large to materialize");
            prod *= Pow::pow(BigUint::from(b), e);
        }
        prod
    }

    /// Natural log of the value, from the exponent map alone.
    pub fn log_value(&self) -> f64 {
        let mut acc = crate::LogAccumulator::new();
        for (&b, e) in &self.exponents {
            acc.add(biguint_to_f64(e) * (b as f64).ln());
        }
        acc.value()
    }

    /// Prime factorization of the value, by factoring each base with a
    /// smallest-prime-factor sieve and summing the contributions. Never
    /// touches the big integer.
    pub fn prime_factorization(&self) -> BTreeMap<u64, BigUint> {
        let spf = smallest_prime_factors(self.cutoff);
        let mut primes: BTreeMap<u64, BigUint> = BTreeMap::new();
        for (&b, e) in &self.exponents {
            let mut m = b;
            while m > 1 {
                let p = spf[m as usize];
                let mut mult = 0u64;
                while m % p == 0 {
                    m /= p;
                    mult += 1;
                }
                *primes.entry(p).or_default() += e * mult;
            }
        }
        primes
    }

    pub fn to_canonical_json(&self) -> String {
        serde_json::to_string(self).expect("serialization cannot fail")
    }

    pub fn from_canonical_json(s: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(s)
    }
}

fn biguint_to_f64(e: &BigUint) -> f64 {
    use num_traits::ToPrimitive;
    e.to_f64().expect("BigUint -> f64 is total")
}

/// smallest prime factor of every integer up to `limit`, spf[0] = spf[1] = 0.
fn smallest_prime_factors(limit: u64) -> Vec<u64> {
    let n = limit as usize;
    let mut spf = vec![0u64; n + 1];
    for i in 2..=n {
        if spf[i] == 0 {
            let mut j = i;
            while j <= n {
                if spf[j] == 0 {
                    spf[j] = i as u64;
                }
                j += i;
            }
        }
    }
    spf
}

/// Serialized shape: {"n": .., "cutoff": .., "factors": [[b, "nu"], ..]}
/// with factors sorted by base and exponents as decimal strings.
#[derive(Serialize, Deserialize)]
struct Wire {
    n: u64,
    cutoff: u64,
    factors: Vec<(u64, String)>,
}

impl From<PartialFactorization> for Wire {
    fn from(pf: PartialFactorization) -> Self {
        Wire {
            n: pf.n,
            cutoff: pf.cutoff,
            factors: pf
                .exponents
                .iter()
                .map(|(&b, e)| (b, e.to_str_radix(10)))
                .collect(),
        }
    }
}

impl TryFrom<Wire> for PartialFactorization {
    type Error = String;

    fn try_from(w: Wire) -> Result<Self, String> {
        if w.cutoff > w.n {
            return Err(format!("cutoff {} exceeds level {}", w.cutoff, w.n));
        }
        let mut exponents = BTreeMap::new();
        let mut prev = 1u64;
        for (b, digits) in &w.factors {
            if *b <= prev {
                return Err(format!("factors not sorted strictly ascending at base {b}"));
            }
            if *b > w.cutoff {
                return Err(format!("base {b} exceeds cutoff {}", w.cutoff));
            }
            let e: BigUint = digits
                .parse()
                .map_err(|_| format!("invalid exponent digits {digits:?}"))?;
            if e == BigUint::default() {
                return Err(format!("zero exponent stored for base {b}"));
            }
            prev = *b;
            exponents.insert(*b, e);
        }
        Ok(PartialFactorization { n: w.n, cutoff: w.cutoff, exponents })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;
    use radix_core::nu_bar_oracle;

    fn val(n: u64, x: f64) -> u64 {
        u64::try_from(&partial_product(n, x).value()).unwrap()
    }

    #[test]
    fn small_products() {
        assert_eq!(val(4, 4.0), 6144);
        assert_eq!(val(3, 3.0), 9);
        assert_eq!(val(2, 2.0), 2);
        assert_eq!(val(4, 3.0), 96); // cutoff drops the b=4 term
        assert_eq!(val(1, 5.0), 1); // empty product
        assert_eq!(val(10, 1.0), 1); // cutoff below every base
    }

    #[test]
    fn exponent_map_at_four() {
        let pf = partial_product(4, 4.0);
        let want: Vec<(u64, u64)> = vec![(2, 5), (3, 1), (4, 3)];
        let got: Vec<(u64, u64)> = pf
            .exponents()
            .iter()
            .map(|(&b, e)| (b, u64::try_from(e).unwrap()))
            .collect();
        assert_eq!(got, want);
    }

    #[test]
    fn matches_oracle_built_product() {
        // Rebuild the product from the convexity-defect triple sum instead of
        // the closed form.
        for n in 1..=40u64 {
            let pf = partial_product(n, n as f64);
            let mut prod = BigUint::one();
            for b in 2..=n {
                let nu = nu_bar_oracle(n, b);
                prod *= Pow::pow(BigUint::from(b), nu);
            }
            assert_eq!(pf.value(), prod, "n={n}");
        }
    }

    #[test]
    fn prime_factorization_of_small_product() {
        // 6144 = 2^5 * 3 * (2^2)^3 = 2^11 * 3
        let pf = partial_product(4, 4.0);
        let primes = pf.prime_factorization();
        let got: Vec<(u64, u64)> = primes
            .iter()
            .map(|(&p, e)| (p, u64::try_from(e).unwrap()))
            .collect();
        assert_eq!(got, vec![(2, 11), (3, 1)]);
    }

    #[test]
    fn prime_factorization_rebuilds_value() {
        for n in [1u64, 2, 7, 24, 60, 97] {
            let pf = partial_product(n, n as f64);
            let mut prod = BigUint::one();
            for (&p, e) in &pf.prime_factorization() {
                prod *= Pow::pow(BigUint::from(p), u64::try_from(e).unwrap());
            }
            assert_eq!(prod, pf.value(), "n={n}");
        }
    }

    #[test]
    fn products_are_n_smooth() {
        for n in 2..=100u64 {
            let pf = partial_product(n, n as f64);
            let largest = pf.prime_factorization().keys().next_back().copied();
            if let Some(p) = largest {
                assert!(p <= n, "prime {p} exceeds n={n}");
            }
        }
    }

    #[test]
    fn cutoff_stabilizes_at_n() {
        for n in 1..=60u64 {
            let at_n = partial_product(n, n as f64);
            assert_eq!(partial_product(n, n as f64 + 1.0), at_n);
            assert_eq!(partial_product(n, 2.0 * n as f64), at_n);
            assert_eq!(at_n.cutoff(), n);
        }
    }

    #[test]
    fn value_divides_at_larger_cutoff() {
        for n in [5u64, 12, 30, 47] {
            let full = partial_product(n, n as f64).value();
            for x in 2..=n {
                let part = partial_product(n, x as f64).value();
                assert_eq!(&full % &part, BigUint::default(), "n={n} x={x}");
            }
        }
    }

    #[test]
    fn json_shape_is_pinned() {
        let pf = partial_product(4, 4.0);
        assert_eq!(
            pf.to_canonical_json(),
            r#"{"n":4,"cutoff":4,"factors":[[2,"5"],[3,"1"],[4,"3"]]}"#
        );
    }

    #[test]
    fn json_round_trips() {
        for n in [1u64, 2, 17, 100] {
            let pf = partial_product(n, n as f64);
            let back =
                PartialFactorization::from_canonical_json(&pf.to_canonical_json()).unwrap();
            assert_eq!(back, pf);
        }
    }

    #[test]
    fn json_rejects_non_canonical_input() {
        let bad = [
            r#"{"n":4,"cutoff":4,"factors":[[3,"1"],[2,"5"]]}"#, // unsorted
            r#"{"n":4,"cutoff":4,"factors":[[2,"0"]]}"#,         // zero exponent
            r#"{"n":4,"cutoff":4,"factors":[[2,"x"]]}"#,         // bad digits
            r#"{"n":4,"cutoff":5,"factors":[]}"#,                // cutoff > n
            r#"{"n":4,"cutoff":3,"factors":[[4,"3"]]}"#,         // base > cutoff
        ];
        for s in bad {
            assert!(PartialFactorization::from_canonical_json(s).is_err(), "{s}");
        }
    }

    #[test]
    fn log_value_matches_value() {
        for n in [2u64, 4, 9, 33, 80] {
            let pf = partial_product(n, n as f64);
            let bits = pf.value().bits();
            // compare against the big integer's own magnitude
            let approx = pf.log_value() / std::f64::consts::LN_2;
            assert!(
                (approx - bits as f64).abs() <= 1.0,
                "n={n}: log2 {approx} vs {bits} bits"
            );
        }
    }

    #[test]
    #[should_panic(expected = "finite real")]
    fn rejects_nan_cutoff() {
        partial_product(4, f64::NAN);
    }
}
