//! Binomial coefficients in exact and log-domain form.
//!
//! Probability kernels use exact big-integer arithmetic up to
//! [`EXACT_BINOMIAL_MAX_N`] and switch to log-gamma evaluation above it. The
//! crossover is reported in run metadata so that downstream consumers know
//! which arithmetic produced a number.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use statrs::function::gamma::ln_gamma;

/// Largest `n` for which probability kernels evaluate C(n, k) exactly.
pub const EXACT_BINOMIAL_MAX_N: usize = 64;

/// C(n, k) as an exact big integer; 0 when `k > n`.
pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 1..=k {
        // Running value stays integral: after step i it equals C(n-k+i, i).
        acc = acc * BigUint::from(n - k + i) / BigUint::from(i);
    }
    acc
}

/// C(n, k) capped at `cap`: `Some(value)` iff the coefficient is `<= cap`.
///
/// Intermediate values are monotone in the multiplicative recurrence, so the
/// computation can bail out early without ever building a huge integer.
pub fn binomial_capped(n: usize, k: usize, cap: u64) -> Option<u64> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 1..=k {
        acc = acc * (n - k + i) as u128 / i as u128;
        if acc > cap as u128 {
            return None;
        }
    }
    Some(acc as u64)
}

/// ln C(n, k) via log-gamma; `-inf` when `k > n`.
pub fn ln_binomial(n: usize, k: usize) -> f64 {
    if k > n {
        return f64::NEG_INFINITY;
    }
    if k == 0 || k == n {
        return 0.0;
    }
    ln_gamma((n + 1) as f64) - ln_gamma((k + 1) as f64) - ln_gamma((n - k + 1) as f64)
}

/// C(n, k) as a float: exact conversion below the crossover, log-gamma above.
pub fn binomial_f64(n: usize, k: usize) -> f64 {
    if n <= EXACT_BINOMIAL_MAX_N {
        binomial(n, k).to_f64().unwrap_or(f64::INFINITY)
    } else {
        ln_binomial(n, k).exp()
    }
}

/// Exact rational C(n, k1) / C(n, k2).
pub fn binomial_ratio(n: usize, k1: usize, k2: usize) -> BigRational {
    BigRational::new(
        BigInt::from(binomial(n, k1)),
        BigInt::from(binomial(n, k2)),
    )
}

/// Exact rational num / den from unsigned big integers.
pub fn ratio(num: BigUint, den: BigUint) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values_match_pascal() {
        let mut row = vec![1u64];
        for n in 0..=30usize {
            for (k, &expected) in row.iter().enumerate() {
                assert_eq!(binomial(n, k), BigUint::from(expected), "C({n},{k})");
                assert_eq!(binomial_capped(n, k, u64::MAX), Some(expected));
                let lb = ln_binomial(n, k);
                assert!(
                    (lb - (expected as f64).ln()).abs() < 1e-9,
                    "ln C({n},{k})"
                );
            }
            let mut next = vec![1u64];
            for w in row.windows(2) {
                next.push(w[0] + w[1]);
            }
            next.push(1);
            row = next;
        }
    }

    #[test]
    fn out_of_range_is_zero() {
        assert!(binomial(5, 6).is_zero());
        assert_eq!(binomial_capped(5, 6, 10), Some(0));
        assert_eq!(ln_binomial(5, 6), f64::NEG_INFINITY);
    }

    #[test]
    fn capped_bails_out_on_large_coefficients() {
        assert_eq!(binomial_capped(4, 2, 5), None);
        assert_eq!(binomial_capped(4, 2, 6), Some(6));
        assert_eq!(binomial_capped(16384, 8192, u64::MAX), None);
    }

    #[test]
    fn f64_path_agrees_across_crossover() {
        let exact = binomial(64, 32).to_f64().unwrap();
        assert!((binomial_f64(64, 32) - exact).abs() / exact < 1e-12);
        let approx = binomial_f64(100, 50);
        let reference = ln_binomial(100, 50).exp();
        assert!((approx - reference).abs() / reference < 1e-12);
    }
}
