//! Binomial coefficients, machine-sized and arbitrary precision.

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// `C(n, k)`, `None` on overflow.
pub fn binomial(n: u64, k: u64) -> Option<u64> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return None;
        }
    }
    Some(acc as u64)
}

/// `C(n, k)` with the convention that it vanishes for `n < 0` or `k < 0`.
pub fn binomial_big(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// `dim_k S_t = C(t + n - 1, n - 1)` for a polynomial ring in `n` variables.
pub fn monomial_count(nvars: usize, t: i64) -> u64 {
    if t < 0 {
        return 0;
    }
    binomial(t as u64 + nvars as u64 - 1, nvars as u64 - 1).expect("monomial count overflow")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(binomial(5, 2), Some(10));
        assert_eq!(binomial(2, 5), Some(0));
        assert_eq!(binomial(0, 0), Some(1));
        assert_eq!(binomial_big(-1, 0), BigInt::zero());
        assert_eq!(binomial_big(40, 20), BigInt::from(137_846_528_820u64));
        assert_eq!(monomial_count(3, 2), 6);
        assert_eq!(monomial_count(3, -1), 0);
    }

    #[test]
    fn pascal() {
        for n in 1..30u64 {
            for k in 1..n {
                assert_eq!(
                    binomial(n, k).unwrap(),
                    binomial(n - 1, k - 1).unwrap() + binomial(n - 1, k).unwrap()
                );
            }
        }
    }
}
