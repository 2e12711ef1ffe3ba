//! Exact Bernoulli numbers and the binary64 tables derived from them.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

/// Largest index held in the cached tables.
pub const MAX_INDEX: usize = 60;

/// `B_0 ..= B_n` by the recurrence `sum_{k=0}^{m} C(m+1, k) B_k = 0`
/// (convention `B_1 = -1/2`).
pub fn bernoulli_exact(n: usize) -> Vec<BigRational> {
    let mut b: Vec<BigRational> = Vec::with_capacity(n + 1);
    b.push(BigRational::from_integer(BigInt::from(1)));
    for m in 1..=n {
        // binom(m+1, k) built incrementally
        let mut binom = BigInt::from(1);
        let mut acc = BigRational::zero();
        for (k, bk) in b.iter().enumerate() {
            acc += BigRational::from_integer(binom.clone()) * bk;
            binom = binom * BigInt::from(m + 1 - k) / BigInt::from(k + 1);
        }
        // binom is now C(m+1, m)
        b.push(-acc / BigRational::from_integer(binom));
    }
    b
}

fn table() -> &'static [BigRational] {
    static TABLE: OnceLock<Vec<BigRational>> = OnceLock::new();
    TABLE.get_or_init(|| bernoulli_exact(MAX_INDEX))
}

fn table_f64() -> &'static [f64] {
    static TABLE: OnceLock<Vec<f64>> = OnceLock::new();
    TABLE.get_or_init(|| {
        table()
            .iter()
            .map(|r| r.to_f64().expect("bernoulli number fits in f64"))
            .collect()
    })
}

/// Exact `B_n` for `n <= MAX_INDEX`.
pub fn bernoulli(n: usize) -> &'static BigRational {
    &table()[n]
}

/// `B_n` rounded to binary64, `n <= MAX_INDEX`.
pub fn bernoulli_f64(n: usize) -> f64 {
    table_f64()[n]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn known_values() {
        assert_eq!(*bernoulli(0), r(1, 1));
        assert_eq!(*bernoulli(1), r(-1, 2));
        assert_eq!(*bernoulli(2), r(1, 6));
        assert_eq!(*bernoulli(4), r(-1, 30));
        assert_eq!(*bernoulli(6), r(1, 42));
        assert_eq!(*bernoulli(12), r(-691, 2730));
        assert_eq!(*bernoulli(14), r(7, 6));
        assert_eq!(*bernoulli(16), r(-3617, 510));
        for k in (3..=MAX_INDEX).step_by(2) {
            assert!(bernoulli(k).is_zero(), "B_{k} should vanish");
        }
    }

    #[test]
    fn signs_alternate_on_even_indices() {
        for k in 1..=MAX_INDEX / 2 {
            let v = bernoulli_f64(2 * k);
            let expect_positive = k % 2 == 1;
            assert_eq!(v > 0.0, expect_positive, "B_{}", 2 * k);
        }
    }
}
