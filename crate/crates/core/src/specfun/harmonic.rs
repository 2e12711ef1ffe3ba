//! Harmonic numbers, exact and compensated.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::precision::EPS;

/// `H_n = Σ_{k=1}^n 1/k` as an exact reduced rational.
pub fn harmonic_exact(n: u64) -> Result<BigRational> {
    if n == 0 {
        return Err(Error::domain("harmonic_exact", "n must be >= 1"));
    }
    let mut it = HarmonicExact::new();
    for _ in 0..n {
        it.advance();
    }
    Ok(it.value())
}

/// Running exact harmonic sum over the denominator `lcm(1..n)`, so each step
/// costs one division by a machine integer.
#[derive(Debug, Clone)]
pub struct HarmonicExact {
    n: u64,
    num: BigInt,
    den: BigInt,
}

impl Default for HarmonicExact {
    fn default() -> Self {
        Self::new()
    }
}

/// `Some(p)` when `k = p^e` for a prime `p`.
fn prime_power_base(k: u64) -> Option<u64> {
    if k < 2 {
        return None;
    }
    let mut p = 2;
    while p * p <= k {
        if k.is_multiple_of(p) {
            break;
        }
        p += 1;
    }
    if p * p > k {
        return Some(k);
    }
    let mut m = k;
    while m.is_multiple_of(p) {
        m /= p;
    }
    (m == 1).then_some(p)
}

/// `(top 64 bits as f64, binary exponent of the dropped part)`.
fn top_bits(v: &BigInt) -> (f64, i32) {
    let bits = v.bits();
    if bits <= 64 {
        (v.to_f64().unwrap_or(f64::NAN), 0)
    } else {
        let shift = bits - 64;
        let top = (v >> shift).to_u64().unwrap_or(u64::MAX);
        (top as f64, shift as i32)
    }
}

impl HarmonicExact {
    pub fn new() -> Self {
        HarmonicExact {
            n: 0,
            num: BigInt::zero(),
            den: BigInt::one(),
        }
    }

    /// Adds `1/(n+1)`; returns the new index.
    pub fn advance(&mut self) -> u64 {
        self.n += 1;
        let k = self.n;
        if let Some(p) = prime_power_base(k) {
            self.den *= p;
            self.num *= p;
        }
        self.num += &self.den / k;
        self.n
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    /// Exact value in lowest terms.
    pub fn value(&self) -> BigRational {
        BigRational::new(self.num.clone(), self.den.clone())
    }

    /// Binary64 approximation from the leading bits of numerator and
    /// denominator, with a bound covering both truncations and the division.
    pub fn to_f64(&self) -> (f64, f64) {
        let (a, ea) = top_bits(&self.num);
        let (b, eb) = top_bits(&self.den);
        let v = a / b * 2f64.powi(ea - eb);
        (v, 4.0 * EPS * v)
    }
}

/// Running binary64 harmonic sum with Neumaier compensation.
#[derive(Debug, Clone, Default)]
pub struct HarmonicFloat {
    n: u64,
    sum: f64,
    comp: f64,
}

impl HarmonicFloat {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn advance(&mut self) -> u64 {
        self.n += 1;
        let term = 1.0 / self.n as f64;
        let t = self.sum + term;
        if self.sum.abs() >= term.abs() {
            self.comp += (self.sum - t) + term;
        } else {
            self.comp += (term - t) + self.sum;
        }
        self.sum = t;
        self.n
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    /// Current sum and an error bound covering the rounding of each `1/k`
    /// (at most `EPS·H_n` in total) and of the compensated accumulation.
    pub fn value(&self) -> (f64, f64) {
        let v = self.sum + self.comp;
        (v, 3.0 * EPS * v + self.n as f64 * EPS * EPS * v)
    }
}
