use crate::error::{require_positive, Error, Result};
use crate::precision::{SpecialValue, EPS};

/// Partial sum of Mathieu's series `S(r) = Σ_{n>=1} 2n/(n²+r²)²`.
///
/// `value` is the partial sum; `abs_error_bound` covers the omitted tail
/// (`∫_N^∞ 2u/(u²+r²)² du = 1/(N²+r²)`, plus the peak term when `N` lies
/// left of the summand's maximum at `r/√3`) and the rounding.
pub fn mathieu_partial(r: f64, terms: u64) -> Result<SpecialValue> {
    require_positive("mathieu_partial", "r", r)?;
    if terms == 0 {
        return Err(Error::domain("mathieu_partial", "terms must be >= 1"));
    }
    let r2 = r * r;
    // smallest terms first
    let mut sum = 0.0;
    let mut comp = 0.0;
    for n in (1..=terms).rev() {
        let nf = n as f64;
        let d = nf * nf + r2;
        let term = 2.0 * nf / (d * d);
        let t = sum + term;
        if sum.abs() >= term.abs() {
            comp += (sum - t) + term;
        } else {
            comp += (term - t) + sum;
        }
        sum = t;
    }
    let value = sum + comp;
    let nf = terms as f64;
    let mut tail = 1.0 / (nf * nf + r2);
    if nf < r / 3f64.sqrt() {
        tail += 9.0 / (8.0 * 3f64.sqrt() * r * r2);
    }
    Ok(SpecialValue::new(value, tail + 4.0 * EPS * value))
}
