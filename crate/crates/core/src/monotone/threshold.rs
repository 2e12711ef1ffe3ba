//! The critical value `λ* = sup_{t>0} h(t)`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grid::GridSpec;
use crate::monotone::integrand::h_unchecked;
use crate::precision::PrecisionConfig;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ThresholdResult {
    pub lambda_star: f64,
    /// Rigorous-up-to-rounding enclosure `[lo, hi]` of `λ*`.
    pub bracket: (f64, f64),
    pub t_star: f64,
    pub tolerance: f64,
}

const SCAN: (f64, f64, usize) = (1e-3, 200.0, 4000);
const TAIL_SCAN: (f64, f64, usize) = (200.0, 1e6, 400);
const MAX_ITER: usize = 200;
const INV_PHI: f64 = 0.618_033_988_749_894_8;

#[derive(Debug, Clone, Copy)]
struct Best {
    t: f64,
    v: f64,
    err: f64,
}

impl Best {
    fn offer(&mut self, t: f64) -> f64 {
        let h = h_unchecked(t);
        if h.value > self.v {
            *self = Best {
                t,
                v: h.value,
                err: h.abs_error_bound,
            };
        }
        h.value
    }
}

/// Locates `λ*` to within `tol`. Shrinking `tol` only extends the iteration,
/// so brackets for smaller tolerances nest inside those for larger ones.
pub fn lambda_star(tol: f64, cfg: &PrecisionConfig) -> Result<ThresholdResult> {
    cfg.validate()?;
    if !(tol.is_finite() && tol > 0.0) {
        return Err(Error::parameter(
            "lambda_star",
            format!("tol must be > 0, got {tol}"),
        ));
    }
    let nodes = GridSpec::log(SCAN.0, SCAN.1, SCAN.2).nodes();
    let values: Vec<f64> = nodes.iter().map(|&t| h_unchecked(t).value).collect();
    let mut i = 0;
    for (k, v) in values.iter().enumerate() {
        if *v > values[i] {
            i = k;
        }
    }
    if i == 0 || i + 1 == nodes.len() {
        return Err(Error::numerical(
            "lambda_star",
            "maximum of h not bracketed by the scan",
        ));
    }
    let (mut a, mut b) = (nodes[i - 1], nodes[i + 1]);
    let mut best = Best {
        t: nodes[i],
        v: values[i],
        err: h_unchecked(nodes[i]).abs_error_bound,
    };

    for t in GridSpec::log(TAIL_SCAN.0, TAIL_SCAN.1, TAIL_SCAN.2).nodes() {
        if h_unchecked(t).value >= best.v {
            return Err(Error::numerical(
                "lambda_star",
                format!("h({t}) exceeds the scanned maximum"),
            ));
        }
    }

    let curvature = curvature_bound(a, b);
    let enclosure = |best: &Best, width: f64| {
        (
            best.v - best.err,
            best.v + best.err + 0.5 * curvature * width * width,
        )
    };
    let (mut lo, mut hi) = enclosure(&best, b - a);

    let mut c = b - INV_PHI * (b - a);
    let mut d = a + INV_PHI * (b - a);
    let mut hc = best.offer(c);
    let mut hd = best.offer(d);
    let mut iter = 0;
    while hi - lo > tol {
        if iter == MAX_ITER {
            return Err(Error::numerical(
                "lambda_star",
                format!("bracket width {:e} did not reach tol {tol:e}", hi - lo),
            ));
        }
        iter += 1;
        if hc > hd {
            b = d;
            d = c;
            hd = hc;
            c = b - INV_PHI * (b - a);
            hc = best.offer(c);
        } else {
            a = c;
            c = d;
            hc = hd;
            d = a + INV_PHI * (b - a);
            hd = best.offer(d);
        }
        let (l, h) = enclosure(&best, b - a);
        lo = lo.max(l);
        hi = hi.min(h);
        if b - a < 4.0 * f64::EPSILON * best.t && hi - lo > tol {
            return Err(Error::numerical(
                "lambda_star",
                format!("tol {tol:e} is below the attainable width {:e}", hi - lo),
            ));
        }
    }
    if !(0.5..=1.5).contains(&best.v) {
        return Err(Error::numerical(
            "lambda_star",
            format!("implausible maximum {}", best.v),
        ));
    }
    Ok(ThresholdResult {
        lambda_star: best.v,
        bracket: (lo, hi),
        t_star: best.t,
        tolerance: tol,
    })
}

/// Twice the largest second difference of `h` seen on `[a, b]`.
fn curvature_bound(a: f64, b: f64) -> f64 {
    let w = b - a;
    let delta = w / 8.0;
    let mut k: f64 = 0.0;
    for j in 0..=8 {
        let t = a + w * j as f64 / 8.0;
        let d2 = (h_unchecked(t + delta).value - 2.0 * h_unchecked(t).value
            + h_unchecked(t - delta).value)
            / (delta * delta);
        k = k.max(d2.abs());
    }
    2.0 * k
}
