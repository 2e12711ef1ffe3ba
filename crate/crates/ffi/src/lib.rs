//! C ABI over `gamma-certify`.
//!
//! Conventions: every fallible function returns a [`GcStatus`] and writes
//! its result through an out-pointer. On failure the out-pointer is left
//! untouched and a message is kept per thread, readable with
//! [`gc_last_error_message`]. Handles are opaque and must be released with
//! the matching `*_free` function. Panics never cross the boundary.

use std::cell::RefCell;
use std::ffi::{c_char, c_int, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use gamma_certify::bounds::{eval_bound, BoundFamily};
use gamma_certify::harness::{exit_code, run_suite, to_json, VerificationReport};
use gamma_certify::monotone::{cm_check, default_cm_grid, lambda_star, phi_value, CmSign};
use gamma_certify::specfun::{digamma, ln_gamma};
use gamma_certify::{Error, PrecisionConfig, SpecialValue, Verdict};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GcStatus {
    Ok = 0,
    Domain = 1,
    Parameter = 2,
    Numerical = 3,
    Indeterminate = 4,
    Config = 5,
    Usage = 6,
    Io = 7,
    Format = 8,
    NullPointer = 9,
    InvalidUtf8 = 10,
    Panic = 11,
    BufferTooSmall = 12,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GcVerdict {
    Verified = 0,
    Falsified = 1,
    Indeterminate = 2,
}

impl From<Verdict> for GcVerdict {
    fn from(v: Verdict) -> Self {
        match v {
            Verdict::Verified => GcVerdict::Verified,
            Verdict::Falsified => GcVerdict::Falsified,
            Verdict::Indeterminate => GcVerdict::Indeterminate,
        }
    }
}

/// A value with a bound on its absolute error.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GcValue {
    pub value: f64,
    pub abs_error_bound: f64,
}

impl From<SpecialValue> for GcValue {
    fn from(v: SpecialValue) -> Self {
        GcValue {
            value: v.value,
            abs_error_bound: v.abs_error_bound,
        }
    }
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GcThreshold {
    pub lambda_star: f64,
    pub bracket_lo: f64,
    pub bracket_hi: f64,
    pub t_star: f64,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GcBoundPair {
    pub lower: f64,
    pub upper: f64,
}

/// Opaque precision configuration.
pub struct GcConfig(PrecisionConfig);

/// Opaque list of verification reports.
pub struct GcReportSet(Vec<VerificationReport>);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> GcStatus {
    match e {
        Error::Domain { .. } => GcStatus::Domain,
        Error::Parameter { .. } => GcStatus::Parameter,
        Error::Numerical { .. } => GcStatus::Numerical,
        Error::Indeterminate { .. } => GcStatus::Indeterminate,
        Error::Config(_) => GcStatus::Config,
        Error::Usage(_) => GcStatus::Usage,
        Error::Io(_) => GcStatus::Io,
        Error::Format(_) => GcStatus::Format,
    }
}

struct Fail(GcStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(status_of(&e), e.to_string())
    }
}

/// Runs `f` with panics and errors mapped to status codes.
fn guard<F: FnOnce() -> Result<(), Fail>>(f: F) -> GcStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => GcStatus::Ok,
        Ok(Err(Fail(s, msg))) => {
            set_error(msg);
            s
        }
        Err(_) => {
            set_error("internal panic".into());
            GcStatus::Panic
        }
    }
}

fn null(what: &str) -> Fail {
    Fail(GcStatus::NullPointer, format!("{what} is null"))
}

/// # Safety
/// `p` must be null or a valid pointer to `T`.
unsafe fn out<'a, T>(p: *mut T, what: &str) -> Result<&'a mut T, Fail> {
    p.as_mut().ok_or_else(|| null(what))
}

/// Null `cfg` means the default configuration.
///
/// # Safety
/// `cfg` must be null or a handle from [`gc_config_new`].
unsafe fn config(cfg: *const GcConfig) -> PrecisionConfig {
    cfg.as_ref().map(|c| c.0).unwrap_or_default()
}

/// # Safety
/// `s` must be null or a NUL-terminated string.
unsafe fn text<'a>(s: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if s.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| Fail(GcStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

/// Copies `s` into `buf` with a terminating NUL. `needed`, when non-null,
/// receives the required size including the NUL.
///
/// # Safety
/// `buf` must be null or valid for `len` bytes.
unsafe fn copy_out(s: &str, buf: *mut c_char, len: usize, needed: *mut usize) -> Result<(), Fail> {
    let n = s.len() + 1;
    if let Some(w) = needed.as_mut() {
        *w = n;
    }
    if buf.is_null() || len < n {
        return Err(Fail(
            GcStatus::BufferTooSmall,
            format!("buffer needs {n} bytes"),
        ));
    }
    ptr::copy_nonoverlapping(s.as_ptr(), buf.cast::<u8>(), s.len());
    *buf.add(s.len()) = 0;
    Ok(())
}

/// Copies the calling thread's last error message into `buf`. Never
/// replaces the stored message, even when the buffer is too small.
///
/// # Safety
/// `buf` must be null or valid for `len` bytes; `needed` null or writable.
#[no_mangle]
pub unsafe extern "C" fn gc_last_error_message(
    buf: *mut c_char,
    len: usize,
    needed: *mut usize,
) -> GcStatus {
    let msg = LAST_ERROR.with(|e| {
        e.borrow()
            .as_ref()
            .map(|c| c.to_string_lossy().into_owned())
            .unwrap_or_default()
    });
    match copy_out(&msg, buf, len, needed) {
        Ok(()) => GcStatus::Ok,
        Err(Fail(s, _)) => s,
    }
}

/// Creates a configuration with `digits` working digits (>= 15).
///
/// # Safety
/// `out_cfg` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gc_config_new(digits: u32, out_cfg: *mut *mut GcConfig) -> GcStatus {
    guard(|| {
        let slot = out(out_cfg, "out_cfg")?;
        let cfg = PrecisionConfig::new(digits)?;
        *slot = Box::into_raw(Box::new(GcConfig(cfg)));
        Ok(())
    })
}

/// Releases a configuration. Null is accepted.
///
/// # Safety
/// `cfg` must be null or a handle from [`gc_config_new`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn gc_config_free(cfg: *mut GcConfig) {
    if !cfg.is_null() {
        drop(Box::from_raw(cfg));
    }
}

/// `ln Γ(x)`.
///
/// # Safety
/// `cfg` null or a live handle; `result` writable.
#[no_mangle]
pub unsafe extern "C" fn gc_ln_gamma(
    x: f64,
    cfg: *const GcConfig,
    result: *mut GcValue,
) -> GcStatus {
    guard(|| {
        let slot = out(result, "result")?;
        *slot = ln_gamma(x, &config(cfg))?.into();
        Ok(())
    })
}

/// `ψ(x)`.
///
/// # Safety
/// `cfg` null or a live handle; `result` writable.
#[no_mangle]
pub unsafe extern "C" fn gc_digamma(
    x: f64,
    cfg: *const GcConfig,
    result: *mut GcValue,
) -> GcStatus {
    guard(|| {
        let slot = out(result, "result")?;
        *slot = digamma(x, &config(cfg))?.into();
        Ok(())
    })
}

/// `n`-th derivative of `H_λ` at `x` (`n = 0` gives `H_λ` itself).
///
/// # Safety
/// `cfg` null or a live handle; `result` writable.
#[no_mangle]
pub unsafe extern "C" fn gc_h_lambda_deriv(
    n: u32,
    x: f64,
    lambda: f64,
    cfg: *const GcConfig,
    result: *mut GcValue,
) -> GcStatus {
    guard(|| {
        let slot = out(result, "result")?;
        *slot = gamma_certify::monotone::H_lambda_deriv(n, x, lambda, &config(cfg))?.into();
        Ok(())
    })
}

/// The Laplace integrand `φ_λ(t)`.
///
/// # Safety
/// `result` writable.
#[no_mangle]
pub unsafe extern "C" fn gc_phi(t: f64, lambda: f64, result: *mut GcValue) -> GcStatus {
    guard(|| {
        let slot = out(result, "result")?;
        *slot = phi_value(t, lambda)?.into();
        Ok(())
    })
}

/// Solves for `λ*` to within `tol`.
///
/// # Safety
/// `cfg` null or a live handle; `result` writable.
#[no_mangle]
pub unsafe extern "C" fn gc_lambda_star(
    tol: f64,
    cfg: *const GcConfig,
    result: *mut GcThreshold,
) -> GcStatus {
    guard(|| {
        let slot = out(result, "result")?;
        let r = lambda_star(tol, &config(cfg))?;
        *slot = GcThreshold {
            lambda_star: r.lambda_star,
            bracket_lo: r.bracket.0,
            bracket_hi: r.bracket.1,
            t_star: r.t_star,
        };
        Ok(())
    })
}

/// Complete-monotonicity check of `sign·H_λ` (`sign` is +1 or −1) up to
/// `max_order` on the default grid.
///
/// # Safety
/// `cfg` null or a live handle; `verdict` writable.
#[no_mangle]
pub unsafe extern "C" fn gc_cm_check(
    lambda: f64,
    sign: c_int,
    max_order: u32,
    cfg: *const GcConfig,
    verdict: *mut GcVerdict,
) -> GcStatus {
    guard(|| {
        let slot = out(verdict, "verdict")?;
        let sign = match sign {
            1 => CmSign::Plus,
            -1 => CmSign::Minus,
            s => {
                return Err(Fail(
                    GcStatus::Parameter,
                    format!("sign must be +1 or -1, got {s}"),
                ))
            }
        };
        let grid = default_cm_grid().nodes();
        *slot = cm_check(lambda, sign, max_order, &grid, &config(cfg))?
            .verdict
            .into();
        Ok(())
    })
}

/// Evaluates the bound family named `family` (for example `"qi-low"`) at `x`.
///
/// # Safety
/// `family` NUL-terminated; `cfg` null or a live handle; `result` writable.
#[no_mangle]
pub unsafe extern "C" fn gc_eval_bound(
    family: *const c_char,
    x: f64,
    cfg: *const GcConfig,
    result: *mut GcBoundPair,
) -> GcStatus {
    guard(|| {
        let slot = out(result, "result")?;
        let family: BoundFamily = text(family, "family")?.parse()?;
        let p = eval_bound(family, x, &config(cfg))?;
        *slot = GcBoundPair {
            lower: p.lower,
            upper: p.upper,
        };
        Ok(())
    })
}

/// Runs a verification suite.
///
/// # Safety
/// `suite` NUL-terminated; `cfg` null or a live handle; `out_set` writable.
#[no_mangle]
pub unsafe extern "C" fn gc_run_suite(
    suite: *const c_char,
    cfg: *const GcConfig,
    out_set: *mut *mut GcReportSet,
) -> GcStatus {
    guard(|| {
        let slot = out(out_set, "out_set")?;
        let reports = run_suite(text(suite, "suite")?, &config(cfg))?;
        *slot = Box::into_raw(Box::new(GcReportSet(reports)));
        Ok(())
    })
}

/// Number of reports in `set`, or 0 for null.
///
/// # Safety
/// `set` null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn gc_report_set_len(set: *const GcReportSet) -> usize {
    set.as_ref().map(|s| s.0.len()).unwrap_or(0)
}

/// Process exit status the CLI would return for `set`: 0 when every verdict
/// matches its expectation, 1 otherwise, 2 for null.
///
/// # Safety
/// `set` null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn gc_report_set_exit_code(set: *const GcReportSet) -> c_int {
    set.as_ref().map(|s| exit_code(&s.0)).unwrap_or(2)
}

/// Verdict and minimum margin of report `index`.
///
/// # Safety
/// `set` a live handle; `verdict` and `min_margin` writable.
#[no_mangle]
pub unsafe extern "C" fn gc_report_set_get(
    set: *const GcReportSet,
    index: usize,
    verdict: *mut GcVerdict,
    min_margin: *mut f64,
) -> GcStatus {
    guard(|| {
        let s = set.as_ref().ok_or_else(|| null("set"))?;
        let r =
            s.0.get(index)
                .ok_or_else(|| Fail(GcStatus::Parameter, format!("index {index} out of range")))?;
        *out(verdict, "verdict")? = r.verdict.into();
        *out(min_margin, "min_margin")? = r.min_margin;
        Ok(())
    })
}

/// Claim id of report `index`, copied into `buf`.
///
/// # Safety
/// `set` a live handle; `buf` valid for `len` bytes; `needed` null or writable.
#[no_mangle]
pub unsafe extern "C" fn gc_report_set_claim_id(
    set: *const GcReportSet,
    index: usize,
    buf: *mut c_char,
    len: usize,
    needed: *mut usize,
) -> GcStatus {
    guard(|| {
        let s = set.as_ref().ok_or_else(|| null("set"))?;
        let r =
            s.0.get(index)
                .ok_or_else(|| Fail(GcStatus::Parameter, format!("index {index} out of range")))?;
        copy_out(&r.claim_id, buf, len, needed)
    })
}

/// JSON rendering of the whole set, copied into `buf`. Call with a null
/// `buf` first to learn the size through `needed`.
///
/// # Safety
/// `set` a live handle; `buf` null or valid for `len` bytes; `needed` null or writable.
#[no_mangle]
pub unsafe extern "C" fn gc_report_set_json(
    set: *const GcReportSet,
    buf: *mut c_char,
    len: usize,
    needed: *mut usize,
) -> GcStatus {
    guard(|| {
        let s = set.as_ref().ok_or_else(|| null("set"))?;
        copy_out(&to_json(&s.0), buf, len, needed)
    })
}

/// Releases a report set. Null is accepted.
///
/// # Safety
/// `set` null or a handle from [`gc_run_suite`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn gc_report_set_free(set: *mut GcReportSet) {
    if !set.is_null() {
        drop(Box::from_raw(set));
    }
}
