#ifndef GAMMA_CERTIFY_H
#define GAMMA_CERTIFY_H

/* Generated by cbindgen from crates/ffi/src. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum GcStatus {
  GC_STATUS_OK = 0,
  GC_STATUS_DOMAIN = 1,
  GC_STATUS_PARAMETER = 2,
  GC_STATUS_NUMERICAL = 3,
  GC_STATUS_INDETERMINATE = 4,
  GC_STATUS_CONFIG = 5,
  GC_STATUS_USAGE = 6,
  GC_STATUS_IO = 7,
  GC_STATUS_FORMAT = 8,
  GC_STATUS_NULL_POINTER = 9,
  GC_STATUS_INVALID_UTF8 = 10,
  GC_STATUS_PANIC = 11,
  GC_STATUS_BUFFER_TOO_SMALL = 12,
} GcStatus;

typedef enum GcVerdict {
  GC_VERDICT_VERIFIED = 0,
  GC_VERDICT_FALSIFIED = 1,
  GC_VERDICT_INDETERMINATE = 2,
} GcVerdict;

/**
 * Opaque precision configuration.
 */
typedef struct GcConfig GcConfig;

/**
 * Opaque list of verification reports.
 */
typedef struct GcReportSet GcReportSet;

/**
 * A value with a bound on its absolute error.
 */
typedef struct GcValue {
  double value;
  double abs_error_bound;
} GcValue;

typedef struct GcThreshold {
  double lambda_star;
  double bracket_lo;
  double bracket_hi;
  double t_star;
} GcThreshold;

typedef struct GcBoundPair {
  double lower;
  double upper;
} GcBoundPair;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Copies the calling thread's last error message into `buf`. Never
 * replaces the stored message, even when the buffer is too small.
 *
 * # Safety
 * `buf` must be null or valid for `len` bytes; `needed` null or writable.
 */
enum GcStatus gc_last_error_message(char *buf, size_t len, size_t *needed);

/**
 * Creates a configuration with `digits` working digits (>= 15).
 *
 * # Safety
 * `out_cfg` must be writable.
 */
enum GcStatus gc_config_new(uint32_t digits, struct GcConfig **out_cfg);

/**
 * Releases a configuration. Null is accepted.
 *
 * # Safety
 * `cfg` must be null or a handle from [`gc_config_new`] not yet freed.
 */
void gc_config_free(struct GcConfig *cfg);

/**
 * `ln Γ(x)`.
 *
 * # Safety
 * `cfg` null or a live handle; `result` writable.
 */
enum GcStatus gc_ln_gamma(double x, const struct GcConfig *cfg, struct GcValue *result);

/**
 * `ψ(x)`.
 *
 * # Safety
 * `cfg` null or a live handle; `result` writable.
 */
enum GcStatus gc_digamma(double x, const struct GcConfig *cfg, struct GcValue *result);

/**
 * `n`-th derivative of `H_λ` at `x` (`n = 0` gives `H_λ` itself).
 *
 * # Safety
 * `cfg` null or a live handle; `result` writable.
 */
enum GcStatus gc_h_lambda_deriv(uint32_t n,
                                double x,
                                double lambda,
                                const struct GcConfig *cfg,
                                struct GcValue *result);

/**
 * The Laplace integrand `φ_λ(t)`.
 *
 * # Safety
 * `result` writable.
 */
enum GcStatus gc_phi(double t, double lambda, struct GcValue *result);

/**
 * Solves for `λ*` to within `tol`.
 *
 * # Safety
 * `cfg` null or a live handle; `result` writable.
 */
enum GcStatus gc_lambda_star(double tol, const struct GcConfig *cfg, struct GcThreshold *result);

/**
 * Complete-monotonicity check of `sign·H_λ` (`sign` is +1 or −1) up to
 * `max_order` on the default grid.
 *
 * # Safety
 * `cfg` null or a live handle; `verdict` writable.
 */
enum GcStatus gc_cm_check(double lambda,
                          int sign,
                          uint32_t max_order,
                          const struct GcConfig *cfg,
                          enum GcVerdict *verdict);

/**
 * Evaluates the bound family named `family` (for example `"qi-low"`) at `x`.
 *
 * # Safety
 * `family` NUL-terminated; `cfg` null or a live handle; `result` writable.
 */
enum GcStatus gc_eval_bound(const char *family,
                            double x,
                            const struct GcConfig *cfg,
                            struct GcBoundPair *result);

/**
 * Runs a verification suite.
 *
 * # Safety
 * `suite` NUL-terminated; `cfg` null or a live handle; `out_set` writable.
 */
enum GcStatus gc_run_suite(const char *suite,
                           const struct GcConfig *cfg,
                           struct GcReportSet **out_set);

/**
 * Number of reports in `set`, or 0 for null.
 *
 * # Safety
 * `set` null or a live handle.
 */
size_t gc_report_set_len(const struct GcReportSet *set);

/**
 * Process exit status the CLI would return for `set`: 0 when every verdict
 * matches its expectation, 1 otherwise, 2 for null.
 *
 * # Safety
 * `set` null or a live handle.
 */
int gc_report_set_exit_code(const struct GcReportSet *set);

/**
 * Verdict and minimum margin of report `index`.
 *
 * # Safety
 * `set` a live handle; `verdict` and `min_margin` writable.
 */
enum GcStatus gc_report_set_get(const struct GcReportSet *set,
                                size_t index,
                                enum GcVerdict *verdict,
                                double *min_margin);

/**
 * Claim id of report `index`, copied into `buf`.
 *
 * # Safety
 * `set` a live handle; `buf` valid for `len` bytes; `needed` null or writable.
 */
enum GcStatus gc_report_set_claim_id(const struct GcReportSet *set,
                                     size_t index,
                                     char *buf,
                                     size_t len,
                                     size_t *needed);

/**
 * JSON rendering of the whole set, copied into `buf`. Call with a null
 * `buf` first to learn the size through `needed`.
 *
 * # Safety
 * `set` a live handle; `buf` null or valid for `len` bytes; `needed` null or writable.
 */
enum GcStatus gc_report_set_json(const struct GcReportSet *set,
                                 char *buf,
                                 size_t len,
                                 size_t *needed);

/**
 * Releases a report set. Null is accepted.
 *
 * # Safety
 * `set` null or a handle from [`gc_run_suite`] not yet freed.
 */
void gc_report_set_free(struct GcReportSet *set);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* GAMMA_CERTIFY_H */
