/* C interface to the pangular library. */

#ifndef PANGULAR_H
#define PANGULAR_H

/* Generated by cbindgen; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes returned by every fallible entry point.
 */
typedef enum PangStatus {
  PANG_STATUS_OK = 0,
  /**
   * Input outside the mathematical domain of the operation.
   */
  PANG_STATUS_DOMAIN_ERROR = 1,
  /**
   * A required pointer argument was null.
   */
  PANG_STATUS_NULL_POINTER = 2,
  /**
   * Malformed string argument (not UTF-8, or unknown name).
   */
  PANG_STATUS_BAD_ARGUMENT = 3,
  /**
   * Index out of range for the handle.
   */
  PANG_STATUS_OUT_OF_RANGE = 4,
  /**
   * Internal failure (unexpected panic).
   */
  PANG_STATUS_INTERNAL = 5,
} PangStatus;

/**
 * Opaque handle holding the reports of one verification run.
 */
typedef struct PangReports PangReports;

/**
 * Summary statistics of one check report.
 */
typedef struct PangReportStats {
  /**
   * 1 if the check passed (zero violations).
   */
  int32_t passed;
  uint64_t samples;
  uint64_t violations;
  /**
   * Worst signed slack; <= 0 for passing checks.
   */
  double max_violation;
  uint64_t seed;
} PangReportStats;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Complete elliptic integral of the first kind, modulus `r` in [0,1).
 */
enum PangStatus pang_ell_k(double r, double *out);

/**
 * Grotzsch modulus `mu(r)`, `r` in (0,1).
 */
enum PangStatus pang_mu(double r, double *out);

/**
 * Inverse of the Grotzsch modulus, `y > 0`.
 */
enum PangStatus pang_mu_inv(double y, double *out);

/**
 * Distortion function `phi_K(r) = mu^{-1}(mu(r)/K)`, `K >= 1`, `r` in (0,1).
 */
enum PangStatus pang_phi(double k, double r, double *out);

/**
 * Explicit minorant `p(r) = 1/cosh(arcosh(1/r)/K)` of `phi_K`.
 */
enum PangStatus pang_minorant_p(double k, double r, double *out);

/**
 * Growth constant `c3(K) = 2 artanh(p(t0))`.
 */
enum PangStatus pang_c3(double k, double *out);

/**
 * `c1(K) = (1/K)^{K/(K-1)}`, `K > 1`.
 */
enum PangStatus pang_c1(double k, double *out);

/**
 * Planar majorant `exp(pi (K - 1/K))` of the Grotzsch ring constant.
 */
enum PangStatus pang_lambda_bound(double k, double *out);

/**
 * Distortion constant `c(K) = 2^{K-1} K^K exp(4K(K+1) sqrt(K-1))`.
 */
enum PangStatus pang_c_qc(double k, double *out);

/**
 * The constant `t0 = (e-1)/(e+1)`.
 */
double pang_t0(void);

/**
 * p-angular distance between two nonzero vectors of dimension `dim`.
 */
enum PangStatus pang_p_angular(const double *x, const double *y, size_t dim, double p, double *out);

/**
 * Distance-ratio metric `j(x,y)` on punctured space.
 */
enum PangStatus pang_j_metric(const double *x, const double *y, size_t dim, double *out);

/**
 * The ratio `Q(x,y)` for exponents `0 < a <= 1 <= b`; requires |x| <= |y|.
 */
enum PangStatus pang_q_ratio(const double *x,
                             const double *y,
                             size_t dim,
                             double a,
                             double b,
                             double *out);

/**
 * Radial power map `A_{a,b}`; writes `dim` coordinates to `out`.
 */
enum PangStatus pang_radial_map(const double *x, size_t dim, double a, double b, double *out);

/**
 * All four alpha_p bounds for one pair. Bounds that are undefined for the
 * input (B and K outside p in (0,1); K at x = y) are written as NaN.
 */
enum PangStatus pang_bounds(const double *x,
                            const double *y,
                            size_t dim,
                            double p,
                            double *m,
                            double *d,
                            double *b,
                            double *k);

/**
 * Run every check whose name starts with `suite` ("all" runs everything).
 * On success writes a fresh handle to `out`.
 */
enum PangStatus pang_verify_run(const char *suite,
                                uint64_t samples,
                                uint64_t seed,
                                struct PangReports **out);

/**
 * Number of reports in the handle.
 */
size_t pang_reports_len(const struct PangReports *handle);

/**
 * Borrowed check name; valid until the handle is freed. Null on bad index.
 */
const char *pang_report_name(const struct PangReports *handle, size_t index);

/**
 * Summary statistics of the report at `index`.
 */
enum PangStatus pang_report_stats(const struct PangReports *handle,
                                  size_t index,
                                  struct PangReportStats *out);

/**
 * Release a reports handle. Passing null is a no-op.
 */
void pang_reports_free(struct PangReports *handle);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* PANGULAR_H */
