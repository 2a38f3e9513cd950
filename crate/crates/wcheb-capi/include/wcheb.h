#ifndef WCHEB_H
#define WCHEB_H

/* Generated by cbindgen from wcheb-capi; regenerate with `cargo build`, do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Solver selection for `WchebSolveOpts`.
enum WchebMethod
#ifdef __cplusplus
  : int32_t
#endif // __cplusplus
 {
  // Structure-driven choice: preimage transfer where possible, Remez
  // on real sets, Lawson otherwise.
  WCHEB_METHOD_AUTO = 0,
  WCHEB_METHOD_REMEZ = 1,
  WCHEB_METHOD_LAWSON = 2,
};
#ifndef __cplusplus
typedef int32_t WchebMethod;
#endif // __cplusplus

// Result of a `wcheb_*` call. Anything other than `OK` means no output
// was written; `wcheb_last_error` describes the failure.
enum WchebStatus
#ifdef __cplusplus
  : int32_t
#endif // __cplusplus
 {
  WCHEB_STATUS_OK = 0,
  // A required pointer argument was NULL.
  WCHEB_STATUS_NULL_POINTER = 1,
  // Arguments describe no valid problem (bad interval, empty
  // coefficient list, inadmissible weight, degree out of range, …).
  WCHEB_STATUS_INVALID_ARGUMENT = 2,
  // The problem is valid but outside what the solvers handle.
  WCHEB_STATUS_UNSUPPORTED = 3,
  // The solver ran and failed (degenerate reference, no convergence).
  WCHEB_STATUS_SOLVER_FAILURE = 4,
  // A certificate could not decide optimality either way; refine the
  // grid or tolerances.
  WCHEB_STATUS_UNDECIDED = 5,
  // A caller-provided buffer is too small; nothing was written.
  WCHEB_STATUS_BUFFER_TOO_SMALL = 6,
  // An internal panic was caught at the boundary.
  WCHEB_STATUS_PANIC = 7,
};
#ifndef __cplusplus
typedef int32_t WchebStatus;
#endif // __cplusplus

// Verdict of a duality certificate.
enum WchebVerdict
#ifdef __cplusplus
  : int32_t
#endif // __cplusplus
 {
  // Nonnegative multipliers on extremal points annihilate all lower
  // moments: the polynomial is the minimizer.
  WCHEB_VERDICT_OPTIMAL = 0,
  // A verified descent direction exists; `new_norm` shows the strictly
  // smaller weighted norm that was achieved.
  WCHEB_VERDICT_IMPROVABLE = 1,
};
#ifndef __cplusplus
typedef int32_t WchebVerdict;
#endif // __cplusplus

// Opaque solved minimax problem.
typedef struct WchebResult WchebResult;

// Opaque compact subset of the plane.
typedef struct WchebSet WchebSet;

// Opaque admissible weight function.
typedef struct WchebWeight WchebWeight;

// Solve options. Zero (or non-positive, for `tol`) fields select the
// per-method defaults; `wcheb_solve_opts_default` fills the struct with
// those sentinels.
typedef struct {
  WchebMethod method;
  // Grid nodes per set component scale; 0 = default.
  uint32_t grid_density;
  // Convergence tolerance; <= 0 = per-method default.
  double tol;
  // Iteration cap; 0 = per-method default.
  uint32_t max_iter;
  // Equilibrium-quadrature node count; 0 = default.
  uint32_t quad_n;
  // Recorded for reproducibility; the solvers are deterministic.
  uint64_t seed;
} WchebSolveOpts;

// Norm, capacity, and geometric-mean data for one solved degree.
typedef struct {
  uint32_t degree;
  // Weighted minimax norm `t_n`.
  double t_n;
  // Logarithmic capacity of the set.
  double capacity;
  // Widom factor `t_n / capacity^n`.
  double w_n;
  // Geometric mean of the weight against equilibrium measure.
  double s_w;
  // False when the weight vanishes strongly enough that `s_w = 0`.
  bool szego_class;
  // Whether `ratio` is meaningful (`szego_class` and `s_w > 0`).
  bool has_ratio;
  // `w_n / s_w`; `>= 1` up to discretization for admissible weights.
  double ratio;
} WchebWidomReport;

// Outcome of `wcheb_certify`. Fields beyond the verdict are
// verdict-specific; the unused ones are zero.
typedef struct {
  WchebVerdict verdict;
  // Number of extremal points supporting the certificate.
  uint32_t extremal_count;
  // `Optimal`: Euclidean residual of the annihilated moment system.
  double residual;
  // `Optimal`: disagreement between the two independent certificate
  // routes over the same support.
  double route_gap;
  // `Improvable`: weighted norm after the verified improvement step.
  double new_norm;
  // `Improvable`: first-order decrease predicted by the direction.
  double predicted_decrease;
} WchebCertificate;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Library version as a static NUL-terminated string.
const char *wcheb_version(void);

// Message of the most recent failure on the calling thread, or NULL if
// none has occurred. The pointer stays valid until the next failing
// call on the same thread.
const char *wcheb_last_error(void);

// Real interval `[lo, hi]`, `lo < hi`.
//
// # Safety
// `out` must be valid for writes.
WchebStatus wcheb_set_interval(double lo, double hi, WchebSet **out);

// Union of disjoint real intervals. `endpoints` holds
// `lo0, hi0, lo1, hi1, …` (`2 * n_intervals` doubles); overlapping or
// touching intervals are rejected.
//
// # Safety
// `endpoints` must point to `2 * n_intervals` readable doubles; `out`
// must be valid for writes.
WchebStatus wcheb_set_interval_union(const double *endpoints, size_t n_intervals, WchebSet **out);

// Circle with the given center and radius > 0.
//
// # Safety
// `out` must be valid for writes.
WchebStatus wcheb_set_circle(double center_re, double center_im, double radius, WchebSet **out);

// Finite point set, interleaved `re, im` pairs.
//
// # Safety
// `points` must point to `2 * n_points` readable doubles; `out` must be
// valid for writes.
WchebStatus wcheb_set_points(const double *points, size_t n_points, WchebSet **out);

// Polynomial preimage `p^{-1}(base)` under the map with the given
// coefficients (ascending, interleaved `re, im`, degree >= 1). `base`
// is copied; the caller still owns it.
//
// # Safety
// `map_coeffs` must point to `2 * n_coeffs` readable doubles; `base`
// must be a live set handle; `out` must be valid for writes.
WchebStatus wcheb_set_preimage(const double *map_coeffs,
                               size_t n_coeffs,
                               const WchebSet *base,
                               WchebSet **out);

// Release a set handle. NULL is a no-op.
//
// # Safety
// `set` must be a pointer from a `wcheb_set_*` constructor, not yet
// freed, or NULL.
void wcheb_set_free(WchebSet *set);

// Constant weight `w = value`, `value > 0`.
//
// # Safety
// `out` must be valid for writes.
WchebStatus wcheb_weight_constant(double value, WchebWeight **out);

// Weight `|p(z)|^power` for the polynomial with the given coefficients
// (ascending, interleaved `re, im`).
//
// # Safety
// `coeffs` must point to `2 * n_coeffs` readable doubles; `out` must be
// valid for writes.
WchebStatus wcheb_weight_abs_poly_power(const double *coeffs,
                                        size_t n_coeffs,
                                        double power,
                                        WchebWeight **out);

// Append a factor `|p(z)|^power` to a weight created by
// `wcheb_weight_abs_poly_power`, yielding `Π |p_i|^{α_i}` in place.
// Fails with `INVALID_ARGUMENT` on any other weight kind.
//
// # Safety
// `weight` must be a live weight handle; `coeffs` must point to
// `2 * n_coeffs` readable doubles.
WchebStatus wcheb_weight_abs_poly_append(WchebWeight *weight,
                                         const double *coeffs,
                                         size_t n_coeffs,
                                         double power);

// Weight `base ∘ p`: the base weight evaluated at `p(z)`. `base` is
// copied; the caller still owns it.
//
// # Safety
// `map_coeffs` must point to `2 * n_coeffs` readable doubles; `base`
// must be a live weight handle; `out` must be valid for writes.
WchebStatus wcheb_weight_pullback(const double *map_coeffs,
                                  size_t n_coeffs,
                                  const WchebWeight *base,
                                  WchebWeight **out);

// Restrict a weight to a closed disk: `base` inside, `0` outside. Used
// to make weights with poles admissible on sets that avoid the poles.
// `base` is copied; the caller still owns it.
//
// # Safety
// `base` must be a live weight handle; `out` must be valid for writes.
WchebStatus wcheb_weight_restrict_disk(const WchebWeight *base,
                                       double center_re,
                                       double center_im,
                                       double radius,
                                       WchebWeight **out);

// Weight tabulated at fixed nodes (interleaved `re, im`), one value per
// node. Strict mode refuses evaluation farther than `tol` from every
// node; lenient mode substitutes the nearest node's value.
//
// # Safety
// `points` must point to `2 * n` readable doubles and `values` to `n`;
// `out` must be valid for writes.
WchebStatus wcheb_weight_tabulated(const double *points,
                                   const double *values,
                                   size_t n,
                                   double tol,
                                   bool strict,
                                   WchebWeight **out);

// Evaluate a weight at a point.
//
// # Safety
// `weight` must be a live weight handle; `out_value` must be valid for
// writes.
WchebStatus wcheb_weight_eval(const WchebWeight *weight, double re, double im, double *out_value);

// Release a weight handle. NULL is a no-op.
//
// # Safety
// `weight` must be a pointer from a `wcheb_weight_*` constructor, not
// yet freed, or NULL.
void wcheb_weight_free(WchebWeight *weight);

// Fill `out` with the default solve options (auto method, per-method
// defaults everywhere).
//
// # Safety
// `out` must be valid for writes.
WchebStatus wcheb_solve_opts_default(WchebSolveOpts *out);

// Compute the monic degree-`n` minimizer of the weighted sup norm on
// the set. `opts` may be NULL for defaults. On `OK` the caller owns the
// result handle. A solver that ran out of iterations reports
// `SOLVER_FAILURE` and writes no result.
//
// # Safety
// `set` and `weight` must be live handles; `opts` must be NULL or valid
// for reads; `out` must be valid for writes.
WchebStatus wcheb_solve(const WchebSet *set,
                        const WchebWeight *weight,
                        uint32_t n,
                        const WchebSolveOpts *opts,
                        WchebResult **out);

// Degree of a solved polynomial; 0 if `result` is NULL.
//
// # Safety
// `result` must be a live result handle or NULL.
uint32_t wcheb_result_degree(const WchebResult *result);

// Weighted sup norm attained by the solution; NaN if `result` is NULL.
//
// # Safety
// `result` must be a live result handle or NULL.
double wcheb_result_norm(const WchebResult *result);

// Iterations the solver used; 0 if `result` is NULL.
//
// # Safety
// `result` must be a live result handle or NULL.
uint32_t wcheb_result_iterations(const WchebResult *result);

// Final equioscillation/spread residual; NaN if `result` is NULL.
//
// # Safety
// `result` must be a live result handle or NULL.
double wcheb_result_residual(const WchebResult *result);

// Number of coefficients (degree + 1); 0 if `result` is NULL.
//
// # Safety
// `result` must be a live result handle or NULL.
size_t wcheb_result_num_coeffs(const WchebResult *result);

// Copy the coefficients (ascending, interleaved `re, im`) into `out`,
// which holds room for `capacity` coefficient pairs (`2 * capacity`
// doubles). Fails with `BUFFER_TOO_SMALL` if `capacity` is less than
// `wcheb_result_num_coeffs`.
//
// # Safety
// `result` must be a live result handle; `out` must be valid for
// `2 * capacity` double writes.
WchebStatus wcheb_result_coeffs(const WchebResult *result, double *out, size_t capacity);

// Number of recorded extremal points; 0 if `result` is NULL.
//
// # Safety
// `result` must be a live result handle or NULL.
size_t wcheb_result_num_extremal(const WchebResult *result);

// Copy the extremal points (interleaved `re, im`) and the weighted
// moduli attained there. Either output may be NULL to skip it;
// `capacity` is the number of points each non-NULL buffer can hold.
//
// # Safety
// `result` must be a live result handle; `out_points`, if non-NULL,
// must be valid for `2 * capacity` double writes and `out_values` for
// `capacity`.
WchebStatus wcheb_result_extremal(const WchebResult *result,
                                  double *out_points,
                                  double *out_values,
                                  size_t capacity);

// Release a result handle. NULL is a no-op.
//
// # Safety
// `result` must be a pointer from `wcheb_solve`, not yet freed, or
// NULL.
void wcheb_result_free(WchebResult *result);

// Widom factor and geometric-mean comparison for a solved problem. The
// set and weight must be the ones the result was solved on.
//
// # Safety
// `set`, `weight`, and `result` must be live handles; `out` must be
// valid for writes.
WchebStatus wcheb_widom(const WchebSet *set,
                        const WchebWeight *weight,
                        const WchebResult *result,
                        WchebWidomReport *out);

// Duality certificate for a solved problem: either verified optimality
// (nonnegative multipliers annihilating all lower moments) or a
// verified strict improvement. `grid_density` of 0 uses the solver
// default. `UNDECIDED` means neither verdict could be certified at the
// working tolerance.
//
// # Safety
// `set`, `weight`, and `result` must be live handles; `out` must be
// valid for writes.
WchebStatus wcheb_certify(const WchebSet *set,
                          const WchebWeight *weight,
                          const WchebResult *result,
                          uint32_t grid_density,
                          WchebCertificate *out);

// Logarithmic capacity of the set. `out_exact` reports whether the
// value came from a closed form (true) or quadrature (false); it may be
// NULL if not wanted.
//
// # Safety
// `set` must be a live handle; `out_value` must be valid for writes;
// `out_exact` must be NULL or valid for writes.
WchebStatus wcheb_capacity(const WchebSet *set, double *out_value, bool *out_exact);

// Green function of the set's unbounded complement with pole at
// infinity, evaluated at one point (0 on the set).
//
// # Safety
// `set` must be a live handle; `out_value` must be valid for writes.
WchebStatus wcheb_green(const WchebSet *set, double re, double im, double *out_value);

// Geometric mean of the weight against the set's equilibrium measure.
// `out_szego_class` (NULL to skip) reports false when the mean
// degenerates to 0, in which case `out_value` is 0.
//
// # Safety
// `set` and `weight` must be live handles; `out_value` must be valid
// for writes; `out_szego_class` must be NULL or valid for writes.
WchebStatus wcheb_szego(const WchebSet *set,
                        const WchebWeight *weight,
                        double *out_value,
                        bool *out_szego_class);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* WCHEB_H */
