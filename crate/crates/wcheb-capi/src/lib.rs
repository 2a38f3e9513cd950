//! C ABI for the weighted Chebyshev library.
//!
//! Conventions, uniform across the API:
//!
//! - Every fallible function returns a [`WchebStatus`] and writes its
//!   output through an out-pointer. `WCHEB_STATUS_OK` (0) means the
//!   outputs were written; on any other status no output is written and
//!   [`wcheb_last_error`] carries a message.
//! - Handles (`WchebSet`, `WchebWeight`, `WchebResult`) are opaque,
//!   created by `wcheb_*` constructors and released by the matching
//!   `*_free` function exactly once. Passing a handle to `*_free` twice,
//!   or using it after freeing, is undefined behavior. Freeing NULL is a
//!   no-op. Constructors never consume their handle arguments: a weight
//!   built from another weight copies it, and both must still be freed.
//! - Complex numbers cross the boundary as interleaved doubles
//!   `re0, im0, re1, im1, …`; polynomial coefficients are listed in
//!   ascending powers.
//! - Handles are plain immutable data after construction and may be
//!   shared across threads behind the caller's synchronization; the
//!   error message store is thread-local.
//! - Panics never unwind across the boundary: they are caught and
//!   reported as `WCHEB_STATUS_PANIC`.
//!
//! The C header is generated into `include/wcheb.h` by the build script.

use std::cell::RefCell;
use std::ffi::{c_char, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use wcheb::certificate::{self, Certificate};
use wcheb::domain::CompactSet;
use wcheb::poly::Poly;
use wcheb::potential;
use wcheb::solver::{self, ChebyshevResult, Method, SolveOpts};
use wcheb::weight::{Region, Weight};
use wcheb::C64;

/// Dual-route certificate tolerance: the moment-system residual below
/// which a multiplier certificate counts as verified.
const CERT_TOL: f64 = 1e-8;

/// Result of a `wcheb_*` call. Anything other than `OK` means no output
/// was written; `wcheb_last_error` describes the failure.
#[repr(i32)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WchebStatus {
    Ok = 0,
    /// A required pointer argument was NULL.
    NullPointer = 1,
    /// Arguments describe no valid problem (bad interval, empty
    /// coefficient list, inadmissible weight, degree out of range, …).
    InvalidArgument = 2,
    /// The problem is valid but outside what the solvers handle.
    Unsupported = 3,
    /// The solver ran and failed (degenerate reference, no convergence).
    SolverFailure = 4,
    /// A certificate could not decide optimality either way; refine the
    /// grid or tolerances.
    Undecided = 5,
    /// A caller-provided buffer is too small; nothing was written.
    BufferTooSmall = 6,
    /// An internal panic was caught at the boundary.
    Panic = 7,
}

/// Solver selection for `WchebSolveOpts`.
#[repr(i32)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WchebMethod {
    /// Structure-driven choice: preimage transfer where possible, Remez
    /// on real sets, Lawson otherwise.
    Auto = 0,
    Remez = 1,
    Lawson = 2,
}

/// Solve options. Zero (or non-positive, for `tol`) fields select the
/// per-method defaults; `wcheb_solve_opts_default` fills the struct with
/// those sentinels.
#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct WchebSolveOpts {
    pub method: WchebMethod,
    /// Grid nodes per set component scale; 0 = default.
    pub grid_density: u32,
    /// Convergence tolerance; <= 0 = per-method default.
    pub tol: f64,
    /// Iteration cap; 0 = per-method default.
    pub max_iter: u32,
    /// Equilibrium-quadrature node count; 0 = default.
    pub quad_n: u32,
    /// Recorded for reproducibility; the solvers are deterministic.
    pub seed: u64,
}

/// Norm, capacity, and geometric-mean data for one solved degree.
#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct WchebWidomReport {
    pub degree: u32,
    /// Weighted minimax norm `t_n`.
    pub t_n: f64,
    /// Logarithmic capacity of the set.
    pub capacity: f64,
    /// Widom factor `t_n / capacity^n`.
    pub w_n: f64,
    /// Geometric mean of the weight against equilibrium measure.
    pub s_w: f64,
    /// False when the weight vanishes strongly enough that `s_w = 0`.
    pub szego_class: bool,
    /// Whether `ratio` is meaningful (`szego_class` and `s_w > 0`).
    pub has_ratio: bool,
    /// `w_n / s_w`; `>= 1` up to discretization for admissible weights.
    pub ratio: f64,
}

/// Verdict of a duality certificate.
#[repr(i32)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WchebVerdict {
    /// Nonnegative multipliers on extremal points annihilate all lower
    /// moments: the polynomial is the minimizer.
    Optimal = 0,
    /// A verified descent direction exists; `new_norm` shows the strictly
    /// smaller weighted norm that was achieved.
    Improvable = 1,
}

/// Outcome of `wcheb_certify`. Fields beyond the verdict are
/// verdict-specific; the unused ones are zero.
#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct WchebCertificate {
    pub verdict: WchebVerdict,
    /// Number of extremal points supporting the certificate.
    pub extremal_count: u32,
    /// `Optimal`: Euclidean residual of the annihilated moment system.
    pub residual: f64,
    /// `Optimal`: disagreement between the two independent certificate
    /// routes over the same support.
    pub route_gap: f64,
    /// `Improvable`: weighted norm after the verified improvement step.
    pub new_norm: f64,
    /// `Improvable`: first-order decrease predicted by the direction.
    pub predicted_decrease: f64,
}

/// Opaque compact subset of the plane.
pub struct WchebSet(CompactSet);

/// Opaque admissible weight function.
pub struct WchebWeight(Weight);

/// Opaque solved minimax problem.
pub struct WchebResult(ChebyshevResult);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(msg: &str) {
    let owned = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(owned));
}

fn fail(status: WchebStatus, msg: &str) -> WchebStatus {
    set_last_error(msg);
    status
}

fn invalid(err: impl std::fmt::Display) -> WchebStatus {
    fail(WchebStatus::InvalidArgument, &err.to_string())
}

fn solver_status(err: solver::SolverError) -> WchebStatus {
    let status = match &err {
        solver::SolverError::Unsupported(_) => WchebStatus::Unsupported,
        solver::SolverError::Poly(_)
        | solver::SolverError::Domain(_)
        | solver::SolverError::Weight(_) => WchebStatus::InvalidArgument,
        _ => WchebStatus::SolverFailure,
    };
    fail(status, &err.to_string())
}

fn certificate_status(err: certificate::CertificateError) -> WchebStatus {
    use certificate::CertificateError as E;
    let status = match &err {
        E::Ambiguous { .. } | E::NoCertificate(_) | E::EmptyNorm => WchebStatus::Undecided,
        E::Domain(_) | E::Weight(_) | E::Poly(_) => WchebStatus::InvalidArgument,
        _ => WchebStatus::SolverFailure,
    };
    fail(status, &err.to_string())
}

/// Run `f` with unwinding contained; map panics to `Panic`.
fn guarded(f: impl FnOnce() -> Result<(), WchebStatus>) -> WchebStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => WchebStatus::Ok,
        Ok(Err(status)) => status,
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unknown panic".into());
            fail(WchebStatus::Panic, &format!("internal panic: {msg}"))
        }
    }
}

/// # Safety
/// `p` must be valid for reads or NULL.
unsafe fn req<'a, T>(p: *const T, name: &str) -> Result<&'a T, WchebStatus> {
    unsafe { p.as_ref() }.ok_or_else(|| fail(WchebStatus::NullPointer, &format!("{name} is NULL")))
}

/// # Safety
/// `p` must be valid for writes or NULL.
unsafe fn req_out<'a, T>(p: *mut T, name: &str) -> Result<&'a mut T, WchebStatus> {
    unsafe { p.as_mut() }.ok_or_else(|| fail(WchebStatus::NullPointer, &format!("{name} is NULL")))
}

/// # Safety
/// `ptr` must point to `2 * n_coeffs` readable doubles (or be NULL, which
/// fails cleanly).
unsafe fn read_poly(
    ptr: *const f64,
    n_coeffs: usize,
    name: &str,
) -> Result<Poly, WchebStatus> {
    if n_coeffs == 0 {
        return Err(fail(
            WchebStatus::InvalidArgument,
            &format!("{name} needs at least one coefficient"),
        ));
    }
    if ptr.is_null() {
        return Err(fail(WchebStatus::NullPointer, &format!("{name} is NULL")));
    }
    let raw = unsafe { std::slice::from_raw_parts(ptr, 2 * n_coeffs) };
    let coeffs = raw.chunks_exact(2).map(|p| C64::new(p[0], p[1])).collect();
    Ok(Poly::new(coeffs))
}

fn to_solve_opts(opts: Option<&WchebSolveOpts>) -> SolveOpts {
    let mut out = SolveOpts::default();
    let Some(o) = opts else { return out };
    out.method = match o.method {
        WchebMethod::Auto => Method::Auto,
        WchebMethod::Remez => Method::Remez,
        WchebMethod::Lawson => Method::Lawson,
    };
    if o.grid_density > 0 {
        out.grid_density = o.grid_density as usize;
    }
    if o.tol > 0.0 {
        out.tol = Some(o.tol);
    }
    if o.max_iter > 0 {
        out.max_iter = Some(o.max_iter as usize);
    }
    if o.quad_n > 0 {
        out.quad.n = o.quad_n as usize;
    }
    out.seed = o.seed;
    out
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn wcheb_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

/// Message of the most recent failure on the calling thread, or NULL if
/// none has occurred. The pointer stays valid until the next failing
/// call on the same thread.
#[no_mangle]
pub extern "C" fn wcheb_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| {
        slot.borrow()
            .as_ref()
            .map(|s| s.as_ptr())
            .unwrap_or(std::ptr::null())
    })
}

// ---------------------------------------------------------------------
// Sets

/// Real interval `[lo, hi]`, `lo < hi`.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn wcheb_set_interval(
    lo: f64,
    hi: f64,
    out: *mut *mut WchebSet,
) -> WchebStatus {
    guarded(|| {
        let out = unsafe { req_out(out, "out") }?;
        let set = CompactSet::interval(lo, hi).map_err(invalid)?;
        *out = Box::into_raw(Box::new(WchebSet(set)));
        Ok(())
    })
}

/// Union of disjoint real intervals. `endpoints` holds
/// `lo0, hi0, lo1, hi1, …` (`2 * n_intervals` doubles); overlapping or
/// touching intervals are rejected.
///
/// # Safety
/// `endpoints` must point to `2 * n_intervals` readable doubles; `out`
/// must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn wcheb_set_interval_union(
    endpoints: *const f64,
    n_intervals: usize,
    out: *mut *mut WchebSet,
) -> WchebStatus {
    guarded(|| {
        let out = unsafe { req_out(out, "out") }?;
        if n_intervals == 0 {
            return Err(fail(
                WchebStatus::InvalidArgument,
                "union needs at least one interval",
            ));
        }
        if endpoints.is_null() {
            return Err(fail(WchebStatus::NullPointer, "endpoints is NULL"));
        }
        let raw = unsafe { std::slice::from_raw_parts(endpoints, 2 * n_intervals) };
        let intervals = raw.chunks_exact(2).map(|p| (p[0], p[1])).collect();
        let set = CompactSet::interval_union(intervals).map_err(invalid)?;
        *out = Box::into_raw(Box::new(WchebSet(set)));
        Ok(())
    })
}

/// Circle with the given center and radius > 0.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn wcheb_set_circle(
    center_re: f64,
    center_im: f64,
    radius: f64,
    out: *mut *mut WchebSet,
) -> WchebStatus {
    guarded(|| {
        let out = unsafe { req_out(out, "out") }?;
        let set = CompactSet::circle(C64::new(center_re, center_im), radius).map_err(invalid)?;
        *out = Box::into_raw(Box::new(WchebSet(set)));
        Ok(())
    })
}

/// Finite point set, interleaved `re, im` pairs.
///
/// # Safety
/// `points` must point to `2 * n_points` readable doubles; `out` must be
/// valid for writes.
#[no_mangle]
pub unsafe extern "C" fn wcheb_set_points(
    points: *const f64,
    n_points: usize,
    out: *mut *mut WchebSet,
) -> WchebStatus {
    guarded(|| {
        let out = unsafe { req_out(out, "out") }?;
        if n_points == 0 {
            return Err(fail(WchebStatus::InvalidArgument, "point set is empty"));
        }
        if points.is_null() {
            return Err(fail(WchebStatus::NullPointer, "points is NULL"));
        }
        let raw = unsafe { std::slice::from_raw_parts(points, 2 * n_points) };
        let pts = raw.chunks_exact(2).map(|p| C64::new(p[0], p[1])).collect();
        let set = CompactSet::sampled(pts).map_err(invalid)?;
        *out = Box::into_raw(Box::new(WchebSet(set)));
        Ok(())
    })
}

/// Polynomial preimage `p^{-1}(base)` under the map with the given
/// coefficients (ascending, interleaved `re, im`, degree >= 1). `base`
/// is copied; the caller still owns it.
///
/// # Safety
/// `map_coeffs` must point to `2 * n_coeffs` readable doubles; `base`
/// must be a live set handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn wcheb_set_preimage(
    map_coeffs: *const f64,
    n_coeffs: usize,
    base: *const WchebSet,
    out: *mut *mut WchebSet,
) -> WchebStatus {
    guarded(|| {
        let out = unsafe { req_out(out, "out") }?;
        let base = unsafe { req(base, "base") }?;
        let map = unsafe { read_poly(map_coeffs, n_coeffs, "map_coeffs") }?;
        let set = CompactSet::preimage(map, base.0.clone()).map_err(invalid)?;
        *out = Box::into_raw(Box::new(WchebSet(set)));
        Ok(())
    })
}

/// Release a set handle. NULL is a no-op.
///
/// # Safety
/// `set` must be a pointer from a `wcheb_set_*` constructor, not yet
/// freed, or NULL.
#[no_mangle]
pub unsafe extern "C" fn wcheb_set_free(set: *mut WchebSet) {
    if !set.is_null() {
        drop(unsafe { Box::from_raw(set) });
    }
}

// ---------------------------------------------------------------------
// Weights

/// Constant weight `w = value`, `value > 0`.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn wcheb_weight_constant(
    value: f64,
    out: *mut *mut WchebWeight,
) -> WchebStatus {
    guarded(|| {
        let out = unsafe { req_out(out, "out") }?;
        let w = Weight::constant(value).map_err(invalid)?;
        *out = Box::into_raw(Box::new(WchebWeight(w)));
        Ok(())
    })
}

/// Weight `|p(z)|^power` for the polynomial with the given coefficients
/// (ascending, interleaved `re, im`).
///
/// # Safety
/// `coeffs` must point to `2 * n_coeffs` readable doubles; `out` must be
/// valid for writes.
#[no_mangle]
pub unsafe extern "C" fn wcheb_weight_abs_poly_power(
    coeffs: *const f64,
    n_coeffs: usize,
    power: f64,
    out: *mut *mut WchebWeight,
) -> WchebStatus {
    guarded(|| {
        let out = unsafe { req_out(out, "out") }?;
        let p = unsafe { read_poly(coeffs, n_coeffs, "coeffs") }?;
        let w = Weight::abs_poly_power(p, power).map_err(invalid)?;
        *out = Box::into_raw(Box::new(WchebWeight(w)));
        Ok(())
    })
}

/// Append a factor `|p(z)|^power` to a weight created by
/// `wcheb_weight_abs_poly_power`, yielding `Π |p_i|^{α_i}` in place.
/// Fails with `INVALID_ARGUMENT` on any other weight kind.
///
/// # Safety
/// `weight` must be a live weight handle; `coeffs` must point to
/// `2 * n_coeffs` readable doubles.
#[no_mangle]
pub unsafe extern "C" fn wcheb_weight_abs_poly_append(
    weight: *mut WchebWeight,
    coeffs: *const f64,
    n_coeffs: usize,
    power: f64,
) -> WchebStatus {
    guarded(|| {
        let handle = unsafe { req_out(weight, "weight") }?;
        let p = unsafe { read_poly(coeffs, n_coeffs, "coeffs") }?;
        let mut factors = match &handle.0 {
            Weight::AbsPolyPower(f) => f.clone(),
            _ => {
                return Err(fail(
                    WchebStatus::InvalidArgument,
                    "can only append factors to a |p|^a weight",
                ))
            }
        };
        factors.push((p, power));
        handle.0 = Weight::abs_poly(factors).map_err(invalid)?;
        Ok(())
    })
}

/// Weight `base ∘ p`: the base weight evaluated at `p(z)`. `base` is
/// copied; the caller still owns it.
///
/// # Safety
/// `map_coeffs` must point to `2 * n_coeffs` readable doubles; `base`
/// must be a live weight handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn wcheb_weight_pullback(
    map_coeffs: *const f64,
    n_coeffs: usize,
    base: *const WchebWeight,
    out: *mut *mut WchebWeight,
) -> WchebStatus {
    guarded(|| {
        let out = unsafe { req_out(out, "out") }?;
        let base = unsafe { req(base, "base") }?;
        let map = unsafe { read_poly(map_coeffs, n_coeffs, "map_coeffs") }?;
        let w = Weight::pullback(map, base.0.clone()).map_err(invalid)?;
        *out = Box::into_raw(Box::new(WchebWeight(w)));
        Ok(())
    })
}

/// Restrict a weight to a closed disk: `base` inside, `0` outside. Used
/// to make weights with poles admissible on sets that avoid the poles.
/// `base` is copied; the caller still owns it.
///
/// # Safety
/// `base` must be a live weight handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn wcheb_weight_restrict_disk(
    base: *const WchebWeight,
    center_re: f64,
    center_im: f64,
    radius: f64,
    out: *mut *mut WchebWeight,
) -> WchebStatus {
    guarded(|| {
        let out = unsafe { req_out(out, "out") }?;
        let base = unsafe { req(base, "base") }?;
        if !(radius > 0.0) || !radius.is_finite() || !center_re.is_finite() || !center_im.is_finite()
        {
            return Err(fail(
                WchebStatus::InvalidArgument,
                "restriction disk needs a finite center and positive radius",
            ));
        }
        let w = Weight::restricted(
            base.0.clone(),
            Region::Disk { center: C64::new(center_re, center_im), radius },
        );
        *out = Box::into_raw(Box::new(WchebWeight(w)));
        Ok(())
    })
}

/// Weight tabulated at fixed nodes (interleaved `re, im`), one value per
/// node. Strict mode refuses evaluation farther than `tol` from every
/// node; lenient mode substitutes the nearest node's value.
///
/// # Safety
/// `points` must point to `2 * n` readable doubles and `values` to `n`;
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn wcheb_weight_tabulated(
    points: *const f64,
    values: *const f64,
    n: usize,
    tol: f64,
    strict: bool,
    out: *mut *mut WchebWeight,
) -> WchebStatus {
    guarded(|| {
        let out = unsafe { req_out(out, "out") }?;
        if n == 0 {
            return Err(fail(WchebStatus::InvalidArgument, "tabulated weight is empty"));
        }
        if points.is_null() || values.is_null() {
            return Err(fail(WchebStatus::NullPointer, "points or values is NULL"));
        }
        let raw = unsafe { std::slice::from_raw_parts(points, 2 * n) };
        let pts = raw.chunks_exact(2).map(|p| C64::new(p[0], p[1])).collect();
        let vals = unsafe { std::slice::from_raw_parts(values, n) }.to_vec();
        let w = Weight::tabulated(pts, vals, tol, strict).map_err(invalid)?;
        *out = Box::into_raw(Box::new(WchebWeight(w)));
        Ok(())
    })
}

/// Evaluate a weight at a point.
///
/// # Safety
/// `weight` must be a live weight handle; `out_value` must be valid for
/// writes.
#[no_mangle]
pub unsafe extern "C" fn wcheb_weight_eval(
    weight: *const WchebWeight,
    re: f64,
    im: f64,
    out_value: *mut f64,
) -> WchebStatus {
    guarded(|| {
        let w = unsafe { req(weight, "weight") }?;
        let out = unsafe { req_out(out_value, "out_value") }?;
        *out = w.0.eval(C64::new(re, im)).map_err(invalid)?;
        Ok(())
    })
}

/// Release a weight handle. NULL is a no-op.
///
/// # Safety
/// `weight` must be a pointer from a `wcheb_weight_*` constructor, not
/// yet freed, or NULL.
#[no_mangle]
pub unsafe extern "C" fn wcheb_weight_free(weight: *mut WchebWeight) {
    if !weight.is_null() {
        drop(unsafe { Box::from_raw(weight) });
    }
}

// ---------------------------------------------------------------------
// Solving

/// Fill `out` with the default solve options (auto method, per-method
/// defaults everywhere).
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn wcheb_solve_opts_default(out: *mut WchebSolveOpts) -> WchebStatus {
    guarded(|| {
        let out = unsafe { req_out(out, "out") }?;
        *out = WchebSolveOpts {
            method: WchebMethod::Auto,
            grid_density: 0,
            tol: 0.0,
            max_iter: 0,
            quad_n: 0,
            seed: 0,
        };
        Ok(())
    })
}

/// Compute the monic degree-`n` minimizer of the weighted sup norm on
/// the set. `opts` may be NULL for defaults. On `OK` the caller owns the
/// result handle. A solver that ran out of iterations reports
/// `SOLVER_FAILURE` and writes no result.
///
/// # Safety
/// `set` and `weight` must be live handles; `opts` must be NULL or valid
/// for reads; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn wcheb_solve(
    set: *const WchebSet,
    weight: *const WchebWeight,
    n: u32,
    opts: *const WchebSolveOpts,
    out: *mut *mut WchebResult,
) -> WchebStatus {
    guarded(|| {
        let out = unsafe { req_out(out, "out") }?;
        let set = unsafe { req(set, "set") }?;
        let w = unsafe { req(weight, "weight") }?;
        if n == 0 || n as usize > wcheb::DEGREE_CAP {
            return Err(fail(
                WchebStatus::InvalidArgument,
                &format!("degree must be in 1..={}", wcheb::DEGREE_CAP),
            ));
        }
        let sopts = to_solve_opts(unsafe { opts.as_ref() });
        let res = solver::solve(&set.0, &w.0, n as usize, &sopts).map_err(solver_status)?;
        if !res.converged {
            return Err(fail(
                WchebStatus::SolverFailure,
                &format!(
                    "no convergence in {} iterations (residual {:.3e})",
                    res.iterations, res.residual
                ),
            ));
        }
        *out = Box::into_raw(Box::new(WchebResult(res)));
        Ok(())
    })
}

/// Degree of a solved polynomial; 0 if `result` is NULL.
///
/// # Safety
/// `result` must be a live result handle or NULL.
#[no_mangle]
pub unsafe extern "C" fn wcheb_result_degree(result: *const WchebResult) -> u32 {
    unsafe { result.as_ref() }.map_or(0, |r| r.0.t.degree() as u32)
}

/// Weighted sup norm attained by the solution; NaN if `result` is NULL.
///
/// # Safety
/// `result` must be a live result handle or NULL.
#[no_mangle]
pub unsafe extern "C" fn wcheb_result_norm(result: *const WchebResult) -> f64 {
    unsafe { result.as_ref() }.map_or(f64::NAN, |r| r.0.norm)
}

/// Iterations the solver used; 0 if `result` is NULL.
///
/// # Safety
/// `result` must be a live result handle or NULL.
#[no_mangle]
pub unsafe extern "C" fn wcheb_result_iterations(result: *const WchebResult) -> u32 {
    unsafe { result.as_ref() }.map_or(0, |r| r.0.iterations as u32)
}

/// Final equioscillation/spread residual; NaN if `result` is NULL.
///
/// # Safety
/// `result` must be a live result handle or NULL.
#[no_mangle]
pub unsafe extern "C" fn wcheb_result_residual(result: *const WchebResult) -> f64 {
    unsafe { result.as_ref() }.map_or(f64::NAN, |r| r.0.residual)
}

/// Number of coefficients (degree + 1); 0 if `result` is NULL.
///
/// # Safety
/// `result` must be a live result handle or NULL.
#[no_mangle]
pub unsafe extern "C" fn wcheb_result_num_coeffs(result: *const WchebResult) -> usize {
    unsafe { result.as_ref() }.map_or(0, |r| r.0.t.coeffs().len())
}

/// Copy the coefficients (ascending, interleaved `re, im`) into `out`,
/// which holds room for `capacity` coefficient pairs (`2 * capacity`
/// doubles). Fails with `BUFFER_TOO_SMALL` if `capacity` is less than
/// `wcheb_result_num_coeffs`.
///
/// # Safety
/// `result` must be a live result handle; `out` must be valid for
/// `2 * capacity` double writes.
#[no_mangle]
pub unsafe extern "C" fn wcheb_result_coeffs(
    result: *const WchebResult,
    out: *mut f64,
    capacity: usize,
) -> WchebStatus {
    guarded(|| {
        let r = unsafe { req(result, "result") }?;
        if out.is_null() {
            return Err(fail(WchebStatus::NullPointer, "out is NULL"));
        }
        let coeffs = r.0.t.coeffs();
        if capacity < coeffs.len() {
            return Err(fail(
                WchebStatus::BufferTooSmall,
                &format!("need room for {} coefficients, have {capacity}", coeffs.len()),
            ));
        }
        let dst = unsafe { std::slice::from_raw_parts_mut(out, 2 * coeffs.len()) };
        for (slot, c) in dst.chunks_exact_mut(2).zip(coeffs) {
            slot[0] = c.re;
            slot[1] = c.im;
        }
        Ok(())
    })
}

/// Number of recorded extremal points; 0 if `result` is NULL.
///
/// # Safety
/// `result` must be a live result handle or NULL.
#[no_mangle]
pub unsafe extern "C" fn wcheb_result_num_extremal(result: *const WchebResult) -> usize {
    unsafe { result.as_ref() }.map_or(0, |r| r.0.extremal_points.len())
}

/// Copy the extremal points (interleaved `re, im`) and the weighted
/// moduli attained there. Either output may be NULL to skip it;
/// `capacity` is the number of points each non-NULL buffer can hold.
///
/// # Safety
/// `result` must be a live result handle; `out_points`, if non-NULL,
/// must be valid for `2 * capacity` double writes and `out_values` for
/// `capacity`.
#[no_mangle]
pub unsafe extern "C" fn wcheb_result_extremal(
    result: *const WchebResult,
    out_points: *mut f64,
    out_values: *mut f64,
    capacity: usize,
) -> WchebStatus {
    guarded(|| {
        let r = unsafe { req(result, "result") }?;
        let pts = &r.0.extremal_points;
        if capacity < pts.len() {
            return Err(fail(
                WchebStatus::BufferTooSmall,
                &format!("need room for {} extremal points, have {capacity}", pts.len()),
            ));
        }
        if !out_points.is_null() {
            let dst = unsafe { std::slice::from_raw_parts_mut(out_points, 2 * pts.len()) };
            for (slot, (z, _)) in dst.chunks_exact_mut(2).zip(pts) {
                slot[0] = z.re;
                slot[1] = z.im;
            }
        }
        if !out_values.is_null() {
            let dst = unsafe { std::slice::from_raw_parts_mut(out_values, pts.len()) };
            for (slot, (_, v)) in dst.iter_mut().zip(pts) {
                *slot = *v;
            }
        }
        Ok(())
    })
}

/// Release a result handle. NULL is a no-op.
///
/// # Safety
/// `result` must be a pointer from `wcheb_solve`, not yet freed, or
/// NULL.
#[no_mangle]
pub unsafe extern "C" fn wcheb_result_free(result: *mut WchebResult) {
    if !result.is_null() {
        drop(unsafe { Box::from_raw(result) });
    }
}

// ---------------------------------------------------------------------
// Reports

/// Widom factor and geometric-mean comparison for a solved problem. The
/// set and weight must be the ones the result was solved on.
///
/// # Safety
/// `set`, `weight`, and `result` must be live handles; `out` must be
/// valid for writes.
#[no_mangle]
pub unsafe extern "C" fn wcheb_widom(
    set: *const WchebSet,
    weight: *const WchebWeight,
    result: *const WchebResult,
    out: *mut WchebWidomReport,
) -> WchebStatus {
    guarded(|| {
        let out = unsafe { req_out(out, "out") }?;
        let set = unsafe { req(set, "set") }?;
        let w = unsafe { req(weight, "weight") }?;
        let r = unsafe { req(result, "result") }?;
        let rep =
            solver::widom_from_result(&set.0, &w.0, &r.0, &SolveOpts::default())
                .map_err(solver_status)?;
        *out = WchebWidomReport {
            degree: rep.n as u32,
            t_n: rep.t_n,
            capacity: rep.capacity,
            w_n: rep.w_n,
            s_w: rep.s_w,
            szego_class: rep.szego_class,
            has_ratio: rep.ratio.is_some(),
            ratio: rep.ratio.unwrap_or(f64::NAN),
        };
        Ok(())
    })
}

/// Duality certificate for a solved problem: either verified optimality
/// (nonnegative multipliers annihilating all lower moments) or a
/// verified strict improvement. `grid_density` of 0 uses the solver
/// default. `UNDECIDED` means neither verdict could be certified at the
/// working tolerance.
///
/// # Safety
/// `set`, `weight`, and `result` must be live handles; `out` must be
/// valid for writes.
#[no_mangle]
pub unsafe extern "C" fn wcheb_certify(
    set: *const WchebSet,
    weight: *const WchebWeight,
    result: *const WchebResult,
    grid_density: u32,
    out: *mut WchebCertificate,
) -> WchebStatus {
    guarded(|| {
        let out = unsafe { req_out(out, "out") }?;
        let set = unsafe { req(set, "set") }?;
        let w = unsafe { req(weight, "weight") }?;
        let r = unsafe { req(result, "result") }?;
        let density = if grid_density > 0 {
            grid_density as usize
        } else {
            SolveOpts::default().grid_density
        };
        let grid = set.0.sample(density).map_err(invalid)?;
        let tol_rel = certificate::suggested_tol_rel(&r.0.t, &grid, r.0.norm);
        let e = certificate::extremal_points(&r.0.t, &w.0, &set.0, &grid, tol_rel)
            .map_err(certificate_status)?;
        let cert = certificate::kolmogorov_check(&r.0.t, &w.0, &grid, &e, CERT_TOL)
            .map_err(certificate_status)?;
        *out = match cert {
            Certificate::Optimal(rs) => WchebCertificate {
                verdict: WchebVerdict::Optimal,
                extremal_count: rs.points.len() as u32,
                residual: rs.residual,
                route_gap: rs.route_gap,
                new_norm: 0.0,
                predicted_decrease: 0.0,
            },
            Certificate::Improvable(imp) => WchebCertificate {
                verdict: WchebVerdict::Improvable,
                extremal_count: e.points.len() as u32,
                residual: 0.0,
                route_gap: 0.0,
                new_norm: imp.new_norm,
                predicted_decrease: imp.predicted_decrease,
            },
        };
        Ok(())
    })
}

/// Logarithmic capacity of the set. `out_exact` reports whether the
/// value came from a closed form (true) or quadrature (false); it may be
/// NULL if not wanted.
///
/// # Safety
/// `set` must be a live handle; `out_value` must be valid for writes;
/// `out_exact` must be NULL or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn wcheb_capacity(
    set: *const WchebSet,
    out_value: *mut f64,
    out_exact: *mut bool,
) -> WchebStatus {
    guarded(|| {
        let set = unsafe { req(set, "set") }?;
        let out = unsafe { req_out(out_value, "out_value") }?;
        let cap = potential::capacity(&set.0).map_err(invalid)?;
        *out = cap.value;
        if let Some(flag) = unsafe { out_exact.as_mut() } {
            *flag = cap.exact;
        }
        Ok(())
    })
}

/// Green function of the set's unbounded complement with pole at
/// infinity, evaluated at one point (0 on the set).
///
/// # Safety
/// `set` must be a live handle; `out_value` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn wcheb_green(
    set: *const WchebSet,
    re: f64,
    im: f64,
    out_value: *mut f64,
) -> WchebStatus {
    guarded(|| {
        let set = unsafe { req(set, "set") }?;
        let out = unsafe { req_out(out_value, "out_value") }?;
        *out = potential::green(&set.0, C64::new(re, im)).map_err(invalid)?;
        Ok(())
    })
}

/// Geometric mean of the weight against the set's equilibrium measure.
/// `out_szego_class` (NULL to skip) reports false when the mean
/// degenerates to 0, in which case `out_value` is 0.
///
/// # Safety
/// `set` and `weight` must be live handles; `out_value` must be valid
/// for writes; `out_szego_class` must be NULL or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn wcheb_szego(
    set: *const WchebSet,
    weight: *const WchebWeight,
    out_value: *mut f64,
    out_szego_class: *mut bool,
) -> WchebStatus {
    guarded(|| {
        let set = unsafe { req(set, "set") }?;
        let w = unsafe { req(weight, "weight") }?;
        let out = unsafe { req_out(out_value, "out_value") }?;
        let sz = potential::szego_integral(&set.0, &w.0, &Default::default())
            .map_err(invalid)?;
        *out = sz.value;
        if let Some(flag) = unsafe { out_szego_class.as_mut() } {
            *flag = sz.szego_class;
        }
        Ok(())
    })
}
