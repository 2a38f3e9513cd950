//! Drives the C entry points the way a C caller would: through raw
//! pointers, checking statuses, reading back through the accessors, and
//! freeing every handle.

use std::ffi::CStr;
use std::ptr;

use wcheb_capi::*;

unsafe fn make_interval(lo: f64, hi: f64) -> *mut WchebSet {
    let mut set = ptr::null_mut();
    assert_eq!(wcheb_set_interval(lo, hi, &mut set), WchebStatus::Ok);
    assert!(!set.is_null());
    set
}

unsafe fn make_constant(value: f64) -> *mut WchebWeight {
    let mut w = ptr::null_mut();
    assert_eq!(wcheb_weight_constant(value, &mut w), WchebStatus::Ok);
    w
}

fn last_error_text() -> String {
    let p = wcheb_last_error();
    assert!(!p.is_null(), "expected an error message");
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

#[test]
fn classical_solve_round_trip() {
    unsafe {
        let set = make_interval(-1.0, 1.0);
        let w = make_constant(1.0);

        let mut result = ptr::null_mut();
        assert_eq!(
            wcheb_solve(set, w, 3, ptr::null(), &mut result),
            WchebStatus::Ok
        );
        assert_eq!(wcheb_result_degree(result), 3);
        assert!((wcheb_result_norm(result) - 0.25).abs() <= 1e-10);
        assert!(wcheb_result_iterations(result) >= 1);

        // x^3 - (3/4) x, real coefficients, ascending
        let n = wcheb_result_num_coeffs(result);
        assert_eq!(n, 4);
        let mut coeffs = vec![0.0f64; 2 * n];
        assert_eq!(
            wcheb_result_coeffs(result, coeffs.as_mut_ptr(), n),
            WchebStatus::Ok
        );
        let expect = [0.0, -0.75, 0.0, 1.0];
        for (k, pair) in coeffs.chunks_exact(2).enumerate() {
            assert!(
                (pair[0] - expect[k]).abs() <= 1e-10 && pair[1].abs() <= 1e-12,
                "coefficient {k}: {pair:?}"
            );
        }

        let m = wcheb_result_num_extremal(result);
        assert!(m >= 4, "degree 3 needs at least 4 extremal points, got {m}");
        let mut pts = vec![0.0f64; 2 * m];
        let mut vals = vec![0.0f64; m];
        assert_eq!(
            wcheb_result_extremal(result, pts.as_mut_ptr(), vals.as_mut_ptr(), m),
            WchebStatus::Ok
        );
        for v in &vals {
            assert!((v - 0.25).abs() <= 1e-8, "extremal value {v}");
        }

        wcheb_result_free(result);
        wcheb_weight_free(w);
        wcheb_set_free(set);
    }
}

#[test]
fn widom_and_certificate_reports() {
    unsafe {
        let set = make_interval(-1.0, 1.0);
        let w = make_constant(1.0);
        let mut result = ptr::null_mut();
        assert_eq!(
            wcheb_solve(set, w, 4, ptr::null(), &mut result),
            WchebStatus::Ok
        );

        let mut rep = std::mem::zeroed::<WchebWidomReport>();
        assert_eq!(wcheb_widom(set, w, result, &mut rep), WchebStatus::Ok);
        assert_eq!(rep.degree, 4);
        assert!((rep.capacity - 0.5).abs() <= 1e-14);
        assert!((rep.w_n - 2.0).abs() <= 1e-9, "W_4 = {}", rep.w_n);
        assert!(rep.szego_class && rep.has_ratio);
        assert!((rep.ratio - 2.0).abs() <= 1e-9);

        let mut cert = std::mem::zeroed::<WchebCertificate>();
        assert_eq!(
            wcheb_certify(set, w, result, 0, &mut cert),
            WchebStatus::Ok
        );
        assert_eq!(cert.verdict, WchebVerdict::Optimal);
        assert!(cert.extremal_count >= 5);
        assert!(cert.residual <= 1e-8);

        wcheb_result_free(result);
        wcheb_weight_free(w);
        wcheb_set_free(set);
    }
}

#[test]
fn saturated_circle_weight_recovers_its_polynomial() {
    unsafe {
        let mut set = ptr::null_mut();
        assert_eq!(
            wcheb_set_circle(0.0, 0.0, 1.0, &mut set),
            WchebStatus::Ok
        );

        // 1/|z(z - 0.3)| restricted to a disk covering the circle
        let factor = [0.0, 0.0, -0.3, 0.0, 1.0, 0.0]; // z^2 - 0.3 z
        let mut inner = ptr::null_mut();
        assert_eq!(
            wcheb_weight_abs_poly_power(factor.as_ptr(), 3, -1.0, &mut inner),
            WchebStatus::Ok
        );
        let mut w = ptr::null_mut();
        assert_eq!(
            wcheb_weight_restrict_disk(inner, 0.0, 0.0, 1.5, &mut w),
            WchebStatus::Ok
        );
        wcheb_weight_free(inner);

        let mut val = 0.0f64;
        assert_eq!(wcheb_weight_eval(w, 1.0, 0.0, &mut val), WchebStatus::Ok);
        assert!((val - 1.0 / 0.7).abs() <= 1e-12);
        assert_eq!(wcheb_weight_eval(w, 2.0, 0.0, &mut val), WchebStatus::Ok);
        assert_eq!(val, 0.0, "outside the restriction disk");

        let mut opts = std::mem::zeroed::<WchebSolveOpts>();
        assert_eq!(wcheb_solve_opts_default(&mut opts), WchebStatus::Ok);
        opts.method = WchebMethod::Lawson;
        opts.grid_density = 512;

        let mut result = ptr::null_mut();
        assert_eq!(wcheb_solve(set, w, 2, &opts, &mut result), WchebStatus::Ok);
        let mut coeffs = [0.0f64; 6];
        assert_eq!(
            wcheb_result_coeffs(result, coeffs.as_mut_ptr(), 3),
            WchebStatus::Ok
        );
        let expect = [0.0, -0.3, 1.0];
        for (k, pair) in coeffs.chunks_exact(2).enumerate() {
            assert!(
                (pair[0] - expect[k]).abs() <= 1e-5 && pair[1].abs() <= 1e-5,
                "coefficient {k}: {pair:?}"
            );
        }

        let mut rep = std::mem::zeroed::<WchebWidomReport>();
        assert_eq!(wcheb_widom(set, w, result, &mut rep), WchebStatus::Ok);
        assert!(rep.has_ratio);
        assert!((rep.ratio - 1.0).abs() <= 1e-6, "saturation ratio {}", rep.ratio);

        wcheb_result_free(result);
        wcheb_weight_free(w);
        wcheb_set_free(set);
    }
}

#[test]
fn preimage_set_and_pullback_weight() {
    unsafe {
        let base = make_interval(-1.0, 1.0);
        let map = [-2.0, 0.0, 0.0, 0.0, 1.0, 0.0]; // z^2 - 2
        let mut pre = ptr::null_mut();
        assert_eq!(
            wcheb_set_preimage(map.as_ptr(), 3, base, &mut pre),
            WchebStatus::Ok
        );

        // capacity of the preimage is the square root of the base's 1/2
        let mut cap = 0.0f64;
        let mut exact = false;
        assert_eq!(wcheb_capacity(pre, &mut cap, &mut exact), WchebStatus::Ok);
        assert!(exact);
        assert!((cap - 0.5f64.sqrt()).abs() <= 1e-14, "cap = {cap}");

        // base handle is still alive and independently usable
        let mut base_cap = 0.0f64;
        assert_eq!(
            wcheb_capacity(base, &mut base_cap, ptr::null_mut()),
            WchebStatus::Ok
        );
        assert!((base_cap - 0.5).abs() <= 1e-14);

        let mut g = 0.0f64;
        assert_eq!(wcheb_green(pre, 3.0, 0.0, &mut g), WchebStatus::Ok);
        assert!(g > 0.0);
        assert_eq!(wcheb_green(pre, 1.2, 0.0, &mut g), WchebStatus::Ok);
        assert!(g.abs() <= 1e-12, "on-set point has Green value {g}");

        let inner = make_constant(1.0);
        let mut w = ptr::null_mut();
        assert_eq!(
            wcheb_weight_pullback(map.as_ptr(), 3, inner, &mut w),
            WchebStatus::Ok
        );
        let mut sval = 0.0f64;
        let mut in_class = false;
        assert_eq!(wcheb_szego(pre, w, &mut sval, &mut in_class), WchebStatus::Ok);
        assert!(in_class);
        assert!((sval - 1.0).abs() <= 1e-12, "unit pullback has mean {sval}");

        wcheb_weight_free(w);
        wcheb_weight_free(inner);
        wcheb_set_free(pre);
        wcheb_set_free(base);
    }
}

#[test]
fn multi_factor_weight_builder() {
    unsafe {
        let set = make_interval(-1.0, 1.0);
        let f1 = [-2.0, 0.0, 1.0, 0.0]; // z - 2
        let f2 = [1.0, 0.0, 0.0, 0.0, 1.0, 0.0]; // z^2 + 1
        let mut w = ptr::null_mut();
        assert_eq!(
            wcheb_weight_abs_poly_power(f1.as_ptr(), 2, 0.5, &mut w),
            WchebStatus::Ok
        );
        assert_eq!(
            wcheb_weight_abs_poly_append(w, f2.as_ptr(), 3, 1.5),
            WchebStatus::Ok
        );

        // product structure: w(0) = |0 - 2|^0.5 * |1|^1.5
        let mut val = 0.0f64;
        assert_eq!(wcheb_weight_eval(w, 0.0, 0.0, &mut val), WchebStatus::Ok);
        assert!((val - 2.0f64.sqrt()).abs() <= 1e-12);

        // appending to a non-product weight is rejected
        let flat = make_constant(1.0);
        assert_eq!(
            wcheb_weight_abs_poly_append(flat, f1.as_ptr(), 2, 1.0),
            WchebStatus::InvalidArgument
        );

        let mut result = ptr::null_mut();
        assert_eq!(wcheb_solve(set, w, 2, ptr::null(), &mut result), WchebStatus::Ok);
        let mut cert = std::mem::zeroed::<WchebCertificate>();
        assert_eq!(wcheb_certify(set, w, result, 0, &mut cert), WchebStatus::Ok);
        assert_eq!(cert.verdict, WchebVerdict::Optimal);

        wcheb_result_free(result);
        wcheb_weight_free(flat);
        wcheb_weight_free(w);
        wcheb_set_free(set);
    }
}

#[test]
fn status_discipline_and_error_messages() {
    unsafe {
        // NULL out-pointer
        assert_eq!(
            wcheb_set_interval(-1.0, 1.0, ptr::null_mut()),
            WchebStatus::NullPointer
        );
        assert!(last_error_text().contains("NULL"));

        // invalid geometry leaves the out-pointer untouched
        let mut set: *mut WchebSet = ptr::null_mut();
        assert_eq!(
            wcheb_set_interval(2.0, -2.0, &mut set),
            WchebStatus::InvalidArgument
        );
        assert!(set.is_null());
        assert!(!last_error_text().is_empty());

        // overlapping unions are rejected with a message
        let endpoints = [0.0, 2.0, 1.0, 3.0];
        assert_eq!(
            wcheb_set_interval_union(endpoints.as_ptr(), 2, &mut set),
            WchebStatus::InvalidArgument
        );
        assert!(last_error_text().contains("overlap"));

        // degree outside 1..=cap
        let good = make_interval(-1.0, 1.0);
        let w = make_constant(1.0);
        let mut result = ptr::null_mut();
        assert_eq!(
            wcheb_solve(good, w, 0, ptr::null(), &mut result),
            WchebStatus::InvalidArgument
        );
        assert_eq!(
            wcheb_solve(good, w, 10_000, ptr::null(), &mut result),
            WchebStatus::InvalidArgument
        );
        assert!(result.is_null());

        // nonpositive constant weight
        let mut bad = ptr::null_mut();
        assert_eq!(wcheb_weight_constant(0.0, &mut bad), WchebStatus::InvalidArgument);
        assert_eq!(wcheb_weight_constant(-1.0, &mut bad), WchebStatus::InvalidArgument);

        // too-small coefficient buffer
        assert_eq!(
            wcheb_solve(good, w, 3, ptr::null(), &mut result),
            WchebStatus::Ok
        );
        let mut tiny = [0.0f64; 4];
        assert_eq!(
            wcheb_result_coeffs(result, tiny.as_mut_ptr(), 2),
            WchebStatus::BufferTooSmall
        );
        assert!(last_error_text().contains("4"));

        // NULL frees are no-ops; NULL accessors degrade to sentinels
        wcheb_set_free(ptr::null_mut());
        wcheb_weight_free(ptr::null_mut());
        wcheb_result_free(ptr::null_mut());
        assert_eq!(wcheb_result_degree(ptr::null()), 0);
        assert!(wcheb_result_norm(ptr::null()).is_nan());

        wcheb_result_free(result);
        wcheb_weight_free(w);
        wcheb_set_free(good);
    }
}

#[test]
fn unconverged_solves_report_solver_failure() {
    unsafe {
        let mut set = ptr::null_mut();
        assert_eq!(wcheb_set_circle(0.0, 0.0, 1.0, &mut set), WchebStatus::Ok);
        // |z - 0.3| makes the Lawson masses genuinely move, so one
        // iteration cannot reach the fixed point
        let factor = [-0.3, 0.0, 1.0, 0.0];
        let mut w = ptr::null_mut();
        assert_eq!(
            wcheb_weight_abs_poly_power(factor.as_ptr(), 2, 1.0, &mut w),
            WchebStatus::Ok
        );

        let mut opts = std::mem::zeroed::<WchebSolveOpts>();
        assert_eq!(wcheb_solve_opts_default(&mut opts), WchebStatus::Ok);
        opts.method = WchebMethod::Lawson;
        opts.max_iter = 1;
        opts.grid_density = 64;

        let mut result = ptr::null_mut();
        let status = wcheb_solve(set, w, 2, &opts, &mut result);
        assert_eq!(status, WchebStatus::SolverFailure);
        assert!(result.is_null());
        assert!(last_error_text().contains("convergence"));

        wcheb_weight_free(w);
        wcheb_set_free(set);
    }
}

#[test]
fn tabulated_weights_cross_the_boundary() {
    unsafe {
        let n = 257usize;
        let mut points = Vec::with_capacity(2 * n);
        let mut values = Vec::with_capacity(n);
        for j in 0..n {
            let x = -1.0 + 2.0 * j as f64 / (n - 1) as f64;
            points.push(x);
            points.push(0.0);
            values.push(if x < 0.0 { 1.0 } else { 2.0 });
        }
        let mut w = ptr::null_mut();
        assert_eq!(
            wcheb_weight_tabulated(points.as_ptr(), values.as_ptr(), n, 0.05, false, &mut w),
            WchebStatus::Ok
        );
        let mut val = 0.0f64;
        assert_eq!(wcheb_weight_eval(w, -0.5, 0.0, &mut val), WchebStatus::Ok);
        assert_eq!(val, 1.0);
        assert_eq!(wcheb_weight_eval(w, 0.5, 0.0, &mut val), WchebStatus::Ok);
        assert_eq!(val, 2.0);
        wcheb_weight_free(w);
    }
}

#[test]
fn version_and_header_are_published() {
    let v = wcheb_version();
    assert!(!v.is_null());
    let s = unsafe { CStr::from_ptr(v) }.to_str().unwrap();
    assert_eq!(s, env!("CARGO_PKG_VERSION"));

    // the build script keeps the committed header in sync
    let header = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("include/wcheb.h");
    let text = std::fs::read_to_string(&header).expect("include/wcheb.h exists");
    for sym in [
        "WCHEB_H",
        "wcheb_solve",
        "wcheb_last_error",
        "WchebStatus",
        "WCHEB_STATUS_OK",
        "typedef struct WchebSet WchebSet;",
    ] {
        assert!(text.contains(sym), "header is missing {sym}");
    }
}
