//! Acceptance checks, one test per criterion. The harness prints one
//! pass/fail line for each (`test criterion_NN_... ... ok`); every test
//! additionally prints its measured quantities, visible with
//! `--nocapture` or on failure.

use std::time::{Duration, Instant};

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use wcheb::bounds;
use wcheb::certificate::{
    self, extremal_points, kolmogorov_check, suggested_tol_rel, Certificate,
};
use wcheb::domain::CompactSet;
use wcheb::poly::Poly;
use wcheb::potential::{self, Pole, QuadOpts};
use wcheb::solver::{self, Method, SolveOpts};
use wcheb::weight::{Region, Weight};
use wcheb::C64;

fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

fn unit() -> Weight {
    Weight::constant(1.0).unwrap()
}

fn interval() -> CompactSet {
    CompactSet::interval(-1.0, 1.0).unwrap()
}

/// Deterministic exterior points: radial rays around the sampled hull,
/// kept where the Green function is strictly positive.
fn exterior_samples(set: &CompactSet, count: usize, seed: u64) -> Vec<C64> {
    let grid = set.sample(256).unwrap();
    let m = grid.points.len() as f64;
    let center = grid.points.iter().sum::<C64>() / m;
    let radius = grid
        .points
        .iter()
        .map(|z| (z - center).norm())
        .fold(0.0f64, f64::max)
        .max(1e-3);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let theta = rng.gen_range(0.0..std::f64::consts::TAU);
        let rad = radius * rng.gen_range(1.2..3.0);
        let z = center + C64::from_polar(rad, theta);
        if let Ok(g) = potential::green(set, z) {
            if g > 1e-9 {
                out.push(z);
            }
        }
    }
    out
}

/// The standard battery: named (set, weight, degree) triples covering
/// intervals, a scaled interval, quadratic-preimage unions, and circles
/// whose extremal functions have constant modulus (so discrete sup
/// norms are exact). `real` marks subsets of the real line.
struct BatteryCase {
    name: &'static str,
    set: CompactSet,
    w: Weight,
    n: usize,
    real: bool,
}

fn battery() -> Vec<BatteryCase> {
    let two2 = Poly::from_real(&[-2.0, 0.0, 1.0]);
    let pre = CompactSet::preimage(two2.clone(), interval()).unwrap();
    vec![
        BatteryCase { name: "interval, w = 1, n = 2", set: interval(), w: unit(), n: 2, real: true },
        BatteryCase { name: "interval, w = 1, n = 5", set: interval(), w: unit(), n: 5, real: true },
        BatteryCase {
            name: "interval, w = |x|, n = 3",
            set: interval(),
            w: Weight::abs_poly_power(Poly::from_real(&[0.0, 1.0]), 1.0).unwrap(),
            n: 3,
            real: true,
        },
        BatteryCase {
            name: "interval, w = 1 + x^2, n = 2",
            set: interval(),
            w: Weight::abs_poly_power(Poly::from_real(&[1.0, 0.0, 1.0]), 1.0).unwrap(),
            n: 2,
            real: true,
        },
        BatteryCase {
            name: "interval, w = |x - 0.2|, n = 4",
            set: interval(),
            w: Weight::abs_poly_power(Poly::from_real(&[-0.2, 1.0]), 1.0).unwrap(),
            n: 4,
            real: true,
        },
        BatteryCase {
            name: "[0, 3], w = 1, n = 3",
            set: CompactSet::interval(0.0, 3.0).unwrap(),
            w: unit(),
            n: 3,
            real: true,
        },
        BatteryCase {
            name: "preimage union, w = 1, n = 2",
            set: pre.clone(),
            w: unit(),
            n: 2,
            real: true,
        },
        BatteryCase {
            name: "preimage union, w = |u - 0.2| pulled back, n = 2",
            set: pre,
            w: Weight::pullback(
                two2,
                Weight::abs_poly_power(Poly::from_real(&[-0.2, 1.0]), 1.0).unwrap(),
            )
            .unwrap(),
            n: 2,
            real: true,
        },
        BatteryCase {
            name: "unit circle, w = 1, n = 3",
            set: CompactSet::circle(c(0.0, 0.0), 1.0).unwrap(),
            w: unit(),
            n: 3,
            real: false,
        },
        BatteryCase {
            name: "circle r = 2, w = 1, n = 4",
            set: CompactSet::circle(c(0.0, 0.0), 2.0).unwrap(),
            w: unit(),
            n: 4,
            real: false,
        },
        BatteryCase {
            name: "unit circle, saturated w = 1/|z(z - 0.3)|, n = 2",
            set: CompactSet::circle(c(0.0, 0.0), 1.0).unwrap(),
            w: Weight::restricted(
                Weight::abs_poly_power(Poly::from_real(&[0.0, -0.3, 1.0]), -1.0).unwrap(),
                Region::Disk { center: c(0.0, 0.0), radius: 1.5 },
            ),
            n: 2,
            real: false,
        },
    ]
}

#[test]
fn criterion_01_classical_recovery() {
    let set = interval();
    let mut opts = SolveOpts::default();
    opts.method = Method::Remez;
    let start = Instant::now();
    let mut lines = Vec::new();
    for n in 1..=8usize {
        let rep = solver::widom_factor(&set, &unit(), n, &opts).unwrap();
        let expect = 2f64.powi(1 - n as i32);
        assert!(
            (rep.t_n - expect).abs() <= 1e-8 * expect,
            "t_{n} = {} vs {expect}",
            rep.t_n
        );
        assert!((rep.w_n - 2.0).abs() <= 2e-8, "W_{n} = {}", rep.w_n);
        lines.push(format!("t_{n} = {:.3e} (= 2^{})", rep.t_n, 1 - (n as i32)));
    }
    let dt = start.elapsed();
    assert!(dt < Duration::from_secs(1), "took {dt:?}");
    println!("criterion 1 (classical recovery on [-1,1], n = 1..8, {dt:?}): PASS");
    for l in lines {
        println!("  {l}");
    }
}

#[test]
fn criterion_02_preimage_invariance() {
    let p = Poly::from_real(&[-2.0, 0.0, 1.0]);
    let base = interval();
    let s3 = 3f64.sqrt();
    let union = CompactSet::interval_union(vec![(-s3, -1.0), (1.0, s3)]).unwrap();
    let pre = CompactSet::preimage(p.clone(), base.clone()).unwrap();
    let w_lift = Weight::pullback(p.clone(), unit()).unwrap();
    let mut opts = SolveOpts::default();
    opts.method = Method::Remez;

    let start = Instant::now();
    for n in 1..=4usize {
        let base_res = solver::solve(&base, &unit(), n, &opts).unwrap();
        let lifted = solver::preimage_transfer(&base_res, &p, &base).unwrap();
        let direct = solver::solve(&union, &w_lift, 2 * n, &opts).unwrap();
        assert!(direct.converged);

        let diff = lifted
            .t
            .coeffs()
            .iter()
            .zip(direct.t.coeffs())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0f64, f64::max);
        assert!(diff <= 1e-6, "n = {n}: transfer vs direct differ by {diff:.3e}");

        let wb = solver::widom_from_result(&base, &unit(), &base_res, &opts).unwrap();
        let wd = solver::widom_from_result(&pre, &w_lift, &direct, &opts).unwrap();
        let gap = (wd.w_n - wb.w_n).abs();
        assert!(gap <= 1e-6, "n = {n}: |W_{} - W_{n}| = {gap:.3e}", 2 * n);
        println!(
            "  n = {n}: coefficient gap {diff:.3e}, Widom gap {gap:.3e} (W = {:.12})",
            wb.w_n
        );
    }
    let dt = start.elapsed();
    assert!(dt < Duration::from_secs(5), "took {dt:?}");
    println!("criterion 2 (preimage invariance for z^2 - 2, n = 1..4, {dt:?}): PASS");
}

#[test]
fn criterion_03_szego_lower_bound_battery() {
    let mut opts = SolveOpts::default();
    opts.grid_density = 1024;
    let cases = battery();
    assert!(cases.len() >= 10);
    for case in &cases {
        let rep = solver::widom_factor(&case.set, &case.w, case.n, &opts).unwrap();
        assert!(rep.szego_class, "{}: weight left the Szegő class", case.name);
        let ratio = rep.ratio.unwrap();
        assert!(
            ratio >= 1.0 - 1e-9,
            "{}: W_n/S = {ratio} violates the lower bound",
            case.name
        );
        if case.real {
            assert!(
                ratio > 1.0 + 1e-9,
                "{}: real set should give a strict gap, got {ratio}",
                case.name
            );
        }
        println!("  {} -> W_n/S = {:.12}", case.name, ratio);
    }
    println!(
        "criterion 3 (Szegő lower bound on a battery of {} instances): PASS",
        cases.len()
    );
}

#[test]
fn criterion_04_equality_case_on_circle() {
    let circle = CompactSet::circle(c(0.0, 0.0), 1.0).unwrap();
    let w = Weight::restricted(
        Weight::abs_poly_power(Poly::from_real(&[0.0, -0.3, 1.0]), -1.0).unwrap(),
        Region::Disk { center: c(0.0, 0.0), radius: 1.5 },
    );

    let start = Instant::now();
    let grid = circle.sample(512).unwrap();
    let res = solver::lawson_discrete(&grid, &w, 2, &SolveOpts::default()).unwrap();
    assert!(res.converged);

    let expect = [c(0.0, 0.0), c(-0.3, 0.0), c(1.0, 0.0)];
    let coeff_err = res
        .t
        .coeffs()
        .iter()
        .zip(expect.iter())
        .map(|(a, b)| (a - b).norm())
        .fold(0.0f64, f64::max);
    assert!(coeff_err <= 1e-5, "T_2 off by {coeff_err:.3e}");

    let rep = solver::widom_from_result(&circle, &w, &res, &SolveOpts::default()).unwrap();
    let widom_gap = (rep.w_n - rep.s_w).abs();
    assert!(widom_gap <= 1e-6, "W_2 = {} vs S = {}", rep.w_n, rep.s_w);

    let eq = certificate::equality_case_check(&circle, &w, &res, 1e-4).unwrap();
    assert!(eq.zero_locations_ok && eq.ae_maximality_ok && eq.equality);

    let dt = start.elapsed();
    assert!(dt < Duration::from_secs(5), "took {dt:?}");
    println!(
        "criterion 4 (saturated circle weight recovers z(z - 0.3), {dt:?}): PASS \
         (coefficient error {coeff_err:.3e}, |W_2 - S| = {widom_gap:.3e})"
    );
}

#[test]
fn criterion_05_sharpness_sweep() {
    let set = interval();
    let eps = [0.3, 0.1, 0.03, 0.01];
    let opts = SolveOpts::default();

    let start = Instant::now();
    let reports = bounds::sharpness_sweep(&set, 2, &eps, false, &opts).unwrap();
    let ratios: Vec<f64> = reports.iter().map(|r| r.series[0].1).collect();
    for r in &reports {
        assert!(r.pass, "{}: margin {}", r.name, r.margin);
    }
    for w in ratios.windows(2) {
        assert!(w[1] <= w[0] + 1e-6, "ratios not nonincreasing: {ratios:?}");
    }
    let last = *ratios.last().unwrap();
    assert!((1.0 - 1e-9..=1.03).contains(&last), "final ratio {last}");

    // fixed-degree polynomial approximants at the widest spike, where a
    // degree-64 Chebyshev interpolant resolves the weight fully
    let approx = bounds::sharpness_sweep(&set, 2, &[0.3], true, &opts).unwrap();
    let series = &approx[0].series;
    let spike_ratio = series[0].1;
    let deg64 = series
        .iter()
        .find(|s| s.0 == 64.0)
        .expect("degree-64 entry")
        .1;
    assert!(
        (deg64 - spike_ratio).abs() <= 1e-2,
        "degree-64 ratio {deg64} vs spike ratio {spike_ratio}"
    );

    let dt = start.elapsed();
    assert!(dt < Duration::from_secs(30), "took {dt:?}");
    println!(
        "criterion 5 (sharpness sweep, ratios {ratios:?}, degree-64 within \
         {:.3e}, {dt:?}): PASS",
        (deg64 - spike_ratio).abs()
    );
}

#[test]
fn criterion_06_certificate_duality() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_cafe);
    for case in 0..20 {
        let (set, w): (CompactSet, Weight) = if case % 2 == 0 {
            let a = rng.gen_range(0.2..2.0);
            (
                interval(),
                Weight::abs_poly_power(Poly::from_real(&[1.0, 0.0, a]), 1.0).unwrap(),
            )
        } else {
            let cshift: f64 = rng.gen_range(1.5..2.5);
            let lo = -(cshift + 1.0).sqrt();
            let hi = (cshift + 1.0).sqrt();
            let inner_lo = -(cshift - 1.0).sqrt();
            let inner_hi = (cshift - 1.0).sqrt();
            (
                CompactSet::interval_union(vec![(lo, inner_lo), (inner_hi, hi)]).unwrap(),
                unit(),
            )
        };
        let n = rng.gen_range(2..=4usize);
        let mut opts = SolveOpts::default();
        opts.grid_density = 1024;
        let r = solver::remez_real(&set, &w, n, &opts).unwrap();
        assert!(r.converged, "case {case} failed to converge");

        let grid = set.sample(1024).unwrap();
        let tol_rel = suggested_tol_rel(&r.t, &grid, r.norm);
        let e = extremal_points(&r.t, &w, &set, &grid, tol_rel).unwrap();
        match kolmogorov_check(&r.t, &w, &grid, &e, 1e-8).unwrap() {
            Certificate::Optimal(rs) => {
                let m = rs.points.len();
                assert!(m >= n + 1 && m <= 2 * n + 1, "case {case}: support {m}");
                assert!(rs.residual <= 1e-8, "case {case}: residual {}", rs.residual);
            }
            other => panic!("case {case}: expected Optimal, got {other:?}"),
        }

        // perturb by 1e-2 in a random lower-degree direction
        let delta = 1e-2;
        let mut qc: Vec<f64> = (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect();
        let qmax = qc.iter().fold(0.0f64, |m, x| m.max(x.abs())).max(1e-9);
        for x in &mut qc {
            *x *= delta / qmax;
        }
        let perturbed = r.t.add(&Poly::from_real(&qc));
        let pnorm = grid
            .points
            .iter()
            .filter_map(|z| w.eval(*z).ok().map(|wv| wv * perturbed.eval(*z).norm()))
            .fold(0.0f64, f64::max);
        let ep = extremal_points(&perturbed, &w, &set, &grid, tol_rel).unwrap();
        match kolmogorov_check(&perturbed, &w, &grid, &ep, 1e-8).unwrap() {
            Certificate::Improvable(imp) => {
                assert!(
                    imp.new_norm < pnorm - 1e-12 * pnorm,
                    "case {case}: no strict decrease ({} !< {pnorm})",
                    imp.new_norm
                );
            }
            other => panic!("case {case}: expected Improvable, got {other:?}"),
        }
    }
    println!("criterion 6 (Kolmogorov/Rivlin–Shapiro duality on 20 randomized instances): PASS");
}

#[test]
fn criterion_07_bernstein_walsh_battery() {
    let mut opts = SolveOpts::default();
    opts.grid_density = 1024;
    for (i, case) in battery().iter().enumerate() {
        let res = solver::solve(&case.set, &case.w, case.n, &opts).unwrap();
        let zs = exterior_samples(&case.set, 50, 0xb3_57 + i as u64);
        let rep = bounds::bernstein_walsh_check(&case.set, &case.w, &res.t, &zs, &opts).unwrap();
        assert!(
            rep.pass,
            "{}: margin {} below -10x quadrature error",
            case.name, rep.margin
        );
        println!("  {} -> binding margin {:.3e}", case.name, rep.margin);
    }

    // exact equality for z^n on the circle with w = 1
    let circle = CompactSet::circle(c(0.0, 0.0), 1.0).unwrap();
    let res = solver::solve(&circle, &unit(), 3, &opts).unwrap();
    let zs = [c(1.7, 0.4), c(-0.3, 2.1), c(2.4, -1.2)];
    let rep = bounds::bernstein_walsh_check(&circle, &unit(), &res.t, &zs, &opts).unwrap();
    assert!(
        rep.margin.abs() <= 1e-9,
        "z^3 equality case has margin {}",
        rep.margin
    );
    println!(
        "criterion 7 (Bernstein–Walsh at 50 exterior points per instance; \
         z^n margin {:.3e}): PASS",
        rep.margin
    );
}

#[test]
fn criterion_08_potential_identities() {
    let quad = QuadOpts::default();

    // the single-factor Szegő value against independent equilibrium
    // quadrature, over 30 (set, z0) pairs
    let sets = [
        interval(),
        CompactSet::circle(c(0.2, 0.0), 1.5).unwrap(),
        CompactSet::preimage(Poly::from_real(&[-2.0, 0.0, 1.0]), interval()).unwrap(),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(0x9a1e_77);
    let mut pairs = 0usize;
    let mut worst_spcase = 0.0f64;
    for set in &sets {
        let mut done = 0usize;
        while done < 10 {
            let z0 = c(rng.gen_range(-4.0..4.0), rng.gen_range(-4.0..4.0));
            match potential::green(set, z0) {
                Ok(g) if g > 0.25 => {}
                _ => continue,
            }
            done += 1;
            pairs += 1;
            let w = Weight::abs_poly_power(Poly::new(vec![-z0, c(1.0, 0.0)]), 1.0).unwrap();
            let exact = potential::szego_integral(set, &w, &quad).unwrap();
            assert!(exact.exact, "root route expected for a polynomial factor");
            let pv = potential::poisson_integral(
                set,
                |zeta: C64| (z0 - zeta).norm().ln(),
                Pole::Infinity,
                &quad,
            )
            .unwrap();
            let err = (exact.value - pv.value.exp()).abs() / exact.value.max(1.0);
            assert!(err <= 1e-8, "S(|z - z0|) mismatch {err:.3e} at z0 = {z0}");
            worst_spcase = worst_spcase.max(err);
        }
    }
    assert_eq!(pairs, 30);

    // log S as a Poisson integral for higher-degree factors
    let mut worst_logs = 0.0f64;
    for (set, p, a) in [
        (interval(), Poly::from_real(&[0.25, 0.0, 1.0]), 1.0),
        (interval(), Poly::from_real(&[-2.5, 0.0, 1.0]), 0.5),
        (CompactSet::circle(c(0.0, 0.0), 1.0).unwrap(), Poly::from_real(&[-2.0, 1.0]), 2.0),
    ] {
        let w = Weight::abs_poly_power(p.clone(), a).unwrap();
        let exact = potential::szego_integral(&set, &w, &quad).unwrap();
        let pv = potential::poisson_integral(
            &set,
            |zeta: C64| a * p.eval(zeta).norm().ln(),
            Pole::Infinity,
            &quad,
        )
        .unwrap();
        let err = (exact.value - pv.value.exp()).abs() / exact.value.max(1.0);
        assert!(err <= 1e-8, "log S quadrature mismatch {err:.3e}");
        worst_logs = worst_logs.max(err);
    }

    // Green pullback against quadrature on the preimage
    let pre = CompactSet::preimage(Poly::from_real(&[-2.0, 0.0, 1.0]), interval()).unwrap();
    let mut worst_green = 0.0f64;
    for z in exterior_samples(&pre, 10, 0x6ee_1) {
        let exact = potential::green(&pre, z).unwrap();
        let pv = potential::green_quadrature(&pre, z, &quad).unwrap();
        let err = (exact - pv.value).abs();
        assert!(err <= 1e-6, "green pullback vs quadrature: {err:.3e} at {z}");
        worst_green = worst_green.max(err);
    }

    // multiplicativity over factor lists
    let mut worst_mult = 0.0f64;
    for set in [interval(), CompactSet::circle(c(0.0, 0.0), 1.0).unwrap()] {
        let p1 = Poly::from_real(&[-2.0, 1.0]);
        let p2 = Poly::from_real(&[1.0, 0.0, 1.0]);
        let s1 = potential::szego_integral(
            &set,
            &Weight::abs_poly_power(p1.clone(), 0.5).unwrap(),
            &quad,
        )
        .unwrap();
        let s2 = potential::szego_integral(
            &set,
            &Weight::abs_poly_power(p2.clone(), 1.5).unwrap(),
            &quad,
        )
        .unwrap();
        let s12 = potential::szego_integral(
            &set,
            &Weight::abs_poly(vec![(p1, 0.5), (p2, 1.5)]).unwrap(),
            &quad,
        )
        .unwrap();
        let err = (s12.value - s1.value * s2.value).abs() / s12.value.max(1.0);
        assert!(err <= 1e-8, "S not multiplicative: {err:.3e}");
        worst_mult = worst_mult.max(err);
    }

    println!(
        "criterion 8 (potential identities; worst errors: special case {worst_spcase:.3e}, \
         log S {worst_logs:.3e}, green {worst_green:.3e}, multiplicativity {worst_mult:.3e}): PASS"
    );
}

/// Interpolate `values` at `nodes` (complex Lagrange) and evaluate at `z`.
fn lagrange_eval(nodes: &[C64], values: &[C64], z: C64) -> C64 {
    let mut acc = c(0.0, 0.0);
    for (j, (&xj, &vj)) in nodes.iter().zip(values).enumerate() {
        let mut lj = c(1.0, 0.0);
        for (k, &xk) in nodes.iter().enumerate() {
            if k != j {
                lj *= (z - xk) / (xj - xk);
            }
        }
        acc += vj * lj;
    }
    acc
}

#[test]
fn criterion_09_newton_identities() {
    // power sums along fibers against direct root summation
    let mut rng = ChaCha8Rng::seed_from_u64(0x4e3_77);
    let mut worst = 0.0f64;
    for case in 0..50 {
        let m = rng.gen_range(2..=4usize);
        let mut coeffs: Vec<C64> = (0..m)
            .map(|_| c(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0)))
            .collect();
        coeffs.push(c(rng.gen_range(0.5..2.0), rng.gen_range(-1.0..1.0)));
        let p = Poly::new(coeffs);
        let zeta = c(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0));
        let k_max = 2 * m + 3;

        let sums = p.power_sums_fiber(zeta, k_max).unwrap();
        let roots = p.sub_constant(zeta).roots().unwrap();
        for k in 0..=k_max {
            let oracle: C64 = roots.iter().map(|r| r.powu(k as u32)).sum();
            let scale = roots
                .iter()
                .map(|r| r.norm().powi(k as i32))
                .sum::<f64>()
                .max(1.0);
            let err = (sums[k] - oracle).norm() / scale;
            assert!(
                err <= 1e-9,
                "case {case}: S_{k} off by {err:.3e} (m = {m}, zeta = {zeta})"
            );
            worst = worst.max(err);
        }
    }

    // the fiber sum of any q of degree <= nm - 1 is a polynomial of
    // degree <= n - 1 in the base variable: interpolating at n points
    // must predict it everywhere
    let mut worst_fit = 0.0f64;
    for case in 0..10 {
        let m = rng.gen_range(2..=3usize);
        let n = rng.gen_range(2..=3usize);
        let mut coeffs: Vec<C64> = (0..m)
            .map(|_| c(rng.gen_range(-1.5..1.5), rng.gen_range(-1.5..1.5)))
            .collect();
        coeffs.push(c(1.0, 0.0));
        let p = Poly::new(coeffs);
        let q = Poly::new(
            (0..n * m)
                .map(|_| c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
                .collect(),
        );

        // fiber sum via the power-sum recursion, no root extraction
        let fiber_sum = |zeta: C64| -> C64 {
            let sums = p.power_sums_fiber(zeta, q.degree()).unwrap();
            q.coeffs().iter().zip(&sums).map(|(ck, sk)| ck * sk).sum()
        };

        let nodes: Vec<C64> = (0..n)
            .map(|j| C64::from_polar(1.3, std::f64::consts::TAU * j as f64 / n as f64))
            .collect();
        let node_vals: Vec<C64> = nodes.iter().map(|&z| fiber_sum(z)).collect();
        let scale = node_vals.iter().map(|v| v.norm()).fold(1.0f64, f64::max);

        for j in 0..50 {
            let zeta = C64::from_polar(
                1.3,
                std::f64::consts::TAU * (j as f64 + 0.37) / 50.0,
            );
            let predicted = lagrange_eval(&nodes, &node_vals, zeta);
            let actual = fiber_sum(zeta);
            let err = (predicted - actual).norm() / scale;
            assert!(
                err <= 1e-8,
                "case {case}: fiber sum leaves degree {} (err {err:.3e})",
                n - 1
            );
            worst_fit = worst_fit.max(err);
        }
    }

    println!(
        "criterion 9 (Newton identities; worst power-sum error {worst:.3e}, \
         worst fiber-sum fit residual {worst_fit:.3e}): PASS"
    );
}

#[test]
fn criterion_10_usc_regularization() {
    let set = interval();
    let grid = set.sample(2048).unwrap();
    let radii = wcheb::weight::default_usc_radii(&grid);
    let spacing = 2.0 / (grid.points.len() as f64 - 1.0);

    let xs: Vec<f64> = grid.points.iter().map(|z| z.re).collect();
    let step = |x: f64| if x < 0.0 { 1.0 } else { 2.0 };
    let window = |x: f64| if (x - 0.3).abs() < 0.1 { 0.25 } else { 1.0 };
    let spike_at = xs
        .iter()
        .map(|x| (x - 0.5).abs())
        .enumerate()
        .min_by(|a, b| a.1.total_cmp(&b.1))
        .unwrap()
        .0;

    let make_tab = |values: Vec<f64>| {
        Weight::tabulated(grid.points.clone(), values, spacing, false).unwrap()
    };
    let weights: Vec<(&str, Weight)> = vec![
        ("step", make_tab(xs.iter().map(|&x| step(x)).collect())),
        ("window dip", make_tab(xs.iter().map(|&x| window(x)).collect())),
        ("single-node spike", {
            let mut v: Vec<f64> = vec![1.0; xs.len()];
            v[spike_at] = 3.0;
            make_tab(v)
        }),
    ];
    let fs: Vec<(&str, Box<dyn Fn(f64) -> f64>)> = vec![
        ("1", Box::new(|_| 1.0)),
        ("x", Box::new(|x| x)),
        ("x^2", Box::new(|x: f64| x * x)),
        ("cos 3x", Box::new(|x: f64| (3.0 * x).cos())),
        ("exp x", Box::new(|x: f64| x.exp())),
    ];

    let mut worst_rel = 0.0f64;
    for (wname, w) in &weights {
        let what = wcheb::weight::usc_regularize(w, &grid, &radii).unwrap();
        let mut max_w = 0.0f64;
        for z in &grid.points {
            let wv = w.eval(*z).unwrap();
            let hv = what.eval(*z).unwrap();
            assert!(
                hv >= wv - 1e-12,
                "{wname}: regularization dropped below the weight at {z}"
            );
            max_w = max_w.max(wv);
        }

        for (fname, f) in &fs {
            let norm_w = xs
                .iter()
                .zip(&grid.points)
                .map(|(&x, z)| w.eval(*z).unwrap() * f(x).abs())
                .fold(0.0f64, f64::max);
            let norm_hat = xs
                .iter()
                .zip(&grid.points)
                .map(|(&x, z)| what.eval(*z).unwrap() * f(x).abs())
                .fold(0.0f64, f64::max);
            assert!(norm_hat >= norm_w - 1e-12);

            // the envelope only sees f across one radius window, so the
            // norms agree up to the modulus of continuity of f there
            let lip = xs
                .windows(2)
                .zip(grid.points.windows(2))
                .map(|(xw, _)| (f(xw[1]) - f(xw[0])).abs() / (xw[1] - xw[0]))
                .fold(0.0f64, f64::max);
            let tol = 2.0 * radii[radii.len() - 1] * lip * max_w + 1e-12;
            let diff = norm_hat - norm_w;
            assert!(
                diff <= tol,
                "{wname} x {fname}: |wf| = {norm_w}, |ŵf| = {norm_hat}, tol {tol:.3e}"
            );
            worst_rel = worst_rel.max(diff / norm_w.max(1e-300));
        }
    }
    println!(
        "criterion 10 (USC regularization, 5 continuous f x 3 discontinuous w, \
         worst relative norm gap {worst_rel:.3e}): PASS"
    );
}
