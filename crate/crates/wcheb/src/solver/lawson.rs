//! Lawson iteration for discrete weighted minimax on arbitrary grids.
//!
//! Keeps a probability mass vector μ on the grid, solves each weighted
//! least-squares problem `min Σ μ_j (w_j |P(z_j)|)²` over monic P by an
//! orthogonal basis built against the current discrete measure
//! (Stieltjes/Arnoldi), then reweights `μ_j ∝ μ_j · w_j|P(z_j)|`. The
//! masses concentrate on the extremal set and the least-squares solution
//! tends to the discrete minimax solution.

use crate::domain::Grid;
use crate::poly::Poly;
use crate::solver::{ChebyshevResult, SolveOpts, SolverError};
use crate::weight::Weight;
use crate::C64;

pub fn lawson_discrete(
    grid: &Grid,
    w: &Weight,
    n: usize,
    opts: &SolveOpts,
) -> Result<ChebyshevResult, SolverError> {
    if n < 1 {
        return Err(SolverError::Unsupported("degree must be at least 1".into()));
    }
    if n > crate::DEGREE_CAP {
        return Err(SolverError::Poly(crate::poly::PolyError::DegreeCapExceeded {
            degree: n,
            cap: crate::DEGREE_CAP,
        }));
    }

    // active points: finite positive weight
    let mut zs: Vec<C64> = Vec::new();
    let mut ws: Vec<f64> = Vec::new();
    for z in &grid.points {
        if let Ok(wv) = w.eval(*z) {
            if wv > 0.0 && wv.is_finite() {
                zs.push(*z);
                ws.push(wv);
            }
        }
    }
    let m = zs.len();
    if m < n + 2 {
        return Err(SolverError::RankDeficient(format!(
            "{m} positive-weight grid points cannot determine degree {n}"
        )));
    }
    let all_real = zs.iter().all(|z| z.im == 0.0);

    let mut mu = vec![1.0 / m as f64; m];
    let mut iterations = 0usize;
    let mut residual = f64::INFINITY;
    let mut converged = false;
    let mut t = Poly::zero();
    let mut evals: Vec<f64> = vec![0.0; m];

    for it in 1..=opts.lawson_iters() {
        iterations = it;
        let p = monic_least_squares(&zs, &ws, &mu, n)?;

        let mut max_e = 0.0f64;
        let mut mean_e = 0.0f64;
        for j in 0..m {
            let e = ws[j] * p.eval(zs[j]).norm();
            evals[j] = e;
            max_e = max_e.max(e);
            mean_e += mu[j] * e;
        }
        t = p;
        residual = max_e / mean_e.max(1e-300) - 1.0;
        if residual <= opts.lawson_tol() {
            converged = true;
            break;
        }

        let mut total = 0.0;
        for j in 0..m {
            mu[j] *= evals[j];
            total += mu[j];
        }
        if total <= 0.0 {
            return Err(SolverError::RankDeficient(
                "mass update annihilated every grid point".into(),
            ));
        }
        for x in &mut mu {
            *x /= total;
        }
    }

    if all_real {
        t = realify(&t);
    }
    let t = t.make_monic()?;

    let mut norm = 0.0f64;
    for j in 0..m {
        evals[j] = ws[j] * t.eval(zs[j]).norm();
        norm = norm.max(evals[j]);
    }
    // extremal set: everything within a whisker of the max, topped up to
    // n+1 points by rank when the discrete plateau is narrow
    let mut order: Vec<usize> = (0..m).collect();
    order.sort_by(|&i, &j| evals[j].total_cmp(&evals[i]));
    let cut = norm * (1.0 - 1e-6);
    let mut take = order.iter().take_while(|&&j| evals[j] >= cut).count();
    take = take.max((n + 1).min(m));
    let mut extremal: Vec<(C64, f64)> =
        order[..take].iter().map(|&j| (zs[j], evals[j])).collect();
    extremal.sort_by(|a, b| a.0.re.total_cmp(&b.0.re).then(a.0.im.total_cmp(&b.0.im)));

    Ok(ChebyshevResult { t, norm, extremal_points: extremal, iterations, converged, residual })
}

/// Monic degree-n minimizer of `Σ μ_j w_j² |P(z_j)|²` via Arnoldi
/// orthogonalization of {1, z, …, zⁿ} against the discrete measure
/// `Σ μ_j w_j² δ_{z_j}`. The monic minimizer is qₙ divided by its
/// leading coefficient, tracked through the recurrence.
fn monic_least_squares(
    zs: &[C64],
    ws: &[f64],
    mu: &[f64],
    n: usize,
) -> Result<Poly, SolverError> {
    let m = zs.len();
    let mass: Vec<f64> = (0..m).map(|j| mu[j] * ws[j] * ws[j]).collect();
    let inner = |f: &[C64], g: &[C64]| -> C64 {
        let mut s = C64::new(0.0, 0.0);
        for j in 0..m {
            s += mass[j] * f[j] * g[j].conj();
        }
        s
    };

    let mut basis_vals: Vec<Vec<C64>> = Vec::with_capacity(n + 1);
    let mut basis_polys: Vec<Poly> = Vec::with_capacity(n + 1);

    let ones = vec![C64::new(1.0, 0.0); m];
    let n0 = inner(&ones, &ones).re.sqrt();
    if n0 <= 0.0 {
        return Err(SolverError::RankDeficient("empty discrete measure".into()));
    }
    basis_vals.push(ones.iter().map(|v| v / n0).collect());
    basis_polys.push(Poly::constant(C64::new(1.0 / n0, 0.0)));

    for k in 0..n {
        let mut vals: Vec<C64> = (0..m).map(|j| zs[j] * basis_vals[k][j]).collect();
        let mut poly = basis_polys[k].mul(&Poly::identity());
        // modified Gram–Schmidt, twice for stability
        for _pass in 0..2 {
            for i in 0..=k {
                let c = inner(&vals, &basis_vals[i]);
                for j in 0..m {
                    vals[j] -= c * basis_vals[i][j];
                }
                poly = poly.sub(&basis_polys[i].scale(c));
            }
        }
        let h = inner(&vals, &vals).re.sqrt();
        let scale = zs.iter().map(|z| z.norm()).fold(0.0f64, f64::max).max(1.0);
        if h <= 1e-14 * scale {
            return Err(SolverError::RankDeficient(format!(
                "discrete measure supports no degree-{} orthogonal polynomial",
                k + 1
            )));
        }
        for v in &mut vals {
            *v /= h;
        }
        basis_vals.push(vals);
        basis_polys.push(poly.scale(C64::new(1.0 / h, 0.0)));
    }

    let lead = basis_polys[n].leading();
    if lead.norm() == 0.0 {
        return Err(SolverError::RankDeficient("orthogonal basis lost its degree".into()));
    }
    Ok(basis_polys[n].scale(1.0 / lead))
}

fn realify(p: &Poly) -> Poly {
    let scale = p.coeff_l1().max(1e-300);
    let coeffs: Vec<C64> = p
        .coeffs()
        .iter()
        .map(|c| {
            if c.im.abs() <= 1e-10 * scale {
                C64::new(c.re, 0.0)
            } else {
                *c
            }
        })
        .collect();
    Poly::new(coeffs)
}
