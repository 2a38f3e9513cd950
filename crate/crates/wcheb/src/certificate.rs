//! Optimality certificates for weighted minimax polynomials.
//!
//! A monic `P` minimizes `max_K w|P|` iff no `q` of lower degree has
//! `Re[conj(P(z))·q(z)] < 0` at every point where `w|P|` attains its max.
//! Dually, optimality is witnessed by nonnegative multipliers λ on the
//! extremal set annihilating all moments `z^k·sgn(conj P(z))`, k < deg P.
//! This module extracts extremal sets, decides the dual system by
//! nonnegative least squares, prunes the witness to at most `2n+1`
//! points, and — for real problems — verifies the classical alternating
//! sign chain.

use crate::domain::{CompactSet, DomainError, Grid};
use crate::linalg::{self, LinalgError};
use crate::poly::{Poly, PolyError};
use crate::potential::{self, PotentialError, QuadOpts};
use crate::solver::ChebyshevResult;
use crate::weight::{Weight, WeightError};
use crate::C64;
use nalgebra::{DMatrix, DVector};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CertificateError {
    #[error("weighted modulus vanishes on the whole grid")]
    EmptyNorm,
    #[error("alternation chain has {found} points, need {need}")]
    ChainTooShort { found: usize, need: usize },
    #[error("alternation chain deviates by {max_dev:.3e}, allowed {allowed:.3e}")]
    AlternationDeviates { max_dev: f64, allowed: f64 },
    #[error("no multiplier certificate: {0}")]
    NoCertificate(String),
    #[error(
        "ambiguous: dual residual {residual:.3e} within a decade of tol {tol:.3e}; \
         refine the grid or the extremal tolerance"
    )]
    Ambiguous { residual: f64, tol: f64 },
    #[error("alternation needs a real problem: {0}")]
    NotReal(String),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Domain(#[from] DomainError),
    #[error(transparent)]
    Weight(#[from] WeightError),
    #[error(transparent)]
    Potential(#[from] PotentialError),
}

/// Points where `w|P|` comes within `tol_rel` of its grid maximum, with
/// off-grid refinement where the set and weight allow it.
#[derive(Debug, Clone)]
pub struct ExtremalSet {
    pub points: Vec<C64>,
    pub values: Vec<f64>,
    pub norm: f64,
    pub tol_rel: f64,
}

/// Nonnegative multipliers on extremal points annihilating the moments
/// `z^k sgn(conj P)`, `k < deg P`, normalized to sum 1. `residual` is the
/// Euclidean norm of the moment vector; `route_gap` re-checks the same
/// support with the unnormalized `conj P` weighting — the two routes must
/// certify the same thing.
#[derive(Debug, Clone)]
pub struct RivlinShapiro {
    pub points: Vec<C64>,
    pub multipliers: Vec<f64>,
    pub residual: f64,
    pub route_gap: f64,
}

/// A verified strict improvement: `P + step·direction` has smaller
/// weighted norm than `P`.
#[derive(Debug, Clone)]
pub struct Improvement {
    pub direction: Poly,
    pub step: f64,
    pub new_norm: f64,
    pub predicted_decrease: f64,
}

#[derive(Debug, Clone)]
pub enum Certificate {
    Optimal(RivlinShapiro),
    Improvable(Improvement),
}

/// Real alternating chain `x_0 < … < x_n` with `w(x_j)T(x_j)` equal to
/// `signs[j]·level` up to `max_deviation`.
#[derive(Debug, Clone)]
pub struct AlternationChain {
    pub points: Vec<f64>,
    pub signs: Vec<i8>,
    pub level: f64,
    pub max_deviation: f64,
}

#[derive(Debug, Clone, Copy)]
pub struct EqualityCase {
    pub equality: bool,
    pub zero_locations_ok: bool,
    pub ae_maximality_ok: bool,
}

/// Extremal-value tolerance adapted to how much cancellation the
/// monomial evaluation of `p` suffers on the grid's scale.
pub fn suggested_tol_rel(p: &Poly, grid: &Grid, norm: f64) -> f64 {
    let r = grid.points.iter().map(|z| z.norm()).fold(0.0f64, f64::max).max(1.0);
    let mut crude = 0.0;
    let mut rk = 1.0;
    for c in p.coeffs() {
        crude += c.norm() * rk;
        rk *= r;
    }
    let cond = (crude / norm.max(1e-300)).min(100.0);
    1e-6 * (1.0 + cond)
}

pub fn extremal_points(
    p: &Poly,
    w: &Weight,
    set: &CompactSet,
    grid: &Grid,
    tol_rel: f64,
) -> Result<ExtremalSet, CertificateError> {
    let mut pts: Vec<C64> = Vec::new();
    let mut vals: Vec<f64> = Vec::new();
    for z in &grid.points {
        if let Ok(wv) = w.eval(*z) {
            if wv > 0.0 && wv.is_finite() {
                pts.push(*z);
                vals.push(wv * p.eval(*z).norm());
            }
        }
    }
    let mut norm = vals.iter().copied().fold(0.0f64, f64::max);
    if !(norm > 0.0) || !norm.is_finite() {
        return Err(CertificateError::EmptyNorm);
    }

    let refine = w.is_continuous();
    // Candidate selection runs on grid values, which undershoot true peak
    // heights by O((grid spacing)^2); use a loose band when off-grid
    // refinement follows, and re-filter strictly afterwards.
    let band = tol_rel.max(1e-3);
    let mut out: Vec<(C64, f64)> = Vec::new();
    match set {
        CompactSet::Circle { center, radius } if refine => {
            // angular refinement between neighboring grid angles
            let mut ang: Vec<(f64, f64)> = pts
                .iter()
                .zip(&vals)
                .map(|(z, v)| ((z - center).im.atan2((z - center).re), *v))
                .collect();
            ang.sort_by(|a, b| a.0.total_cmp(&b.0));
            let m = ang.len();
            let f = |th: f64| -> f64 {
                let z = center + C64::new(0.0, th).exp() * *radius;
                w.eval(z).map(|wv| wv * p.eval(z).norm()).unwrap_or(0.0)
            };
            for i in 0..m {
                if ang[i].1 < (1.0 - band) * norm {
                    continue;
                }
                let prev = ang[(i + m - 1) % m].0 + if i == 0 { -std::f64::consts::TAU } else { 0.0 };
                let next = ang[(i + 1) % m].0 + if i + 1 == m { std::f64::consts::TAU } else { 0.0 };
                let th = crate::solver::remez::golden_max(f, prev, next);
                let (th, v) = if f(th) >= ang[i].1 { (th, f(th)) } else { (ang[i].0, ang[i].1) };
                out.push((center + C64::new(0.0, th).exp() * *radius, v));
            }
        }
        _ if refine && pts.iter().all(|z| z.im == 0.0) => {
            // real refinement between same-component neighbors
            let mut order: Vec<usize> = (0..pts.len()).collect();
            order.sort_by(|&i, &j| pts[i].re.total_cmp(&pts[j].re));
            let xs: Vec<f64> = order.iter().map(|&i| pts[i].re).collect();
            let vs: Vec<f64> = order.iter().map(|&i| vals[i]).collect();
            let comp = component_ids(&xs);
            let f = |x: f64| -> f64 {
                w.eval_real(x).map(|wv| wv * p.eval_real(x).norm()).unwrap_or(0.0)
            };
            let discrete = matches!(set, CompactSet::SampledSet(_));
            for i in 0..xs.len() {
                if discrete {
                    if vs[i] >= (1.0 - tol_rel) * norm {
                        out.push((C64::new(xs[i], 0.0), vs[i]));
                    }
                    continue;
                }
                if vs[i] < (1.0 - band) * norm {
                    continue;
                }
                let lo = if i > 0 && comp[i - 1] == comp[i] { xs[i - 1] } else { xs[i] };
                let hi = if i + 1 < xs.len() && comp[i + 1] == comp[i] { xs[i + 1] } else { xs[i] };
                let (mut x, mut v) = (xs[i], vs[i]);
                if hi > lo {
                    let g = crate::solver::remez::golden_max(f, lo, hi);
                    if f(g) >= v {
                        x = g;
                        v = f(g);
                    }
                }
                out.push((C64::new(x, 0.0), v));
            }
        }
        _ => {
            for (z, v) in pts.iter().zip(&vals) {
                if *v >= (1.0 - tol_rel) * norm {
                    out.push((*z, *v));
                }
            }
        }
    }

    // refinement may have pushed past the grid max and may have merged
    // neighboring grid maxima into one peak
    norm = out.iter().map(|p| p.1).fold(norm, f64::max);
    out.retain(|p| p.1 >= (1.0 - tol_rel) * norm);
    out.sort_by(|a, b| a.0.re.total_cmp(&b.0.re).then(a.0.im.total_cmp(&b.0.im)));
    let scale = out.iter().map(|p| p.0.norm()).fold(0.0f64, f64::max).max(1.0);
    out.dedup_by(|a, b| {
        if (a.0 - b.0).norm() <= 1e-7 * scale {
            b.1 = b.1.max(a.1);
            true
        } else {
            false
        }
    });

    Ok(ExtremalSet {
        points: out.iter().map(|p| p.0).collect(),
        values: out.iter().map(|p| p.1).collect(),
        norm,
        tol_rel,
    })
}

/// Gap-based component labels for sorted real points.
fn component_ids(xs: &[f64]) -> Vec<usize> {
    let mut gaps: Vec<f64> = xs.windows(2).map(|p| p[1] - p[0]).collect();
    gaps.sort_by(f64::total_cmp);
    let med = gaps.get(gaps.len() / 2).copied().unwrap_or(0.0);
    let mut ids = Vec::with_capacity(xs.len());
    let mut id = 0usize;
    for i in 0..xs.len() {
        if i > 0 && xs[i] - xs[i - 1] > 5.0 * med + 1e-300 {
            id += 1;
        }
        ids.push(id);
    }
    ids
}

/// Moment matrix of the dual system: row pair (Re, Im) of
/// `(z_j/R)^k · s_j` for `k < n`, one column per extremal point. `s_j` is
/// `sgn(conj P(z_j))` or plain `conj P(z_j)` depending on `normalize`.
fn moment_matrix(p: &Poly, pts: &[C64], n: usize, normalize: bool) -> DMatrix<f64> {
    let m = pts.len();
    let r = pts.iter().map(|z| z.norm()).fold(0.0f64, f64::max).max(1e-300);
    let mut a = DMatrix::zeros(2 * n, m);
    for (j, z) in pts.iter().enumerate() {
        let pv = p.eval(*z);
        let s = if normalize { pv.conj() / pv.norm().max(1e-300) } else { pv.conj() };
        let mut zk = C64::new(1.0, 0.0);
        for k in 0..n {
            let e = zk * s;
            a[(2 * k, j)] = e.re;
            a[(2 * k + 1, j)] = e.im;
            zk *= z / r;
        }
    }
    a
}

/// `min ‖Aλ‖ : λ ≥ 0, Σλ = 1` by a penalty row plus nonnegative least
/// squares, then an exactly-constrained polish on the detected support;
/// returns the normalized λ and its exact moment residual.
fn simplex_nnls(a: &DMatrix<f64>) -> Result<(DVector<f64>, f64), CertificateError> {
    let (rows, m) = a.shape();
    let rho = 1e4 * a.norm().max(1.0);
    let mut stacked = DMatrix::zeros(rows + 1, m);
    stacked.view_mut((0, 0), (rows, m)).copy_from(a);
    for j in 0..m {
        stacked[(rows, j)] = rho;
    }
    let mut rhs = DVector::zeros(rows + 1);
    rhs[rows] = rho;
    let mut lam = linalg::nnls(&stacked, &rhs, 50 * (m + rows))?;
    let total: f64 = lam.iter().sum();
    if total <= 1e-12 {
        return Err(CertificateError::NoCertificate(
            "dual mass collapsed to zero".into(),
        ));
    }
    lam /= total;
    let mut residual = (a * &lam).norm();

    // The penalty row costs several digits of accuracy; re-solve the
    // equality-constrained problem exactly on the support by parametrizing
    // the affine hull of the simplex face. Kept only if it stays
    // nonnegative and does not increase the exact residual.
    let support: Vec<usize> = (0..m).filter(|&j| lam[j] > 1e-12).collect();
    let s = support.len();
    if s >= 2 {
        let mut asub = DMatrix::zeros(rows, s);
        for (k, &j) in support.iter().enumerate() {
            asub.set_column(k, &a.column(j));
        }
        let lam0 = DVector::from_element(s, 1.0 / s as f64);
        let mut nmat = DMatrix::zeros(s, s - 1);
        for k in 0..s - 1 {
            nmat[(k, k)] = 1.0;
            nmat[(s - 1, k)] = -1.0;
        }
        let an = &asub * &nmat;
        let b = -(&asub * &lam0);
        if let Ok(y) = linalg::lstsq(&an, &b) {
            let cand = &lam0 + &nmat * y;
            if cand.iter().all(|&v| v >= 0.0) {
                let mut full = DVector::zeros(m);
                for (k, &j) in support.iter().enumerate() {
                    full[j] = cand[k];
                }
                let r_full = (a * &full).norm();
                if r_full <= residual {
                    lam = full;
                    residual = r_full;
                }
            }
        }
    }
    Ok((lam, residual))
}

pub fn kolmogorov_check(
    p: &Poly,
    w: &Weight,
    grid: &Grid,
    e: &ExtremalSet,
    tol: f64,
) -> Result<Certificate, CertificateError> {
    let n = p.degree();
    if n == 0 || e.points.is_empty() {
        return Err(CertificateError::NoCertificate(
            "need a nonconstant polynomial and a nonempty extremal set".into(),
        ));
    }
    let a = moment_matrix(p, &e.points, n, true);
    let (lam, residual) = simplex_nnls(&a)?;
    if residual <= tol {
        return Ok(Certificate::Optimal(rivlin_shapiro_multipliers(p, e, n, tol)?));
    }
    if residual <= 10.0 * tol {
        return Err(CertificateError::Ambiguous { residual, tol });
    }

    // infeasible dual: the residual vector separates, and pulling back its
    // coefficients gives a direction that lowers w|P| on the whole
    // extremal set; verify an actual decrease of the grid norm
    let u = &a * &lam;
    let r = e.points.iter().map(|z| z.norm()).fold(0.0f64, f64::max).max(1e-300);
    let mut coeffs = Vec::with_capacity(n);
    let mut rk = 1.0;
    for k in 0..n {
        coeffs.push(C64::new(-u[2 * k], u[2 * k + 1]) / rk);
        rk *= r;
    }
    let q = Poly::new(coeffs);

    let norm_of = |poly: &Poly| -> f64 {
        let mut mx = 0.0f64;
        for z in &grid.points {
            if let Ok(wv) = w.eval(*z) {
                if wv > 0.0 && wv.is_finite() {
                    mx = mx.max(wv * poly.eval(*z).norm());
                }
            }
        }
        mx
    };
    let base_norm = norm_of(p);
    let q_scale = norm_of(&q).max(1e-300);
    let mut step = base_norm / q_scale;
    for _ in 0..60 {
        let cand = p.add(&q.scale(C64::new(step, 0.0)));
        let v = norm_of(&cand);
        if v < base_norm * (1.0 - 1e-12) {
            let predicted = e
                .points
                .iter()
                .zip(&e.values)
                .map(|(z, val)| {
                    let pv = p.eval(*z);
                    -step * val * (pv.conj() * q.eval(*z)).re / pv.norm_sqr().max(1e-300)
                })
                .fold(f64::INFINITY, f64::min);
            return Ok(Certificate::Improvable(Improvement {
                direction: q,
                step,
                new_norm: v,
                predicted_decrease: predicted.max(0.0),
            }));
        }
        step *= 0.5;
    }
    Err(CertificateError::Ambiguous { residual, tol })
}

pub fn rivlin_shapiro_multipliers(
    p: &Poly,
    e: &ExtremalSet,
    n: usize,
    tol: f64,
) -> Result<RivlinShapiro, CertificateError> {
    let a_full = moment_matrix(p, &e.points, n, true);
    let (lam, residual) = simplex_nnls(&a_full)?;
    if residual > tol {
        return Err(CertificateError::NoCertificate(format!(
            "dual residual {residual:.3e} exceeds tol {tol:.3e}"
        )));
    }

    let mut support: Vec<usize> = (0..e.points.len())
        .filter(|&j| lam[j] > 1e-14)
        .collect();
    let mut weights: Vec<f64> = support.iter().map(|&j| lam[j]).collect();

    // exact support reduction: while more than 2n+1 points carry mass,
    // slide along a null direction of the moment-plus-normalization
    // system until a multiplier hits zero (the residual is unchanged)
    while support.len() > 2 * n + 1 {
        let ms = support.len();
        let mut msys = DMatrix::zeros(2 * n + 1, ms);
        for (c, &j) in support.iter().enumerate() {
            for k in 0..2 * n {
                msys[(k, c)] = a_full[(k, j)];
            }
            msys[(2 * n, c)] = 1.0;
        }
        let svd = msys.clone().svd(false, true);
        let vt = svd.v_t.as_ref().expect("svd requested v_t");
        let delta: Vec<f64> = (0..ms).map(|c| vt[(vt.nrows() - 1, c)]).collect();
        let dir_ok = {
            let dv = DVector::from_vec(delta.clone());
            (&msys * &dv).norm() <= 1e-8 * msys.norm().max(1.0)
        };
        if !dir_ok {
            break;
        }
        let mut t_hit = f64::INFINITY;
        for (c, &d) in delta.iter().enumerate() {
            if d > 1e-15 {
                t_hit = t_hit.min(weights[c] / d);
            }
        }
        if !t_hit.is_finite() {
            // flip the direction; a probability vector always has a
            // coordinate decreasing along one of ±delta
            let mut t2 = f64::INFINITY;
            for (c, &d) in delta.iter().enumerate() {
                if d < -1e-15 {
                    t2 = t2.min(-weights[c] / d);
                }
            }
            if !t2.is_finite() {
                break;
            }
            for (c, d) in delta.iter().enumerate() {
                weights[c] += t2 * d;
            }
        } else {
            for (c, d) in delta.iter().enumerate() {
                weights[c] -= t_hit * d;
            }
        }
        let keep: Vec<usize> = (0..ms).filter(|&c| weights[c] > 1e-13).collect();
        if keep.len() == ms {
            break;
        }
        support = keep.iter().map(|&c| support[c]).collect();
        weights = keep.iter().map(|&c| weights[c]).collect();
    }

    // greedy pruning toward n+1 points: drop the smallest multiplier as
    // long as the remaining support still certifies within tol
    loop {
        if support.len() <= n + 1 {
            break;
        }
        let drop_c = weights
            .iter()
            .enumerate()
            .min_by(|a, b| a.1.total_cmp(b.1))
            .map(|(c, _)| c)
            .unwrap();
        let trial: Vec<usize> = support
            .iter()
            .enumerate()
            .filter(|(c, _)| *c != drop_c)
            .map(|(_, &j)| j)
            .collect();
        let pts: Vec<C64> = trial.iter().map(|&j| e.points[j]).collect();
        let a_t = moment_matrix(p, &pts, n, true);
        match simplex_nnls(&a_t) {
            Ok((l, r)) if r <= tol && l.iter().all(|&x| x > 1e-14) => {
                support = trial;
                weights = l.iter().copied().collect();
            }
            _ => break,
        }
    }

    let pts: Vec<C64> = support.iter().map(|&j| e.points[j]).collect();
    let a_s = moment_matrix(p, &pts, n, true);
    let total: f64 = weights.iter().sum();
    let multipliers: Vec<f64> = weights.iter().map(|x| x / total).collect();
    let residual = (&a_s * DVector::from_vec(multipliers.clone())).norm();
    if residual > tol {
        return Err(CertificateError::NoCertificate(format!(
            "pruned support lost the certificate (residual {residual:.3e})"
        )));
    }

    // second route: same support, multipliers found against the raw
    // conj(P) moments; mapped back they must certify the sgn system too
    let a_raw = moment_matrix(p, &pts, n, false);
    let (lam_raw, _) = simplex_nnls(&a_raw)?;
    let mut nu: Vec<f64> = pts
        .iter()
        .zip(lam_raw.iter())
        .map(|(z, l)| l * p.eval(*z).norm())
        .collect();
    let nt: f64 = nu.iter().sum();
    for x in &mut nu {
        *x /= nt.max(1e-300);
    }
    let route_gap = (&a_s * DVector::from_vec(nu)).norm();

    Ok(RivlinShapiro { points: pts, multipliers, residual, route_gap })
}

pub fn alternation_verify(
    result: &ChebyshevResult,
    set: &CompactSet,
    w: &Weight,
    tol: f64,
) -> Result<AlternationChain, CertificateError> {
    let t = &result.t;
    let n = t.degree();
    let scale = t.coeff_l1().max(1e-300);
    if t.coeffs().iter().any(|c| c.im.abs() > 1e-9 * scale) {
        return Err(CertificateError::NotReal("polynomial has complex coefficients".into()));
    }
    let grid = set.sample(2048.max(8 * (n + 1)))?;
    if grid.points.iter().any(|z| z.im.abs() > 1e-12 * (1.0 + z.re.abs())) {
        return Err(CertificateError::NotReal("set has non-real points".into()));
    }
    let e = extremal_points(t, w, set, &grid, tol.max(suggested_tol_rel(t, &grid, result.norm)))?;
    let norm = e.norm;

    // signed weighted values, ascending in x
    let mut signed: Vec<(f64, f64)> = Vec::with_capacity(e.points.len());
    for z in &e.points {
        let x = z.re;
        let wv = w.eval_real(x)?;
        signed.push((x, wv * t.eval_real(x).re));
    }
    signed.sort_by(|a, b| a.0.total_cmp(&b.0));

    // longest alternating subchain, greedy: same sign keeps the larger
    // magnitude, opposite sign extends
    let mut chain: Vec<(f64, f64)> = Vec::new();
    for &(x, v) in &signed {
        match chain.last_mut() {
            Some(last) if last.1.signum() == v.signum() => {
                if v.abs() > last.1.abs() {
                    *last = (x, v);
                }
            }
            _ => chain.push((x, v)),
        }
    }
    while chain.len() > n + 1 {
        if chain.first().unwrap().1.abs() <= chain.last().unwrap().1.abs() {
            chain.remove(0);
        } else {
            chain.pop();
        }
    }
    if chain.len() < n + 1 {
        return Err(CertificateError::ChainTooShort { found: chain.len(), need: n + 1 });
    }

    let mut max_dev = 0.0f64;
    for (j, &(_, v)) in chain.iter().enumerate() {
        let sigma = if (n - j) % 2 == 0 { 1.0 } else { -1.0 };
        max_dev = max_dev.max((v - sigma * norm).abs());
    }
    let allowed = tol * norm;
    if max_dev > allowed {
        return Err(CertificateError::AlternationDeviates { max_dev, allowed });
    }
    Ok(AlternationChain {
        points: chain.iter().map(|c| c.0).collect(),
        signs: (0..=n).map(|j| if (n - j) % 2 == 0 { 1i8 } else { -1i8 }).collect(),
        level: norm,
        max_deviation: max_dev,
    })
}

/// Check the two necessary-and-sufficient conditions for the minimal norm
/// to meet its potential-theoretic lower bound exactly: every zero of `T`
/// in the filled set, and `w|T|` at its max at (quadrature-) almost every
/// equilibrium point. When both hold, the Widom factor must equal the
/// weight's geometric mean; that identity is asserted in debug builds.
pub fn equality_case_check(
    set: &CompactSet,
    w: &Weight,
    result: &ChebyshevResult,
    tol: f64,
) -> Result<EqualityCase, CertificateError> {
    let roots = result.t.roots()?;
    let mut zero_locations_ok = true;
    for r in &roots {
        if potential::green(set, *r)? > tol {
            zero_locations_ok = false;
            break;
        }
    }

    let nodes = potential::eq_quadrature(set, QuadOpts::default().n)?;
    let mut ae_maximality_ok = true;
    for (z, _) in &nodes {
        let wv = w.eval(*z)?;
        if wv * result.t.eval(*z).norm() < (1.0 - tol) * result.norm {
            ae_maximality_ok = false;
            break;
        }
    }

    let equality = zero_locations_ok && ae_maximality_ok;
    #[cfg(debug_assertions)]
    if equality {
        let opts = crate::solver::SolveOpts::default();
        if let Ok(rep) = crate::solver::widom_from_result(set, w, result, &opts) {
            if rep.szego_class && rep.s_w > 0.0 {
                debug_assert!(
                    (rep.w_n - rep.s_w).abs() <= 1e-6 * rep.s_w,
                    "equality case but W_n = {} vs S_w = {}",
                    rep.w_n,
                    rep.s_w
                );
            }
        }
    }
    Ok(EqualityCase { equality, zero_locations_ok, ae_maximality_ok })
}
