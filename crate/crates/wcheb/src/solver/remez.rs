//! Remez exchange for weighted minimax on real sets.
//!
//! The converged reference x₀ < … < xₙ satisfies the alternation system
//! `P(x_j) = (−1)^{n−j} h / w(x_j)` for the monic minimizer `P`. The
//! linear solves run in the Chebyshev basis of the convex hull: with
//! `u = (x − mid)/s`, `P(x) = sⁿ·(2^{1−n}T_n(u) + Σ_{k<n} b_k T_k(u))`
//! stays monic by construction, and the unknowns are b₀..b_{n−1} and the
//! hull-scaled level.

use crate::domain::CompactSet;
use crate::linalg;
use crate::poly::Poly;
use crate::solver::{ChebyshevResult, SolveOpts, SolverError};
use crate::weight::Weight;
use crate::C64;
use nalgebra::{DMatrix, DVector};

/// Candidate point with a cached weight value.
struct Cand {
    x: f64,
    w: f64,
    /// Index of the component (grid gap segment) the point belongs to.
    comp: usize,
}

pub fn remez_real(
    set: &CompactSet,
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
    let grid = set.sample(opts.grid_density.max(2 * n + 4))?;
    let mut xs: Vec<f64> = Vec::with_capacity(grid.points.len());
    for z in &grid.points {
        if z.im.abs() > 1e-12 * (1.0 + z.re.abs()) {
            return Err(SolverError::Unsupported(
                "Remez needs a real set; use the discrete Lawson solver".into(),
            ));
        }
        xs.push(z.re);
    }
    xs.sort_by(f64::total_cmp);
    xs.dedup_by(|a, b| (*a - *b).abs() <= f64::EPSILON * (1.0 + a.abs()));

    // split into components at large gaps so local-extremum detection
    // does not couple points across holes in the set
    let gaps: Vec<f64> = xs.windows(2).map(|p| p[1] - p[0]).collect();
    let mut sorted_gaps = gaps.clone();
    sorted_gaps.sort_by(f64::total_cmp);
    let med = sorted_gaps.get(sorted_gaps.len() / 2).copied().unwrap_or(0.0);
    let mut cands: Vec<Cand> = Vec::with_capacity(xs.len());
    let mut comp = 0usize;
    for (i, &x) in xs.iter().enumerate() {
        if i > 0 && gaps[i - 1] > 5.0 * med + 1e-300 {
            comp += 1;
        }
        if let Ok(wv) = w.eval_real(x) {
            if wv > 0.0 && wv.is_finite() {
                cands.push(Cand { x, w: wv, comp });
            }
        }
    }
    if cands.len() < n + 2 {
        return Err(SolverError::ReferenceDegenerate(format!(
            "{} positive-weight candidates for degree {}",
            cands.len(),
            n
        )));
    }

    let a_hull = cands.first().unwrap().x;
    let b_hull = cands.last().unwrap().x;
    let mid = 0.5 * (a_hull + b_hull);
    let s = 0.5 * (b_hull - a_hull);
    if s <= 0.0 {
        return Err(SolverError::ReferenceDegenerate("hull has zero length".into()));
    }

    // initial reference: Chebyshev points of the hull, projected to the
    // nearest distinct candidates
    let mut refs: Vec<usize> = Vec::with_capacity(n + 1);
    for j in 0..=n {
        let target = mid - s * (std::f64::consts::PI * j as f64 / n as f64).cos();
        let mut best = 0usize;
        let mut dist = f64::INFINITY;
        for (i, c) in cands.iter().enumerate() {
            let d = (c.x - target).abs();
            if d < dist && !refs.contains(&i) {
                best = i;
                dist = d;
            }
        }
        refs.push(best);
    }
    refs.sort_unstable();
    if refs.windows(2).any(|p| p[0] == p[1]) {
        return Err(SolverError::ReferenceDegenerate(
            "could not seat n+1 distinct reference points".into(),
        ));
    }

    let sn = s.powi(n as i32);
    let lead = 2f64.powi(1 - n as i32);
    let mut b = vec![0.0f64; n];
    let mut level = 0.0f64;
    let mut iterations = 0usize;
    let mut residual = f64::INFINITY;
    let mut converged = false;

    // polish peak locations off-grid only when the problem is a true
    // continuum; on point clouds the discrete maximum is the answer
    let polish = w.is_continuous() && !matches!(set, CompactSet::SampledSet(_));
    for it in 1..=opts.remez_iters() {
        iterations = it;
        // solve the alternation system on the current reference
        let mut m = DMatrix::zeros(n + 1, n + 1);
        let mut rhs = DVector::zeros(n + 1);
        for (j, &ri) in refs.iter().enumerate() {
            let u = (cands[ri].x - mid) / s;
            let t = cheb_values(u, n);
            for k in 0..n {
                m[(j, k)] = t[k];
            }
            let sigma = if (n - j) % 2 == 0 { 1.0 } else { -1.0 };
            m[(j, n)] = -sigma / cands[ri].w;
            rhs[j] = -lead * t[n];
        }
        let sol = linalg::solve_dense(&m, &rhs).map_err(SolverError::LinearSystem)?;
        for k in 0..n {
            b[k] = sol[k];
        }
        let h = sol[n]; // level in Q-scale; x-scale level is h·sⁿ

        // weighted error at a point, in Q-scale (e(x)/sⁿ)
        let q_at = |x: f64| -> f64 {
            let u = (x - mid) / s;
            let t = cheb_values(u, n);
            let mut v = lead * t[n];
            for k in 0..n {
                v += b[k] * t[k];
            }
            v
        };
        let e_at = |x: f64, wv: f64| -> f64 { wv * q_at(x) };

        // locate local maxima of |e| per component
        let mut peaks: Vec<(f64, f64)> = Vec::new(); // (x, e signed)
        for i in 0..cands.len() {
            let e_i = e_at(cands[i].x, cands[i].w);
            let left_ok = i == 0
                || cands[i - 1].comp != cands[i].comp
                || e_at(cands[i - 1].x, cands[i - 1].w).abs() <= e_i.abs();
            let right_ok = i + 1 == cands.len()
                || cands[i + 1].comp != cands[i].comp
                || e_at(cands[i + 1].x, cands[i + 1].w).abs() < e_i.abs() + 1e-300;
            if !(left_ok && right_ok) {
                continue;
            }
            let (mut px, mut pe) = (cands[i].x, e_i);
            if polish {
                let lo = if i > 0 && cands[i - 1].comp == cands[i].comp {
                    cands[i - 1].x
                } else {
                    cands[i].x
                };
                let hi = if i + 1 < cands.len() && cands[i + 1].comp == cands[i].comp {
                    cands[i + 1].x
                } else {
                    cands[i].x
                };
                if hi > lo {
                    let f = |x: f64| -> f64 {
                        let wv = w.eval_real(x).unwrap_or(0.0);
                        e_at(x, wv).abs()
                    };
                    let gx = golden_max(f, lo, hi);
                    let gwv = w.eval_real(gx).unwrap_or(0.0);
                    let ge = e_at(gx, gwv);
                    if ge.abs() >= pe.abs() {
                        px = gx;
                        pe = ge;
                    }
                }
            }
            peaks.push((px, pe));
        }

        let max_abs = peaks.iter().map(|p| p.1.abs()).fold(0.0f64, f64::max);
        residual = (max_abs - h.abs()) / h.abs().max(1e-300);
        if residual.abs() <= opts.remez_tol() {
            level = h;
            converged = true;
            break;
        }
        level = h;

        // multi-point exchange: current reference plus the fresh peaks,
        // same-sign runs compressed to their strongest member, ends
        // trimmed down to n+1
        let mut pool: Vec<(f64, f64)> = peaks;
        for &ri in &refs {
            pool.push((cands[ri].x, e_at(cands[ri].x, cands[ri].w)));
        }
        pool.sort_by(|p, q| p.0.total_cmp(&q.0));
        pool.dedup_by(|p, q| (p.0 - q.0).abs() <= 1e-14 * (1.0 + q.0.abs()));
        let mut chain: Vec<(f64, f64)> = Vec::with_capacity(pool.len());
        for (x, e) in pool {
            match chain.last_mut() {
                Some(last) if last.1.signum() == e.signum() => {
                    if e.abs() > last.1.abs() {
                        *last = (x, e);
                    }
                }
                _ => chain.push((x, e)),
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
            return Err(SolverError::ReferenceDegenerate(format!(
                "error curve offers only {} alternations for degree {}",
                chain.len(),
                n
            )));
        }
        // project the chain back onto candidate indices (off-grid polished
        // points adopt fresh synthetic candidates)
        let mut new_refs = Vec::with_capacity(n + 1);
        for (x, _) in &chain {
            let mut best = usize::MAX;
            let mut dist = f64::INFINITY;
            for (i, c) in cands.iter().enumerate() {
                let d = (c.x - x).abs();
                if d < dist {
                    best = i;
                    dist = d;
                }
            }
            if dist > 0.0 {
                if let Ok(wv) = w.eval_real(*x) {
                    if wv > 0.0 && wv.is_finite() {
                        let comp = cands[best].comp;
                        cands.push(Cand { x: *x, w: wv, comp });
                        best = cands.len() - 1;
                    }
                }
            }
            new_refs.push(best);
        }
        new_refs.sort_by(|&i, &j| cands[i].x.total_cmp(&cands[j].x));
        new_refs.dedup();
        if new_refs.len() != n + 1 {
            return Err(SolverError::ReferenceDegenerate(
                "exchange collapsed reference points".into(),
            ));
        }
        if new_refs == refs {
            converged = true;
            break;
        }
        refs = new_refs;
    }

    // assemble the polynomial in the monomial basis
    let mut q = Poly::constant(C64::new(lead, 0.0)).mul(&cheb_poly(n));
    for (k, bk) in b.iter().enumerate() {
        q = q.add(&cheb_poly(k).scale(C64::new(*bk, 0.0)));
    }
    let affine = Poly::from_real(&[-mid / s, 1.0 / s]);
    let t = q.compose(&affine).scale(C64::new(sn, 0.0)).make_monic()?;

    let extremal: Vec<(C64, f64)> = refs
        .iter()
        .map(|&ri| {
            let x = cands[ri].x;
            let v = cands[ri].w * t.eval_real(x).norm();
            (C64::new(x, 0.0), v)
        })
        .collect();
    let norm = extremal
        .iter()
        .map(|p| p.1)
        .fold((level * sn).abs(), f64::max);

    Ok(ChebyshevResult { t, norm, extremal_points: extremal, iterations, converged, residual })
}

/// T_0(u) … T_n(u) by the three-term recurrence.
fn cheb_values(u: f64, n: usize) -> Vec<f64> {
    let mut t = Vec::with_capacity(n + 1);
    t.push(1.0);
    if n >= 1 {
        t.push(u);
    }
    for k in 2..=n {
        t.push(2.0 * u * t[k - 1] - t[k - 2]);
    }
    t
}

/// T_k as a monomial-basis polynomial.
pub(crate) fn cheb_poly(k: usize) -> Poly {
    let mut prev = Poly::constant(C64::new(1.0, 0.0));
    if k == 0 {
        return prev;
    }
    let mut cur = Poly::identity();
    let two_x = Poly::from_real(&[0.0, 2.0]);
    for _ in 2..=k {
        let next = two_x.mul(&cur).sub(&prev);
        prev = cur;
        cur = next;
    }
    cur
}

/// Golden-section maximization of `f` on `[lo, hi]`. The bracket comes
/// from adjacent grid points, so unimodality holds to grid resolution;
/// the returned abscissa is accurate to ~1e−10·(hi−lo), which costs only
/// O(δ²) in the attained value.
pub(crate) fn golden_max(f: impl Fn(f64) -> f64, lo: f64, hi: f64) -> f64 {
    const INV_PHI: f64 = 0.618_033_988_749_894_9;
    let (mut a, mut b) = (lo, hi);
    let mut c = b - INV_PHI * (b - a);
    let mut d = a + INV_PHI * (b - a);
    let (mut fc, mut fd) = (f(c), f(d));
    for _ in 0..60 {
        if fc > fd {
            b = d;
            d = c;
            fd = fc;
            c = b - INV_PHI * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + INV_PHI * (b - a);
            fd = f(d);
        }
        if (b - a).abs() < 1e-13 * (1.0 + a.abs()) {
            break;
        }
    }
    if fc > fd {
        c
    } else {
        d
    }
}
