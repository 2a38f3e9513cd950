//! Weighted Chebyshev solvers.
//!
//! Three routes to the monic minimizer of `max_K w|P|`: Remez exchange on
//! real sets, Lawson iteration on arbitrary discrete grids, and exact
//! transfer through polynomial preimages. `solve` picks a route; the
//! individual solvers stay callable for cross-checks.

pub mod lawson;
pub mod remez;

pub use lawson::lawson_discrete;
pub use remez::remez_real;

use crate::domain::{self, CompactSet, DomainError};
use crate::linalg::LinalgError;
use crate::poly::{Poly, PolyError};
use crate::potential::{self, PotentialError, QuadOpts};
use crate::weight::{Weight, WeightError};
use crate::C64;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum SolverError {
    #[error("unsupported problem: {0}")]
    Unsupported(String),
    #[error("degenerate reference: {0}")]
    ReferenceDegenerate(String),
    #[error("rank-deficient discrete problem: {0}")]
    RankDeficient(String),
    #[error("alternation system: {0}")]
    LinearSystem(#[from] LinalgError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Domain(#[from] DomainError),
    #[error(transparent)]
    Weight(#[from] WeightError),
    #[error(transparent)]
    Potential(#[from] PotentialError),
}

/// Solved minimax problem: the monic minimizer, its weighted sup norm,
/// and convergence bookkeeping. `residual` is the relative excess of the
/// grid maximum over the alternation level (Remez) or the max/mean mass
/// spread (Lawson); an unconverged run still carries its best iterate.
#[derive(Debug, Clone)]
pub struct ChebyshevResult {
    pub t: Poly,
    pub norm: f64,
    /// Points where `w|T|` attains (or nearly attains) the norm, with the
    /// attained values.
    pub extremal_points: Vec<(C64, f64)>,
    pub iterations: usize,
    pub converged: bool,
    pub residual: f64,
}

/// Norm, capacity, and Szegő data for one degree: `w_n = t_n / cap^n`
/// and its ratio to the weight's geometric mean `s_w`. `ratio` is unset
/// when the weight is not in the Szegő class (`s_w = 0`).
#[derive(Debug, Clone)]
pub struct WidomReport {
    pub n: usize,
    pub t_n: f64,
    pub capacity: f64,
    pub w_n: f64,
    pub s_w: f64,
    pub szego_class: bool,
    pub ratio: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    /// Preimage transfer when the structure allows it, then Remez for
    /// real sets, then Lawson on a sampled grid.
    Auto,
    Remez,
    Lawson,
    Transfer,
}

#[derive(Debug, Clone)]
pub struct SolveOpts {
    pub method: Method,
    pub grid_density: usize,
    /// `None` picks the per-method default: 1e−10 for Remez, 1e−8 for
    /// Lawson (which stalls well above Remez accuracy on fine grids).
    pub tol: Option<f64>,
    /// `None` picks the per-method default: 100 for Remez, 5000 for Lawson.
    pub max_iter: Option<usize>,
    pub quad: QuadOpts,
    /// Recorded for reproducibility plumbing. Both solvers are
    /// deterministic (uniform Lawson masses, fixed exchange rules), so
    /// the seed changes nothing here; randomized sweep drivers use it.
    pub seed: u64,
}

impl Default for SolveOpts {
    fn default() -> Self {
        SolveOpts {
            method: Method::Auto,
            grid_density: 2048,
            tol: None,
            max_iter: None,
            quad: QuadOpts::default(),
            seed: 0,
        }
    }
}

impl SolveOpts {
    pub(crate) fn remez_tol(&self) -> f64 {
        self.tol.unwrap_or(1e-10)
    }
    pub(crate) fn remez_iters(&self) -> usize {
        self.max_iter.unwrap_or(100)
    }
    pub(crate) fn lawson_tol(&self) -> f64 {
        self.tol.unwrap_or(1e-8)
    }
    pub(crate) fn lawson_iters(&self) -> usize {
        self.max_iter.unwrap_or(5000)
    }
}

pub fn solve(
    set: &CompactSet,
    w: &Weight,
    n: usize,
    opts: &SolveOpts,
) -> Result<ChebyshevResult, SolverError> {
    match opts.method {
        Method::Remez => remez_real(set, w, n, opts),
        Method::Lawson => {
            let grid = set.sample(opts.grid_density.max(2 * n + 4))?;
            lawson_discrete(&grid, w, n, opts)
        }
        Method::Transfer => match transfer_route(set, w, n, opts) {
            Some(r) => r,
            None => Err(SolverError::Unsupported(
                "transfer needs a preimage set, a weight constant on fibers, \
                 and a degree divisible by the map degree"
                    .into(),
            )),
        },
        Method::Auto => {
            if let Some(r) = transfer_route(set, w, n, opts) {
                return r;
            }
            if probably_real(set)? {
                match remez_real(set, w, n, opts) {
                    Err(SolverError::Unsupported(_)) => {}
                    r => return r,
                }
            }
            let grid = set.sample(opts.grid_density.max(2 * n + 4))?;
            lawson_discrete(&grid, w, n, opts)
        }
    }
}

/// Try the exact preimage route: `set = p⁻¹(L)`, weight constant on each
/// fiber of `p` (a constant, or a pullback through the same map), and
/// `deg p | n`. Solves the base problem at degree `n / deg p` and lifts.
fn transfer_route(
    set: &CompactSet,
    w: &Weight,
    n: usize,
    opts: &SolveOpts,
) -> Option<Result<ChebyshevResult, SolverError>> {
    let CompactSet::Preimage { map, base } = set else {
        return None;
    };
    let m = map.degree();
    if m < 1 || n % m != 0 || n / m < 1 {
        return None;
    }
    let base_w = match w {
        Weight::Constant(_) => w.clone(),
        Weight::Pullback { map: wmap, base: wbase } if polys_agree(wmap, map) => {
            (**wbase).clone()
        }
        _ => return None,
    };
    let mut base_opts = opts.clone();
    base_opts.method = Method::Auto;
    let base_res = match solve(base, &base_w, n / m, &base_opts) {
        Ok(r) => r,
        Err(e) => return Some(Err(e)),
    };
    Some(preimage_transfer(&base_res, map, base))
}

fn polys_agree(a: &Poly, b: &Poly) -> bool {
    if a.degree() != b.degree() {
        return false;
    }
    let scale = a.coeff_l1().max(b.coeff_l1()).max(1e-300);
    a.coeffs()
        .iter()
        .zip(b.coeffs())
        .all(|(x, y)| (x - y).norm() <= 1e-12 * scale)
}

/// Cheap reality probe; Remez re-validates every grid point, so a false
/// positive surfaces there as `Unsupported` and Auto falls back to Lawson.
fn probably_real(set: &CompactSet) -> Result<bool, SolverError> {
    match set {
        CompactSet::IntervalUnion(_) => Ok(true),
        CompactSet::Circle { .. } => Ok(false),
        CompactSet::SampledSet(pts) => Ok(pts.iter().all(|z| z.im == 0.0)),
        CompactSet::Preimage { .. } => {
            let g = set.sample(64)?;
            Ok(g
                .points
                .iter()
                .all(|z| z.im.abs() <= 1e-12 * (1.0 + z.re.abs())))
        }
    }
}

/// Norm, capacity, and Szegő bound data at degree `n`. Requires a set
/// with exactly known capacity.
pub fn widom_factor(
    set: &CompactSet,
    w: &Weight,
    n: usize,
    opts: &SolveOpts,
) -> Result<WidomReport, SolverError> {
    let res = solve(set, w, n, opts)?;
    widom_from_result(set, w, &res, opts)
}

/// Same report, reusing an already-solved result.
pub fn widom_from_result(
    set: &CompactSet,
    w: &Weight,
    res: &ChebyshevResult,
    opts: &SolveOpts,
) -> Result<WidomReport, SolverError> {
    let n = res.t.degree();
    let cap = potential::capacity_exact(set)?;
    let sz = potential::szego_integral(set, w, &opts.quad)?;
    let w_n = res.norm / cap.powi(n as i32);
    let ratio = if sz.szego_class && sz.value > 0.0 {
        Some(w_n / sz.value)
    } else {
        None
    };
    Ok(WidomReport {
        n,
        t_n: res.norm,
        capacity: cap,
        w_n,
        s_w: sz.value,
        szego_class: sz.szego_class,
        ratio,
    })
}

/// Lift a solved base problem through `p`: if `T` is the degree-n
/// minimizer on `L` for weight `w`, then `T∘p / lead(p)ⁿ` is the
/// degree-nm minimizer on `p⁻¹(L)` for `w∘p`, with norm scaled by
/// `1/|lead(p)|ⁿ`. Extremal points are the full fibers of the base
/// extremal points.
pub fn preimage_transfer(
    base: &ChebyshevResult,
    p: &Poly,
    base_set: &CompactSet,
) -> Result<ChebyshevResult, SolverError> {
    let m = p.degree();
    if m < 1 {
        return Err(SolverError::Unsupported(
            "transfer map must be nonconstant".into(),
        ));
    }
    let n = base.t.degree();
    if n < 1 {
        return Err(SolverError::Unsupported(
            "base result must have degree at least 1".into(),
        ));
    }
    if n * m > crate::DEGREE_CAP {
        return Err(SolverError::Poly(PolyError::DegreeCapExceeded {
            degree: n * m,
            cap: crate::DEGREE_CAP,
        }));
    }
    debug_assert!(
        base.extremal_points
            .iter()
            .all(|(z, _)| loosely_on_set(base_set, *z)),
        "base extremal points do not lie on the stated base set"
    );

    let lead = p.leading();
    let scale = lead.powu(n as u32);
    let t = base
        .t
        .compose(p)
        .scale(C64::new(1.0, 0.0) / scale)
        .make_monic()?;
    let norm = base.norm / lead.norm().powi(n as i32);

    let vscale = 1.0 / lead.norm().powi(n as i32);
    let mut extremal: Vec<(C64, f64)> = Vec::new();
    for (zeta, v) in &base.extremal_points {
        for z in domain::fiber(p, *zeta)? {
            extremal.push((z, v * vscale));
        }
    }
    extremal.sort_by(|a, b| a.0.re.total_cmp(&b.0.re).then(a.0.im.total_cmp(&b.0.im)));
    let diam = extremal
        .iter()
        .map(|(z, _)| z.norm())
        .fold(0.0f64, f64::max)
        .max(1.0);
    extremal.dedup_by(|a, b| (a.0 - b.0).norm() <= 1e-9 * diam);

    Ok(ChebyshevResult {
        t,
        norm,
        extremal_points: extremal,
        iterations: base.iterations,
        converged: base.converged,
        residual: base.residual,
    })
}

/// Loose membership test used only for sanity assertions: tolerates the
/// solver's polish slack, never rejects legitimate extremal points.
#[cfg_attr(not(debug_assertions), allow(dead_code))]
fn loosely_on_set(set: &CompactSet, z: C64) -> bool {
    match set {
        CompactSet::IntervalUnion(iv) => {
            let span = iv.last().unwrap().1 - iv.first().unwrap().0;
            let eps = 1e-5 * (1.0 + span.abs());
            z.im.abs() <= eps
                && iv
                    .iter()
                    .any(|(a, b)| z.re >= a - eps && z.re <= b + eps)
        }
        CompactSet::Circle { center, radius } => {
            ((z - center).norm() - radius).abs() <= 1e-5 * (1.0 + radius)
        }
        CompactSet::SampledSet(pts) => {
            let diam = pts.iter().map(|p| p.norm()).fold(0.0f64, f64::max).max(1.0);
            pts.iter().any(|p| (z - p).norm() <= 1e-5 * diam)
        }
        CompactSet::Preimage { map, base } => loosely_on_set(base, map.eval(z)),
    }
}
