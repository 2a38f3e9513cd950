//! Compact sets in the plane and their sampling grids.
//!
//! Four geometries are supported: finite unions of real intervals, circles,
//! finite point clouds, and polynomial preimages `p⁻¹(L)` of another
//! supported set. Preimages are the workhorse for multi-component sets with
//! exact potential data: the preimage of `[-1, 1]` under `z² − 2` is
//! `[-√3, -1] ∪ [1, √3]`, and capacity/Green data transfer through `p`
//! exactly.

use crate::poly::{Poly, PolyError};
use crate::C64;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum DomainError {
    #[error("interval list must be nonempty")]
    EmptyIntervals,
    #[error("interval [{0}, {1}] is degenerate or reversed")]
    BadInterval(f64, f64),
    #[error("intervals [{0}, {1}] and [{2}, {3}] overlap")]
    Overlap(f64, f64, f64, f64),
    #[error("circle radius must be positive, got {0}")]
    BadRadius(f64),
    #[error("point cloud must be nonempty")]
    EmptyCloud,
    #[error("preimage map must be nonconstant")]
    ConstantMap,
    #[error("preimage base must carry analytic potential data (interval union, circle, or preimage)")]
    BaseNotAnalytic,
    #[error("fiber root finding failed: {0}")]
    Fiber(#[from] PolyError),
    #[error("sampling density must be at least 2, got {0}")]
    BadDensity(usize),
}

#[derive(Debug, Clone, PartialEq)]
pub enum CompactSet {
    /// Disjoint closed real intervals, stored ascending.
    IntervalUnion(Vec<(f64, f64)>),
    Circle { center: C64, radius: f64 },
    /// A finite point cloud; carries no analytic potential data.
    SampledSet(Vec<C64>),
    /// `p⁻¹(base)` for a nonconstant polynomial `p`.
    Preimage { map: Poly, base: Box<CompactSet> },
}

impl CompactSet {
    pub fn interval(a: f64, b: f64) -> Result<Self, DomainError> {
        Self::interval_union(vec![(a, b)])
    }

    /// Intervals are sorted and must be pairwise disjoint with `a < b`.
    pub fn interval_union(mut intervals: Vec<(f64, f64)>) -> Result<Self, DomainError> {
        if intervals.is_empty() {
            return Err(DomainError::EmptyIntervals);
        }
        for &(a, b) in &intervals {
            if !(a < b) || !a.is_finite() || !b.is_finite() {
                return Err(DomainError::BadInterval(a, b));
            }
        }
        intervals.sort_by(|x, y| x.0.total_cmp(&y.0));
        for w in intervals.windows(2) {
            if w[1].0 <= w[0].1 {
                return Err(DomainError::Overlap(w[0].0, w[0].1, w[1].0, w[1].1));
            }
        }
        Ok(CompactSet::IntervalUnion(intervals))
    }

    pub fn circle(center: C64, radius: f64) -> Result<Self, DomainError> {
        if !(radius > 0.0) || !radius.is_finite() {
            return Err(DomainError::BadRadius(radius));
        }
        Ok(CompactSet::Circle { center, radius })
    }

    pub fn sampled(points: Vec<C64>) -> Result<Self, DomainError> {
        if points.is_empty() {
            return Err(DomainError::EmptyCloud);
        }
        Ok(CompactSet::SampledSet(points))
    }

    pub fn preimage(map: Poly, base: CompactSet) -> Result<Self, DomainError> {
        if map.degree() == 0 {
            return Err(DomainError::ConstantMap);
        }
        if !base.has_analytic_potential() {
            return Err(DomainError::BaseNotAnalytic);
        }
        Ok(CompactSet::Preimage { map, base: Box::new(base) })
    }

    /// Whether exact capacity / Green data exists for this set. True for
    /// circles, single intervals, and preimage chains over such sets; a
    /// multi-interval union is only approximate unless it is presented as a
    /// preimage.
    pub fn has_analytic_potential(&self) -> bool {
        match self {
            CompactSet::IntervalUnion(_) | CompactSet::Circle { .. } => true,
            CompactSet::SampledSet(_) => false,
            CompactSet::Preimage { base, .. } => base.has_analytic_potential(),
        }
    }

    /// Structurally real: guaranteed to lie on the real axis.
    pub fn is_interval_like(&self) -> bool {
        matches!(self, CompactSet::IntervalUnion(_))
    }

    /// Sample the set into a grid of roughly `density` points.
    ///
    /// Interval unions use Chebyshev-spaced nodes per component (endpoints
    /// always included), apportioned by relative length. Circles use
    /// uniform angles starting at angle 0. Preimages sample the base at
    /// `ceil(density / m)` and take full fibers, so the point count still
    /// grows monotonically with `density`.
    pub fn sample(&self, density: usize) -> Result<Grid, DomainError> {
        if density < 2 {
            return Err(DomainError::BadDensity(density));
        }
        let points = match self {
            CompactSet::IntervalUnion(intervals) => {
                let total: f64 = intervals.iter().map(|&(a, b)| b - a).sum();
                let mut pts = Vec::new();
                for &(a, b) in intervals {
                    let share = if intervals.len() == 1 {
                        density
                    } else {
                        (((density as f64) * (b - a) / total).ceil() as usize).max(2)
                    };
                    let mid = 0.5 * (a + b);
                    let half = 0.5 * (b - a);
                    for j in 0..share {
                        let t = std::f64::consts::PI * j as f64 / (share - 1) as f64;
                        // cos runs 1 → −1, so subtract to sweep a → b.
                        let x = mid - half * t.cos();
                        pts.push(C64::new(x, 0.0));
                    }
                    // Pin the endpoints exactly against rounding.
                    let n = pts.len();
                    pts[n - share] = C64::new(a, 0.0);
                    pts[n - 1] = C64::new(b, 0.0);
                }
                pts
            }
            CompactSet::Circle { center, radius } => (0..density)
                .map(|k| {
                    let theta = std::f64::consts::TAU * k as f64 / density as f64;
                    center + C64::new(radius * theta.cos(), radius * theta.sin())
                })
                .collect(),
            CompactSet::SampledSet(points) => points.clone(),
            CompactSet::Preimage { map, base } => {
                let m = map.degree();
                let base_density = density.div_ceil(m).max(2);
                let base_grid = base.sample(base_density)?;
                let mut pts = Vec::new();
                for &zeta in &base_grid.points {
                    let mut fib = fiber(map, zeta)?;
                    fib.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
                    pts.extend(fib);
                }
                pts
            }
        };
        Ok(Grid { points, density })
    }
}

/// A sampled view of a compact set.
#[derive(Debug, Clone)]
pub struct Grid {
    pub points: Vec<C64>,
    pub density: usize,
}

/// The full fiber `p⁻¹(ζ)` with multiplicity, Newton-polished so that
/// `|p(z) − ζ| ≤ 1e−10 · (1 + |ζ|)` for every returned point.
pub fn fiber(map: &Poly, zeta: C64) -> Result<Vec<C64>, DomainError> {
    let shifted = map.sub_constant(zeta);
    let mut roots = shifted.roots()?;
    let deriv = map.derivative();
    for r in roots.iter_mut() {
        for _ in 0..2 {
            let dv = deriv.eval(*r);
            if dv.norm() < 1e-280 {
                break;
            }
            let step = (map.eval(*r) - zeta) / dv;
            if step.norm() > 1.0 {
                break;
            }
            *r -= step;
        }
        let residual = (map.eval(*r) - zeta).norm();
        if residual > 1e-10 * (1.0 + zeta.norm()) {
            return Err(DomainError::Fiber(PolyError::NonConvergence {
                best: vec![*r],
                residual,
            }));
        }
    }
    Ok(roots)
}

/// Reorder `new` so that entry `i` is the point closest to `prev[i]`,
/// resolving greedily by increasing distance. Keeps fiber branches stable
/// while sweeping ζ along a path.
pub fn match_fiber_order(prev: &[C64], new: &[C64]) -> Vec<C64> {
    assert_eq!(prev.len(), new.len());
    let n = prev.len();
    let mut pairs: Vec<(f64, usize, usize)> = Vec::with_capacity(n * n);
    for (i, &p) in prev.iter().enumerate() {
        for (j, &q) in new.iter().enumerate() {
            pairs.push(((p - q).norm(), i, j));
        }
    }
    pairs.sort_by(|a, b| a.0.total_cmp(&b.0));
    let mut taken_prev = vec![false; n];
    let mut taken_new = vec![false; n];
    let mut out = vec![C64::new(0.0, 0.0); n];
    for (_, i, j) in pairs {
        if !taken_prev[i] && !taken_new[j] {
            taken_prev[i] = true;
            taken_new[j] = true;
            out[i] = new[j];
        }
    }
    out
}
