//! Weight functions `w ≥ 0` on a compact set.
//!
//! Weights are symbolic so the solvers can evaluate them at refined,
//! off-grid points: products of powers of `|polynomial|`, pullbacks
//! `w ∘ p`, tabulated samples, and restrictions that vanish off a region.
//! Upper semi-continuous regularization is provided in discretized form;
//! the minimax problem only sees the weight through `sup w·|P|`, and the
//! regularized weight leaves every such norm unchanged.

use crate::domain::Grid;
use crate::poly::Poly;
use crate::C64;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum WeightError {
    #[error("weight undefined at {0} (negative power of a vanishing factor)")]
    UndefinedAt(C64),
    #[error("tabulated weight has no node within {tol:.3e} of {z} (nearest is {nearest:.3e} away)")]
    OffGrid { z: C64, nearest: f64, tol: f64 },
    #[error("invalid weight: {0}")]
    Invalid(String),
}

/// Membership region for restricted weights.
#[derive(Debug, Clone, PartialEq)]
pub enum Region {
    Disk { center: C64, radius: f64 },
    Points { points: Vec<C64>, tol: f64 },
}

impl Region {
    pub fn contains(&self, z: C64) -> bool {
        match self {
            Region::Disk { center, radius } => (z - center).norm() <= *radius,
            Region::Points { points, tol } => {
                points.iter().any(|p| (z - p).norm() <= *tol)
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Weight {
    /// A positive constant.
    Constant(f64),
    /// `Π |p_i(z)|^{α_i}`. Negative exponents make the weight `+∞` at the
    /// corresponding zeros; evaluation errors there and solve-time
    /// preconditions keep such points out of the grid.
    AbsPolyPower(Vec<(Poly, f64)>),
    /// `|Σ a_k T_k(u(z))|^power` with `u(z) = (2z − lo − hi)/(hi − lo)`:
    /// a polynomial weight carried by Chebyshev coefficients on `[lo, hi]`
    /// and evaluated by the Clenshaw recurrence. High-degree polynomial
    /// weights stay accurate in this basis where the monomial form loses
    /// everything to coefficient growth.
    AbsChebSeries { coeffs: Vec<f64>, lo: f64, hi: f64, power: f64 },
    /// `base ∘ map`.
    Pullback { map: Poly, base: Box<Weight> },
    /// Values sampled at fixed nodes. Strict mode refuses off-node
    /// evaluation; lenient mode substitutes the nearest node's value.
    Tabulated {
        points: Vec<C64>,
        values: Vec<f64>,
        /// Matching tolerance for strict lookups.
        tol: f64,
        strict: bool,
    },
    /// `base` inside the region, `0` outside.
    Restricted { base: Box<Weight>, region: Region },
}

impl Weight {
    pub fn constant(c: f64) -> Result<Self, WeightError> {
        if !(c > 0.0) || !c.is_finite() {
            return Err(WeightError::Invalid(format!(
                "constant weight must be positive and finite, got {c}"
            )));
        }
        Ok(Weight::Constant(c))
    }

    pub fn abs_poly(factors: Vec<(Poly, f64)>) -> Result<Self, WeightError> {
        if factors.is_empty() {
            return Err(WeightError::Invalid("factor list is empty".into()));
        }
        for (p, a) in &factors {
            if p.is_zero() {
                return Err(WeightError::Invalid("zero polynomial factor".into()));
            }
            if !a.is_finite() {
                return Err(WeightError::Invalid(format!("non-finite exponent {a}")));
            }
        }
        Ok(Weight::AbsPolyPower(factors))
    }

    /// Single factor `|p(z)|^a`.
    pub fn abs_poly_power(p: Poly, a: f64) -> Result<Self, WeightError> {
        Self::abs_poly(vec![(p, a)])
    }

    /// Polynomial weight `|q|^power` with `q` given by real Chebyshev
    /// coefficients `a_0..a_d` on the interval `[lo, hi]`.
    pub fn abs_cheb_series(
        coeffs: Vec<f64>,
        lo: f64,
        hi: f64,
        power: f64,
    ) -> Result<Self, WeightError> {
        if coeffs.is_empty() || coeffs.iter().all(|c| *c == 0.0) {
            return Err(WeightError::Invalid("zero Chebyshev series".into()));
        }
        if coeffs.iter().any(|c| !c.is_finite()) {
            return Err(WeightError::Invalid("non-finite Chebyshev coefficient".into()));
        }
        if !(hi > lo) || !lo.is_finite() || !hi.is_finite() {
            return Err(WeightError::Invalid(format!(
                "series interval [{lo}, {hi}] must be finite and nondegenerate"
            )));
        }
        if !power.is_finite() {
            return Err(WeightError::Invalid(format!("non-finite exponent {power}")));
        }
        Ok(Weight::AbsChebSeries { coeffs, lo, hi, power })
    }

    pub fn pullback(map: Poly, base: Weight) -> Result<Self, WeightError> {
        if map.degree() == 0 {
            return Err(WeightError::Invalid("pullback map must be nonconstant".into()));
        }
        Ok(Weight::Pullback { map, base: Box::new(base) })
    }

    pub fn tabulated(
        points: Vec<C64>,
        values: Vec<f64>,
        tol: f64,
        strict: bool,
    ) -> Result<Self, WeightError> {
        if points.is_empty() || points.len() != values.len() {
            return Err(WeightError::Invalid(
                "tabulated weight needs matching nonempty node/value lists".into(),
            ));
        }
        if values.iter().any(|v| !v.is_finite() || *v < 0.0) {
            return Err(WeightError::Invalid("tabulated values must be finite and ≥ 0".into()));
        }
        if !(tol > 0.0) {
            return Err(WeightError::Invalid("matching tolerance must be positive".into()));
        }
        Ok(Weight::Tabulated { points, values, tol, strict })
    }

    pub fn restricted(base: Weight, region: Region) -> Self {
        Weight::Restricted { base: Box::new(base), region }
    }

    pub fn eval(&self, z: C64) -> Result<f64, WeightError> {
        match self {
            Weight::Constant(c) => Ok(*c),
            Weight::AbsPolyPower(factors) => {
                let mut acc = 1.0f64;
                for (p, a) in factors {
                    let v = p.eval(z).norm();
                    if v == 0.0 {
                        if *a < 0.0 {
                            return Err(WeightError::UndefinedAt(z));
                        }
                        if *a > 0.0 {
                            return Ok(0.0);
                        }
                        // a == 0: factor is identically 1.
                    } else {
                        acc *= v.powf(*a);
                    }
                }
                Ok(acc)
            }
            Weight::AbsChebSeries { coeffs, lo, hi, power } => {
                let u = (2.0 * z - C64::new(lo + hi, 0.0)) / (hi - lo);
                let v = clenshaw_complex(coeffs, u).norm();
                if v == 0.0 {
                    if *power < 0.0 {
                        return Err(WeightError::UndefinedAt(z));
                    }
                    return Ok(if *power > 0.0 { 0.0 } else { 1.0 });
                }
                Ok(v.powf(*power))
            }
            Weight::Pullback { map, base } => base.eval(map.eval(z)),
            Weight::Tabulated { points, values, tol, strict } => {
                let (idx, dist) = points
                    .iter()
                    .enumerate()
                    .map(|(i, p)| (i, (z - p).norm()))
                    .min_by(|a, b| a.1.total_cmp(&b.1))
                    .unwrap();
                if *strict && dist > *tol {
                    return Err(WeightError::OffGrid { z, nearest: dist, tol: *tol });
                }
                Ok(values[idx])
            }
            Weight::Restricted { base, region } => {
                if region.contains(z) {
                    base.eval(z)
                } else {
                    Ok(0.0)
                }
            }
        }
    }

    pub fn eval_real(&self, x: f64) -> Result<f64, WeightError> {
        self.eval(C64::new(x, 0.0))
    }

    /// Whether the weight can be evaluated at arbitrary nearby points, so
    /// the solvers may refine extremal locations off the grid.
    pub fn is_continuous(&self) -> bool {
        match self {
            Weight::Constant(_) | Weight::AbsPolyPower(_) | Weight::AbsChebSeries { .. } => true,
            Weight::Pullback { base, .. } => base.is_continuous(),
            Weight::Tabulated { .. } | Weight::Restricted { .. } => false,
        }
    }

    /// `d/dx log w(x)` along the real axis, where defined. Returns `None`
    /// for weights without an analytic derivative (tabulated, restricted,
    /// pullbacks through maps with nonreal coefficients).
    pub fn dlog_real(&self, x: f64) -> Option<f64> {
        match self {
            Weight::Constant(_) => Some(0.0),
            Weight::AbsPolyPower(factors) => {
                let z = C64::new(x, 0.0);
                let mut acc = 0.0;
                for (p, a) in factors {
                    let v = p.eval(z);
                    if v.norm() == 0.0 {
                        return None;
                    }
                    acc += a * (p.derivative().eval(z) / v).re;
                }
                Some(acc)
            }
            Weight::AbsChebSeries { coeffs, lo, hi, power } => {
                let u = (2.0 * x - lo - hi) / (hi - lo);
                let q = clenshaw_complex(coeffs, C64::new(u, 0.0)).re;
                if q == 0.0 {
                    return None;
                }
                let dq = clenshaw_complex(&cheb_derivative(coeffs), C64::new(u, 0.0)).re
                    * (2.0 / (hi - lo));
                Some(power * dq / q)
            }
            Weight::Pullback { map, base } => {
                if map.coeffs().iter().any(|c| c.im != 0.0) {
                    return None;
                }
                let u = map.eval_real(x).re;
                let du = map.derivative().eval_real(x).re;
                base.dlog_real(u).map(|d| d * du)
            }
            Weight::Tabulated { .. } | Weight::Restricted { .. } => None,
        }
    }
}

/// `Σ a_k T_k(u)` by the Clenshaw recurrence, for complex `u`. Stable for
/// `u` on or near the interval the series was built on.
fn clenshaw_complex(coeffs: &[f64], u: C64) -> C64 {
    let mut b1 = C64::new(0.0, 0.0);
    let mut b2 = C64::new(0.0, 0.0);
    for &a in coeffs.iter().skip(1).rev() {
        let b0 = 2.0 * u * b1 - b2 + a;
        b2 = b1;
        b1 = b0;
    }
    coeffs.first().copied().unwrap_or(0.0) + u * b1 - b2
}

/// Chebyshev coefficients of the derivative of `Σ a_k T_k`, via the
/// descending recurrence `b_{k−1} = b_{k+1} + 2k·a_k`.
fn cheb_derivative(coeffs: &[f64]) -> Vec<f64> {
    let n = coeffs.len();
    if n <= 1 {
        return vec![0.0];
    }
    let mut b = vec![0.0; n - 1];
    let mut prev = 0.0; // b_k at entry of iteration k
    let mut prev2 = 0.0; // b_{k+1} at entry of iteration k
    for k in (1..n).rev() {
        let bk = prev2 + 2.0 * k as f64 * coeffs[k];
        b[k - 1] = bk;
        prev2 = prev;
        prev = bk;
    }
    b[0] *= 0.5;
    b
}

/// Discretized upper semi-continuous regularization of `w` on a grid.
///
/// For each node the sup of `w` over grid neighbors within radius `r` is
/// formed for every `r` in `radii` (given decreasing); the value at the
/// smallest radius approximates `lim_{r→0+} sup_{D(z,r)} w`. The sups are
/// nested, so the per-node sequence is nonincreasing, and the result
/// dominates `w` pointwise because each ball contains its own center.
///
/// Returns a lenient tabulated weight on the grid nodes.
pub fn usc_regularize(w: &Weight, grid: &Grid, radii: &[f64]) -> Result<Weight, WeightError> {
    if radii.is_empty() || radii.windows(2).any(|p| p[1] >= p[0]) || radii.iter().any(|r| *r <= 0.0)
    {
        return Err(WeightError::Invalid(
            "radii must be a positive strictly decreasing list".into(),
        ));
    }
    let vals: Vec<f64> = grid
        .points
        .iter()
        .map(|z| w.eval(*z))
        .collect::<Result<_, _>>()?;
    let r_min = *radii.last().unwrap();
    let mut out = Vec::with_capacity(vals.len());
    for (i, z) in grid.points.iter().enumerate() {
        let mut sups = Vec::with_capacity(radii.len());
        for &r in radii {
            let mut s = f64::NEG_INFINITY;
            for (j, p) in grid.points.iter().enumerate() {
                if (z - p).norm() <= r {
                    s = s.max(vals[j]);
                }
            }
            sups.push(s);
        }
        debug_assert!(sups.windows(2).all(|p| p[1] <= p[0] + 1e-15));
        debug_assert!(*sups.last().unwrap() >= vals[i]);
        out.push(*sups.last().unwrap());
    }
    Weight::tabulated(grid.points.clone(), out, r_min, false)
}

/// Default dyadic radius schedule for [`usc_regularize`], ending at 1.5
/// grid spacings: `[6h, 3h, 1.5h]` for the largest neighbor gap `h`.
pub fn default_usc_radii(grid: &Grid) -> Vec<f64> {
    let mut pts = grid.points.clone();
    pts.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
    let h = pts
        .windows(2)
        .map(|p| (p[1] - p[0]).norm())
        .fold(0.0f64, f64::max)
        .max(1e-12);
    vec![6.0 * h, 3.0 * h, 1.5 * h]
}
