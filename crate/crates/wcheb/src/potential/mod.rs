//! Logarithmic potential theory on compact sets: capacity, Green
//! functions, equilibrium and harmonic-measure quadrature, and the
//! Szegő integral.
//!
//! Closed forms exist for a single interval, a circle, and polynomial
//! preimages of those (capacity and Green transfer through the map).
//! Everything else falls back to Leja-point estimates, flagged as
//! approximate.

pub mod leja;
pub mod quadrature;
pub mod szego;

pub use leja::{leja_capacity, LejaOpts};
pub use quadrature::{
    eq_quadrature, harmonic_measure_at, poisson_integral, Pole, PoissonValue, QuadOpts,
};
pub use szego::{szego_integral, SzegoValue};

use crate::domain::{CompactSet, DomainError};
use crate::poly::PolyError;
use crate::weight::WeightError;
use crate::C64;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum PotentialError {
    #[error("exact capacity unavailable: {0}")]
    CapacityUnavailableExact(String),
    #[error("harmonic measure unavailable: {0}")]
    HarmonicMeasureUnavailable(String),
    #[error("pole {0} lies on the set or inside its polynomial hull")]
    PoleOnSet(C64),
    #[error(transparent)]
    Domain(#[from] DomainError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Weight(#[from] WeightError),
    #[error("no convergence: {0}")]
    NoConvergence(String),
}

/// Logarithmic capacity together with an exactness flag. `exact` means
/// the value came from a closed form, not a Leja estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CapacityEstimate {
    pub value: f64,
    pub exact: bool,
}

pub fn capacity(set: &CompactSet) -> Result<CapacityEstimate, PotentialError> {
    match set {
        CompactSet::IntervalUnion(iv) if iv.len() == 1 => {
            let (a, b) = iv[0];
            Ok(CapacityEstimate { value: 0.25 * (b - a), exact: true })
        }
        CompactSet::Circle { radius, .. } => {
            Ok(CapacityEstimate { value: *radius, exact: true })
        }
        CompactSet::Preimage { map, base } => {
            let c = capacity(base)?;
            let m = map.degree() as f64;
            let lead = map.leading().norm();
            Ok(CapacityEstimate { value: (c.value / lead).powf(1.0 / m), exact: c.exact })
        }
        CompactSet::IntervalUnion(_) | CompactSet::SampledSet(_) => {
            let v = leja_capacity(set, &LejaOpts::default())?;
            Ok(CapacityEstimate { value: v, exact: false })
        }
    }
}

pub fn capacity_exact(set: &CompactSet) -> Result<f64, PotentialError> {
    let c = capacity(set)?;
    if c.exact {
        Ok(c.value)
    } else {
        Err(PotentialError::CapacityUnavailableExact(
            "only single intervals, circles, and their polynomial preimages have a closed form"
                .into(),
        ))
    }
}

/// Green's function of the unbounded complement component, pole at ∞.
/// Zero on the set and throughout its polynomial hull.
pub fn green(set: &CompactSet, z: C64) -> Result<f64, PotentialError> {
    match set {
        CompactSet::IntervalUnion(iv) if iv.len() == 1 => {
            let (a, b) = iv[0];
            let u = (2.0 * z - C64::new(a + b, 0.0)) / (b - a);
            Ok(acosh_abs(u))
        }
        CompactSet::Circle { center, radius } => {
            Ok(((z - center).norm() / radius).ln().max(0.0))
        }
        CompactSet::Preimage { map, base } => {
            Ok(green(base, map.eval(z))? / map.degree() as f64)
        }
        CompactSet::IntervalUnion(_) => Err(PotentialError::HarmonicMeasureUnavailable(
            "no closed-form Green function for a multi-component union; \
             realize the set as a polynomial preimage"
                .into(),
        )),
        CompactSet::SampledSet(_) => Err(PotentialError::HarmonicMeasureUnavailable(
            "sampled sets carry no Green function".into(),
        )),
    }
}

/// `log|u + sqrt(u² − 1)|` on the branch with modulus ≥ 1. The two branch
/// values have moduli with product 1, so the max picks the outer one; on
/// `[-1, 1]` both are 1 and the result is exactly 0.
fn acosh_abs(u: C64) -> f64 {
    let s = (u * u - C64::new(1.0, 0.0)).sqrt();
    let m = (u + s).norm().max((u - s).norm());
    m.ln().max(0.0)
}

/// Green's function with a finite pole, through the identity
/// `g(z, a) = log 1/|z−a| + ∫ log|z−ζ| dω_a(ζ) + g(a)`,
/// with the harmonic measure ω_a discretized by [`harmonic_measure_at`].
/// Requires `a` in the unbounded complement component; returns 0 when `z`
/// lies in the filled set.
pub fn green_pole(
    set: &CompactSet,
    z: C64,
    a: C64,
    opts: &QuadOpts,
) -> Result<f64, PotentialError> {
    let ga = green(set, a)?;
    if ga <= 1e-13 {
        return Err(PotentialError::PoleOnSet(a));
    }
    if green(set, z)? <= 1e-13 {
        return Ok(0.0);
    }
    let hm = harmonic_measure_at(set, a, 2 * opts.n)?;
    let mut s = 0.0;
    for (zeta, mu) in &hm {
        s += mu * (z - zeta).norm().ln();
    }
    Ok((-(z - a).norm().ln() + s + ga).max(0.0))
}

/// `∫ log|z−ζ| dρ_K(ζ) − log cap(K)`: the Green function recovered from
/// equilibrium quadrature. An independent route used to cross-check the
/// closed forms and the preimage transfer.
pub fn green_quadrature(
    set: &CompactSet,
    z: C64,
    opts: &QuadOpts,
) -> Result<PoissonValue, PotentialError> {
    let cap = capacity(set)?;
    let pv = poisson_integral(set, |zeta: C64| (z - zeta).norm().ln(), Pole::Infinity, opts)?;
    Ok(PoissonValue { value: pv.value - cap.value.ln(), err_est: pv.err_est })
}
