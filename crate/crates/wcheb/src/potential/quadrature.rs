//! Quadrature rules for the equilibrium measure and for harmonic
//! measures at finite points, plus Poisson integrals built on them.

use crate::domain::{fiber, CompactSet};
use crate::potential::{green, PotentialError};
use crate::C64;
use std::f64::consts::PI;

#[derive(Debug, Clone, Copy)]
pub struct QuadOpts {
    /// Base node count; integrals are formed at `n` and `2n` and the
    /// difference reported as the error estimate.
    pub n: usize,
}

impl Default for QuadOpts {
    fn default() -> Self {
        QuadOpts { n: 512 }
    }
}

/// Where a Poisson integral is evaluated.
#[derive(Debug, Clone, Copy)]
pub enum Pole {
    Infinity,
    Finite(C64),
}

#[derive(Debug, Clone, Copy)]
pub struct PoissonValue {
    pub value: f64,
    /// |I_{2n} − I_n|, a computable refinement gap, not a rigorous bound.
    pub err_est: f64,
}

/// Nodes and weights for the equilibrium measure ρ_K.
///
/// Single interval: Gauss–Chebyshev (arcsine density). Circle: uniform
/// angles. Preimage: the base rule pulled back along the map, each node's
/// mass split equally over its fiber.
pub fn eq_quadrature(
    set: &CompactSet,
    n: usize,
) -> Result<Vec<(C64, f64)>, PotentialError> {
    match set {
        CompactSet::IntervalUnion(iv) if iv.len() == 1 => {
            let (a, b) = iv[0];
            let mid = 0.5 * (a + b);
            let half = 0.5 * (b - a);
            Ok((1..=n)
                .map(|j| {
                    let x = mid + half * ((2 * j - 1) as f64 * PI / (2.0 * n as f64)).cos();
                    (C64::new(x, 0.0), 1.0 / n as f64)
                })
                .collect())
        }
        CompactSet::Circle { center, radius } => Ok((0..n)
            .map(|j| {
                let th = 2.0 * PI * j as f64 / n as f64;
                (center + radius * C64::new(th.cos(), th.sin()), 1.0 / n as f64)
            })
            .collect()),
        CompactSet::Preimage { map, base } => {
            let m = map.degree();
            let base_n = n.div_ceil(m).max(2);
            let base_q = eq_quadrature(base, base_n)?;
            let mut out = Vec::with_capacity(base_n * m);
            for (zeta, mu) in base_q {
                let fib = fiber(map, zeta)?;
                let share = mu / fib.len() as f64;
                out.extend(fib.into_iter().map(|z| (z, share)));
            }
            Ok(out)
        }
        CompactSet::IntervalUnion(_) => Err(PotentialError::HarmonicMeasureUnavailable(
            "no closed-form equilibrium measure for a multi-component union; \
             realize the set as a polynomial preimage"
                .into(),
        )),
        CompactSet::SampledSet(_) => Err(PotentialError::HarmonicMeasureUnavailable(
            "sampled sets carry no equilibrium measure".into(),
        )),
    }
}

/// Trapezoid weights of the exterior Poisson kernel at `v`, |v| > 1,
/// against uniform angles; normalized to total mass 1.
fn ext_poisson_weights(v: C64, n: usize) -> Vec<f64> {
    let r2 = v.norm_sqr();
    let mut w: Vec<f64> = (0..n)
        .map(|j| {
            let th = 2.0 * PI * j as f64 / n as f64;
            let d = v - C64::new(th.cos(), th.sin());
            (r2 - 1.0) / d.norm_sqr()
        })
        .collect();
    let s: f64 = w.iter().sum();
    for x in &mut w {
        *x /= s;
    }
    w
}

/// `u + sqrt(u² − 1)` on the branch with |·| ≥ 1 (exterior Joukowski
/// parameter of `u` relative to [−1, 1]).
fn joukowski_out(u: C64) -> C64 {
    let s = (u * u - C64::new(1.0, 0.0)).sqrt();
    let p = u + s;
    if p.norm() >= 1.0 {
        p
    } else {
        u - s
    }
}

/// Harmonic measure of the unbounded complement component at a finite
/// point `a`, as nodes and weights on the set. Circle: exterior Poisson
/// kernel. Interval: the circle kernel pushed forward through the
/// Joukowski map.
pub fn harmonic_measure_at(
    set: &CompactSet,
    a: C64,
    n: usize,
) -> Result<Vec<(C64, f64)>, PotentialError> {
    if green(set, a)? <= 1e-13 {
        return Err(PotentialError::PoleOnSet(a));
    }
    match set {
        CompactSet::Circle { center, radius } => {
            let v = (a - center) / *radius;
            let w = ext_poisson_weights(v, n);
            Ok((0..n)
                .map(|j| {
                    let th = 2.0 * PI * j as f64 / n as f64;
                    (center + radius * C64::new(th.cos(), th.sin()), w[j])
                })
                .collect())
        }
        CompactSet::IntervalUnion(iv) if iv.len() == 1 => {
            let (lo, hi) = iv[0];
            let mid = 0.5 * (lo + hi);
            let half = 0.5 * (hi - lo);
            let u = (2.0 * a - C64::new(lo + hi, 0.0)) / (hi - lo);
            let v = joukowski_out(u);
            let w = ext_poisson_weights(v, n);
            Ok((0..n)
                .map(|j| {
                    let th = 2.0 * PI * j as f64 / n as f64;
                    (C64::new(mid + half * th.cos(), 0.0), w[j])
                })
                .collect())
        }
        _ => Err(PotentialError::HarmonicMeasureUnavailable(
            "harmonic measure at a finite point needs a circle, a single \
             interval, or a preimage with a fiber-constant integrand"
                .into(),
        )),
    }
}

fn weighted_sum(q: &[(C64, f64)], f: &dyn Fn(C64) -> f64) -> f64 {
    let mut s = 0.0;
    for (z, mu) in q {
        if *mu != 0.0 {
            s += mu * f(*z);
        }
    }
    s
}

/// `PI_Ω(f; z) = ∫ f dω_z`: the Poisson integral of `f` over the
/// boundary seen from `z`. At ∞ this integrates against ρ_K. On a
/// preimage set with a finite pole the integrand must be constant on
/// fibers of the map (checked at probe nodes); the integral then
/// descends to the base set at the mapped pole.
pub fn poisson_integral<F: Fn(C64) -> f64>(
    set: &CompactSet,
    f: F,
    at: Pole,
    opts: &QuadOpts,
) -> Result<PoissonValue, PotentialError> {
    pi_dyn(set, &f, at, opts)
}

fn pi_dyn(
    set: &CompactSet,
    f: &dyn Fn(C64) -> f64,
    at: Pole,
    opts: &QuadOpts,
) -> Result<PoissonValue, PotentialError> {
    match at {
        Pole::Infinity => {
            let i1 = weighted_sum(&eq_quadrature(set, opts.n)?, f);
            let i2 = weighted_sum(&eq_quadrature(set, 2 * opts.n)?, f);
            Ok(PoissonValue { value: i2, err_est: (i2 - i1).abs() })
        }
        Pole::Finite(a) => match set {
            CompactSet::Circle { .. } => pi_finite_direct(set, f, a, opts),
            CompactSet::IntervalUnion(iv) if iv.len() == 1 => {
                pi_finite_direct(set, f, a, opts)
            }
            CompactSet::Preimage { map, base } => {
                if green(set, a)? <= 1e-13 {
                    return Err(PotentialError::PoleOnSet(a));
                }
                check_fiber_constant(map, base, f)?;
                let lift = |zeta: C64| -> f64 {
                    match fiber(map, zeta) {
                        Ok(fib) => f(fib[0]),
                        Err(_) => f64::NAN,
                    }
                };
                pi_dyn(base, &lift, Pole::Finite(map.eval(a)), opts)
            }
            _ => Err(PotentialError::HarmonicMeasureUnavailable(
                "Poisson integral at a finite point needs a circle, a single \
                 interval, or a preimage with a fiber-constant integrand"
                    .into(),
            )),
        },
    }
}

fn pi_finite_direct(
    set: &CompactSet,
    f: &dyn Fn(C64) -> f64,
    a: C64,
    opts: &QuadOpts,
) -> Result<PoissonValue, PotentialError> {
    let i1 = weighted_sum(&harmonic_measure_at(set, a, opts.n)?, f);
    let i2 = weighted_sum(&harmonic_measure_at(set, a, 2 * opts.n)?, f);
    Ok(PoissonValue { value: i2, err_est: (i2 - i1).abs() })
}

/// Probe a handful of base nodes and require `f` to take one value on
/// each full fiber, the structural signature of `f = f̃ ∘ map`.
fn check_fiber_constant(
    map: &crate::poly::Poly,
    base: &CompactSet,
    f: &dyn Fn(C64) -> f64,
) -> Result<(), PotentialError> {
    let probes = eq_quadrature(base, 8)?;
    for (zeta, _) in probes.iter().take(8) {
        let fib = fiber(map, *zeta)?;
        let vals: Vec<f64> = fib.iter().map(|z| f(*z)).collect();
        let v0 = vals[0];
        for v in &vals[1..] {
            let same = if v0.is_infinite() || v.is_infinite() {
                v0 == *v
            } else {
                (v0 - v).abs() <= 1e-6 * (1.0 + v0.abs().max(v.abs()))
            };
            if !same {
                return Err(PotentialError::HarmonicMeasureUnavailable(format!(
                    "integrand is not constant on the fiber over {zeta} \
                     ({v0} vs {v}), so it does not descend through the map"
                )));
            }
        }
    }
    Ok(())
}
