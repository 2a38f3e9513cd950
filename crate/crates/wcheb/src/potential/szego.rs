//! The Szegő integral `S(w) = exp ∫ log w dρ_K`.
//!
//! Exact routes: constants; products of powers of `|p(z)|`, where
//! `S(|z − z₀|) = e^{g(z₀)} · cap` turns each factor into Green-function
//! evaluations at its roots; pullback weights on matching preimage sets,
//! which recurse to the base. Everything else integrates `log w` against
//! equilibrium quadrature, with a refinement gap as the error estimate.

use crate::domain::CompactSet;
use crate::poly::Poly;
use crate::potential::{capacity, green, poisson_integral, Pole, PotentialError, QuadOpts};
use crate::weight::Weight;

#[derive(Debug, Clone, Copy)]
pub struct SzegoValue {
    pub value: f64,
    /// Whether the value came from a closed form.
    pub exact: bool,
    /// False when `∫ log w dρ = −∞` (w vanishes too strongly), in which
    /// case `value` is 0.
    pub szego_class: bool,
    pub err_est: f64,
}

pub fn szego_integral(
    set: &CompactSet,
    w: &Weight,
    opts: &QuadOpts,
) -> Result<SzegoValue, PotentialError> {
    match w {
        Weight::Constant(c) => {
            return Ok(SzegoValue { value: *c, exact: true, szego_class: true, err_est: 0.0 })
        }
        Weight::AbsPolyPower(factors) if set.has_analytic_potential() => {
            let cap = capacity(set)?;
            let mut log_s = 0.0;
            for (p, alpha) in factors {
                log_s += alpha * log_szego_abs_poly(set, p, cap.value)?;
            }
            return Ok(SzegoValue {
                value: log_s.exp(),
                exact: cap.exact,
                szego_class: true,
                err_est: 0.0,
            });
        }
        Weight::Pullback { map, base } => {
            if let CompactSet::Preimage { map: smap, base: sbase } = set {
                if polys_match(map, smap) {
                    // p_* ρ_K = ρ_L, so ∫ log(w∘p) dρ_K = ∫ log w dρ_L.
                    return szego_integral(sbase, base, opts);
                }
            }
        }
        _ => {}
    }

    // quadrature route
    let pv = poisson_integral(
        set,
        |z| match w.eval(z) {
            Ok(v) => v.ln(),
            Err(_) => f64::NAN,
        },
        Pole::Infinity,
        opts,
    )?;
    if pv.value.is_nan() {
        return Err(PotentialError::NoConvergence(
            "weight is undefined at an equilibrium quadrature node".into(),
        ));
    }
    if pv.value <= -1e3 {
        return Ok(SzegoValue { value: 0.0, exact: false, szego_class: false, err_est: 0.0 });
    }
    let value = pv.value.exp();
    Ok(SzegoValue { value, exact: false, szego_class: true, err_est: value * pv.err_est })
}

/// `∫ log|p| dρ_K = log|lead| + deg·log cap + Σ_roots g(r)`.
fn log_szego_abs_poly(set: &CompactSet, p: &Poly, cap: f64) -> Result<f64, PotentialError> {
    if p.degree() == 0 {
        return Ok(p.coeffs()[0].norm().ln());
    }
    let mut term = p.leading().norm().ln() + p.degree() as f64 * cap.ln();
    for r in p.roots()? {
        term += green(set, r)?;
    }
    Ok(term)
}

fn polys_match(a: &Poly, b: &Poly) -> bool {
    a.degree() == b.degree()
        && a.coeffs()
            .iter()
            .zip(b.coeffs())
            .all(|(x, y)| (x - y).norm() <= 1e-12 * (1.0 + x.norm()))
}
