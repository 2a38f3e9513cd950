//! Dense complex polynomials in the monomial basis.
//!
//! Coefficients are stored ascending, `p(z) = c_0 + c_1 z + … + c_d z^d`,
//! with the invariant that the leading coefficient is nonzero unless the
//! polynomial is the zero polynomial (represented as the single coefficient
//! `0`). Monicity means `c_d == 1` exactly, not within a tolerance; the
//! solvers rely on that when they normalize their output.

use crate::{C64, DEGREE_CAP};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum PolyError {
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("degree {degree} exceeds the supported cap {cap}")]
    DegreeCapExceeded { degree: usize, cap: usize },
    #[error("root iteration stalled at residual {residual:.3e}")]
    NonConvergence { best: Vec<C64>, residual: f64 },
    #[error("polynomial must be nonconstant")]
    Constant,
}

/// Options for the simultaneous root iteration.
#[derive(Debug, Clone, Copy)]
pub struct RootOpts {
    /// Residual target relative to the l1 norm of the coefficients.
    pub tol: f64,
    pub max_iter: usize,
}

impl Default for RootOpts {
    fn default() -> Self {
        RootOpts { tol: 1e-13, max_iter: 400 }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Poly {
    coeffs: Vec<C64>,
}

impl Poly {
    /// Build from ascending coefficients, trimming exactly-zero leading terms.
    pub fn new(mut coeffs: Vec<C64>) -> Self {
        while coeffs.len() > 1 && coeffs.last() == Some(&C64::new(0.0, 0.0)) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(C64::new(0.0, 0.0));
        }
        Poly { coeffs }
    }

    pub fn from_real(coeffs: &[f64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| C64::new(c, 0.0)).collect())
    }

    pub fn constant(c: C64) -> Self {
        Poly::new(vec![c])
    }

    /// The identity polynomial `z`.
    pub fn identity() -> Self {
        Poly::from_real(&[0.0, 1.0])
    }

    pub fn zero() -> Self {
        Poly::constant(C64::new(0.0, 0.0))
    }

    /// Monic polynomial with the prescribed roots, times `lead`.
    pub fn from_roots(roots: &[C64], lead: C64) -> Self {
        let mut p = Poly::constant(lead);
        for &r in roots {
            p = p.mul(&Poly::new(vec![-r, C64::new(1.0, 0.0)]));
        }
        p
    }

    pub fn coeffs(&self) -> &[C64] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0] == C64::new(0.0, 0.0)
    }

    pub fn leading(&self) -> C64 {
        *self.coeffs.last().unwrap()
    }

    /// Exact test: the leading coefficient is the literal 1.0.
    pub fn is_monic(&self) -> bool {
        self.leading() == C64::new(1.0, 0.0)
    }

    /// Divide through by the leading coefficient. `c/c` is exactly 1 in
    /// IEEE arithmetic, so the result is monic in the exact sense.
    pub fn make_monic(&self) -> Result<Poly, PolyError> {
        if self.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        let lead = self.leading();
        let mut coeffs: Vec<C64> = self.coeffs.iter().map(|&c| c / lead).collect();
        *coeffs.last_mut().unwrap() = C64::new(1.0, 0.0);
        Ok(Poly { coeffs })
    }

    /// Horner evaluation.
    pub fn eval(&self, z: C64) -> C64 {
        let mut acc = C64::new(0.0, 0.0);
        for &c in self.coeffs.iter().rev() {
            acc = acc * z + c;
        }
        acc
    }

    pub fn eval_real(&self, x: f64) -> C64 {
        self.eval(C64::new(x, 0.0))
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![C64::new(0.0, 0.0); n];
        for (i, &c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, &c) in other.coeffs.iter().enumerate() {
            out[i] += c;
        }
        Poly::new(out)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.scale(C64::new(-1.0, 0.0)))
    }

    pub fn scale(&self, s: C64) -> Poly {
        Poly::new(self.coeffs.iter().map(|&c| c * s).collect())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![C64::new(0.0, 0.0); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }

    /// Shift the constant term, `p − c`. Used to form fiber equations.
    pub fn sub_constant(&self, c: C64) -> Poly {
        let mut coeffs = self.coeffs.clone();
        coeffs[0] -= c;
        Poly::new(coeffs)
    }

    pub fn derivative(&self) -> Poly {
        if self.degree() == 0 {
            return Poly::zero();
        }
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, &c)| c * k as f64)
                .collect(),
        )
    }

    /// Polynomial composition `self ∘ inner` by Horner on coefficients.
    pub fn compose(&self, inner: &Poly) -> Poly {
        let mut acc = Poly::constant(self.leading());
        for &c in self.coeffs.iter().rev().skip(1) {
            acc = acc.mul(inner).add(&Poly::constant(c));
        }
        acc
    }

    pub fn coeff_l1(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).sum()
    }

    /// All roots with multiplicity, by the Aberth–Ehrlich simultaneous
    /// iteration seeded on a randomly perturbed circle (fixed seed, so the
    /// output is deterministic for a given input). Each root gets a final
    /// Newton polish. Order is unspecified but deterministic.
    pub fn roots(&self) -> Result<Vec<C64>, PolyError> {
        self.roots_with(RootOpts::default())
    }

    pub fn roots_with(&self, opts: RootOpts) -> Result<Vec<C64>, PolyError> {
        if self.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        let d = self.degree();
        if d == 0 {
            return Ok(Vec::new());
        }
        if d > DEGREE_CAP {
            return Err(PolyError::DegreeCapExceeded { degree: d, cap: DEGREE_CAP });
        }

        // Exact zero roots split off cheaply and keep multiple roots at the
        // origin from dragging the iteration.
        let zero = C64::new(0.0, 0.0);
        let n_zero = self.coeffs.iter().take_while(|&&c| c == zero).count();
        let work = Poly::new(self.coeffs[n_zero..].to_vec());
        let mut found = vec![zero; n_zero];
        let m = work.degree();
        if m == 0 {
            return Ok(found);
        }

        let scale = work.coeff_l1();
        let lead = work.leading();
        let center = -work.coeffs[m - 1] / (lead * m as f64);
        let radius = 1.0
            + work.coeffs[..m]
                .iter()
                .map(|c| (c / lead).norm())
                .fold(0.0f64, f64::max);

        let mut rng = ChaCha8Rng::seed_from_u64(0x0ac5_17e5);
        let offset: f64 = rng.gen::<f64>() * std::f64::consts::TAU;
        let mut z: Vec<C64> = (0..m)
            .map(|k| {
                let theta = std::f64::consts::TAU * k as f64 / m as f64 + offset;
                let r = radius * (1.0 + 0.05 * rng.gen::<f64>());
                center + C64::new(r * theta.cos(), r * theta.sin())
            })
            .collect();

        let deriv = work.derivative();
        let mut best = z.clone();
        let mut best_res = f64::INFINITY;
        let mut converged = false;
        for _ in 0..opts.max_iter {
            let mut max_res = 0.0f64;
            for i in 0..m {
                let pv = work.eval(z[i]);
                max_res = max_res.max(pv.norm());
                let mut dv = deriv.eval(z[i]);
                if dv.norm() < 1e-300 {
                    dv = C64::new(1e-300, 0.0);
                }
                let newton = pv / dv;
                let mut sum = C64::new(0.0, 0.0);
                for j in 0..m {
                    if j != i {
                        let diff = z[i] - z[j];
                        if diff.norm() > 1e-300 {
                            sum += C64::new(1.0, 0.0) / diff;
                        }
                    }
                }
                let denom = C64::new(1.0, 0.0) - newton * sum;
                let step = if denom.norm() < 1e-300 { newton } else { newton / denom };
                z[i] -= step;
            }
            if max_res < best_res {
                best_res = max_res;
                best.clone_from(&z);
            }
            if max_res <= 0.1 * opts.tol * scale {
                converged = true;
                break;
            }
        }

        // Final residual check on the best iterate, after a Newton polish.
        for zi in best.iter_mut() {
            for _ in 0..3 {
                let pv = work.eval(*zi);
                let dv = deriv.eval(*zi);
                if dv.norm() < 1e-300 {
                    break;
                }
                let step = pv / dv;
                if step.norm() > 0.5 * (1.0 + zi.norm()) {
                    break;
                }
                *zi -= step;
            }
        }
        let residual = best
            .iter()
            .map(|&zi| work.eval(zi).norm())
            .fold(0.0f64, f64::max);
        if !converged && residual > opts.tol * scale {
            return Err(PolyError::NonConvergence { best, residual });
        }
        found.extend(best);
        Ok(found)
    }

    /// Power sums `S_0..S_k` of the roots of `self − ζ`, by the Newton
    /// identity recursion on the coefficients. No root extraction happens;
    /// the recursion divides only by the leading coefficient, so each `S_k`
    /// is a polynomial in ζ (of degree ≤ ⌊k/m⌋ for degree m).
    pub fn power_sums_fiber(&self, zeta: C64, k_max: usize) -> Result<Vec<C64>, PolyError> {
        if self.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        let m = self.degree();
        if m == 0 {
            return Err(PolyError::Constant);
        }
        let a = &self.coeffs;
        let am = a[m];
        let a0 = a[0] - zeta;
        let coeff = |idx: usize| -> C64 {
            if idx == 0 {
                a0
            } else {
                a[idx]
            }
        };
        let mut s = Vec::with_capacity(k_max + 1);
        s.push(C64::new(m as f64, 0.0));
        for k in 1..=k_max {
            let mut acc = C64::new(0.0, 0.0);
            if k < m {
                // Σ_{j=1..k} a_{m-k+j} S_j + k a_{m-k} = 0; solve for S_k.
                for j in 1..k {
                    acc += coeff(m - k + j) * s[j];
                }
                s.push((-coeff(m - k) * k as f64 - acc) / am);
            } else {
                // Σ_{j=k-m+1..k} a_{m-k+j} S_j + (a_0 - ζ) S_{k-m} = 0.
                for j in (k - m + 1)..k {
                    acc += coeff(m + j - k) * s[j];
                }
                acc += a0 * s[k - m];
                s.push(-acc / am);
            }
        }
        Ok(s)
    }
}
