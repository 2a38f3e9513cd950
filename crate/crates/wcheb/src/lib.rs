//! Weighted Chebyshev (minimax) polynomials on compact subsets of the
//! complex plane.
//!
//! Given a compact set `K` and an upper semi-continuous weight `w ≥ 0`, the
//! weighted Chebyshev polynomial of degree `n` is the monic polynomial
//! minimizing `sup_K w·|P|`. This crate computes those minimizers on interval
//! unions, circles, and polynomial preimages, certifies optimality through
//! Kolmogorov / Rivlin–Shapiro multiplier and alternation checks, and
//! verifies the potential-theoretic inequalities the minimal norms satisfy
//! (Widom factors against the Szegő integral, Bernstein–Walsh growth,
//! preimage invariance).
//!
//! Module map:
//! - [`poly`]: dense complex polynomials, root finding, fiber power sums
//! - [`domain`]: compact sets, sampling grids, polynomial fibers
//! - [`potential`]: capacity, equilibrium quadrature, Green functions,
//!   harmonic measure, Szegő integrals
//! - [`weight`]: weight functions and USC regularization
//! - [`solver`]: Remez exchange and Lawson iteration front ends, Widom
//!   factors, preimage transfer
//! - [`certificate`]: extremal sets, optimality certificates, alternation
//! - [`bounds`]: weight comparison, Bernstein–Walsh, Szegő lower bound,
//!   sharpness sweeps
//! - [`cli`]: JSON problem/result schema used by the `wcheb` binary

pub mod bounds;
pub mod certificate;
pub mod cli;
pub mod domain;
pub mod linalg;
pub mod poly;
pub mod potential;
pub mod solver;
pub mod weight;

pub use domain::{CompactSet, Grid};
pub use poly::Poly;
pub use solver::{ChebyshevResult, WidomReport};
pub use weight::Weight;

/// Largest polynomial degree the root finder and solvers accept.
///
/// Monomial-basis arithmetic in f64 degrades past this point; callers who
/// need more should work with factored representations instead.
pub const DEGREE_CAP: usize = 64;

/// Complex scalar used throughout.
pub type C64 = num_complex::Complex64;
