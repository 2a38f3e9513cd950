//! Small dense linear algebra helpers shared by the solvers and
//! certificate machinery.
//!
//! Everything here operates on problems whose dimensions are bounded by the
//! polynomial degree cap, so dense O(n^3) methods are always acceptable.

use nalgebra::{DMatrix, DVector};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum LinalgError {
    #[error("linear system is singular to working precision")]
    Singular,
    #[error("dimension mismatch: {0}")]
    Shape(String),
    #[error("iteration limit reached without convergence")]
    NoConvergence,
}

/// Solve the square system `a x = b` by LU with partial pivoting.
pub fn solve_dense(a: &DMatrix<f64>, b: &DVector<f64>) -> Result<DVector<f64>, LinalgError> {
    if a.nrows() != a.ncols() || a.nrows() != b.len() {
        return Err(LinalgError::Shape(format!(
            "{}x{} matrix with rhs of length {}",
            a.nrows(),
            a.ncols(),
            b.len()
        )));
    }
    a.clone()
        .lu()
        .solve(b)
        .ok_or(LinalgError::Singular)
}

/// Least-squares solution of `a x ≈ b` via SVD.
///
/// Rank-deficient systems get the minimum-norm solution, with singular
/// values below a relative threshold treated as zero. Bounded solutions on
/// degenerate subproblems keep the active-set iteration in [`nnls`] stable.
pub fn lstsq(a: &DMatrix<f64>, b: &DVector<f64>) -> Result<DVector<f64>, LinalgError> {
    if a.nrows() != b.len() {
        return Err(LinalgError::Shape(format!(
            "{} rows vs rhs of length {}",
            a.nrows(),
            b.len()
        )));
    }
    let svd = a.clone().svd(true, true);
    let smax = svd.singular_values.iter().fold(0.0f64, |m, &s| m.max(s));
    if smax <= 0.0 {
        return Err(LinalgError::Singular);
    }
    let eps = 1e-12 * smax * (a.nrows().max(a.ncols()) as f64);
    svd.solve(b, eps).map_err(|_| LinalgError::Singular)
}

/// Nonnegative least squares: minimize `‖a x − b‖` subject to `x ≥ 0`.
///
/// Active-set method in the Lawson–Hanson style. The problems solved here
/// have at most a few dozen columns, so the inner unconstrained solves go
/// through dense QR on the passive columns.
pub fn nnls(a: &DMatrix<f64>, b: &DVector<f64>, max_iter: usize) -> Result<DVector<f64>, LinalgError> {
    let (m, n) = (a.nrows(), a.ncols());
    if m != b.len() {
        return Err(LinalgError::Shape(format!(
            "{} rows vs rhs of length {}",
            m,
            b.len()
        )));
    }
    let mut x = DVector::zeros(n);
    let mut passive = vec![false; n];
    let scale = b.norm().max(1.0);
    let tol = 1e-12 * scale * (m as f64).sqrt();

    let solve_passive = |passive: &[bool]| -> Result<Option<DVector<f64>>, LinalgError> {
        let cols: Vec<usize> = (0..n).filter(|&j| passive[j]).collect();
        if cols.is_empty() {
            return Ok(None);
        }
        let sub = DMatrix::from_fn(m, cols.len(), |i, k| a[(i, cols[k])]);
        let sol = lstsq(&sub, b)?;
        let mut full = DVector::zeros(n);
        for (k, &j) in cols.iter().enumerate() {
            full[j] = sol[k];
        }
        Ok(Some(full))
    };

    for _ in 0..max_iter {
        let residual = b - a * &x;
        let grad = a.transpose() * residual;
        let mut best: Option<(usize, f64)> = None;
        for j in 0..n {
            if !passive[j] && grad[j] > tol {
                if best.map_or(true, |(_, g)| grad[j] > g) {
                    best = Some((j, grad[j]));
                }
            }
        }
        let Some((j_new, _)) = best else {
            return Ok(x);
        };
        passive[j_new] = true;

        loop {
            let Some(s) = solve_passive(&passive)? else {
                return Ok(x);
            };
            let feasible = (0..n).all(|j| !passive[j] || s[j] > 0.0);
            if feasible {
                x = s;
                break;
            }
            // Step toward s until the first passive variable hits zero.
            let mut alpha = 1.0f64;
            for j in 0..n {
                if passive[j] && s[j] <= 0.0 {
                    let denom = x[j] - s[j];
                    if denom > 0.0 {
                        alpha = alpha.min(x[j] / denom);
                    }
                }
            }
            for j in 0..n {
                if passive[j] {
                    x[j] += alpha * (s[j] - x[j]);
                    if x[j] <= tol.max(1e-300) {
                        x[j] = 0.0;
                        passive[j] = false;
                    }
                }
            }
        }
    }
    Err(LinalgError::NoConvergence)
}

/// Chebyshev interpolation coefficients of degree `n` from samples of `f`
/// at the second-kind points `cos(kπ/n)`, `k = 0..n`, on `[-1, 1]`.
///
/// Returns coefficients `a_0..a_n` with `p(x) = Σ a_k T_k(x)`.
pub fn chebyshev_interpolate(f: impl Fn(f64) -> f64, n: usize) -> Vec<f64> {
    assert!(n >= 1);
    let vals: Vec<f64> = (0..=n)
        .map(|k| f((k as f64 * std::f64::consts::PI / n as f64).cos()))
        .collect();
    let mut coeffs = vec![0.0; n + 1];
    for (j, c) in coeffs.iter_mut().enumerate() {
        let mut s = 0.0;
        for (k, &v) in vals.iter().enumerate() {
            let term = v * ((j * k) as f64 * std::f64::consts::PI / n as f64).cos();
            // Trapezoid-style halving at the endpoints of the cosine sum.
            s += if k == 0 || k == n { 0.5 * term } else { term };
        }
        *c = 2.0 * s / n as f64;
    }
    coeffs[0] *= 0.5;
    coeffs[n] *= 0.5;
    coeffs
}

/// Evaluate `Σ a_k T_k(x)` by the Clenshaw recurrence. Stable for |x| ≲ 1.
pub fn clenshaw(coeffs: &[f64], x: f64) -> f64 {
    let mut b1 = 0.0;
    let mut b2 = 0.0;
    for &a in coeffs.iter().skip(1).rev() {
        let b0 = 2.0 * x * b1 - b2 + a;
        b2 = b1;
        b1 = b0;
    }
    coeffs.first().copied().unwrap_or(0.0) + x * b1 - b2
}

/// Roots of `Σ a_k T_k(x)` via eigenvalues of the colleague matrix.
///
/// This is the numerically sound way to extract roots of a high-degree
/// Chebyshev expansion; converting to the monomial basis first destroys
/// the coefficients through cancellation.
pub fn chebyshev_roots(coeffs: &[f64]) -> Vec<num_complex::Complex64> {
    // Trim a numerically negligible tail so the leading coefficient is real.
    let max_c = coeffs.iter().fold(0.0f64, |m, c| m.max(c.abs()));
    let mut deg = coeffs.len().saturating_sub(1);
    while deg > 0 && coeffs[deg].abs() <= 1e-13 * max_c {
        deg -= 1;
    }
    if deg == 0 {
        return Vec::new();
    }
    let an = coeffs[deg];
    let n = deg;
    if n == 1 {
        return vec![num_complex::Complex64::new(-coeffs[0] / an, 0.0)];
    }
    // Colleague matrix: multiplication by x in the basis T_0..T_{n-1},
    // reduced modulo the expansion. Its eigenvalues are the roots.
    let mut m = DMatrix::<f64>::zeros(n, n);
    for i in 0..n {
        if i + 1 < n {
            m[(i, i + 1)] = 0.5;
        }
        if i >= 1 {
            m[(i, i - 1)] = 0.5;
        }
    }
    m[(0, 1)] = 1.0;
    for j in 0..n {
        m[(n - 1, j)] -= coeffs[j] / (2.0 * an);
    }
    m.complex_eigenvalues().iter().copied().collect()
}
