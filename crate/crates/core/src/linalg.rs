//! Positive-definite matrix bookkeeping shared by both agents.
//!
//! [`PsdMatrix`] stores a dense symmetric matrix together with its lower
//! Cholesky factor. Covariance matrices grow by rank-one updates over
//! thousands of episodes, so inverse-mode norms, solves, and Gaussian
//! sampling all go through triangular solves against the factor; the
//! inverse is never formed explicitly.

use rand::Rng;
use thiserror::Error;

use crate::scalar::Scalar;

/// Cholesky pivots below this are treated as numerically singular.
const PIVOT_FLOOR: f64 = 1e-12;

/// Relative tolerance for the symmetry check on dense input.
const SYMMETRY_TOL: f64 = 1e-10;

#[derive(Debug, Error)]
pub enum LinalgError {
    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    #[error("matrix is not symmetric at ({i},{j})")]
    NotSymmetric { i: usize, j: usize },

    #[error("Cholesky pivot {pivot:.3e} at column {column} fell below {PIVOT_FLOOR:.0e}")]
    PivotTooSmall { column: usize, pivot: f64 },

    #[error("scale must be positive, got {0}")]
    NonPositiveScale(f64),
}

/// Norm flavour for [`PsdMatrix::mahalanobis`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NormMode {
    /// sqrt(x' M x)
    Direct,
    /// sqrt(x' M^{-1} x)
    Inverse,
}

/// Symmetric positive-definite matrix with a cached lower Cholesky factor.
///
/// Values are immutable once built; updates return a new matrix.
#[derive(Debug, Clone)]
pub struct PsdMatrix<S> {
    dim: usize,
    /// Dense symmetric matrix, row-major.
    a: Vec<S>,
    /// Lower-triangular factor with `a = l * l'`, row-major.
    l: Vec<S>,
}

impl<S: Scalar> PsdMatrix<S> {
    /// Builds `lambda * I`.
    pub fn scaled_identity(dim: usize, lambda: S) -> Result<Self, LinalgError> {
        if !(lambda > S::zero()) || lambda < S::cast(PIVOT_FLOOR) {
            return Err(LinalgError::PivotTooSmall {
                column: 0,
                pivot: lambda.to_f64().unwrap_or(f64::NAN),
            });
        }
        let mut a = vec![S::zero(); dim * dim];
        let mut l = vec![S::zero(); dim * dim];
        let root = lambda.sqrt();
        for i in 0..dim {
            a[i * dim + i] = lambda;
            l[i * dim + i] = root;
        }
        Ok(Self { dim, a, l })
    }

    /// Builds from a dense row-major symmetric matrix, factorizing it.
    pub fn from_dense(dim: usize, a: Vec<S>) -> Result<Self, LinalgError> {
        if a.len() != dim * dim {
            return Err(LinalgError::DimensionMismatch {
                expected: dim * dim,
                actual: a.len(),
            });
        }
        let tol = S::cast(SYMMETRY_TOL);
        for i in 0..dim {
            for j in 0..i {
                let x = a[i * dim + j];
                let y = a[j * dim + i];
                let scale = S::one().max(x.abs().max(y.abs()));
                if (x - y).abs() > tol * scale {
                    return Err(LinalgError::NotSymmetric { i, j });
                }
            }
        }
        let l = cholesky(dim, &a)?;
        Ok(Self { dim, a, l })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Dense matrix entries, row-major.
    pub fn dense(&self) -> &[S] {
        &self.a
    }

    /// Lower Cholesky factor, row-major.
    pub fn factor(&self) -> &[S] {
        &self.l
    }

    fn check_dim(&self, x: &[S]) -> Result<(), LinalgError> {
        if x.len() != self.dim {
            return Err(LinalgError::DimensionMismatch {
                expected: self.dim,
                actual: x.len(),
            });
        }
        Ok(())
    }

    /// Returns `self + x x'` with the factor refreshed by a rank-one
    /// Cholesky update. Pivots cannot shrink under a PSD update, so no
    /// re-factorization is needed.
    pub fn rank_one_update(&self, x: &[S]) -> Result<Self, LinalgError> {
        self.check_dim(x)?;
        let d = self.dim;
        let mut out = self.clone();
        for i in 0..d {
            for j in 0..d {
                out.a[i * d + j] = out.a[i * d + j] + x[i] * x[j];
            }
        }
        let mut w = x.to_vec();
        let mut b = S::one();
        for j in 0..d {
            let ljj = out.l[j * d + j];
            let wj = w[j];
            let new_ljj = (ljj * ljj + wj * wj / b).sqrt();
            let gamma = ljj * ljj * b + wj * wj;
            for k in (j + 1)..d {
                let wk = w[k] - wj * out.l[k * d + j] / ljj;
                out.l[k * d + j] = new_ljj * (out.l[k * d + j] / ljj + wj * wk / gamma);
                w[k] = wk;
            }
            b = b + wj * wj / (ljj * ljj);
            out.l[j * d + j] = new_ljj;
        }
        Ok(out)
    }

    /// Mahalanobis norm of `x`: `sqrt(x' M x)` in direct mode, computed as
    /// the Euclidean norm of `L' x`; `sqrt(x' M^{-1} x)` in inverse mode,
    /// computed as the norm of the forward solve `L z = x`.
    pub fn mahalanobis(&self, x: &[S], mode: NormMode) -> Result<S, LinalgError> {
        self.check_dim(x)?;
        let d = self.dim;
        let mut acc = S::zero();
        match mode {
            NormMode::Direct => {
                for i in 0..d {
                    let mut y = S::zero();
                    for j in i..d {
                        y = y + self.l[j * d + i] * x[j];
                    }
                    acc = acc + y * y;
                }
            }
            NormMode::Inverse => {
                let z = self.forward_solve(x);
                for zi in z {
                    acc = acc + zi * zi;
                }
            }
        }
        Ok(acc.sqrt())
    }

    /// Solves `M v = b` via a forward and a backward triangular solve.
    pub fn solve(&self, b: &[S]) -> Result<Vec<S>, LinalgError> {
        self.check_dim(b)?;
        let y = self.forward_solve(b);
        Ok(self.backward_solve(&y))
    }

    /// Draws `mean + sqrt(scale) * z` with `L' z = u`, `u ~ N(0, I)`, so the
    /// result has covariance `scale * M^{-1}`.
    pub fn sample_correlated_gaussian<R: Rng + ?Sized>(
        &self,
        mean: &[S],
        scale: S,
        rng: &mut R,
    ) -> Result<Vec<S>, LinalgError> {
        self.check_dim(mean)?;
        if !(scale > S::zero()) {
            return Err(LinalgError::NonPositiveScale(
                scale.to_f64().unwrap_or(f64::NAN),
            ));
        }
        let u: Vec<S> = (0..self.dim).map(|_| S::standard_normal(rng)).collect();
        let z = self.backward_solve(&u);
        let root = scale.sqrt();
        Ok(mean.iter().zip(&z).map(|(&m, &zi)| m + root * zi).collect())
    }

    /// Forward substitution `L z = x`.
    fn forward_solve(&self, x: &[S]) -> Vec<S> {
        let d = self.dim;
        let mut z = vec![S::zero(); d];
        for i in 0..d {
            let mut s = x[i];
            for k in 0..i {
                s = s - self.l[i * d + k] * z[k];
            }
            z[i] = s / self.l[i * d + i];
        }
        z
    }

    /// Backward substitution `L' v = y`.
    fn backward_solve(&self, y: &[S]) -> Vec<S> {
        let d = self.dim;
        let mut v = vec![S::zero(); d];
        for i in (0..d).rev() {
            let mut s = y[i];
            for k in (i + 1)..d {
                s = s - self.l[k * d + i] * v[k];
            }
            v[i] = s / self.l[i * d + i];
        }
        v
    }
}

/// Lower Cholesky factor of a dense symmetric matrix, failing loudly when a
/// pivot falls below [`PIVOT_FLOOR`] instead of regularizing silently.
fn cholesky<S: Scalar>(dim: usize, a: &[S]) -> Result<Vec<S>, LinalgError> {
    let floor = S::cast(PIVOT_FLOOR);
    let mut l = vec![S::zero(); dim * dim];
    for j in 0..dim {
        let mut pivot = a[j * dim + j];
        for k in 0..j {
            pivot = pivot - l[j * dim + k] * l[j * dim + k];
        }
        if pivot < floor {
            return Err(LinalgError::PivotTooSmall {
                column: j,
                pivot: pivot.to_f64().unwrap_or(f64::NAN),
            });
        }
        let root = pivot.sqrt();
        l[j * dim + j] = root;
        for i in (j + 1)..dim {
            let mut s = a[i * dim + j];
            for k in 0..j {
                s = s - l[i * dim + k] * l[j * dim + k];
            }
            l[i * dim + j] = s / root;
        }
    }
    Ok(l)
}
