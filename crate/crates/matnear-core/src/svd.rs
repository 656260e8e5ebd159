//! Singular value decomposition via one-sided (Hestenes) Jacobi rotations.
//!
//! The kernel orthogonalizes pairs of columns of the working matrix with
//! plane rotations until every pair is numerically orthogonal; column norms
//! are then the singular values, normalized columns are the left singular
//! vectors, and the accumulated rotations give the right singular vectors.
//! One-sided Jacobi keeps high relative accuracy for small singular values,
//! which matters because the pseudoinverse inverts them.
//!
//! Wide matrices are handled by factoring the transpose and swapping the
//! vector factors.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::math;
use crate::matrix::DenseMatrix;

/// Rotations stop once every column pair satisfies
/// `|wp·wq| <= JACOBI_TOL·‖wp‖·‖wq‖`.
const JACOBI_TOL: f64 = f64::EPSILON;

/// Sweep budget; cyclic Jacobi on well-posed input converges in well under
/// twenty sweeps at the sizes this crate targets.
const MAX_SWEEPS: usize = 128;

/// SVD of a matrix `M = U·Σ·Vᵀ` together with its effective numerical rank.
#[derive(Debug, Clone)]
pub struct SvdFactors {
    left_vectors: DenseMatrix,
    singular_values: Vec<f64>,
    right_vectors: DenseMatrix,
    effective_rank: usize,
    tolerance_used: f64,
}

impl SvdFactors {
    /// Left singular vectors as an m×m orthogonal matrix.
    pub fn left_vectors(&self) -> &DenseMatrix {
        &self.left_vectors
    }

    /// Singular values, sorted nonincreasing; length `min(m, n)`.
    pub fn singular_values(&self) -> &[f64] {
        &self.singular_values
    }

    /// Right singular vectors as an n×n orthogonal matrix.
    pub fn right_vectors(&self) -> &DenseMatrix {
        &self.right_vectors
    }

    /// Number of singular values strictly above [`tolerance_used`](Self::tolerance_used).
    pub fn effective_rank(&self) -> usize {
        self.effective_rank
    }

    /// Absolute threshold below which singular values are treated as zero.
    pub fn tolerance_used(&self) -> f64 {
        self.tolerance_used
    }

    /// Largest singular value (0 for the zero matrix).
    pub fn sigma_max(&self) -> f64 {
        self.singular_values.first().copied().unwrap_or(0.0)
    }

    /// Recomputes `U·Σ·Vᵀ`.
    pub fn reconstruct(&self) -> DenseMatrix {
        let m = self.left_vectors.rows();
        let n = self.right_vectors.rows();
        DenseMatrix::from_fn(m, n, |i, j| {
            self.singular_values
                .iter()
                .enumerate()
                .map(|(k, sigma)| sigma * self.left_vectors.get(i, k) * self.right_vectors.get(j, k))
                .sum()
        })
    }

    /// Moore–Penrose pseudoinverse `V·Σ⁺·Uᵀ`, inverting only singular values
    /// above the rank tolerance.
    pub fn pseudo_inverse(&self) -> DenseMatrix {
        let m = self.left_vectors.rows();
        let n = self.right_vectors.rows();
        let rank = self.effective_rank;
        DenseMatrix::from_fn(n, m, |i, j| {
            (0..rank)
                .map(|k| {
                    self.right_vectors.get(i, k) * self.left_vectors.get(j, k)
                        / self.singular_values[k]
                })
                .sum()
        })
    }
}

/// SVD with the default rank tolerance `ε·max(m,n)·σ_max`.
pub fn svd(m: &DenseMatrix) -> Result<SvdFactors> {
    svd_with(m, None)
}

/// SVD with an explicit relative rank tolerance.
///
/// `rcond` scales the largest singular value: `tolerance_used = rcond·σ_max`.
/// When absent the default is `ε·max(m,n)`; negative values are clamped to 0
/// so exact zeros are never inverted.
pub fn svd_with(m: &DenseMatrix, rcond: Option<f64>) -> Result<SvdFactors> {
    if m.rows() >= m.cols() {
        svd_tall(m, rcond)
    } else {
        let f = svd_tall(&m.transpose(), rcond)?;
        Ok(SvdFactors {
            left_vectors: f.right_vectors,
            right_vectors: f.left_vectors,
            singular_values: f.singular_values,
            effective_rank: f.effective_rank,
            tolerance_used: f.tolerance_used,
        })
    }
}

fn svd_tall(m: &DenseMatrix, rcond: Option<f64>) -> Result<SvdFactors> {
    let rows = m.rows();
    let cols = m.cols();
    debug_assert!(rows >= cols);

    let mut w = m.as_slice().to_vec();
    let mut v = DenseMatrix::identity(cols).into_vec();

    let mut converged = false;
    let mut sweeps = 0;
    let mut worst_ratio_sq: f64 = 0.0;
    while sweeps < MAX_SWEEPS {
        sweeps += 1;
        let mut rotated = false;
        worst_ratio_sq = 0.0;
        for p in 0..cols.saturating_sub(1) {
            for q in (p + 1)..cols {
                let (mut app, mut aqq, mut apq) = (0.0f64, 0.0f64, 0.0f64);
                for i in 0..rows {
                    let wp = w[i * cols + p];
                    let wq = w[i * cols + q];
                    app += wp * wp;
                    aqq += wq * wq;
                    apq += wp * wq;
                }
                if apq == 0.0 {
                    continue;
                }
                let ratio_sq = (apq * apq) / (app * aqq);
                worst_ratio_sq = worst_ratio_sq.max(ratio_sq);
                if ratio_sq <= JACOBI_TOL * JACOBI_TOL {
                    continue;
                }
                // Rotation angle that orthogonalizes the column pair
                // (the symmetric Schur decomposition of their 2x2 Gram block).
                let theta = (aqq - app) / (2.0 * apq);
                let t = if theta >= 0.0 {
                    1.0 / (theta + math::sqrt(1.0 + theta * theta))
                } else {
                    -1.0 / (-theta + math::sqrt(1.0 + theta * theta))
                };
                let c = 1.0 / math::sqrt(1.0 + t * t);
                let s = c * t;
                for i in 0..rows {
                    let wp = w[i * cols + p];
                    let wq = w[i * cols + q];
                    w[i * cols + p] = c * wp - s * wq;
                    w[i * cols + q] = s * wp + c * wq;
                }
                for i in 0..cols {
                    let vp = v[i * cols + p];
                    let vq = v[i * cols + q];
                    v[i * cols + p] = c * vp - s * vq;
                    v[i * cols + q] = s * vp + c * vq;
                }
                rotated = true;
            }
        }
        if !rotated {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::NonConvergence {
            sweeps,
            max_off_ratio: math::sqrt(worst_ratio_sq),
        });
    }

    // Column norms are the singular values; sort them nonincreasing.
    let norms: Vec<f64> = (0..cols)
        .map(|j| math::sqrt((0..rows).map(|i| w[i * cols + j] * w[i * cols + j]).sum()))
        .collect();
    let mut order: Vec<usize> = (0..cols).collect();
    order.sort_by(|&a, &b| norms[b].partial_cmp(&norms[a]).expect("finite norms"));

    let singular_values: Vec<f64> = order.iter().map(|&j| norms[j]).collect();
    let right_vectors =
        DenseMatrix::from_fn(cols, cols, |i, k| v[i * cols + order[k]]);

    // Left vectors: normalized nonzero columns of W, then an orthonormal
    // completion for zero columns and the trailing m - n slots.
    let mut u_cols: Vec<Option<Vec<f64>>> = vec![None; rows];
    for (k, &j) in order.iter().enumerate() {
        if singular_values[k] > 0.0 {
            let inv = 1.0 / singular_values[k];
            u_cols[k] = Some((0..rows).map(|i| w[i * cols + j] * inv).collect());
        }
    }
    complete_orthonormal(&mut u_cols, rows);
    let left_vectors = DenseMatrix::from_fn(rows, rows, |i, k| {
        u_cols[k].as_ref().expect("completed basis")[i]
    });

    let sigma_max = singular_values.first().copied().unwrap_or(0.0);
    let relative = rcond
        .unwrap_or(f64::EPSILON * rows.max(cols) as f64)
        .max(0.0);
    let tolerance_used = relative * sigma_max;
    let effective_rank = singular_values.iter().filter(|&&s| s > tolerance_used).count();

    Ok(SvdFactors {
        left_vectors,
        singular_values,
        right_vectors,
        effective_rank,
        tolerance_used,
    })
}

/// Fills the `None` slots with unit vectors orthogonal to every filled column.
///
/// Each missing slot takes the coordinate axis least represented by the
/// columns accepted so far, then runs two Gram-Schmidt passes against them.
fn complete_orthonormal(u_cols: &mut [Option<Vec<f64>>], rows: usize) {
    for slot in 0..rows {
        if u_cols[slot].is_some() {
            continue;
        }
        let filled: Vec<&Vec<f64>> = u_cols.iter().flatten().collect();
        let mut best_axis = 0;
        let mut best_load = f64::INFINITY;
        for axis in 0..rows {
            let load: f64 = filled.iter().map(|col| col[axis] * col[axis]).sum();
            if load < best_load {
                best_load = load;
                best_axis = axis;
            }
        }
        let mut x = vec![0.0; rows];
        x[best_axis] = 1.0;
        for _ in 0..2 {
            for col in &filled {
                let dot: f64 = col.iter().zip(&x).map(|(a, b)| a * b).sum();
                for (xi, ci) in x.iter_mut().zip(col.iter()) {
                    *xi -= dot * ci;
                }
            }
        }
        let norm = math::sqrt(x.iter().map(|e| e * e).sum());
        debug_assert!(norm > 0.0, "orthonormal completion degenerated");
        for xi in &mut x {
            *xi /= norm;
        }
        u_cols[slot] = Some(x);
    }
}
