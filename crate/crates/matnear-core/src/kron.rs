//! Column-stacking `vec` operator, its inverse, and the Kronecker product.
//!
//! The three functions are tied together by the identity
//! `vec(A·X·B) = (Bᵀ ⊗ A)·vec(X)`, which turns the matrix equation
//! `AXB = C` into an ordinary linear system. `vec` stacks columns, so for a
//! row-major `DenseMatrix` the k-th output entry is `M[k mod m, k div m]`.

use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::matrix::{DenseMatrix, DenseVector};

/// Column-stacks a matrix into a vector of length `rows·cols`.
pub fn vec(m: &DenseMatrix) -> DenseVector {
    let mut out = Vec::with_capacity(m.rows() * m.cols());
    for j in 0..m.cols() {
        for i in 0..m.rows() {
            out.push(m.get(i, j));
        }
    }
    DenseVector::from_raw(out)
}

/// Reassembles an m×n matrix from a column-stacked vector.
///
/// Inverse of [`vec`]: `unvec(vec(M), m, n) == M`.
pub fn unvec(v: &DenseVector, rows: usize, cols: usize) -> Result<DenseMatrix> {
    if rows == 0 || cols == 0 || v.len() != rows * cols {
        return Err(Error::Shape(format!(
            "cannot reshape a vector of length {} into {rows}x{cols}",
            v.len()
        )));
    }
    Ok(DenseMatrix::from_fn(rows, cols, |i, j| v.get(i + j * rows)))
}

/// Kronecker product `P ⊗ Q`: block `(i, j)` of the result is `P[i,j]·Q`.
///
/// Fails with a capacity error if the output dimensions overflow `usize`.
pub fn kron(p: &DenseMatrix, q: &DenseMatrix) -> Result<DenseMatrix> {
    let rows = p
        .rows()
        .checked_mul(q.rows())
        .ok_or_else(|| Error::Capacity("Kronecker product row count overflows usize".into()))?;
    let cols = p
        .cols()
        .checked_mul(q.cols())
        .ok_or_else(|| Error::Capacity("Kronecker product column count overflows usize".into()))?;
    rows.checked_mul(cols)
        .ok_or_else(|| Error::Capacity("Kronecker product entry count overflows usize".into()))?;

    let mut out = DenseMatrix::zeros(rows, cols);
    for i in 0..p.rows() {
        for j in 0..p.cols() {
            let pij = p.get(i, j);
            if pij == 0.0 {
                continue;
            }
            for k in 0..q.rows() {
                for l in 0..q.cols() {
                    out.set(i * q.rows() + k, j * q.cols() + l, pij * q.get(k, l));
                }
            }
        }
    }
    Ok(out)
}
