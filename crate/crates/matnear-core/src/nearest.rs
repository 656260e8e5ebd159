//! Nearest-solution formula for ordinary linear systems `Ax = g`.

use alloc::format;

use crate::error::{Error, Result};
use crate::matrix::{DenseMatrix, DenseVector};
use crate::svd::svd_with;

/// Solution (or least-squares solution) of `Ax = g` nearest to `x0`.
///
/// Evaluates `x̂ = A†g + (I − A†A)x0`. When the system is consistent, `x̂`
/// solves it exactly and minimizes `‖x − x0‖` over the solution set; when
/// inconsistent, `x̂` attains the minimal residual `‖A A†g − g‖` and is the
/// least-squares solution nearest to `x0`. Both cases share this formula.
pub fn nearest_solution_vector(
    a: &DenseMatrix,
    g: &DenseVector,
    x0: &DenseVector,
) -> Result<DenseVector> {
    nearest_solution_vector_with(a, g, x0, None)
}

/// [`nearest_solution_vector`] with an explicit rank tolerance (see [`svd_with`]).
pub fn nearest_solution_vector_with(
    a: &DenseMatrix,
    g: &DenseVector,
    x0: &DenseVector,
    rcond: Option<f64>,
) -> Result<DenseVector> {
    if a.rows() != g.len() || a.cols() != x0.len() {
        return Err(Error::Shape(format!(
            "nearest solution needs A rows = len(g) and A cols = len(x0); got {}x{} with {} and {}",
            a.rows(),
            a.cols(),
            g.len(),
            x0.len()
        )));
    }
    let a_pinv = svd_with(a, rcond)?.pseudo_inverse();
    let projector = &a_pinv * a; // A†A
    let particular = a_pinv.matvec(g);
    let homogeneous = &x0.clone() - &projector.matvec(x0);
    Ok(&particular + &homogeneous)
}
