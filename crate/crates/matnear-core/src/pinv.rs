//! Moore–Penrose pseudoinverse built on the SVD.

use crate::error::Result;
use crate::matrix::DenseMatrix;
use crate::svd::svd_with;

/// Pseudoinverse with the default rank tolerance `ε·max(m,n)·σ_max`.
///
/// Satisfies the four Penrose conditions to working precision:
/// `M M† M = M`, `M† M M† = M†`, and both `M M†` and `M† M` symmetric.
/// For the zero matrix the result is the (transposed-shape) zero matrix.
pub fn pinv(m: &DenseMatrix) -> Result<DenseMatrix> {
    pinv_with(m, None)
}

/// Pseudoinverse with an explicit relative rank tolerance (see [`svd_with`]).
pub fn pinv_with(m: &DenseMatrix, rcond: Option<f64>) -> Result<DenseMatrix> {
    Ok(svd_with(m, rcond)?.pseudo_inverse())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn penrose_defect(m: &DenseMatrix, p: &DenseMatrix) -> f64 {
        let mp = m * p;
        let pm = p * m;
        [
            (&(&mp * m) - m).fro_norm(),
            (&(&pm * p) - p).fro_norm(),
            (&mp.transpose() - &mp).fro_norm(),
            (&pm.transpose() - &pm).fro_norm(),
        ]
        .into_iter()
        .fold(0.0, f64::max)
    }

    #[test]
    fn identity_is_self_inverse() {
        let id = DenseMatrix::identity(4);
        assert_eq!(pinv(&id).unwrap(), id);
    }

    #[test]
    fn diagonal_inverts_nonzero_entries() {
        let m = DenseMatrix::from_rows(&[[2.0, 0.0], [0.0, 0.0]]).unwrap();
        let p = pinv(&m).unwrap();
        assert_eq!(p, DenseMatrix::from_rows(&[[0.5, 0.0], [0.0, 0.0]]).unwrap());
    }

    #[test]
    fn column_vector_inverse_is_scaled_transpose() {
        // a† = aᵀ/‖a‖² with ‖(3,4)‖² = 25.
        let a = DenseMatrix::from_rows(&[[3.0], [4.0]]).unwrap();
        let p = pinv(&a).unwrap();
        assert_eq!(p.rows(), 1);
        assert_eq!(p.cols(), 2);
        assert!((p.get(0, 0) - 0.12).abs() < 1e-15);
        assert!((p.get(0, 1) - 0.16).abs() < 1e-15);
    }

    #[test]
    fn penrose_conditions_hold_on_assorted_shapes() {
        let cases = [
            DenseMatrix::from_rows(&[[1.0, 2.0, 3.0], [4.0, 5.0, 6.0]]).unwrap(),
            DenseMatrix::from_rows(&[[1.0, 2.0], [2.0, 4.0], [3.0, 6.0]]).unwrap(),
            DenseMatrix::zeros(3, 2),
            DenseMatrix::from_rows(&[[1e8, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]]).unwrap(),
        ];
        for m in cases {
            let p = pinv(&m).unwrap();
            let f = svd_with(&m, None).unwrap();
            let tol = 100.0
                * f64::EPSILON
                * m.rows().max(m.cols()) as f64
                * f.sigma_max().max(1.0);
            assert!(penrose_defect(&m, &p) <= tol);
        }
    }

    #[test]
    fn pinv_of_zero_is_zero() {
        let z = DenseMatrix::zeros(2, 5);
        let p = pinv(&z).unwrap();
        assert_eq!(p, DenseMatrix::zeros(5, 2));
    }
}
