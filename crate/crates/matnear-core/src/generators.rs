//! Deterministic generators for structured test matrices.

use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::matrix::DenseMatrix;

/// m×n matrix of ones.
pub fn ones(rows: usize, cols: usize) -> DenseMatrix {
    DenseMatrix::from_fn(rows, cols, |_, _| 1.0)
}

/// m×n matrix of zeros.
pub fn zeros(rows: usize, cols: usize) -> DenseMatrix {
    DenseMatrix::zeros(rows, cols)
}

/// Symmetric Pascal matrix: `P[i,j] = C(i+j, i)` (0-based).
///
/// Entries are built with exact integer arithmetic and rejected with a
/// capacity error once they stop being exactly representable in f64
/// (above 2⁵³), rather than silently rounding.
pub fn pascal_sym(n: usize) -> Result<DenseMatrix> {
    assert!(n >= 1, "pascal matrix size must be positive");
    const MAX_EXACT: u128 = 1 << 53;
    let mut table: Vec<Vec<u128>> = Vec::with_capacity(n);
    for i in 0..n {
        let mut row = Vec::with_capacity(n);
        for j in 0..n {
            let value = if i == 0 || j == 0 {
                1u128
            } else {
                table[i - 1][j] + row[j - 1]
            };
            if value > MAX_EXACT {
                return Err(Error::Capacity(format!(
                    "pascal_sym({n}) entry C({},{}) = {value} exceeds exact f64 range",
                    i + j,
                    i
                )));
            }
            row.push(value);
        }
        table.push(row);
    }
    Ok(DenseMatrix::from_fn(n, n, |i, j| table[i][j] as f64))
}

/// Hilbert matrix: `H[i,j] = 1/(i+j+1)` (0-based).
pub fn hilbert(n: usize) -> DenseMatrix {
    assert!(n >= 1, "hilbert matrix size must be positive");
    DenseMatrix::from_fn(n, n, |i, j| 1.0 / ((i + j + 1) as f64))
}

/// The fixed 4×4 symmetric Toeplitz matrix with first row (1, 2, 3, 4).
pub fn toeplitz_t4() -> DenseMatrix {
    DenseMatrix::from_rows(&[
        [1.0, 2.0, 3.0, 4.0],
        [2.0, 1.0, 2.0, 3.0],
        [3.0, 2.0, 1.0, 2.0],
        [4.0, 3.0, 2.0, 1.0],
    ])
    .expect("constant matrix")
}

/// The fixed 4×4 Hankel matrix with first row (1, 2, 3, 4) and zero tail.
pub fn hankel_k4() -> DenseMatrix {
    DenseMatrix::from_rows(&[
        [1.0, 2.0, 3.0, 4.0],
        [2.0, 3.0, 4.0, 0.0],
        [3.0, 4.0, 0.0, 0.0],
        [4.0, 0.0, 0.0, 0.0],
    ])
    .expect("constant matrix")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ones_and_zeros() {
        assert_eq!(ones(1, 1).as_slice(), &[1.0]);
        assert_eq!(zeros(2, 3).as_slice(), &[0.0; 6]);
        let half = ones(5, 4).scale(0.5);
        assert!(half.as_slice().iter().all(|&e| e == 0.5));
    }

    #[test]
    fn pascal_small_tables() {
        assert_eq!(pascal_sym(1).unwrap().as_slice(), &[1.0]);
        assert_eq!(pascal_sym(2).unwrap().as_slice(), &[1.0, 1.0, 1.0, 2.0]);
        // Binomial table C(i+j, i) written out by hand for n = 4.
        let p4 = pascal_sym(4).unwrap();
        let expected = DenseMatrix::from_rows(&[
            [1.0, 1.0, 1.0, 1.0],
            [1.0, 2.0, 3.0, 4.0],
            [1.0, 3.0, 6.0, 10.0],
            [1.0, 4.0, 10.0, 20.0],
        ])
        .unwrap();
        assert_eq!(p4, expected);
    }

    #[test]
    fn pascal_is_bitwise_symmetric_and_bounded() {
        let p = pascal_sym(10).unwrap();
        for i in 0..10 {
            for j in 0..10 {
                assert_eq!(p.get(i, j).to_bits(), p.get(j, i).to_bits());
            }
        }
        assert!(matches!(pascal_sym(40), Err(Error::Capacity(_))));
    }

    #[test]
    fn hilbert_entries() {
        assert_eq!(hilbert(1).as_slice(), &[1.0]);
        let h2 = hilbert(2);
        assert_eq!(h2.as_slice(), &[1.0, 0.5, 0.5, 1.0 / 3.0]);
        let h5 = hilbert(5);
        for (j, expected) in [1.0, 0.5, 1.0 / 3.0, 0.25, 0.2].iter().enumerate() {
            assert_eq!(h5.get(0, j), *expected);
        }
        for i in 0..5 {
            for j in 0..5 {
                assert_eq!(h5.get(i, j).to_bits(), h5.get(j, i).to_bits());
            }
        }
    }

    #[test]
    fn toeplitz_and_hankel_constants() {
        let t4 = toeplitz_t4();
        assert_eq!(t4.get(0, 0), 1.0);
        assert_eq!(t4.get(0, 3), 4.0);
        assert_eq!(t4, t4.transpose());

        let k4 = hankel_k4();
        assert_eq!(k4.get(3, 0), 4.0);
        assert_eq!(k4.get(3, 1), 0.0);
        assert_eq!(k4, k4.transpose());
    }
}
