//! Dense real matrices and vectors with row-major storage.
//!
//! These are the value types every operation in the crate works on. Boundary
//! constructors ([`DenseMatrix::new`], [`DenseVector::new`], and friends)
//! reject empty shapes and non-finite entries; arithmetic between already
//! validated values panics on dimension mismatch like most dense linear
//! algebra crates do.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Index, Mul, Sub};

use crate::error::{Error, Result};
use crate::math;

/// Dense m×n real matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<f64>,
}

impl DenseMatrix {
    /// Builds a matrix from row-major entries, validating shape and finiteness.
    pub fn new(rows: usize, cols: usize, entries: Vec<f64>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::Shape(format!(
                "matrix dimensions must be positive, got {rows}x{cols}"
            )));
        }
        if entries.len() != rows * cols {
            return Err(Error::Shape(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                entries.len()
            )));
        }
        check_finite(&entries)?;
        Ok(Self { rows, cols, entries })
    }

    /// Builds a matrix from an array of equally sized rows.
    pub fn from_rows<const N: usize>(rows: &[[f64; N]]) -> Result<Self> {
        let mut entries = Vec::with_capacity(rows.len() * N);
        for row in rows {
            entries.extend_from_slice(row);
        }
        Self::new(rows.len(), N, entries)
    }

    /// Builds a matrix entry by entry from `f(i, j)`.
    ///
    /// Intended for internal generators; the closure must produce finite values.
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        assert!(rows > 0 && cols > 0, "matrix dimensions must be positive");
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Self { rows, cols, entries }
    }

    /// All-zero m×n matrix.
    pub fn zeros(rows: usize, cols: usize) -> Self {
        assert!(rows > 0 && cols > 0, "matrix dimensions must be positive");
        Self { rows, cols, entries: vec![0.0; rows * cols] }
    }

    /// n×n identity.
    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { 1.0 } else { 0.0 })
    }

    pub(crate) fn from_raw(rows: usize, cols: usize, entries: Vec<f64>) -> Self {
        debug_assert!(rows > 0 && cols > 0);
        debug_assert_eq!(entries.len(), rows * cols);
        Self { rows, cols, entries }
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.entries[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, value: f64) {
        self.entries[i * self.cols + j] = value;
    }

    /// Row-major entry slice.
    pub fn as_slice(&self) -> &[f64] {
        &self.entries
    }

    pub fn into_vec(self) -> Vec<f64> {
        self.entries
    }

    pub fn transpose(&self) -> Self {
        let mut out = Vec::with_capacity(self.entries.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                out.push(self.get(i, j));
            }
        }
        Self::from_raw(self.cols, self.rows, out)
    }

    /// Matrix-vector product. Panics if `v.len() != self.cols()`.
    pub fn matvec(&self, v: &DenseVector) -> DenseVector {
        assert_eq!(
            self.cols,
            v.len(),
            "matvec dimension mismatch: {}x{} vs {}",
            self.rows,
            self.cols,
            v.len()
        );
        let mut out = Vec::with_capacity(self.rows);
        for i in 0..self.rows {
            let row = &self.entries[i * self.cols..(i + 1) * self.cols];
            let mut acc = 0.0;
            for (a, x) in row.iter().zip(v.as_slice()) {
                acc += a * x;
            }
            out.push(acc);
        }
        DenseVector::from_raw(out)
    }

    /// Entry-wise scaling by a finite factor.
    pub fn scale(&self, factor: f64) -> Self {
        let entries = self.entries.iter().map(|e| e * factor).collect();
        Self::from_raw(self.rows, self.cols, entries)
    }

    /// Frobenius norm: square root of the sum of squared entries.
    pub fn fro_norm(&self) -> f64 {
        math::sqrt(self.entries.iter().map(|e| e * e).sum())
    }

    /// Largest absolute entry.
    pub fn max_abs(&self) -> f64 {
        self.entries.iter().fold(0.0, |acc, e| acc.max(e.abs()))
    }

    /// Symmetric part `(X + Xᵀ)/2`. Panics unless square.
    pub fn symmetric_part(&self) -> Self {
        assert_eq!(self.rows, self.cols, "symmetric part requires a square matrix");
        Self::from_fn(self.rows, self.cols, |i, j| 0.5 * (self.get(i, j) + self.get(j, i)))
    }

    /// Skew-symmetric part `(X − Xᵀ)/2`. Panics unless square.
    pub fn skew_part(&self) -> Self {
        assert_eq!(self.rows, self.cols, "skew part requires a square matrix");
        Self::from_fn(self.rows, self.cols, |i, j| 0.5 * (self.get(i, j) - self.get(j, i)))
    }

    /// Stacks `top` over `bottom`. Column counts must agree.
    pub fn vstack(top: &Self, bottom: &Self) -> Result<Self> {
        if top.cols != bottom.cols {
            return Err(Error::Shape(format!(
                "vstack needs equal column counts, got {} and {}",
                top.cols, bottom.cols
            )));
        }
        let mut entries = Vec::with_capacity(top.entries.len() + bottom.entries.len());
        entries.extend_from_slice(&top.entries);
        entries.extend_from_slice(&bottom.entries);
        Ok(Self::from_raw(top.rows + bottom.rows, top.cols, entries))
    }

    /// Assembles a block matrix from a grid of blocks.
    ///
    /// Every block row must have the same number of blocks, blocks within a
    /// row must share a height, and blocks within a column must share a width.
    pub fn from_blocks(blocks: &[&[&DenseMatrix]]) -> Result<Self> {
        if blocks.is_empty() || blocks[0].is_empty() {
            return Err(Error::Shape("block grid must be non-empty".into()));
        }
        let ncols_blocks = blocks[0].len();
        let mut col_widths = vec![0usize; ncols_blocks];
        for (j, b) in blocks[0].iter().enumerate() {
            col_widths[j] = b.cols;
        }
        let mut total_rows = 0usize;
        for row in blocks.iter() {
            if row.len() != ncols_blocks {
                return Err(Error::Shape("ragged block grid".into()));
            }
            let height = row[0].rows;
            for (j, b) in row.iter().enumerate() {
                if b.rows != height {
                    return Err(Error::Shape(format!(
                        "block heights differ within a block row: {} vs {}",
                        height, b.rows
                    )));
                }
                if b.cols != col_widths[j] {
                    return Err(Error::Shape(format!(
                        "block widths differ within block column {j}: {} vs {}",
                        col_widths[j], b.cols
                    )));
                }
            }
            total_rows += height;
        }
        let total_cols: usize = col_widths.iter().sum();
        let mut out = Self::zeros(total_rows, total_cols);
        let mut row_off = 0usize;
        for row in blocks.iter() {
            let mut col_off = 0usize;
            for b in row.iter() {
                for i in 0..b.rows {
                    for j in 0..b.cols {
                        out.set(row_off + i, col_off + j, b.get(i, j));
                    }
                }
                col_off += b.cols;
            }
            row_off += row[0].rows;
        }
        Ok(out)
    }
}

impl Index<(usize, usize)> for DenseMatrix {
    type Output = f64;

    fn index(&self, (i, j): (usize, usize)) -> &f64 {
        &self.entries[i * self.cols + j]
    }
}

impl Mul for &DenseMatrix {
    type Output = DenseMatrix;

    /// Matrix product. Panics on inner-dimension mismatch.
    fn mul(self, rhs: &DenseMatrix) -> DenseMatrix {
        assert_eq!(
            self.cols, rhs.rows,
            "matmul dimension mismatch: {}x{} times {}x{}",
            self.rows, self.cols, rhs.rows, rhs.cols
        );
        let mut out = vec![0.0; self.rows * rhs.cols];
        for i in 0..self.rows {
            for k in 0..self.cols {
                let aik = self.entries[i * self.cols + k];
                if aik == 0.0 {
                    continue;
                }
                let rhs_row = &rhs.entries[k * rhs.cols..(k + 1) * rhs.cols];
                let out_row = &mut out[i * rhs.cols..(i + 1) * rhs.cols];
                for (o, b) in out_row.iter_mut().zip(rhs_row) {
                    *o += aik * b;
                }
            }
        }
        DenseMatrix::from_raw(self.rows, rhs.cols, out)
    }
}

impl Add for &DenseMatrix {
    type Output = DenseMatrix;

    fn add(self, rhs: &DenseMatrix) -> DenseMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "add dimension mismatch");
        let entries = self.entries.iter().zip(&rhs.entries).map(|(a, b)| a + b).collect();
        DenseMatrix::from_raw(self.rows, self.cols, entries)
    }
}

impl Sub for &DenseMatrix {
    type Output = DenseMatrix;

    fn sub(self, rhs: &DenseMatrix) -> DenseMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "sub dimension mismatch");
        let entries = self.entries.iter().zip(&rhs.entries).map(|(a, b)| a - b).collect();
        DenseMatrix::from_raw(self.rows, self.cols, entries)
    }
}

/// Dense real column vector.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseVector {
    entries: Vec<f64>,
}

impl DenseVector {
    /// Builds a vector, validating non-emptiness and finiteness.
    pub fn new(entries: Vec<f64>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::Shape("vector length must be positive".into()));
        }
        check_finite(&entries)?;
        Ok(Self { entries })
    }

    pub fn from_slice(entries: &[f64]) -> Result<Self> {
        Self::new(entries.to_vec())
    }

    pub(crate) fn from_raw(entries: Vec<f64>) -> Self {
        debug_assert!(!entries.is_empty());
        Self { entries }
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    /// Always false: zero-length vectors are rejected at construction.
    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    #[inline]
    pub fn get(&self, i: usize) -> f64 {
        self.entries[i]
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.entries
    }

    pub fn into_vec(self) -> Vec<f64> {
        self.entries
    }

    /// Euclidean norm.
    pub fn norm(&self) -> f64 {
        math::sqrt(self.entries.iter().map(|e| e * e).sum())
    }

    /// Entry-wise scaling by a finite factor.
    pub fn scale(&self, factor: f64) -> Self {
        Self::from_raw(self.entries.iter().map(|e| e * factor).collect())
    }

    /// Concatenates two vectors.
    pub fn concat(head: &Self, tail: &Self) -> Self {
        let mut entries = Vec::with_capacity(head.len() + tail.len());
        entries.extend_from_slice(&head.entries);
        entries.extend_from_slice(&tail.entries);
        Self::from_raw(entries)
    }
}

impl Index<usize> for DenseVector {
    type Output = f64;

    fn index(&self, i: usize) -> &f64 {
        &self.entries[i]
    }
}

impl Add for &DenseVector {
    type Output = DenseVector;

    fn add(self, rhs: &DenseVector) -> DenseVector {
        assert_eq!(self.len(), rhs.len(), "vector add length mismatch");
        DenseVector::from_raw(self.entries.iter().zip(&rhs.entries).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &DenseVector {
    type Output = DenseVector;

    fn sub(self, rhs: &DenseVector) -> DenseVector {
        assert_eq!(self.len(), rhs.len(), "vector sub length mismatch");
        DenseVector::from_raw(self.entries.iter().zip(&rhs.entries).map(|(a, b)| a - b).collect())
    }
}

fn check_finite(entries: &[f64]) -> Result<()> {
    for (index, &value) in entries.iter().enumerate() {
        if !value.is_finite() {
            return Err(Error::NonFinite { index, value });
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn new_validates_count_and_finiteness() {
        assert!(matches!(
            DenseMatrix::new(2, 2, vec![1.0, 2.0, 3.0]),
            Err(Error::Shape(_))
        ));
        assert!(matches!(
            DenseMatrix::new(0, 2, vec![]),
            Err(Error::Shape(_))
        ));
        let err = DenseMatrix::new(1, 2, vec![1.0, f64::NAN]).unwrap_err();
        assert!(matches!(err, Error::NonFinite { index: 1, .. }));
        assert!(matches!(
            DenseMatrix::new(1, 2, vec![f64::INFINITY, 0.0]),
            Err(Error::NonFinite { index: 0, .. })
        ));
    }

    #[test]
    fn from_rows_is_row_major() {
        let m = DenseMatrix::from_rows(&[[1.0, 2.0], [3.0, 4.0]]).unwrap();
        assert_eq!(m.as_slice(), &[1.0, 2.0, 3.0, 4.0]);
        assert_eq!(m.get(1, 0), 3.0);
        assert_eq!(m[(0, 1)], 2.0);
    }

    #[test]
    fn matmul_known_product() {
        let a = DenseMatrix::from_rows(&[[1.0, 2.0, 3.0], [4.0, 5.0, 6.0]]).unwrap();
        let b = DenseMatrix::from_rows(&[[7.0, 8.0], [9.0, 10.0], [11.0, 12.0]]).unwrap();
        let c = &a * &b;
        assert_eq!(c.as_slice(), &[58.0, 64.0, 139.0, 154.0]);
    }

    #[test]
    #[should_panic(expected = "matmul dimension mismatch")]
    fn matmul_panics_on_mismatch() {
        let a = DenseMatrix::zeros(2, 3);
        let b = DenseMatrix::zeros(2, 3);
        let _ = &a * &b;
    }

    #[test]
    fn transpose_roundtrip() {
        let a = DenseMatrix::from_rows(&[[1.0, 2.0, 3.0], [4.0, 5.0, 6.0]]).unwrap();
        let t = a.transpose();
        assert_eq!(t.rows(), 3);
        assert_eq!(t.get(2, 1), 6.0);
        assert_eq!(t.transpose(), a);
    }

    #[test]
    fn fro_norm_examples() {
        let m = DenseMatrix::from_rows(&[[3.0, 4.0]]).unwrap();
        assert_eq!(m.fro_norm(), 5.0);
        assert_eq!(DenseMatrix::zeros(4, 7).fro_norm(), 0.0);
        let n = 9;
        let id = DenseMatrix::identity(n);
        assert!((id.fro_norm() - (n as f64).sqrt()).abs() < 1e-15);
    }

    #[test]
    fn matvec_matches_matmul() {
        let a = DenseMatrix::from_rows(&[[1.0, 2.0], [3.0, 4.0], [5.0, 6.0]]).unwrap();
        let v = DenseVector::from_slice(&[1.0, -1.0]).unwrap();
        assert_eq!(a.matvec(&v).as_slice(), &[-1.0, -1.0, -1.0]);
    }

    #[test]
    fn symmetric_and_skew_parts_decompose() {
        let x = DenseMatrix::from_rows(&[[1.0, 2.0], [4.0, 3.0]]).unwrap();
        let s = x.symmetric_part();
        let k = x.skew_part();
        assert_eq!(s.get(0, 1), 3.0);
        assert_eq!(k.get(0, 1), -1.0);
        assert_eq!(&(&s + &k), &x);
    }

    #[test]
    fn block_assembly() {
        let tl = DenseMatrix::identity(2);
        let tr = DenseMatrix::zeros(2, 1);
        let bl = DenseMatrix::from_rows(&[[5.0, 6.0]]).unwrap();
        let br = DenseMatrix::from_rows(&[[7.0]]).unwrap();
        let m = DenseMatrix::from_blocks(&[&[&tl, &tr], &[&bl, &br]]).unwrap();
        assert_eq!(m.rows(), 3);
        assert_eq!(m.cols(), 3);
        assert_eq!(m.as_slice(), &[1.0, 0.0, 0.0, 0.0, 1.0, 0.0, 5.0, 6.0, 7.0]);

        let bad = DenseMatrix::from_blocks(&[&[&tl, &tr], &[&tl, &br]]);
        assert!(matches!(bad, Err(Error::Shape(_))));
    }

    #[test]
    fn vector_validation_and_ops() {
        assert!(matches!(DenseVector::new(vec![]), Err(Error::Shape(_))));
        assert!(matches!(
            DenseVector::new(vec![f64::NEG_INFINITY]),
            Err(Error::NonFinite { .. })
        ));
        let u = DenseVector::from_slice(&[3.0, 4.0]).unwrap();
        assert_eq!(u.norm(), 5.0);
        let w = DenseVector::concat(&u, &DenseVector::from_slice(&[1.0]).unwrap());
        assert_eq!(w.as_slice(), &[3.0, 4.0, 1.0]);
    }
}
