//! Worked-example fixtures: three reference problems with known 4-decimal
//! solutions, used as golden tests here and by the CLI round-trip suite.

use alloc::string::ToString;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::generators::{hankel_k4, hilbert, ones, pascal_sym, toeplitz_t4, zeros};
use crate::matrix::DenseMatrix;
use crate::solver::{ConstraintKind, NearnessProblem};

/// One reference problem together with the solution table it must reproduce.
///
/// `expected_x_hat` holds the published 4-decimal values; comparisons should
/// allow for that rounding (5·10⁻⁴ absolute covers it).
#[derive(Debug, Clone)]
pub struct Fixture {
    pub name: &'static str,
    pub a: DenseMatrix,
    pub b: DenseMatrix,
    pub c: DenseMatrix,
    pub x0: DenseMatrix,
    pub constraint: ConstraintKind,
    pub expected_x_hat: DenseMatrix,
}

impl Fixture {
    /// Bundles the inputs into a validated [`NearnessProblem`].
    pub fn problem(&self) -> NearnessProblem {
        NearnessProblem::new(
            self.a.clone(),
            self.b.clone(),
            self.c.clone(),
            self.x0.clone(),
            self.constraint,
        )
        .expect("fixture dimensions conform")
    }
}

/// Names accepted by [`fixture`].
pub const FIXTURE_NAMES: [&str; 3] = ["example1_skew", "example2_sym", "example3_sym"];

/// Looks up a fixture by name.
pub fn fixture(name: &str) -> Result<Fixture> {
    match name {
        "example1_skew" => Ok(example1_skew()),
        "example2_sym" => Ok(example2_sym()),
        "example3_sym" => Ok(example3_sym()),
        other => Err(Error::UnknownFixture(other.to_string())),
    }
}

/// All three fixtures.
pub fn all_fixtures() -> Vec<Fixture> {
    FIXTURE_NAMES.iter().map(|name| fixture(name).expect("known name")).collect()
}

/// 6×5/5×5 consistent problem with a skew-symmetric unknown; the solution
/// table is exactly integer.
fn example1_skew() -> Fixture {
    let a = DenseMatrix::from_rows(&[
        [1.0, 3.0, -5.0, 7.0, -9.0],
        [2.0, 0.0, 4.0, 6.0, -1.0],
        [0.0, -2.0, 9.0, 6.0, -8.0],
        [3.0, 6.0, 2.0, 27.0, -13.0],
        [-5.0, 5.0, -22.0, -1.0, -11.0],
        [8.0, 4.0, -6.0, -9.0, -19.0],
    ])
    .expect("constant matrix");
    let b = DenseMatrix::from_rows(&[
        [4.0, 0.0, 8.0, -5.0, 4.0],
        [-1.0, 5.0, 0.0, -2.0, 3.0],
        [4.0, -1.0, 0.0, 2.0, 5.0],
        [0.0, 3.0, 9.0, 2.0, -6.0],
        [-2.0, 7.0, -8.0, 1.0, 11.0],
    ])
    .expect("constant matrix");
    let c = DenseMatrix::from_rows(&[
        [171.0, -537.0, 74.0, -29.0, -281.0],
        [142.0, -278.0, 212.0, -92.0, -150.0],
        [196.0, -523.0, -59.0, -111.0, 24.0],
        [661.0, -1507.0, 922.0, -234.0, -1003.0],
        [-39.0, -192.0, -207.0, 186.0, -227.0],
        [-165.0, -292.0, -1154.0, 76.0, 422.0],
    ])
    .expect("constant matrix");
    let x0 = DenseMatrix::from_rows(&[
        [1.0, 0.0, 4.0, -1.0, 0.0],
        [5.0, 3.0, 2.0, 7.0, 4.0],
        [-1.0, -2.0, 0.0, -1.0, 0.0],
        [2.0, 6.0, 1.0, 8.0, -4.0],
        [0.0, 3.0, 1.0, 4.0, 2.0],
    ])
    .expect("constant matrix");
    let expected_x_hat = DenseMatrix::from_rows(&[
        [0.0, 2.0, -1.0, -2.0, 0.0],
        [-2.0, 0.0, 2.0, 1.0, -4.0],
        [1.0, -2.0, 0.0, -1.0, 0.0],
        [2.0, -1.0, 1.0, 0.0, -4.0],
        [0.0, 4.0, 0.0, 4.0, 0.0],
    ])
    .expect("constant matrix");
    Fixture {
        name: "example1_skew",
        a,
        b,
        c,
        x0,
        constraint: ConstraintKind::SkewSymmetric,
        expected_x_hat,
    }
}

/// 9×9 block-assembled problem with a symmetric unknown. The blocks are the
/// structured generators: all-ones/all-zeros blocks, the 4×4 symmetric
/// Pascal matrix, the 5×5 Hilbert matrix, and the fixed Toeplitz/Hankel
/// constants.
fn example2_sym() -> Fixture {
    let e55 = ones(5, 5);
    let z54 = zeros(5, 4);
    let z45 = zeros(4, 5);
    let z55 = zeros(5, 5);
    let p4 = pascal_sym(4).expect("small pascal");
    let k4 = hankel_k4();
    let t4 = toeplitz_t4();
    let h5 = hilbert(5);
    let i4 = DenseMatrix::identity(4);
    let i5 = DenseMatrix::identity(5);
    let half_e45 = ones(4, 5).scale(0.5);
    let half_e54 = ones(5, 4).scale(0.5);

    let a = DenseMatrix::from_blocks(&[&[&e55, &z54], &[&z45, &p4]]).expect("9x9 block grid");
    let b = DenseMatrix::from_blocks(&[&[&k4, &z45], &[&z54, &z55]]).expect("9x9 block grid");
    let c = DenseMatrix::from_blocks(&[&[&t4, &z45], &[&z54, &h5]]).expect("9x9 block grid");
    let x0 =
        DenseMatrix::from_blocks(&[&[&i4, &half_e45], &[&half_e54, &i5]]).expect("9x9 block grid");

    let expected_x_hat = DenseMatrix::from_rows(&[
        [0.8258, -0.2692, -0.2480, -0.2214, 0.4129, 0.0, 0.0, 0.0, 0.0],
        [-0.2692, 0.6358, -0.3430, -0.3164, 0.3179, 0.0, 0.0, 0.0, 0.0],
        [-0.2480, -0.3430, 0.6783, -0.2952, 0.3391, 0.0, 0.0, 0.0, 0.0],
        [-0.2214, -0.3164, -0.2952, 0.7314, 0.3657, 0.0, 0.0, 0.0, 0.0],
        [0.4129, 0.3179, 0.3391, 0.3657, 1.0, 0.0, 0.0, 0.0, 0.0],
        [0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0],
        [0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0],
        [0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0],
        [0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0],
    ])
    .expect("constant matrix");
    Fixture {
        name: "example2_sym",
        a,
        b,
        c,
        x0,
        constraint: ConstraintKind::Symmetric,
        expected_x_hat,
    }
}

/// 6×7/7×6 inconsistent problem with a symmetric unknown; the published
/// solution is a least-squares nearest point.
fn example3_sym() -> Fixture {
    let a = DenseMatrix::from_rows(&[
        [4.0, 3.0, -1.0, 3.0, 1.0, -3.0, 2.0],
        [3.0, -2.0, 3.0, -4.0, 3.0, 2.0, 1.0],
        [4.0, 3.0, -1.0, 3.0, 1.0, -3.0, 2.0],
        [3.0, -1.0, 3.0, -1.0, 3.0, 2.0, 1.0],
        [4.0, 3.0, -1.0, 3.0, 1.0, -3.0, 2.0],
        [3.0, -1.0, 3.0, -1.0, 3.0, 2.0, 1.0],
    ])
    .expect("constant matrix");
    let b = DenseMatrix::from_rows(&[
        [-3.0, 4.0, -3.0, -3.0, 4.0, 4.0],
        [5.0, -3.0, 5.0, 5.0, -3.0, -3.0],
        [-6.0, 2.0, -6.0, -6.0, 2.0, 2.0],
        [-8.0, 4.0, -8.0, -8.0, 4.0, 4.0],
        [4.0, -5.0, 4.0, 3.0, -2.0, -7.0],
        [-3.0, 2.0, -3.0, -3.0, 2.0, 2.0],
        [-1.0, -2.0, -1.0, -1.0, -2.0, -2.0],
    ])
    .expect("constant matrix");
    let c = DenseMatrix::from_rows(&[
        [43.0, -54.0, 73.0, -54.0, 51.0, -54.0],
        [-31.0, 37.0, -61.0, 37.0, -53.0, 37.0],
        [43.0, -54.0, 73.0, -54.0, 51.0, -54.0],
        [-31.0, 37.0, -61.0, 37.0, -53.0, 37.0],
        [47.0, -54.0, 73.0, -54.0, 21.0, -54.0],
        [-31.0, 27.0, -61.0, 27.0, -53.0, 27.0],
    ])
    .expect("constant matrix");
    let x0 = DenseMatrix::from_rows(&[
        [-1.0, 2.0, -3.0, 2.0, -1.0, 1.0, 3.0],
        [2.0, -1.0, 3.0, -3.0, 2.0, -3.0, 4.0],
        [-3.0, 3.0, -3.0, 3.0, -2.0, 1.0, -1.0],
        [2.0, -3.0, 3.0, 2.0, 2.0, 2.0, 4.0],
        [-3.0, 2.0, -2.0, 2.0, -1.0, 3.0, -3.0],
        [4.0, 3.0, 1.0, 1.0, 2.0, 1.0, 1.0],
        [1.0, -2.0, 1.0, 3.0, 4.0, -1.0, 1.0],
    ])
    .expect("constant matrix");
    let expected_x_hat = DenseMatrix::from_rows(&[
        [1.7699, 1.8581, -3.5455, 2.8924, 0.5920, 0.8523, 2.3693],
        [1.8581, -0.6722, 1.8908, -1.9156, 3.1173, 0.5698, -1.0561],
        [-3.5455, 1.8908, -0.5812, 1.3562, -3.9861, 1.7472, 2.2490],
        [2.8924, -1.9156, 1.3562, -3.8543, -0.6224, 0.3241, 3.6833],
        [0.5920, 3.1173, -3.9861, -0.6224, -2.3618, -2.2044, 3.2716],
        [0.8523, 0.5698, 1.7472, 0.3241, -2.2044, -0.0556, 2.7992],
        [2.3693, -1.0561, 2.2490, 3.6833, 3.2716, 2.7992, 0.0308],
    ])
    .expect("constant matrix");
    Fixture {
        name: "example3_sym",
        a,
        b,
        c,
        x0,
        constraint: ConstraintKind::Symmetric,
        expected_x_hat,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_name_is_an_error() {
        assert!(matches!(fixture("example9"), Err(Error::UnknownFixture(_))));
    }

    #[test]
    fn all_fixtures_conform() {
        let fixtures = all_fixtures();
        assert_eq!(fixtures.len(), 3);
        for f in &fixtures {
            let p = f.problem();
            let (_, n, pp, _) = p.dims();
            assert_eq!(f.expected_x_hat.rows(), n);
            assert_eq!(f.expected_x_hat.cols(), pp);
        }
    }

    #[test]
    fn example1_spot_values() {
        let f = fixture("example1_skew").unwrap();
        assert_eq!(f.a.rows(), 6);
        assert_eq!(f.a.cols(), 5);
        for (j, expected) in [1.0, 3.0, -5.0, 7.0, -9.0].iter().enumerate() {
            assert_eq!(f.a.get(0, j), *expected);
        }
        assert_eq!(f.expected_x_hat.get(1, 4), -4.0);
    }

    #[test]
    fn example2_block_layout() {
        let f = fixture("example2_sym").unwrap();
        assert_eq!((f.a.rows(), f.a.cols()), (9, 9));
        assert_eq!((f.b.rows(), f.b.cols()), (9, 9));
        assert_eq!((f.c.rows(), f.c.cols()), (9, 9));
        assert_eq!((f.x0.rows(), f.x0.cols()), (9, 9));
        // Spot-check every block of A and X0.
        assert_eq!(f.a.get(0, 4), 1.0); // ones block
        assert_eq!(f.a.get(0, 5), 0.0); // zero block
        assert_eq!(f.a.get(8, 8), 20.0); // pascal corner
        assert_eq!(f.x0.get(0, 4), 0.5); // half-ones block
        assert_eq!(f.x0.get(8, 8), 1.0); // identity block
        assert_eq!(f.c.get(8, 8), 1.0 / 9.0); // hilbert corner
        assert_eq!(f.expected_x_hat.get(4, 4), 1.0);
    }

    #[test]
    fn example3_spot_values() {
        let f = fixture("example3_sym").unwrap();
        assert_eq!(f.c.get(0, 0), 43.0);
        assert_eq!(f.expected_x_hat.get(6, 6), 0.0308);
        assert_eq!(f.expected_x_hat.get(0, 2), -3.5455);
    }
}
