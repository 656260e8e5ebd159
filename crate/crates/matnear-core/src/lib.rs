//! Dense solver for matrix nearness problems over the solution sets of the
//! linear matrix equation `AXB = C`.
//!
//! Given `A` (m×n), `B` (p×r), `C` (m×r) and a target `X0` (n×p), the crate
//! computes the matrix `X̂` closest to `X0` in Frobenius norm among
//!
//! * all exact solutions of `AXB = C` when the equation is consistent, or
//! * all least-squares solutions (minimizers of `‖AXB − C‖_F`) when it is not,
//!
//! optionally restricted to symmetric or skew-symmetric `X`. The unconstrained
//! case uses the closed form `X̂ = A†CB† + X0 − A†A X0 BB†`; the structured
//! cases solve the stacked Kronecker system that couples `AXB = C` with its
//! transpose companion `BᵀXAᵀ = ±Cᵀ`. Pseudoinverses come from a one-sided
//! Jacobi SVD with an explicit rank tolerance.
//!
//! The crate is `no_std`-compatible (requires `alloc`); disable the default
//! `std` feature and enable `libm` for embedded use. All operations are pure
//! functions of immutable inputs and are safe to call concurrently.
//!
//! ```
//! use matnear_core::{solve, ConstraintKind, DenseMatrix, NearnessProblem};
//!
//! let a = DenseMatrix::identity(2);
//! let b = DenseMatrix::identity(2);
//! let c = DenseMatrix::from_rows(&[[1.0, 2.0], [3.0, 4.0]]).unwrap();
//! let x0 = DenseMatrix::zeros(2, 2);
//! let p = NearnessProblem::new(a, b, c.clone(), x0, ConstraintKind::Unconstrained).unwrap();
//! let sol = solve(&p).unwrap();
//! assert!(sol.consistent);
//! assert!((&sol.x_hat - &c).fro_norm() < 1e-12);
//! ```

#![cfg_attr(not(feature = "std"), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(not(any(feature = "std", feature = "libm")))]
compile_error!("matnear-core requires either the `std` feature or the `libm` feature");

pub mod error;
pub mod fixtures;
pub mod generators;
pub mod kron;
mod math;
pub mod matrix;
pub mod nearest;
pub mod oracle;
pub mod pinv;
pub mod solver;
pub mod svd;

pub use error::{Error, Result};
pub use matrix::{DenseMatrix, DenseVector};
pub use nearest::{nearest_solution_vector, nearest_solution_vector_with};
pub use oracle::{oracle_solve, sample_solution_set, solution_set_member, OracleResult};
pub use pinv::{pinv, pinv_with};
pub use solver::{
    check_consistency, min_residual, solve, solve_constrained, solve_unconstrained,
    ConstraintKind, NearnessProblem, NearnessSolution, SolveOptions,
};
pub use svd::{svd, svd_with, SvdFactors};
