//! Brute-force reference solver used by the test suites.
//!
//! Every problem is solved through the full Kronecker lift: build the linear
//! system explicitly, substitute `y = x − vec(X0')`, and take the
//! minimum-norm least-squares solution `y = M†(d − M·vec(X0'))`. Shifting
//! the variable makes the nearest-point property rest on the minimum-norm
//! property of the pseudoinverse instead of on the expanded formula the main
//! solver evaluates, so the two routes do not share failure modes. Nothing
//! here is shared with the solver beyond the primitive matrix operations.
//!
//! Deliberately small-scale: the lift squares the problem size, so inputs
//! are capped at 10⁴ entries in the lifted matrix.

use alloc::format;
use alloc::vec::Vec;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::error::{Error, Result};
use crate::kron::{kron, unvec, vec};
use crate::matrix::{DenseMatrix, DenseVector};
use crate::pinv::pinv;
use crate::solver::{ConstraintKind, NearnessProblem};

/// Total entries allowed in the lifted matrix.
const LIFTED_ENTRY_CAP: usize = 10_000;

/// Reference solution with the same diagnostics contract as the main solver:
/// `residual = ‖A·x_hat·B − C‖_F` and `distance = ‖x_hat − X0‖_F`, both
/// recomputed at matrix level.
#[derive(Debug, Clone)]
pub struct OracleResult {
    pub x_hat: DenseMatrix,
    pub residual: f64,
    pub distance: f64,
}

/// The explicit linear system behind a nearness problem.
///
/// Returns `(M, d, x0')` with `M·vec(X) = d` the lifted equation and `x0'`
/// the column-stacked, structure-projected anchor. Unconstrained problems
/// lift to `M = Bᵀ⊗A`, `d = vec(C)`; structured problems stack the transpose
/// companion equation below it with the sign of `vec(Cᵀ)` carrying the
/// symmetric/skew distinction.
pub fn lifted_system(
    problem: &NearnessProblem,
) -> Result<(DenseMatrix, DenseVector, DenseVector)> {
    let (a, b, c) = (problem.a(), problem.b(), problem.c());
    let b_t = b.transpose();
    let (lifted, rhs) = match problem.constraint() {
        ConstraintKind::Unconstrained => (kron(&b_t, a)?, vec(c)),
        ConstraintKind::Symmetric => (
            DenseMatrix::vstack(&kron(&b_t, a)?, &kron(a, &b_t)?)?,
            DenseVector::concat(&vec(c), &vec(&c.transpose())),
        ),
        ConstraintKind::SkewSymmetric => (
            DenseMatrix::vstack(&kron(&b_t, a)?, &kron(a, &b_t)?)?,
            DenseVector::concat(&vec(c), &vec(&c.transpose()).scale(-1.0)),
        ),
    };
    Ok((lifted, rhs, vec(&problem.projected_x0())))
}

/// Solves a nearness problem by brute force on the lifted system.
///
/// Fails with a capacity error when the lifted matrix would exceed the
/// desk-scale cap.
pub fn oracle_solve(problem: &NearnessProblem) -> Result<OracleResult> {
    let (m, n2, p2, r) = problem.dims();
    let lifted_entries = match problem.constraint() {
        ConstraintKind::Unconstrained => m * r * n2 * p2,
        _ => 2 * m * r * n2 * n2,
    };
    if lifted_entries > LIFTED_ENTRY_CAP {
        return Err(Error::Capacity(format!(
            "oracle lift needs {lifted_entries} entries, above its cap of {LIFTED_ENTRY_CAP}"
        )));
    }

    let (lifted, rhs, x0_vec) = lifted_system(problem)?;
    let shifted_rhs = &rhs - &lifted.matvec(&x0_vec); // d − M·x0'
    let shift = pinv(&lifted)?.matvec(&shifted_rhs); // minimum-norm LSS in y
    let x_hat_vec = &x0_vec + &shift;
    let x_hat = unvec(&x_hat_vec, problem.x0().rows(), problem.x0().cols())?;

    let residual = (&(&(problem.a() * &x_hat) * problem.b()) - problem.c()).fro_norm();
    let distance = (&x_hat - problem.x0()).fro_norm();
    Ok(OracleResult { x_hat, residual, distance })
}

/// One member of the (least-squares) solution set of an unconstrained
/// problem: `X_H = A†CB† + H − A†A H BB†`.
///
/// Ranging `H` over all n×p matrices sweeps out the entire set. Panics if
/// called on a structured problem or with a nonconforming `H`.
pub fn solution_set_member(problem: &NearnessProblem, h: &DenseMatrix) -> Result<DenseMatrix> {
    assert_eq!(
        problem.constraint(),
        ConstraintKind::Unconstrained,
        "solution-set parametrization applies to unconstrained problems only"
    );
    let (a, b, c) = (problem.a(), problem.b(), problem.c());
    assert_eq!((h.rows(), h.cols()), (a.cols(), b.rows()), "H must be n x p");
    let a_pinv = pinv(a)?;
    let b_pinv = pinv(b)?;
    let particular = &(&a_pinv * c) * &b_pinv;
    let shadow = &(&(&a_pinv * a) * h) * &(b * &b_pinv);
    Ok(&(&particular + h) - &shadow)
}

/// `count` members of the solution set generated from seeded pseudo-random
/// `H` with entries uniform on [−1, 1].
///
/// The generator is ChaCha8 seeded with `seed`; identical seeds produce
/// bit-identical samples. Unconstrained problems only (see
/// [`solution_set_member`]).
pub fn sample_solution_set(
    problem: &NearnessProblem,
    count: usize,
    seed: u64,
) -> Result<Vec<DenseMatrix>> {
    assert_eq!(
        problem.constraint(),
        ConstraintKind::Unconstrained,
        "solution-set parametrization applies to unconstrained problems only"
    );
    let (a, b, c) = (problem.a(), problem.b(), problem.c());
    let (n, p) = (a.cols(), b.rows());
    let a_pinv = pinv(a)?;
    let b_pinv = pinv(b)?;
    let particular = &(&a_pinv * c) * &b_pinv;
    let left_proj = &a_pinv * a;
    let right_proj = b * &b_pinv;

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut samples = Vec::with_capacity(count);
    for _ in 0..count {
        let h = random_matrix(&mut rng, n, p);
        let shadow = &(&left_proj * &h) * &right_proj;
        samples.push(&(&particular + &h) - &shadow);
    }
    Ok(samples)
}

/// Uniform draw from [−1, 1) with the top 53 bits of each `u64`.
fn uniform_pm1(rng: &mut ChaCha8Rng) -> f64 {
    const TWO_POW_53: f64 = 9007199254740992.0;
    let unit = (rng.next_u64() >> 11) as f64 / TWO_POW_53;
    2.0 * unit - 1.0
}

pub(crate) fn random_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> DenseMatrix {
    DenseMatrix::from_fn(rows, cols, |_, _| uniform_pm1(rng))
}
