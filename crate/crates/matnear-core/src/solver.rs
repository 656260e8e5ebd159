//! Nearness solver for `AXB = C`: the matrix in the solution set (or
//! least-squares solution set) closest to a target `X0` in Frobenius norm.
//!
//! The unconstrained path evaluates the closed form
//! `X̂ = A†CB† + X0 − A†A X0 BB†`, which covers the consistent and the
//! inconsistent case alike; only the reported verdict differs. The symmetric
//! and skew-symmetric paths couple `AXB = C` with its transpose companion
//! `BᵀXAᵀ = ±Cᵀ`, stack both through the Kronecker lift
//! `M = [Bᵀ⊗A ; A⊗Bᵀ]`, and apply the same nearest-solution formula to the
//! stacked system with `X0` replaced by its symmetric (or skew) part.
//! Structure of the result is checked by callers, never forced after the
//! fact.

use alloc::format;
use core::fmt;

use crate::error::{Error, Result};
use crate::kron::{kron, unvec, vec};
use crate::matrix::{DenseMatrix, DenseVector};
use crate::svd::svd_with;

/// Structural restriction on the unknown matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConstraintKind {
    Unconstrained,
    Symmetric,
    SkewSymmetric,
}

impl ConstraintKind {
    pub fn is_structured(self) -> bool {
        !matches!(self, ConstraintKind::Unconstrained)
    }
}

impl fmt::Display for ConstraintKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            ConstraintKind::Unconstrained => "unconstrained",
            ConstraintKind::Symmetric => "symmetric",
            ConstraintKind::SkewSymmetric => "skew-symmetric",
        };
        f.write_str(name)
    }
}

/// The data of one nearness problem: minimize `‖X − X0‖_F` over the
/// (least-squares) solution set of `AXB = C`, optionally within the
/// symmetric or skew-symmetric matrices.
#[derive(Debug, Clone)]
pub struct NearnessProblem {
    a: DenseMatrix,
    b: DenseMatrix,
    c: DenseMatrix,
    x0: DenseMatrix,
    constraint: ConstraintKind,
}

impl NearnessProblem {
    /// Validates the dimension chain `A(m×n)·X0(n×p)·B(p×r) = C(m×r)` and,
    /// under a structure constraint, that the unknown is square.
    pub fn new(
        a: DenseMatrix,
        b: DenseMatrix,
        c: DenseMatrix,
        x0: DenseMatrix,
        constraint: ConstraintKind,
    ) -> Result<Self> {
        let (m, n) = (a.rows(), a.cols());
        let (p, r) = (b.rows(), b.cols());
        if x0.rows() != n || x0.cols() != p {
            return Err(Error::Shape(format!(
                "X0 must be {n}x{p} to conform with A ({m}x{n}) and B ({p}x{r}); got {}x{}",
                x0.rows(),
                x0.cols()
            )));
        }
        if c.rows() != m || c.cols() != r {
            return Err(Error::Shape(format!(
                "C must be {m}x{r}; got {}x{}",
                c.rows(),
                c.cols()
            )));
        }
        if constraint.is_structured() && n != p {
            return Err(Error::Shape(format!(
                "{constraint} constraint requires a square unknown; got {n}x{p}"
            )));
        }
        Ok(Self { a, b, c, x0, constraint })
    }

    pub fn a(&self) -> &DenseMatrix {
        &self.a
    }

    pub fn b(&self) -> &DenseMatrix {
        &self.b
    }

    pub fn c(&self) -> &DenseMatrix {
        &self.c
    }

    pub fn x0(&self) -> &DenseMatrix {
        &self.x0
    }

    pub fn constraint(&self) -> ConstraintKind {
        self.constraint
    }

    /// `(m, n, p, r)` of the chain `A(m×n)·X(n×p)·B(p×r) = C(m×r)`.
    pub fn dims(&self) -> (usize, usize, usize, usize) {
        (self.a.rows(), self.a.cols(), self.b.rows(), self.b.cols())
    }

    /// `X0` projected onto the constraint class (identity when unconstrained).
    pub fn projected_x0(&self) -> DenseMatrix {
        match self.constraint {
            ConstraintKind::Unconstrained => self.x0.clone(),
            ConstraintKind::Symmetric => self.x0.symmetric_part(),
            ConstraintKind::SkewSymmetric => self.x0.skew_part(),
        }
    }
}

/// Solution of a [`NearnessProblem`] plus diagnostics.
///
/// `residual` and `distance` are always recomputed from `x_hat`, never
/// carried over from intermediate algebra.
#[derive(Debug, Clone)]
pub struct NearnessSolution {
    /// The nearest (least-squares) solution.
    pub x_hat: DenseMatrix,
    /// Whether `AXB = C` is solvable exactly (Penrose test, see
    /// [`check_consistency`]).
    pub consistent: bool,
    /// The raw consistency gap `‖A A† C B† B − C‖_F`; callers may apply
    /// their own gate.
    pub consistency_gap: f64,
    /// `‖A·x_hat·B − C‖_F`.
    pub residual: f64,
    /// `‖x_hat − X0‖_F`.
    pub distance: f64,
    /// Largest absolute rank threshold used by the pseudoinverses involved.
    /// Near rank deficiency the answer depends on this threshold, so it is
    /// surfaced rather than hidden.
    pub tolerance_used: f64,
}

/// Tuning knobs for the solver; the defaults match the documented behavior.
#[derive(Debug, Clone)]
pub struct SolveOptions {
    /// Relative rank tolerance handed to every SVD (`None` = `ε·max(m,n)`).
    pub rcond: Option<f64>,
    /// Structured solves materialize a `2mr × n²` stacked matrix; problems
    /// with `n²` above this cap are rejected with a capacity error instead
    /// of attempting the allocation.
    pub lifted_column_cap: usize,
}

impl Default for SolveOptions {
    fn default() -> Self {
        Self { rcond: None, lifted_column_cap: 1_000_000 }
    }
}

impl SolveOptions {
    /// Consistency of `AXB = C` by the Penrose test: the equation is solvable
    /// iff `A A† C B† B = C`. Returns the verdict together with the raw gap
    /// `‖A A† C B† B − C‖_F`.
    ///
    /// The gate is `10³·ε·max(1, ‖A‖_F·‖B‖_F + ‖C‖_F)`, a scale-aware bound on
    /// the rounding noise a consistent instance can accumulate.
    pub fn check_consistency(
        &self,
        a: &DenseMatrix,
        b: &DenseMatrix,
        c: &DenseMatrix,
    ) -> Result<(bool, f64)> {
        check_product_shapes(a, b, c)?;
        let a_pinv = svd_with(a, self.rcond)?.pseudo_inverse();
        let b_pinv = svd_with(b, self.rcond)?.pseudo_inverse();
        let gap = consistency_gap(a, &a_pinv, b, &b_pinv, c);
        Ok((gap <= consistency_tolerance(a, b, c), gap))
    }

    /// Attained minimum of `‖AXB − C‖_F` over all X, namely
    /// `‖A A† C B† B − C‖_F`. Zero (up to rounding) iff the equation is
    /// consistent.
    pub fn min_residual(&self, a: &DenseMatrix, b: &DenseMatrix, c: &DenseMatrix) -> Result<f64> {
        check_product_shapes(a, b, c)?;
        let a_pinv = svd_with(a, self.rcond)?.pseudo_inverse();
        let b_pinv = svd_with(b, self.rcond)?.pseudo_inverse();
        Ok(consistency_gap(a, &a_pinv, b, &b_pinv, c))
    }

    /// Dispatches on the problem's constraint kind.
    pub fn solve(&self, problem: &NearnessProblem) -> Result<NearnessSolution> {
        match problem.constraint() {
            ConstraintKind::Unconstrained => self.solve_unconstrained(problem),
            _ => self.solve_constrained(problem),
        }
    }

    /// Closed-form unconstrained solve: `X̂ = A†CB† + X0 − A†A X0 BB†`.
    ///
    /// One code path covers both the consistent case (nearest exact solution)
    /// and the inconsistent case (nearest least-squares solution); the two
    /// differ only in the reported `consistent` flag.
    pub fn solve_unconstrained(&self, problem: &NearnessProblem) -> Result<NearnessSolution> {
        if problem.constraint() != ConstraintKind::Unconstrained {
            return Err(Error::Shape(format!(
                "solve_unconstrained called with a {} problem",
                problem.constraint()
            )));
        }
        let (a, b, c, x0) = (problem.a(), problem.b(), problem.c(), problem.x0());
        let a_svd = svd_with(a, self.rcond)?;
        let b_svd = svd_with(b, self.rcond)?;
        let a_pinv = a_svd.pseudo_inverse();
        let b_pinv = b_svd.pseudo_inverse();

        let particular = &(&a_pinv * c) * &b_pinv; // A†CB†
        let left_proj = &a_pinv * a; // A†A
        let right_proj = b * &b_pinv; // BB†
        let shadow = &(&left_proj * x0) * &right_proj; // A†A X0 BB†
        let x_hat = &(&particular + x0) - &shadow;

        let gap = consistency_gap(a, &a_pinv, b, &b_pinv, c);
        let consistent = gap <= consistency_tolerance(a, b, c);
        let tolerance_used = a_svd.tolerance_used().max(b_svd.tolerance_used());
        Ok(finish(problem, x_hat, consistent, gap, tolerance_used))
    }

    /// Structured solve through the stacked system
    /// `[Bᵀ⊗A ; A⊗Bᵀ]·x = (vec C ; ±vec Cᵀ)`.
    ///
    /// `X0` is first replaced by its symmetric (`+`) or skew-symmetric (`−`)
    /// part; the minimization over the constraint class is unchanged by this
    /// substitution. The result is `x̂ = M†d + (I − M†M)·vec(X0')`, reshaped.
    pub fn solve_constrained(&self, problem: &NearnessProblem) -> Result<NearnessSolution> {
        let skew = match problem.constraint() {
            ConstraintKind::Symmetric => false,
            ConstraintKind::SkewSymmetric => true,
            ConstraintKind::Unconstrained => {
                return Err(Error::Shape(
                    "solve_constrained called with an unconstrained problem".into(),
                ))
            }
        };
        let (a, b, c) = (problem.a(), problem.b(), problem.c());
        let n = a.cols();
        let lifted_cols = n
            .checked_mul(n)
            .filter(|&cols| cols <= self.lifted_column_cap)
            .ok_or_else(|| {
                Error::Capacity(format!(
                    "structured solve needs an n² = {n}·{n} column stacked matrix, above the cap of {} columns",
                    self.lifted_column_cap
                ))
            })?;
        let lifted_rows = 2usize
            .checked_mul(a.rows())
            .and_then(|x| x.checked_mul(b.cols()))
            .ok_or_else(|| Error::Capacity("stacked matrix row count overflows usize".into()))?;
        lifted_rows
            .checked_mul(lifted_cols)
            .ok_or_else(|| Error::Capacity("stacked matrix entry count overflows usize".into()))?;

        let b_t = b.transpose();
        let stacked = DenseMatrix::vstack(&kron(&b_t, a)?, &kron(a, &b_t)?)?;
        let c2 = vec(&c.transpose());
        let companion = if skew { c2.scale(-1.0) } else { c2 };
        let rhs = DenseVector::concat(&vec(c), &companion);

        let x0_proj = problem.projected_x0();
        let x0_vec = vec(&x0_proj);

        let m_svd = svd_with(&stacked, self.rcond)?;
        let m_pinv = m_svd.pseudo_inverse();
        let particular = m_pinv.matvec(&rhs); // M†d
        let projected = m_pinv.matvec(&stacked.matvec(&x0_vec)); // M†M x0'
        let x_hat_vec = &(&particular + &x0_vec) - &projected;
        let x_hat = unvec(&x_hat_vec, n, n)?;

        let a_pinv = svd_with(a, self.rcond)?.pseudo_inverse();
        let b_pinv = svd_with(b, self.rcond)?.pseudo_inverse();
        let gap = consistency_gap(a, &a_pinv, b, &b_pinv, c);
        let consistent = gap <= consistency_tolerance(a, b, c);
        Ok(finish(problem, x_hat, consistent, gap, m_svd.tolerance_used()))
    }
}

/// [`SolveOptions::check_consistency`] with default options.
pub fn check_consistency(
    a: &DenseMatrix,
    b: &DenseMatrix,
    c: &DenseMatrix,
) -> Result<(bool, f64)> {
    SolveOptions::default().check_consistency(a, b, c)
}

/// [`SolveOptions::min_residual`] with default options.
pub fn min_residual(a: &DenseMatrix, b: &DenseMatrix, c: &DenseMatrix) -> Result<f64> {
    SolveOptions::default().min_residual(a, b, c)
}

/// [`SolveOptions::solve`] with default options.
pub fn solve(problem: &NearnessProblem) -> Result<NearnessSolution> {
    SolveOptions::default().solve(problem)
}

/// [`SolveOptions::solve_unconstrained`] with default options.
pub fn solve_unconstrained(problem: &NearnessProblem) -> Result<NearnessSolution> {
    SolveOptions::default().solve_unconstrained(problem)
}

/// [`SolveOptions::solve_constrained`] with default options.
pub fn solve_constrained(problem: &NearnessProblem) -> Result<NearnessSolution> {
    SolveOptions::default().solve_constrained(problem)
}

fn check_product_shapes(a: &DenseMatrix, b: &DenseMatrix, c: &DenseMatrix) -> Result<()> {
    if c.rows() != a.rows() || c.cols() != b.cols() {
        return Err(Error::Shape(format!(
            "C must be {}x{} for A {}x{} and B {}x{}; got {}x{}",
            a.rows(),
            b.cols(),
            a.rows(),
            a.cols(),
            b.rows(),
            b.cols(),
            c.rows(),
            c.cols()
        )));
    }
    Ok(())
}

fn consistency_gap(
    a: &DenseMatrix,
    a_pinv: &DenseMatrix,
    b: &DenseMatrix,
    b_pinv: &DenseMatrix,
    c: &DenseMatrix,
) -> f64 {
    let projected = &(&(a * a_pinv) * c) * &(b_pinv * b); // A A† C B† B
    (&projected - c).fro_norm()
}

fn consistency_tolerance(a: &DenseMatrix, b: &DenseMatrix, c: &DenseMatrix) -> f64 {
    1e3 * f64::EPSILON * (a.fro_norm() * b.fro_norm() + c.fro_norm()).max(1.0)
}

fn finish(
    problem: &NearnessProblem,
    x_hat: DenseMatrix,
    consistent: bool,
    consistency_gap: f64,
    tolerance_used: f64,
) -> NearnessSolution {
    let residual = (&(&(problem.a() * &x_hat) * problem.b()) - problem.c()).fro_norm();
    let distance = (&x_hat - problem.x0()).fro_norm();
    NearnessSolution { x_hat, consistent, consistency_gap, residual, distance, tolerance_used }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn problem(
        a: DenseMatrix,
        b: DenseMatrix,
        c: DenseMatrix,
        x0: DenseMatrix,
        k: ConstraintKind,
    ) -> NearnessProblem {
        NearnessProblem::new(a, b, c, x0, k).unwrap()
    }

    #[test]
    fn identity_operators_return_rhs() {
        let c = DenseMatrix::from_rows(&[[1.0, 2.0], [3.0, 4.0]]).unwrap();
        let x0 = DenseMatrix::from_rows(&[[9.0, -9.0], [0.5, 2.0]]).unwrap();
        let p = problem(
            DenseMatrix::identity(2),
            DenseMatrix::identity(2),
            c.clone(),
            x0,
            ConstraintKind::Unconstrained,
        );
        let sol = solve(&p).unwrap();
        assert!(sol.consistent);
        assert!((&sol.x_hat - &c).fro_norm() < 1e-14);
        assert!(sol.residual < 1e-14);
    }

    #[test]
    fn nonsingular_operators_ignore_anchor() {
        let a = DenseMatrix::from_rows(&[[2.0, 1.0], [1.0, 1.0]]).unwrap();
        let b = DenseMatrix::from_rows(&[[1.0, 2.0], [3.0, 5.0]]).unwrap();
        let c = DenseMatrix::from_rows(&[[7.0, -1.0], [0.0, 4.0]]).unwrap();
        let x0a = DenseMatrix::zeros(2, 2);
        let x0b = DenseMatrix::from_rows(&[[100.0, 3.0], [-8.0, 1.0]]).unwrap();
        let sol_a = solve(&problem(a.clone(), b.clone(), c.clone(), x0a, ConstraintKind::Unconstrained)).unwrap();
        let sol_b = solve(&problem(a, b, c, x0b, ConstraintKind::Unconstrained)).unwrap();
        assert!((&sol_a.x_hat - &sol_b.x_hat).fro_norm() < 1e-12);
        assert!(sol_a.residual < 1e-12);
    }

    #[test]
    fn zero_operators_return_projected_anchor() {
        let a = DenseMatrix::zeros(2, 3);
        let b = DenseMatrix::zeros(3, 2);
        let c = DenseMatrix::from_rows(&[[1.0, 1.0], [1.0, 1.0]]).unwrap();
        let x0 = DenseMatrix::from_rows(&[
            [1.0, 2.0, 3.0],
            [4.0, 5.0, 6.0],
            [7.0, 8.0, 9.0],
        ])
        .unwrap();
        let sol = solve(&problem(a, b, c.clone(), x0.clone(), ConstraintKind::Unconstrained)).unwrap();
        assert!(!sol.consistent);
        assert_eq!(sol.consistency_gap, c.fro_norm());
        assert!((&sol.x_hat - &x0).fro_norm() < 1e-14);
        assert_eq!(sol.residual, c.fro_norm());
    }

    #[test]
    fn anchor_already_solving_is_returned_unchanged() {
        // Skew X0 that exactly solves AXB = C lies in the feasible set, so the
        // nearest feasible point to it is itself.
        let a = DenseMatrix::from_rows(&[[1.0, 2.0, 0.0], [0.0, 1.0, 4.0]]).unwrap();
        let x0 = DenseMatrix::from_rows(&[
            [0.0, 1.5, -2.0],
            [-1.5, 0.0, 0.5],
            [2.0, -0.5, 0.0],
        ])
        .unwrap();
        let b = DenseMatrix::from_rows(&[[1.0, 0.0], [2.0, 1.0], [0.0, 3.0]]).unwrap();
        let c = &(&a * &x0) * &b;
        let p = problem(a, b, c, x0.clone(), ConstraintKind::SkewSymmetric);
        let sol = solve(&p).unwrap();
        assert!(sol.distance < 1e-12);
        assert!((&sol.x_hat - &x0).fro_norm() < 1e-12);
    }

    #[test]
    fn consistency_check_examples() {
        let c = DenseMatrix::from_rows(&[[1.0, 2.0], [3.0, 4.0]]).unwrap();
        let (ok, gap) = check_consistency(&DenseMatrix::identity(2), &DenseMatrix::identity(2), &c).unwrap();
        assert!(ok);
        assert_eq!(gap, 0.0);

        let z = DenseMatrix::zeros(2, 2);
        let (ok, gap) = check_consistency(&z, &z, &c).unwrap();
        assert!(!ok);
        assert_eq!(gap, c.fro_norm());
    }

    #[test]
    fn min_residual_examples() {
        let a = DenseMatrix::from_rows(&[[1.0, 0.0], [0.0, 1.0], [1.0, 1.0]]).unwrap();
        let b = DenseMatrix::identity(2);
        let y = DenseMatrix::from_rows(&[[1.0, 2.0], [3.0, 4.0]]).unwrap();
        let c = &(&a * &y) * &b;
        assert!(min_residual(&a, &b, &c).unwrap() < 1e-12);

        let z = DenseMatrix::zeros(3, 2);
        let c2 = DenseMatrix::from_rows(&[[3.0, 0.0], [0.0, 4.0], [0.0, 0.0]]).unwrap();
        assert_eq!(min_residual(&z, &b, &c2).unwrap(), 5.0);
    }

    #[test]
    fn constraint_requires_square_unknown() {
        let err = NearnessProblem::new(
            DenseMatrix::zeros(2, 3),
            DenseMatrix::zeros(2, 2),
            DenseMatrix::zeros(2, 2),
            DenseMatrix::zeros(3, 2),
            ConstraintKind::Symmetric,
        )
        .unwrap_err();
        assert!(matches!(err, Error::Shape(_)));
    }

    #[test]
    fn dimension_chain_is_validated() {
        let err = NearnessProblem::new(
            DenseMatrix::zeros(2, 3),
            DenseMatrix::zeros(4, 2),
            DenseMatrix::zeros(2, 2),
            DenseMatrix::zeros(3, 3),
            ConstraintKind::Unconstrained,
        )
        .unwrap_err();
        assert!(matches!(err, Error::Shape(_)));

        let err = check_consistency(
            &DenseMatrix::zeros(2, 3),
            &DenseMatrix::zeros(3, 2),
            &DenseMatrix::zeros(2, 3),
        )
        .unwrap_err();
        assert!(matches!(err, Error::Shape(_)));
    }

    #[test]
    fn lifted_cap_yields_capacity_error() {
        let p = problem(
            DenseMatrix::identity(3),
            DenseMatrix::identity(3),
            DenseMatrix::identity(3),
            DenseMatrix::zeros(3, 3),
            ConstraintKind::Symmetric,
        );
        let opts = SolveOptions { lifted_column_cap: 8, ..Default::default() };
        assert!(matches!(opts.solve(&p), Err(Error::Capacity(_))));
        assert!(solve(&p).is_ok());
    }

    #[test]
    fn wrong_dispatch_is_rejected() {
        let p = problem(
            DenseMatrix::identity(2),
            DenseMatrix::identity(2),
            DenseMatrix::identity(2),
            DenseMatrix::zeros(2, 2),
            ConstraintKind::Symmetric,
        );
        assert!(matches!(solve_unconstrained(&p), Err(Error::Shape(_))));
        let q = problem(
            DenseMatrix::identity(2),
            DenseMatrix::identity(2),
            DenseMatrix::identity(2),
            DenseMatrix::zeros(2, 2),
            ConstraintKind::Unconstrained,
        );
        assert!(matches!(solve_constrained(&q), Err(Error::Shape(_))));
    }
}
