//! Exact and floating-point vectors, matrices and norms, plus the rank,
//! nullspace, least-squares and Vandermonde kernels the certificates are
//! built from.

mod elimination;
mod least_squares;
mod matrix;
mod rational;
mod scalar;
mod vandermonde;
mod vector;

pub use elimination::{cofactor_normal, det_exact, nullspace_exact, rank_exact, PivotStep, RankCertificate};
pub use least_squares::least_squares_residual;
pub use matrix::{ExactMatrix, FloatMatrix, Matrix};
pub use rational::{q, Rational};
pub use scalar::{Entry, NormTag, Scalar};
pub use vandermonde::{powers, vandermonde_det, vandermonde_matrix};
pub use vector::{ExactVector, FloatVector, Vector};

/// `√a ≤ √b + c` decided exactly for rationals `a, b ≥ 0` and `c ≥ 0`.
pub fn sqrt_le_sqrt_plus(a: &Rational, b: &Rational, c: &Rational) -> bool {
    // Square both sides: a ≤ b + c² + 2c√b.
    let lhs = a - b - &(c * c);
    if !lhs.is_positive() {
        return true;
    }
    &lhs * &lhs <= &(&Rational::integer(4) * &(c * c)) * b
}
