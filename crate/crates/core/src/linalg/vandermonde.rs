use super::{ExactMatrix, Rational};
use crate::error::{Error, Result};

/// Square Vandermonde matrix with rows `(1, λ_i, λ_i², …, λ_i^{k−1})`.
pub fn vandermonde_matrix(lambdas: &[Rational]) -> ExactMatrix {
    let k = lambdas.len();
    ExactMatrix::from_rows(lambdas.iter().map(|l| powers(l, k)).collect())
}

/// `(1, λ, …, λ^{len−1})`.
pub fn powers(lambda: &Rational, len: usize) -> Vec<Rational> {
    let mut out = Vec::with_capacity(len);
    let mut acc = Rational::one();
    for _ in 0..len {
        out.push(acc.clone());
        acc = &acc * lambda;
    }
    out
}

/// `∏_{i<j} (λ_j − λ_i)`; zero iff two nodes coincide.
pub fn vandermonde_det(lambdas: &[Rational]) -> Result<Rational> {
    if lambdas.is_empty() {
        return Err(Error::Domain("Vandermonde determinant of an empty node list".into()));
    }
    let mut det = Rational::one();
    for (i, li) in lambdas.iter().enumerate() {
        for lj in &lambdas[i + 1..] {
            det *= &(lj - li);
        }
    }
    Ok(det)
}
