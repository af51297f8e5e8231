use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{powers, q, ExactVector, NormTag, Rational};

/// Truncated geometric vectors `g_λ = (1, λ, λ², …, λ^{d−1})` for distinct
/// nodes `λ ∈ (0, 1/2)`.
#[derive(Clone, Debug, Serialize)]
pub struct GeometricFamily {
    lambdas: Vec<Rational>,
    dim: usize,
    vectors: Vec<ExactVector>,
}

impl GeometricFamily {
    pub fn lambdas(&self) -> &[Rational] {
        &self.lambdas
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vectors(&self) -> &[ExactVector] {
        &self.vectors
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }
}

pub fn klee_vectors(lambdas: &[Rational], dim: usize) -> Result<GeometricFamily> {
    if dim == 0 {
        return Err(Error::Domain("truncation dimension must be positive".into()));
    }
    let half = q(1, 2);
    for (i, l) in lambdas.iter().enumerate() {
        if !l.is_positive() || *l >= half {
            return Err(Error::Domain(format!("λ = {l} lies outside the open interval (0, 1/2)")));
        }
        if lambdas[..i].contains(l) {
            return Err(Error::Domain(format!("λ = {l} is repeated")));
        }
    }
    let vectors = lambdas
        .iter()
        .map(|l| ExactVector::new(powers(l, dim), NormTag::L1))
        .collect();
    Ok(GeometricFamily {
        lambdas: lambdas.to_vec(),
        dim,
        vectors,
    })
}

/// `count` distinct nodes `k / denom` in (0, 1/2), evenly spaced from `1/denom`.
pub fn evenly_spaced_nodes(count: usize, denom: i64) -> Result<Vec<Rational>> {
    if (count as i64) * 2 >= denom {
        return Err(Error::Domain(format!(
            "{count} evenly spaced nodes of denominator {denom} do not fit in (0, 1/2)"
        )));
    }
    Ok((1..=count as i64).map(|k| q(k, denom)).collect())
}
