//! Exact elimination kernels.
//!
//! Rank and determinant use fraction-free (Bareiss) elimination over the
//! integers after clearing each row's denominators. Pivot search is
//! column by column, taking the lowest-index unused row with a nonzero
//! entry, so the pivot log is reproducible.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::{ExactMatrix, ExactVector, NormTag, Rational};
use crate::error::{Error, Result};

/// One elimination step: the original row used as pivot, its column, and
/// the pivot value that ordinary rational Gaussian elimination would see at
/// that position. Replaying the log needs nothing else.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PivotStep {
    pub row: usize,
    pub col: usize,
    pub value: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankCertificate {
    pub rank: usize,
    pub pivots: Vec<PivotStep>,
}

/// Integer rows with the scale factor that cleared each row's denominators.
fn clear_denominators(m: &ExactMatrix) -> (Vec<Vec<BigInt>>, Vec<BigInt>) {
    let mut scales = Vec::with_capacity(m.nrows());
    let rows = m
        .rows()
        .iter()
        .map(|row| {
            let lcm = Rational::lcm_denoms(row);
            let ints = row.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
            scales.push(lcm);
            ints
        })
        .collect();
    (rows, scales)
}

/// Rank by Bareiss elimination, with a replayable pivot log.
pub fn rank_exact(m: &ExactMatrix) -> RankCertificate {
    let (mut a, scales) = clear_denominators(m);
    let nrows = a.len();
    let mut used = vec![false; nrows];
    let mut prev = BigInt::one();
    let mut pivots = Vec::new();

    for col in 0..m.ncols() {
        let Some(p) = (0..nrows).find(|&r| !used[r] && !a[r][col].is_zero()) else {
            continue;
        };
        used[p] = true;
        let pivot = a[p][col].clone();
        let gauss = Rational::from_bigints(pivot.clone(), &prev * &scales[p])
            .expect("Bareiss divisors are nonzero");
        pivots.push(PivotStep {
            row: p,
            col,
            value: gauss,
        });
        let pivot_row = a[p].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if used[r] {
                continue;
            }
            let factor = row[col].clone();
            for c in col + 1..row.len() {
                let num = &pivot * &row[c] - &factor * &pivot_row[c];
                debug_assert!((&num % &prev).is_zero(), "Bareiss division must be exact");
                row[c] = num / &prev;
            }
            row[col] = BigInt::zero();
        }
        prev = pivot;
    }

    RankCertificate {
        rank: pivots.len(),
        pivots,
    }
}

/// Determinant of a square exact matrix via the same elimination.
pub fn det_exact(m: &ExactMatrix) -> Result<Rational> {
    if m.nrows() != m.ncols() {
        return Err(Error::Domain(format!(
            "determinant of a non-square {}x{} matrix",
            m.nrows(),
            m.ncols()
        )));
    }
    let cert = rank_exact(m);
    if cert.rank < m.nrows() {
        return Ok(Rational::zero());
    }
    let order: Vec<usize> = cert.pivots.iter().map(|p| p.row).collect();
    let product: Rational = cert.pivots.iter().map(|p| p.value.clone()).product();
    Ok(if permutation_is_odd(&order) {
        -product
    } else {
        product
    })
}

fn permutation_is_odd(perm: &[usize]) -> bool {
    let mut seen = vec![false; perm.len()];
    let mut transpositions = 0;
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = perm[i];
            len += 1;
        }
        transpositions += len - 1;
    }
    transpositions % 2 == 1
}

/// Basis of `{f : M f = 0}` from the reduced row echelon form.
///
/// One basis vector per free column; each is nonzero (1 at its free
/// column) and exactly annihilated by every row of `M`.
pub fn nullspace_exact(m: &ExactMatrix) -> Vec<ExactVector> {
    let ncols = m.ncols();
    let mut a: Vec<Vec<Rational>> = m.rows().to_vec();
    let mut pivot_cols = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        let Some(p) = (r..a.len()).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][col].recip().expect("pivot is nonzero");
        for x in a[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = a[r].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i == r || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                *x -= &(&factor * p);
            }
        }
        pivot_cols.push(col);
        r += 1;
        if r == a.len() {
            break;
        }
    }

    (0..ncols)
        .filter(|c| !pivot_cols.contains(c))
        .map(|free| {
            let mut v = vec![Rational::zero(); ncols];
            v[free] = Rational::one();
            for (row, &pc) in pivot_cols.iter().enumerate() {
                v[pc] = -&a[row][free];
            }
            ExactVector::new(v, NormTag::L1)
        })
        .collect()
}

/// Cofactor normal of `d − 1` vectors in `ℝᵈ`: the functional `n` with
/// `⟨n, x⟩ = det[v₁; …; v_{d−1}; x]`. It vanishes exactly when the vectors
/// are dependent; otherwise its kernel is their span.
pub fn cofactor_normal(vectors: &[ExactVector], dim: usize) -> ExactVector {
    assert_eq!(vectors.len() + 1, dim, "cofactor normal needs dim - 1 vectors");
    if dim == 1 {
        return ExactVector::unit(1, 0, NormTag::L1);
    }
    let coords = (0..dim)
        .map(|skip| {
            let rows = vectors
                .iter()
                .map(|v| {
                    v.coords()
                        .iter()
                        .enumerate()
                        .filter(|(c, _)| *c != skip)
                        .map(|(_, x)| x.clone())
                        .collect()
                })
                .collect();
            let minor = det_exact(&ExactMatrix::from_rows(rows)).expect("square minor");
            // Laplace expansion along the last row.
            if (dim - 1 + skip) % 2 == 0 {
                minor
            } else {
                -minor
            }
        })
        .collect();
    ExactVector::new(coords, NormTag::L1)
}
