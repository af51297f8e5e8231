use itertools::Itertools;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{nullspace_exact, rank_exact, ExactMatrix, ExactVector, PivotStep, Rational};

/// `H = ker(coeffs)` for a nonzero exact functional.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HyperplaneFunctional {
    coeffs: ExactVector,
}

impl HyperplaneFunctional {
    pub fn new(coeffs: ExactVector) -> Result<Self> {
        if coeffs.is_zero() {
            return Err(Error::Domain("hyperplane functional must be nonzero".into()));
        }
        Ok(HyperplaneFunctional { coeffs })
    }

    /// `ker e*_i` in `ℝ^dim`.
    pub fn coordinate(dim: usize, i: usize) -> Self {
        HyperplaneFunctional {
            coeffs: ExactVector::unit(dim, i, Default::default()),
        }
    }

    pub fn coeffs(&self) -> &ExactVector {
        &self.coeffs
    }

    pub fn dim(&self) -> usize {
        self.coeffs.dim()
    }

    pub fn pair(&self, x: &ExactVector) -> Rational {
        self.coeffs.dot(x)
    }

    pub fn contains(&self, x: &ExactVector) -> bool {
        self.pair(x).is_zero()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict")]
pub enum DensityVerdict {
    Full {
        rank: usize,
        pivot_log: Vec<PivotStep>,
    },
    Proper {
        witness: HyperplaneFunctional,
        max_abs_pairing: Rational,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DensityCertificate {
    pub subset: Vec<usize>,
    pub dim: usize,
    #[serde(flatten)]
    pub verdict: DensityVerdict,
}

impl DensityCertificate {
    pub fn is_full(&self) -> bool {
        matches!(self.verdict, DensityVerdict::Full { .. })
    }

    pub fn verdict_name(&self) -> &'static str {
        match self.verdict {
            DensityVerdict::Full { .. } => "Full",
            DensityVerdict::Proper { .. } => "Proper",
        }
    }

    /// Re-check the certificate against the vectors it was issued for.
    pub fn verify(&self, vectors: &[ExactVector]) -> Result<()> {
        let rows = selected(vectors, &self.subset, self.dim)?;
        match &self.verdict {
            DensityVerdict::Full { rank, pivot_log } => {
                let replayed = replay_pivot_log(&rows, pivot_log)?;
                if replayed != *rank || *rank != self.dim {
                    return Err(Error::cert(
                        "full rank",
                        format!("replayed rank {replayed}, claimed {rank}, ambient dimension {}", self.dim),
                    ));
                }
            }
            DensityVerdict::Proper { witness, .. } => {
                if let Some(i) = self.subset.iter().find(|&&i| !witness.contains(&vectors[i])) {
                    return Err(Error::cert(
                        "witness annihilates subset",
                        format!("⟨f, x_{i}⟩ = {}", witness.pair(&vectors[*i])),
                    ));
                }
            }
        }
        Ok(())
    }
}

fn selected(vectors: &[ExactVector], subset: &[usize], d: usize) -> Result<ExactMatrix> {
    if subset.is_empty() {
        return Err(Error::Domain("density certificate of an empty subset".into()));
    }
    let mut rows = Vec::with_capacity(subset.len());
    for &i in subset {
        let v = vectors
            .get(i)
            .ok_or_else(|| Error::Domain(format!("subset index {i} out of range ({} vectors)", vectors.len())))?;
        if v.dim() != d {
            return Err(Error::Domain(format!("vector {i} has dimension {} ≠ {d}", v.dim())));
        }
        rows.push(v.coords().to_vec());
    }
    Ok(ExactMatrix::from_rows(rows))
}

/// `Full` iff the selected vectors span `ℝ^d`; otherwise `Proper` with an
/// exact annihilating functional.
pub fn density_certificate(vectors: &[ExactVector], subset: &[usize], d: usize) -> Result<DensityCertificate> {
    let m = selected(vectors, subset, d)?;
    let rank = rank_exact(&m);
    let verdict = if rank.rank == d {
        DensityVerdict::Full {
            rank: rank.rank,
            pivot_log: rank.pivots,
        }
    } else {
        let f = nullspace_exact(&m)
            .into_iter()
            .next()
            .expect("rank below the dimension leaves a nonzero kernel");
        let witness = HyperplaneFunctional::new(f)?;
        let max_abs_pairing = subset
            .iter()
            .map(|&i| witness.pair(&vectors[i]).abs())
            .max()
            .unwrap_or_else(Rational::zero);
        DensityVerdict::Proper {
            witness,
            max_abs_pairing,
        }
    };
    Ok(DensityCertificate {
        subset: subset.to_vec(),
        dim: d,
        verdict,
    })
}

/// Certificates for many subsets, computed in parallel and returned in the
/// order of `subsets`.
pub fn certify_subsets(vectors: &[ExactVector], subsets: &[Vec<usize>], d: usize) -> Result<Vec<DensityCertificate>> {
    subsets.par_iter().map(|s| density_certificate(vectors, s, d)).collect()
}

/// All `size`-subsets of `0..n` in lexicographic order.
pub fn all_subsets(n: usize, size: usize) -> Vec<Vec<usize>> {
    (0..n).combinations(size).collect()
}

/// Replay a pivot log with plain rational Gaussian elimination.
///
/// Checks that every logged pivot follows the lowest-unused-row rule,
/// that its value matches, and that the rows left over reduce to zero.
/// Returns the certified rank.
pub fn replay_pivot_log(m: &ExactMatrix, log: &[PivotStep]) -> Result<usize> {
    let fail = |detail: String| Error::cert("pivot replay", detail);
    let mut a: Vec<Vec<Rational>> = m.rows().to_vec();
    let mut used = vec![false; a.len()];
    let mut next_col = 0;
    for (s, step) in log.iter().enumerate() {
        if step.col < next_col || step.col >= m.ncols() {
            return Err(fail(format!("step {s}: column {} out of order", step.col)));
        }
        for c in next_col..step.col {
            if let Some(r) = (0..a.len()).find(|&r| !used[r] && !a[r][c].is_zero()) {
                return Err(fail(format!("step {s}: column {c} skipped but row {r} is nonzero there")));
            }
        }
        let Some(expected_row) = (0..a.len()).find(|&r| !used[r] && !a[r][step.col].is_zero()) else {
            return Err(fail(format!("step {s}: column {} has no nonzero entry left", step.col)));
        };
        if expected_row != step.row {
            return Err(fail(format!("step {s}: pivot row {} but the rule picks {expected_row}", step.row)));
        }
        if a[step.row][step.col] != step.value {
            return Err(fail(format!(
                "step {s}: pivot value {} but elimination gives {}",
                step.value, a[step.row][step.col]
            )));
        }
        used[step.row] = true;
        let pivot_row = a[step.row].clone();
        for r in 0..a.len() {
            if used[r] || a[r][step.col].is_zero() {
                continue;
            }
            let factor = &a[r][step.col] / &step.value;
            for c in step.col..pivot_row.len() {
                let delta = &factor * &pivot_row[c];
                a[r][c] -= &delta;
            }
        }
        next_col = step.col + 1;
    }
    for (r, row) in a.iter().enumerate() {
        if !used[r] && row.iter().any(|x| !x.is_zero()) {
            return Err(fail(format!("row {r} does not reduce to zero")));
        }
    }
    Ok(log.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{q, NormTag};

    fn e(d: usize, i: usize) -> ExactVector {
        ExactVector::unit(d, i, NormTag::L1)
    }

    #[test]
    fn coordinate_pair_in_r3_is_proper() {
        let vs = vec![e(3, 0), e(3, 1)];
        let cert = density_certificate(&vs, &[0, 1], 3).unwrap();
        match &cert.verdict {
            DensityVerdict::Proper {
                witness,
                max_abs_pairing,
            } => {
                assert_eq!(witness.coeffs(), &e(3, 2));
                assert!(max_abs_pairing.is_zero());
            }
            other => panic!("expected Proper, got {other:?}"),
        }
        cert.verify(&vs).unwrap();
    }

    #[test]
    fn zero_vector_on_the_line() {
        let vs = vec![ExactVector::zeros(1, NormTag::L1)];
        let cert = density_certificate(&vs, &[0], 1).unwrap();
        let DensityVerdict::Proper { witness, .. } = cert.verdict else {
            panic!("expected Proper");
        };
        assert_eq!(witness.coeffs().coords(), &[q(1, 1)]);
    }

    #[test]
    fn empty_subset_is_a_domain_error() {
        assert!(matches!(density_certificate(&[e(2, 0)], &[], 2), Err(Error::Domain(_))));
    }

    #[test]
    fn replay_rejects_tampered_logs() {
        let vs = vec![
            ExactVector::from_ints(&[0, 2, 1], NormTag::L1),
            ExactVector::from_ints(&[1, 1, 0], NormTag::L1),
            ExactVector::from_ints(&[1, 0, 3], NormTag::L1),
        ];
        let cert = density_certificate(&vs, &[0, 1, 2], 3).unwrap();
        cert.verify(&vs).unwrap();
        let DensityVerdict::Full { pivot_log, .. } = &cert.verdict else {
            panic!("expected Full");
        };
        let m = ExactMatrix::from_vectors(&vs);
        let mut bad = pivot_log.clone();
        bad[1].value = &bad[1].value + &q(1, 1);
        assert!(replay_pivot_log(&m, &bad).is_err());
        assert!(replay_pivot_log(&m, &pivot_log[..2]).is_err(), "leftover row must be caught");
    }

    #[test]
    fn subsets_keep_order() {
        let vs: Vec<ExactVector> = (0..4).map(|i| e(2, i % 2)).collect();
        let subsets = all_subsets(4, 2);
        assert_eq!(subsets.len(), 6);
        let certs = certify_subsets(&vs, &subsets, 2).unwrap();
        let verdicts: Vec<bool> = certs.iter().map(|c| c.is_full()).collect();
        assert_eq!(verdicts, vec![true, false, true, true, false, true]);
        assert!(certs.iter().zip(&subsets).all(|(c, s)| &c.subset == s));
    }
}
