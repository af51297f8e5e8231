use serde::Serialize;

use crate::constructors::IncompleteModel;
use crate::error::{Error, Result};
use crate::linalg::{q, ExactVector, Rational, Scalar};

/// Bounds with `k` above this are evaluated in floating point via logs.
pub const EXACT_K_LIMIT: usize = 60;

/// `B(j,k) = ‖e*‖·((j+2)^k/k! + ((j+2)/(j+3))^k·k)`.
pub fn decay_bound(j: u32, k: usize, functional_norm: &Scalar) -> Scalar {
    let j = j as i64;
    match functional_norm {
        Scalar::Exact(norm) if k <= EXACT_K_LIMIT => {
            let first = &q(j + 2, 1).pow(k as i32) / &Rational::factorial(k as u32);
            let second = &q(j + 2, j + 3).pow(k as i32) * &Rational::integer(k as i64);
            Scalar::Exact(norm * &(first + second))
        }
        _ => {
            let norm = functional_norm.to_float();
            let kf = k as f64;
            let ln_fact: f64 = (2..=k).map(|i| (i as f64).ln()).sum();
            let first = (kf * ((j + 2) as f64).ln() - ln_fact).exp();
            let second = (kf * ((j + 2) as f64 / (j + 3) as f64).ln()).exp() * kf;
            Scalar::Float(norm * (first + second))
        }
    }
}

fn scalar_lt(a: &Scalar, b: &Scalar) -> bool {
    match (a, b) {
        (Scalar::Exact(x), Scalar::Exact(y)) => x < y,
        _ => a.to_float() < b.to_float(),
    }
}

fn scalar_le(a: &Scalar, b: &Scalar) -> bool {
    !scalar_lt(b, a)
}

#[derive(Clone, Debug, Serialize)]
pub struct DecayProfile {
    pub j: u32,
    /// `B(j,k)` strictly decreases on `[onset, k_max]`.
    pub onset: usize,
    pub bounds: Vec<Scalar>,
}

/// `B(j,k)` for `k = 0..=k_max` with `‖e*‖ = 1`, and the onset of the
/// final strictly decreasing run.
pub fn decay_profile(j: u32, k_max: usize) -> DecayProfile {
    let one = Scalar::Exact(Rational::one());
    let bounds: Vec<Scalar> = (0..=k_max).map(|k| decay_bound(j, k, &one)).collect();
    let mut onset = k_max;
    while onset > 0 && scalar_lt(&bounds[onset], &bounds[onset - 1]) {
        onset -= 1;
    }
    DecayProfile { j, onset, bounds }
}

#[derive(Clone, Debug, Serialize)]
pub struct DecayRow {
    pub j: u32,
    /// `⟨e*, x_j⟩`
    pub pairing: Rational,
    /// `(k_i, B(j, k_i))` for every `k_i > j`.
    pub bounds: Vec<(usize, Scalar)>,
    pub min_bound: Option<Scalar>,
    /// `⟨e*, y⟩ = 0` and `⟨e*, x_p⟩ = 0` for `p < j`: the bound applies.
    pub premises_hold: bool,
    /// `|⟨e*, x_j⟩| ≤ min_i B(j, k_i)`, when the premises hold.
    pub within_bound: Option<bool>,
    /// `min_i B(j, k_i) < τ`.
    pub forces_zero: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct FunctionalDecay {
    pub functional_norm: Scalar,
    /// `⟨e*, y⟩`, exact since `e*` is finitely supported.
    pub target_pairing: Rational,
    pub rows: Vec<DecayRow>,
}

#[derive(Clone, Debug, Serialize)]
pub struct DecayReport {
    pub subsequence: Vec<usize>,
    pub j_max: u32,
    pub tau: f64,
    /// Subsequence indices whose bounds were evaluated in floating point.
    pub float_mode_k: Vec<usize>,
    pub functionals: Vec<FunctionalDecay>,
}

/// Evaluate the inductive annihilator bounds for functionals `e*` that
/// annihilate `g_{k_i}` for every `k_i` in `subsequence`.
pub fn annihilator_decay_check(
    model: &IncompleteModel,
    sequence: &[ExactVector],
    subsequence: &[usize],
    functionals: &[ExactVector],
    j_max: u32,
    tau: f64,
) -> Result<DecayReport> {
    for &k in subsequence {
        if k >= sequence.len() {
            return Err(Error::Precondition(format!(
                "subsequence index {k} beyond the {} supplied terms",
                sequence.len()
            )));
        }
    }
    let dual = model.norm_tag().dual();
    let mut out = Vec::with_capacity(functionals.len());
    for (idx, e) in functionals.iter().enumerate() {
        for &k in subsequence {
            if e.dim() != sequence[k].dim() {
                return Err(Error::Precondition(format!(
                    "functional {idx} has dimension {} but g_{k} has {}",
                    e.dim(),
                    sequence[k].dim()
                )));
            }
            let p = e.dot(&sequence[k]);
            if !p.is_zero() {
                return Err(Error::Precondition(format!("functional {idx} gives ⟨e*, g_{k}⟩ = {p} ≠ 0")));
            }
        }
        let functional_norm = e.norm_best_effort(dual);
        let target_pairing: Rational = e
            .coords()
            .iter()
            .enumerate()
            .map(|(n, c)| c * &model.rule().coord(n))
            .sum();
        let mut earlier_zero = target_pairing.is_zero();
        let mut rows = Vec::new();
        for j in 0..=j_max {
            let pairing = if (j as usize) < e.dim() {
                e.get(j as usize).clone()
            } else {
                Rational::zero()
            };
            let bounds: Vec<(usize, Scalar)> = subsequence
                .iter()
                .filter(|&&k| k > j as usize)
                .map(|&k| (k, decay_bound(j, k, &functional_norm)))
                .collect();
            let min_bound = bounds
                .iter()
                .map(|(_, b)| b.clone())
                .reduce(|a, b| if scalar_lt(&b, &a) { b } else { a });
            let premises_hold = earlier_zero;
            let within_bound = match (&min_bound, premises_hold) {
                (Some(b), true) => Some(scalar_le(&Scalar::Exact(pairing.abs()), b)),
                _ => None,
            };
            let forces_zero = min_bound.as_ref().is_some_and(|b| b.to_float() < tau);
            earlier_zero &= pairing.is_zero();
            rows.push(DecayRow {
                j,
                pairing,
                bounds,
                min_bound,
                premises_hold,
                within_bound,
                forces_zero,
            });
        }
        out.push(FunctionalDecay {
            functional_norm,
            target_pairing,
            rows,
        });
    }
    Ok(DecayReport {
        subsequence: subsequence.to_vec(),
        j_max,
        tau,
        float_mode_k: subsequence.iter().copied().filter(|&k| k > EXACT_K_LIMIT).collect(),
        functionals: out,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{incomplete_space_sequence, GeometricRule};
    use crate::linalg::NormTag;

    #[test]
    fn bound_at_ten() {
        let b = decay_bound(0, 10, &Scalar::Exact(Rational::one()));
        let expected = 1024.0 / 3_628_800.0 + (2.0f64 / 3.0).powi(10) * 10.0;
        assert!((b.to_float() - expected).abs() < 1e-12);
        assert!(b.is_exact());
    }

    #[test]
    fn bound_at_forty_is_small() {
        let b = decay_bound(0, 40, &Scalar::Exact(Rational::one()));
        assert!(b.to_float() < 1e-4);
    }

    #[test]
    fn float_mode_agrees_near_the_switch() {
        let exact = decay_bound(2, 60, &Scalar::Exact(Rational::one())).to_float();
        let float = decay_bound(2, 60, &Scalar::Float(1.0)).to_float();
        assert!((exact - float).abs() <= 1e-9 * exact);
        assert!(!decay_bound(0, 61, &Scalar::Exact(Rational::one())).is_exact());
    }

    #[test]
    fn zero_functional() {
        let model = IncompleteModel::new(GeometricRule::dyadic(), NormTag::L1, 6);
        let seq = incomplete_space_sequence(&model, 6).unwrap();
        let e = ExactVector::zeros(seq.dim, NormTag::Linf);
        let rep = annihilator_decay_check(&model, &seq.vectors, &[4, 5, 6], &[e], 3, 1e-3).unwrap();
        let rows = &rep.functionals[0].rows;
        assert!(rows.iter().all(|r| r.pairing.is_zero() && r.within_bound == Some(true)));
        assert!(rows[0].min_bound.as_ref().unwrap().to_float() == 0.0);
    }

    #[test]
    fn non_annihilating_functional_is_rejected() {
        let model = IncompleteModel::new(GeometricRule::dyadic(), NormTag::L1, 4);
        let seq = incomplete_space_sequence(&model, 4).unwrap();
        let e = ExactVector::unit(seq.dim, 0, NormTag::Linf);
        assert!(matches!(
            annihilator_decay_check(&model, &seq.vectors, &[3], &[e], 1, 1e-3),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn onset_and_monotone_tail() {
        for j in 0..=5 {
            let p = decay_profile(j, 80);
            assert!(p.onset > 0);
            for w in p.bounds[p.onset..].windows(2) {
                assert!(scalar_lt(&w[1], &w[0]));
            }
        }
    }
}
