use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::constructors::SlidingHumpData;
use crate::error::{Error, Result};
use crate::linalg::{q, ExactVector, Rational};

#[derive(Clone, Debug, Serialize)]
pub struct ChainStep {
    pub name: &'static str,
    pub holds: bool,
}

/// `y_γ = x_γ↾[0,α₀) + x_γ↾[α_γ,L)` for one extracted member.
#[derive(Clone, Debug, Serialize)]
pub struct DecompositionEntry {
    pub source: usize,
    pub cut: usize,
    pub y: ExactVector,
    /// `‖x_γ − y_γ‖₁ = ‖x_γ↾[α₀,α_γ)‖₁`
    pub middle_mass: Rational,
    /// `‖y_γ↾[α₀,L)‖₁`
    pub tail_mass: Rational,
}

#[derive(Clone, Debug, Serialize)]
pub struct L1EquivalenceCertificate {
    pub n_value: Rational,
    pub epsilon: Rational,
    /// `c = 1 − N − 2ε`
    pub constant: Rational,
    /// `(1 − N)/2`
    pub half_gap: Rational,
    pub chain: Vec<ChainStep>,
    pub decomposition: Vec<DecompositionEntry>,
    pub sample_count: usize,
    pub sampled_min: Option<Rational>,
}

pub const STEP_MIDDLE: &str = "‖x_γ − y_γ‖ ≤ ε";
pub const STEP_DISJOINT: &str = "y_γ↾[α₀,L) disjointly supported";
pub const STEP_TAIL: &str = "‖y_γ↾[α₀,L)‖ ≥ 1−N−ε";
pub const STEP_CONSTANT: &str = "1−N−2ε ≥ (1−N)/2";
pub const STEP_SAMPLES: &str = "sampled norm ≥ c";

/// Replays the lower-bound chain `‖Σ a_j x_{γ_j}‖₁ ≥ (1−N−2ε)·Σ|a_j|`
/// exactly and checks it on the coefficient samples (each with
/// `Σ|a_j| = 1`, one coefficient per extracted member).
pub fn l1_lower_bound_certificate(data: &SlidingHumpData, samples: &[Vec<Rational>]) -> Result<L1EquivalenceCertificate> {
    let len = data.len;
    let eps = &data.epsilon;
    let one_minus_n = Rational::one() - &data.n_value;
    let constant = &one_minus_n - &(&q(2, 1) * eps);
    let half_gap = &one_minus_n * &q(1, 2);
    let mut chain = Vec::new();

    let decomposition: Vec<DecompositionEntry> = data
        .extracted
        .iter()
        .map(|m| {
            let x = &data.family[m.source];
            let cut = m.cut.min(len);
            let y = x.restrict(0..data.alpha0).add(&x.restrict(cut..len));
            DecompositionEntry {
                source: m.source,
                cut: m.cut,
                middle_mass: x.sub(&y).l1(),
                tail_mass: y.restrict(data.alpha0..len).l1(),
                y,
            }
        })
        .collect();

    let mut step = |name: &'static str, holds: bool, detail: String| -> Result<()> {
        chain.push(ChainStep { name, holds });
        if holds {
            Ok(())
        } else {
            Err(Error::cert(name, detail))
        }
    };

    let bad = decomposition.iter().find(|d| d.middle_mass > *eps);
    step(
        STEP_MIDDLE,
        bad.is_none(),
        bad.map(|d| format!("member {} has ‖x − y‖₁ = {} > {eps}", d.source, d.middle_mass))
            .unwrap_or_default(),
    )?;

    let mut owner: Vec<Option<usize>> = vec![None; len];
    let mut clash = None;
    'outer: for d in &decomposition {
        for c in d.y.restrict(data.alpha0..len).support() {
            if let Some(prev) = owner[c] {
                clash = Some((prev, d.source, c));
                break 'outer;
            }
            owner[c] = Some(d.source);
        }
    }
    step(
        STEP_DISJOINT,
        clash.is_none(),
        clash
            .map(|(a, b, c)| format!("members {a} and {b} share coordinate {c}"))
            .unwrap_or_default(),
    )?;

    let tail_floor = &one_minus_n - eps;
    let bad = decomposition.iter().find(|d| d.tail_mass < tail_floor);
    step(
        STEP_TAIL,
        bad.is_none(),
        bad.map(|d| format!("member {} has tail mass {} < {tail_floor}", d.source, d.tail_mass))
            .unwrap_or_default(),
    )?;

    step(
        STEP_CONSTANT,
        constant >= half_gap,
        format!("c = {constant} < {half_gap}"),
    )?;

    let xs: Vec<&ExactVector> = data.extracted_vectors();
    for (i, a) in samples.iter().enumerate() {
        let mass: Rational = a.iter().map(Rational::abs).sum();
        if a.len() != xs.len() || mass != Rational::one() {
            return Err(Error::Domain(format!(
                "sample {i} has {} coefficients with Σ|a_j| = {mass}; need {} with Σ|a_j| = 1",
                a.len(),
                xs.len()
            )));
        }
    }
    let norms = combination_norms(&xs, samples);
    let sampled_min = norms.iter().min().cloned();
    let below = norms.iter().position(|v| *v < constant);
    step(
        STEP_SAMPLES,
        below.is_none(),
        below
            .map(|i| format!("sample {i} has ‖Σ a_j x_j‖₁ = {} < {constant}", norms[i]))
            .unwrap_or_default(),
    )?;

    Ok(L1EquivalenceCertificate {
        n_value: data.n_value.clone(),
        epsilon: eps.clone(),
        constant,
        half_gap,
        chain,
        decomposition,
        sample_count: samples.len(),
        sampled_min,
    })
}

/// `‖Σ a_j x_j‖₁` for each sample, exactly.
///
/// Everything is scaled to a common denominator first; if the scaled
/// integers fit in `i128` the sums run there, otherwise in rationals.
pub fn combination_norms(xs: &[&ExactVector], samples: &[Vec<Rational>]) -> Vec<Rational> {
    let dim = xs.first().map_or(0, |x| x.dim());
    let d = Rational::lcm_denoms(xs.iter().flat_map(|x| x.coords()));
    let scaled: Option<Vec<Vec<i128>>> = xs
        .iter()
        .map(|x| {
            x.coords()
                .iter()
                .map(|c| (c.numer() * (&d / c.denom())).to_i128())
                .collect()
        })
        .collect();
    samples
        .par_iter()
        .map(|a| {
            scaled
                .as_ref()
                .and_then(|m| integer_norm(m, a, &d, dim))
                .unwrap_or_else(|| rational_norm(xs, a))
        })
        .collect()
}

fn integer_norm(m: &[Vec<i128>], a: &[Rational], d: &BigInt, dim: usize) -> Option<Rational> {
    let w = Rational::lcm_denoms(a);
    let coeffs: Vec<i128> = a
        .iter()
        .map(|c| (c.numer() * (&w / c.denom())).to_i128())
        .collect::<Option<_>>()?;
    let mut total: i128 = 0;
    for c in 0..dim {
        let mut s: i128 = 0;
        for (row, &k) in m.iter().zip(&coeffs) {
            s = s.checked_add(row[c].checked_mul(k)?)?;
        }
        total = total.checked_add(s.checked_abs()?)?;
    }
    Rational::from_bigints(BigInt::from(total), (w * d).abs()).ok()
}

fn rational_norm(xs: &[&ExactVector], a: &[Rational]) -> Rational {
    let mut acc = ExactVector::zeros(xs[0].dim(), xs[0].norm_tag());
    for (x, c) in xs.iter().zip(a) {
        acc = acc.axpy(c, x);
    }
    acc.l1()
}

/// The `2m` cross-polytope vertices `±e_j`, then seeded random points
/// `w/Σ|w|` with integer weights in `[-1000, 1000]`, `count` in total.
pub fn coefficient_samples(m: usize, count: usize, seed: u64) -> Vec<Vec<Rational>> {
    let mut out = Vec::with_capacity(count);
    'vertices: for j in 0..m {
        for s in [1, -1] {
            if out.len() == count {
                break 'vertices;
            }
            let mut v = vec![Rational::zero(); m];
            v[j] = Rational::integer(s);
            out.push(v);
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    while out.len() < count && m > 0 {
        let w: Vec<i64> = (0..m).map(|_| rng.gen_range(-1000..=1000)).collect();
        let total: i64 = w.iter().map(|x| x.abs()).sum();
        if total == 0 {
            continue;
        }
        out.push(w.iter().map(|&x| q(x, total)).collect());
    }
    out
}
