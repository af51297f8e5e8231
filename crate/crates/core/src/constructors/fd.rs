//! Finite-dimensional overcomplete sequences: every `d` terms are linearly
//! independent. Built inductively by sampling candidates and rejecting any
//! that falls on a hyperplane spanned by `d − 1` earlier terms; with target
//! balls the `j`-th term is drawn from the `j`-th ball.

use itertools::Itertools;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{cofactor_normal, q, rank_exact, ExactMatrix, ExactVector, NormTag, Rational};

/// Open ball `{x : ‖x − center‖ < radius}` under `norm_tag`.
#[derive(Clone, Debug, Serialize)]
pub struct OpenBall {
    pub center: ExactVector,
    pub radius: Rational,
    pub norm_tag: NormTag,
}

impl OpenBall {
    pub fn new(center: ExactVector, radius: Rational, norm_tag: NormTag) -> Result<Self> {
        if !radius.is_positive() {
            return Err(Error::Domain(format!("ball radius {radius} must be positive")));
        }
        Ok(OpenBall {
            center,
            radius,
            norm_tag,
        })
    }

    /// Exact strict membership.
    pub fn contains(&self, x: &ExactVector) -> bool {
        let diff = x.sub(&self.center);
        match self.norm_tag {
            NormTag::L2 => diff.l2_squared() < &self.radius * &self.radius,
            NormTag::L1 => diff.l1() < self.radius,
            NormTag::Linf => diff.linf() < self.radius,
        }
    }

    pub fn dim(&self) -> usize {
        self.center.dim()
    }
}

/// Tunables for the candidate sampler.
#[derive(Clone, Debug)]
pub struct SamplerConfig {
    /// Initial dyadic grid resolution, in bits.
    pub initial_bits: u32,
    /// Bits added after every `refine_every` rejected candidates.
    pub refine_bits: u32,
    pub refine_every: usize,
    /// Candidates tried per term before giving up.
    pub budget: usize,
}

impl Default for SamplerConfig {
    fn default() -> Self {
        SamplerConfig {
            initial_bits: 6,
            refine_bits: 2,
            refine_every: 64,
            budget: 4096,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct FdOvercomplete {
    pub dim: usize,
    pub vectors: Vec<ExactVector>,
    /// Candidates drawn for each term (1 = first candidate accepted).
    pub attempts: Vec<usize>,
    /// Hyperplanes avoided when each term was chosen.
    pub hyperplanes_avoided: Vec<usize>,
}

/// The `n`-term construction in `ℝᵈ` with the default sampler.
pub fn fd_overcomplete(
    dim: usize,
    n: usize,
    targets: Option<&[OpenBall]>,
    seed: u64,
) -> Result<FdOvercomplete> {
    fd_overcomplete_with(dim, n, targets, seed, &SamplerConfig::default())
}

pub fn fd_overcomplete_with(
    dim: usize,
    n: usize,
    targets: Option<&[OpenBall]>,
    seed: u64,
    sampler: &SamplerConfig,
) -> Result<FdOvercomplete> {
    if dim == 0 {
        return Err(Error::Domain("dimension must be positive".into()));
    }
    if n < dim {
        return Err(Error::Domain(format!("need n ≥ d, got n = {n}, d = {dim}")));
    }
    if let Some(t) = targets {
        if t.len() != n {
            return Err(Error::Domain(format!("{} target balls for {n} terms", t.len())));
        }
        if let Some(b) = t.iter().find(|b| b.dim() != dim) {
            return Err(Error::Domain(format!("target ball of dimension {} in ℝ^{dim}", b.dim())));
        }
    }
    let unit_ball = OpenBall::new(ExactVector::zeros(dim, NormTag::L2), Rational::one(), NormTag::L2)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    let mut vectors: Vec<ExactVector> = Vec::with_capacity(n);
    // Normals of the hyperplanes spanned by every (d−1)-subset chosen so far.
    let mut normals: Vec<ExactVector> = Vec::new();
    let mut attempts = Vec::with_capacity(n);
    let mut avoided = Vec::with_capacity(n);
    if dim == 1 {
        normals.push(cofactor_normal(&[], 1));
    }

    for step in 0..n {
        let ball = targets.map_or(&unit_ball, |t| &t[step]);
        let mut bits = sampler.initial_bits;
        let mut accepted = None;
        for attempt in 1..=sampler.budget {
            if attempt > 1 && (attempt - 1) % sampler.refine_every == 0 {
                bits = (bits + sampler.refine_bits).min(48);
            }
            let candidate = sample_in_ball(ball, bits, &mut rng);
            if !ball.contains(&candidate) {
                continue;
            }
            let ok = if step + 1 < dim {
                let mut rows: Vec<&ExactVector> = vectors.iter().collect();
                rows.push(&candidate);
                rank_exact(&ExactMatrix::from_vectors(rows)).rank == step + 1
            } else {
                normals.iter().all(|nrm| !nrm.dot(&candidate).is_zero())
            };
            if ok {
                accepted = Some((candidate, attempt));
                break;
            }
        }
        let Some((x, tries)) = accepted else {
            return Err(Error::Construction(format!(
                "term {step}: no candidate in {} tries avoided the {} hyperplanes spanned by earlier terms",
                sampler.budget,
                normals.len()
            )));
        };
        avoided.push(if step + 1 < dim { 0 } else { normals.len() });
        attempts.push(tries);
        vectors.push(x);

        // New (d−1)-subsets are those containing the term just added.
        if dim >= 2 && vectors.len() >= dim - 1 {
            let last = vectors.len() - 1;
            for rest in (0..last).combinations(dim - 2) {
                let mut members: Vec<ExactVector> = rest.iter().map(|&i| vectors[i].clone()).collect();
                members.push(vectors[last].clone());
                let nrm = cofactor_normal(&members, dim);
                debug_assert!(!nrm.is_zero(), "earlier terms are in general position");
                normals.push(nrm);
            }
        }
    }

    Ok(FdOvercomplete {
        dim,
        vectors,
        attempts,
        hyperplanes_avoided: avoided,
    })
}

/// A point of the dyadic grid of step `2^{−bits}·radius` strictly inside the
/// bounding cube of `ball`.
fn sample_in_ball(ball: &OpenBall, bits: u32, rng: &mut impl Rng) -> ExactVector {
    let steps: i64 = 1 << bits;
    let coords = ball
        .center
        .coords()
        .iter()
        .map(|c| {
            let t = rng.gen_range(1..2 * steps);
            c + &(&ball.radius * &q(t - steps, steps))
        })
        .collect();
    ExactVector::new(coords, NormTag::L2)
}

/// First `n` balls from a fixed enumeration of a countable base of `ℝᵈ`:
/// level `ℓ = 0, 1, …` contributes the grid `2^{−ℓ}ℤᵈ ∩ [−1, 1]ᵈ` in
/// lexicographic order, each with radius `2^{−ℓ−1}`.
pub fn enumerate_target_balls(dim: usize, n: usize, tag: NormTag) -> Result<Vec<OpenBall>> {
    let mut out = Vec::with_capacity(n);
    let mut level = 0u32;
    while out.len() < n {
        let steps = 1i64 << level;
        let per_axis: Vec<Rational> = (-steps..=steps).map(|k| q(k, steps)).collect();
        let radius = q(1, 2 * steps);
        for point in (0..dim).map(|_| per_axis.iter()).multi_cartesian_product() {
            if out.len() == n {
                break;
            }
            let center = ExactVector::new(point.into_iter().cloned().collect(), tag);
            out.push(OpenBall::new(center, radius.clone(), tag)?);
        }
        level += 1;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_dimensional_terms_are_nonzero() {
        let out = fd_overcomplete(1, 3, None, 7).unwrap();
        assert_eq!(out.vectors.len(), 3);
        assert!(out.vectors.iter().all(|v| !v.is_zero()));
    }

    #[test]
    fn all_pairs_independent_in_the_plane() {
        let out = fd_overcomplete(2, 4, None, 11).unwrap();
        for pair in out.vectors.iter().combinations(2) {
            assert_eq!(rank_exact(&ExactMatrix::from_vectors(pair)).rank, 2);
        }
    }

    #[test]
    fn targets_are_respected() {
        let balls = vec![
            OpenBall::new(ExactVector::from_ints(&[1, 0], NormTag::L2), q(1, 10), NormTag::L2).unwrap(),
            OpenBall::new(ExactVector::from_ints(&[0, 1], NormTag::L2), q(1, 10), NormTag::L2).unwrap(),
        ];
        let out = fd_overcomplete(2, 2, Some(&balls), 3).unwrap();
        assert!(balls[0].contains(&out.vectors[0]));
        assert!(balls[1].contains(&out.vectors[1]));
        assert_eq!(rank_exact(&ExactMatrix::from_vectors(&out.vectors)).rank, 2);
    }

    #[test]
    fn input_validation() {
        assert!(matches!(fd_overcomplete(3, 2, None, 0), Err(Error::Domain(_))));
        assert!(OpenBall::new(ExactVector::zeros(2, NormTag::L2), q(0, 1), NormTag::L2).is_err());
    }

    #[test]
    fn exhausted_budget_is_a_construction_error() {
        // A tiny ball around the origin on a one-bit grid in d = 1 can only
        // yield the centre, which is the forbidden zero vector.
        let balls = vec![OpenBall::new(ExactVector::zeros(1, NormTag::Linf), q(1, 1), NormTag::Linf).unwrap()];
        let sampler = SamplerConfig {
            initial_bits: 0,
            refine_bits: 0,
            refine_every: 1,
            budget: 16,
        };
        let err = fd_overcomplete_with(1, 1, Some(&balls), 1, &sampler).unwrap_err();
        assert!(matches!(err, Error::Construction(_)));
    }

    #[test]
    fn ball_enumeration_levels() {
        let balls = enumerate_target_balls(2, 12, NormTag::L2).unwrap();
        assert_eq!(balls.len(), 12);
        assert_eq!(balls[0].radius, q(1, 2));
        assert_eq!(balls[9].radius, q(1, 4));
        assert_eq!(balls[0].center.coords(), &[q(-1, 1), q(-1, 1)]);
    }
}
