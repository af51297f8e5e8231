//! Riesz-lemma steps with dual certificates.
//!
//! For a proper subspace `Y ⊂ ℝᵈ` the step returns a unit vector `x` and a
//! functional `f` with `f ⟂ Y`, `‖f‖_* ≤ 1` and `⟨f, x⟩ ≥ 1 − ε`. Since
//! `⟨f, x − y⟩ = ⟨f, x⟩` for every `y ∈ Y`, this certifies
//! `dist(x, Y) ≥ 1 − ε` without minimising anything.
//!
//! L2 outputs are kept unnormalised (exact direction plus exact squared
//! norm); the certificate is checked on squares.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{nullspace_exact, q, rank_exact, ExactMatrix, ExactVector, FloatVector, NormTag, Rational};

#[derive(Clone, Debug, Serialize)]
pub struct RieszStep {
    pub norm_tag: NormTag,
    /// Exact direction. Unit norm for L1/Linf; for L2 divide by `√x_norm_squared`.
    pub x: ExactVector,
    /// Exact witness functional, same scaling convention as `x`.
    pub witness: ExactVector,
    pub x_norm_squared: Rational,
    pub witness_dual_norm_squared: Rational,
    /// `⟨f, x⟩` for the exact (possibly unnormalised) pair.
    pub pairing: Rational,
}

impl RieszStep {
    /// `x` normalised in float mode (only differs from `x` under L2).
    pub fn x_unit(&self) -> FloatVector {
        let v = self.x.to_float();
        match self.norm_tag {
            NormTag::L2 => {
                let n = v.l2();
                v.scale(&(1.0 / n))
            }
            _ => v,
        }
    }

    /// Lower bound on `dist(x / ‖x‖, span Y)` carried by the witness.
    pub fn certified_distance(&self) -> f64 {
        match self.norm_tag {
            NormTag::L2 => {
                self.pairing.to_f64()
                    / (self.x_norm_squared.to_f64().sqrt() * self.witness_dual_norm_squared.to_f64().sqrt())
            }
            tag => {
                let dual = self.witness.norm(tag.dual()).ok().and_then(|s| s.as_exact().cloned());
                match dual {
                    Some(d) if d.is_positive() => (&self.pairing / &d).to_f64(),
                    _ => 0.0,
                }
            }
        }
    }

    /// Re-check every claim exactly against `y_basis` and `eps`.
    pub fn verify(&self, y_basis: &[ExactVector], eps: &Rational) -> Result<()> {
        for (i, y) in y_basis.iter().enumerate() {
            let p = self.witness.dot(y);
            if !p.is_zero() {
                return Err(Error::cert("f ⟂ Y", format!("⟨f, y_{i}⟩ = {p}")));
            }
        }
        let target = Rational::one() - eps;
        match self.norm_tag {
            NormTag::L2 => {
                if &self.x.l2_squared() != &self.x_norm_squared
                    || &self.witness.l2_squared() != &self.witness_dual_norm_squared
                {
                    return Err(Error::cert("recorded norms", "stored squared norms do not match"));
                }
                // ⟨f,x⟩ / (‖f‖‖x‖) ≥ 1 − ε, on squares with a sign check.
                let lhs = &self.pairing * &self.pairing;
                let rhs = &(&target * &target) * &(&self.x_norm_squared * &self.witness_dual_norm_squared);
                if !self.pairing.is_positive() || lhs < rhs {
                    return Err(Error::cert("⟨f, x⟩ ≥ 1 − ε", "normalised pairing below 1 − ε"));
                }
            }
            tag => {
                if self.x.norm(tag)?.as_exact() != Some(&Rational::one()) {
                    return Err(Error::cert("‖x‖ = 1", format!("‖x‖ = {}", self.x.norm(tag)?)));
                }
                let dual = self.witness.norm(tag.dual())?;
                if dual.as_exact().map_or(true, |d| *d > Rational::one()) {
                    return Err(Error::cert("‖f‖* ≤ 1", format!("‖f‖* = {dual}")));
                }
                if self.pairing < target || self.pairing != self.witness.dot(&self.x) {
                    return Err(Error::cert("⟨f, x⟩ ≥ 1 − ε", format!("⟨f, x⟩ = {}", self.pairing)));
                }
            }
        }
        Ok(())
    }
}

/// One Riesz step against `span(y_basis)` in `ℝ^dim`.
pub fn riesz_step(
    y_basis: &[ExactVector],
    dim: usize,
    eps: &Rational,
    tag: NormTag,
    rng: &mut impl Rng,
) -> Result<RieszStep> {
    if !eps.is_positive() || *eps >= Rational::one() {
        return Err(Error::Domain(format!("ε = {eps} must lie in (0, 1)")));
    }
    if let Some(y) = y_basis.iter().find(|y| y.dim() != dim) {
        return Err(Error::Domain(format!("basis vector of dimension {} in ℝ^{dim}", y.dim())));
    }
    let m = if y_basis.is_empty() {
        ExactMatrix::empty(dim)
    } else {
        ExactMatrix::from_vectors(y_basis)
    };
    if rank_exact(&m).rank >= dim {
        return Err(Error::Precondition("Y spans the whole space; no Riesz step exists".into()));
    }
    let kernel = nullspace_exact(&m);

    // A seeded nonzero combination of annihilators; sign fixed so the first
    // nonzero coordinate is positive.
    let mut g = loop {
        let mut acc = ExactVector::zeros(dim, tag);
        for k in &kernel {
            let c = q(rng.gen_range(-4..=4), rng.gen_range(1..=4));
            acc = acc.axpy(&c, &k.clone().with_tag(tag));
        }
        if !acc.is_zero() {
            break acc;
        }
    };
    if g.coords().iter().find(|c| !c.is_zero()).is_some_and(Rational::is_negative) {
        g = g.scale(&-Rational::one());
    }

    let step = match tag {
        NormTag::L2 => {
            // f = x = g: orthogonal to Y, pairing ‖g‖², normalised pairing 1.
            let sq = g.l2_squared();
            RieszStep {
                norm_tag: tag,
                x: g.clone(),
                witness: g,
                x_norm_squared: sq.clone(),
                witness_dual_norm_squared: sq.clone(),
                pairing: sq,
            }
        }
        NormTag::L1 => {
            // f = g/‖g‖∞, x = ±e_i at a coordinate where |f_i| = 1.
            let f = g.scale(&g.linf().recip()?);
            let i = f
                .coords()
                .iter()
                .position(|c| c.abs() == Rational::one())
                .expect("some coordinate attains the sup norm");
            let mut x = ExactVector::zeros(dim, tag);
            x.set(i, if f.get(i).is_negative() { -Rational::one() } else { Rational::one() });
            finish_polyhedral(tag, x, f)
        }
        NormTag::Linf => {
            // f = g/‖g‖₁, x = sign(f) (with +1 where f vanishes).
            let f = g.scale(&g.l1().recip()?);
            let coords = f
                .coords()
                .iter()
                .map(|c| if c.is_negative() { -Rational::one() } else { Rational::one() })
                .collect();
            finish_polyhedral(tag, ExactVector::new(coords, tag), f)
        }
    };
    step.verify(y_basis, eps)?;
    Ok(step)
}

fn finish_polyhedral(tag: NormTag, x: ExactVector, f: ExactVector) -> RieszStep {
    let pairing = f.dot(&x);
    RieszStep {
        norm_tag: tag,
        x_norm_squared: x.norm_squared(tag),
        witness_dual_norm_squared: f.norm_squared(tag.dual()),
        x,
        witness: f,
        pairing,
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SeparatedFamily {
    pub norm_tag: NormTag,
    pub epsilon: Rational,
    pub steps: Vec<RieszStep>,
}

impl SeparatedFamily {
    pub fn vectors(&self) -> Vec<ExactVector> {
        self.steps.iter().map(|s| s.x.clone()).collect()
    }
}

/// Iterate Riesz steps against the span of the prefix until it fills `ℝᵈ`.
pub fn separated_overcomplete_fd(dim: usize, eps: &Rational, tag: NormTag, seed: u64) -> Result<SeparatedFamily> {
    if dim == 0 {
        return Err(Error::Domain("dimension must be positive".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut steps: Vec<RieszStep> = Vec::with_capacity(dim);
    for _ in 0..dim {
        let prefix: Vec<ExactVector> = steps.iter().map(|s| s.x.clone()).collect();
        steps.push(riesz_step(&prefix, dim, eps, tag, &mut rng)?);
    }
    Ok(SeparatedFamily {
        norm_tag: tag,
        epsilon: eps.clone(),
        steps,
    })
}
