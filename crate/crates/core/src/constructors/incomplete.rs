//! Sequences converging to a point outside a non-complete span.
//!
//! The ambient space is the finitely supported sequences inside ℓ₁ (or ℓ₂,
//! ℓ∞), with `x_n = e_n`. The missing limit is a geometric sequence
//! `y(n) = a·rⁿ` with `a > 0`, `0 < r < 1`, whose tails have closed forms,
//! so every distance to `y` is evaluated exactly: the finite part
//! coordinate by coordinate, the rest symbolically.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{q, sqrt_le_sqrt_plus, ExactVector, NormTag, Rational};

/// An exact distance to the target; under L2 the squared value is stored.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Distance {
    pub norm_tag: NormTag,
    /// `‖·‖` for L1/Linf, `‖·‖²` for L2.
    pub value: Rational,
}

impl Distance {
    pub fn is_squared(&self) -> bool {
        self.norm_tag == NormTag::L2
    }

    pub fn to_f64(&self) -> f64 {
        let v = self.value.to_f64();
        if self.is_squared() {
            v.sqrt()
        } else {
            v
        }
    }

    /// `self < bound` exactly (`bound ≥ 0`).
    pub fn lt(&self, bound: &Rational) -> bool {
        if self.is_squared() {
            self.value < bound * bound
        } else {
            self.value < *bound
        }
    }

    /// `self ≤ other + slack` exactly.
    pub fn le_sum(&self, other: &Distance, slack: &Rational) -> bool {
        assert_eq!(self.norm_tag, other.norm_tag, "distances in different norms");
        if self.is_squared() {
            sqrt_le_sqrt_plus(&self.value, &other.value, slack)
        } else {
            self.value <= &other.value + slack
        }
    }

    /// `factor · self`, for a nonnegative factor.
    pub fn scaled(&self, factor: &Rational) -> Distance {
        let value = if self.is_squared() {
            &self.value * &(factor * factor)
        } else {
            &self.value * factor
        };
        Distance {
            norm_tag: self.norm_tag,
            value,
        }
    }
}

/// `y(n) = scale · ratioⁿ`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GeometricRule {
    pub scale: Rational,
    pub ratio: Rational,
}

impl GeometricRule {
    pub fn new(scale: Rational, ratio: Rational) -> Result<Self> {
        if !scale.is_positive() {
            return Err(Error::Domain(format!("model: scale {scale} must be positive")));
        }
        if !ratio.is_positive() || ratio >= Rational::one() {
            return Err(Error::Domain(format!("model: ratio {ratio} must lie in (0, 1)")));
        }
        Ok(GeometricRule { scale, ratio })
    }

    /// `y(n) = 2^{−n−1}`.
    pub fn dyadic() -> Self {
        GeometricRule {
            scale: q(1, 2),
            ratio: q(1, 2),
        }
    }

    pub fn coord(&self, n: usize) -> Rational {
        &self.scale * &self.ratio.pow(n as i32)
    }

    /// Closed form of `‖y↾[from, ∞)‖` (squared under L2).
    pub fn tail(&self, from: usize, tag: NormTag) -> Distance {
        let lead = self.coord(from);
        let one = Rational::one();
        let value = match tag {
            NormTag::L1 => &lead / &(&one - &self.ratio),
            NormTag::L2 => &(&lead * &lead) / &(&one - &(&self.ratio * &self.ratio)),
            NormTag::Linf => lead,
        };
        Distance { norm_tag: tag, value }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct IncompleteModel {
    rule: GeometricRule,
    norm_tag: NormTag,
    /// `T(k)`: `y_k = y↾[0, T(k))`, for `k = 0..=horizon`.
    cutoffs: Vec<usize>,
}

impl IncompleteModel {
    /// Smallest cutoffs with `‖y_k − y‖ < 1/k!` for `k ≤ horizon`.
    pub fn new(rule: GeometricRule, norm_tag: NormTag, horizon: usize) -> Self {
        let mut cutoffs = Vec::with_capacity(horizon + 1);
        let mut t = 0;
        for k in 0..=horizon {
            let bound = Rational::factorial(k as u32).recip().expect("k! > 0");
            while !rule.tail(t, norm_tag).lt(&bound) {
                t += 1;
            }
            cutoffs.push(t);
        }
        IncompleteModel {
            rule,
            norm_tag,
            cutoffs,
        }
    }

    /// A caller-chosen truncation schedule, validated against `1/k!`.
    pub fn with_cutoffs(rule: GeometricRule, norm_tag: NormTag, cutoffs: Vec<usize>) -> Result<Self> {
        let model = IncompleteModel {
            rule,
            norm_tag,
            cutoffs,
        };
        for k in 0..model.cutoffs.len() {
            let err = model.approximation_error(k);
            let bound = Rational::factorial(k as u32).recip().expect("k! > 0");
            if !err.lt(&bound) {
                return Err(Error::Domain(format!(
                    "model: cutoff T({k}) = {} leaves ‖y_{k} − y‖ = {} (squared: {}), not below 1/{k}!",
                    model.cutoffs[k],
                    err.value,
                    err.is_squared()
                )));
            }
        }
        Ok(model)
    }

    pub fn rule(&self) -> &GeometricRule {
        &self.rule
    }

    pub fn norm_tag(&self) -> NormTag {
        self.norm_tag
    }

    pub fn horizon(&self) -> usize {
        self.cutoffs.len().saturating_sub(1)
    }

    pub fn cutoff(&self, k: usize) -> usize {
        self.cutoffs[k]
    }

    pub fn cutoffs(&self) -> &[usize] {
        &self.cutoffs
    }

    /// Enough coordinates to hold `y_k` and `x_0..x_k` for every `k ≤ max_k`.
    pub fn ambient_dim(&self, max_k: usize) -> usize {
        self.cutoffs[..=max_k].iter().copied().max().unwrap_or(0).max(max_k + 1)
    }

    /// `y_k` padded to `dim` coordinates.
    pub fn approximant(&self, k: usize, dim: usize) -> ExactVector {
        let t = self.cutoffs[k];
        assert!(dim >= t, "dimension {dim} cannot hold y_{k} (cutoff {t})");
        let coords = (0..dim)
            .map(|n| if n < t { self.rule.coord(n) } else { Rational::zero() })
            .collect();
        ExactVector::new(coords, self.norm_tag)
    }

    /// `y↾[0, dim)`.
    pub fn target_truncation(&self, dim: usize) -> ExactVector {
        ExactVector::new((0..dim).map(|n| self.rule.coord(n)).collect(), self.norm_tag)
    }

    /// `‖y_k − y‖` exactly.
    pub fn approximation_error(&self, k: usize) -> Distance {
        self.rule.tail(self.cutoffs[k], self.norm_tag)
    }

    /// `‖y − v‖` exactly, `v` finitely supported on `[0, v.dim())`.
    pub fn distance_to_target(&self, v: &ExactVector) -> Distance {
        let head = self.target_truncation(v.dim()).sub(v);
        let tail = self.rule.tail(v.dim(), self.norm_tag).value;
        let value = match self.norm_tag {
            NormTag::L1 => head.l1() + tail,
            NormTag::L2 => head.l2_squared() + tail,
            NormTag::Linf => head.linf().max(tail),
        };
        Distance {
            norm_tag: self.norm_tag,
            value,
        }
    }
}

/// `‖y − g_k‖ ≤ ‖y_k − y‖ + (k+1)/2^k`, evaluated exactly.
#[derive(Clone, Debug, Serialize)]
pub struct ConvergenceBound {
    pub k: usize,
    pub distance: Distance,
    pub approximation_error: Distance,
    pub slack: Rational,
    pub holds: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct IncompleteSequence {
    pub dim: usize,
    pub vectors: Vec<ExactVector>,
    pub bounds: Vec<ConvergenceBound>,
}

impl IncompleteSequence {
    pub fn all_bounds_hold(&self) -> bool {
        self.bounds.iter().all(|b| b.holds)
    }
}

/// `g_k = y_k + Σ_{n=0}^{k} (n+2)^{−k} x_n` for `k = 0..=max_k`.
pub fn incomplete_space_sequence(model: &IncompleteModel, max_k: usize) -> Result<IncompleteSequence> {
    if max_k > model.horizon() {
        return Err(Error::Precondition(format!(
            "model truncation schedule stops at k = {}, requested K = {max_k}",
            model.horizon()
        )));
    }
    let dim = model.ambient_dim(max_k);
    let mut vectors = Vec::with_capacity(max_k + 1);
    let mut bounds = Vec::with_capacity(max_k + 1);
    for k in 0..=max_k {
        let mut g = model.approximant(k, dim);
        for n in 0..=k {
            let c = g.get(n) + &q(1, (n as i64) + 2).pow(k as i32);
            g.set(n, c);
        }
        let distance = model.distance_to_target(&g);
        let approximation_error = model.approximation_error(k);
        let slack = &q((k as i64) + 1, 1) * &q(1, 2).pow(k as i32);
        let holds = distance.le_sum(&approximation_error, &slack);
        bounds.push(ConvergenceBound {
            k,
            distance,
            approximation_error,
            slack,
            holds,
        });
        vectors.push(g);
    }
    Ok(IncompleteSequence { dim, vectors, bounds })
}

/// Decreasing nodes `λ_n ↓ 0` and the rate condition
/// `λ_n^{−j} ‖y_n − y‖ → 0` checked on a finite prefix.
#[derive(Clone, Debug, Serialize)]
pub struct GeometricSchedule {
    lambdas: Vec<Rational>,
    /// Rate condition is checked for `j = 0..=j_max`.
    pub j_max: u32,
    /// The last prefix value must drop strictly below this.
    pub threshold: Rational,
}

impl GeometricSchedule {
    pub fn new(lambdas: Vec<Rational>, j_max: u32, threshold: Rational) -> Result<Self> {
        for (i, l) in lambdas.iter().enumerate() {
            if !l.is_positive() || *l >= Rational::one() {
                return Err(Error::Domain(format!("schedule: λ_{i} = {l} must lie in (0, 1)")));
            }
            if i > 0 && *l >= lambdas[i - 1] {
                return Err(Error::Domain(format!("schedule: λ_{i} = {l} is not below λ_{}", i - 1)));
            }
        }
        if !threshold.is_positive() {
            return Err(Error::Domain("schedule: threshold must be positive".into()));
        }
        Ok(GeometricSchedule {
            lambdas,
            j_max,
            threshold,
        })
    }

    /// `λ_n = 1/(n+2)`.
    pub fn harmonic(len: usize, j_max: u32, threshold: Rational) -> Result<Self> {
        GeometricSchedule::new((0..len as i64).map(|n| q(1, n + 2)).collect(), j_max, threshold)
    }

    /// `λ_n = 2^{−n−1}`.
    pub fn dyadic(len: usize, j_max: u32, threshold: Rational) -> Result<Self> {
        GeometricSchedule::new(
            (0..len).map(|n| q(1, 2).pow(n as i32 + 1)).collect(),
            j_max,
            threshold,
        )
    }

    pub fn lambdas(&self) -> &[Rational] {
        &self.lambdas
    }

    /// Check the rate condition on `n = 0..=max_n`.
    pub fn rate_check(&self, model: &IncompleteModel, max_n: usize) -> Result<Vec<RateCheck>> {
        if max_n >= self.lambdas.len() || max_n > model.horizon() {
            return Err(Error::Precondition(format!(
                "schedule has {} nodes and the model horizon is {}; cannot check up to n = {max_n}",
                self.lambdas.len(),
                model.horizon()
            )));
        }
        (0..=self.j_max)
            .map(|j| {
                let values: Vec<Distance> = (0..=max_n)
                    .map(|n| {
                        let factor = self.lambdas[n].pow(-(j as i32));
                        model.approximation_error(n).scaled(&factor)
                    })
                    .collect();
                let mut onset = max_n;
                while onset > 0 && values[onset - 1].value >= values[onset].value {
                    onset -= 1;
                }
                let last = &values[max_n];
                if !last.lt(&self.threshold) {
                    return Err(Error::Precondition(format!(
                        "schedule rate condition fails at (n = {max_n}, j = {j}): λ_n^-j·‖y_n − y‖ ≈ {:.3e} is not below {}",
                        last.to_f64(),
                        self.threshold
                    )));
                }
                Ok(RateCheck {
                    j,
                    onset,
                    last: last.clone(),
                })
            })
            .collect()
    }
}

/// Outcome of the rate condition for one `j`: the prefix values are
/// nonincreasing from `onset` on and `last` is below the threshold.
#[derive(Clone, Debug, Serialize)]
pub struct RateCheck {
    pub j: u32,
    pub onset: usize,
    pub last: Distance,
}

#[derive(Clone, Debug, Serialize)]
pub struct GeometricVariant {
    pub dim: usize,
    pub vectors: Vec<ExactVector>,
    pub rate_checks: Vec<RateCheck>,
    /// `‖y − g_k‖`.
    pub distances: Vec<Distance>,
}

/// `g_k = y_k + Σ_{j=0}^{k} λ_k^{j+1} x_j` for `k = 0..=max_k`.
pub fn geometric_variant_sequence(
    model: &IncompleteModel,
    schedule: &GeometricSchedule,
    max_k: usize,
) -> Result<GeometricVariant> {
    let rate_checks = schedule.rate_check(model, max_k)?;
    let dim = model.ambient_dim(max_k);
    let mut vectors = Vec::with_capacity(max_k + 1);
    let mut distances = Vec::with_capacity(max_k + 1);
    for k in 0..=max_k {
        let lambda = &schedule.lambdas[k];
        let mut g = model.approximant(k, dim);
        let mut power = lambda.clone();
        for j in 0..=k {
            g.set(j, g.get(j) + &power);
            power = &power * lambda;
        }
        distances.push(model.distance_to_target(&g));
        vectors.push(g);
    }
    Ok(GeometricVariant {
        dim,
        vectors,
        rate_checks,
        distances,
    })
}
