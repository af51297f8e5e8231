use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::constructors::BiorthSystem;
use crate::error::{Error, Result};
use crate::linalg::{ExactVector, Rational};

/// A set mapping `f: [n] → finite subsets of [n]` with a free set `H`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FreeSetInstance {
    pub n: usize,
    pub f: Vec<BTreeSet<usize>>,
    pub h: Vec<usize>,
}

impl FreeSetInstance {
    /// `(f(α) \ {α}) ∩ H = ∅` for every `α ∈ H`.
    pub fn is_free(&self) -> bool {
        is_free_set(&self.f, &self.h)
    }
}

pub fn is_free_set(f: &[BTreeSet<usize>], h: &[usize]) -> bool {
    h.iter()
        .all(|&a| f[a].iter().all(|&b| b == a || !h.contains(&b)))
}

/// Greedy extraction over ascending indices.
pub fn free_set_extract(n: usize, f: &[BTreeSet<usize>]) -> Result<FreeSetInstance> {
    if f.len() != n {
        return Err(Error::Domain(format!("set mapping has {} entries for n = {n}", f.len())));
    }
    if let Some((a, b)) = f
        .iter()
        .enumerate()
        .find_map(|(a, s)| s.iter().find(|&&b| b >= n).map(|&b| (a, b)))
    {
        return Err(Error::Domain(format!("f({a}) contains {b}, outside [0, {n})")));
    }
    let mut h: Vec<usize> = Vec::new();
    for a in 0..n {
        let avoids_h = f[a].iter().all(|&b| b == a || !h.contains(&b));
        let avoided = h.iter().all(|&b| !f[b].contains(&a));
        if avoids_h && avoided {
            h.push(a);
        }
    }
    Ok(FreeSetInstance {
        n,
        f: f.to_vec(),
        h,
    })
}

/// Named set mappings used by the harness.
pub fn named_mapping(name: &str, n: usize) -> Result<Vec<BTreeSet<usize>>> {
    let f = match name {
        "identity" => (0..n).map(|i| BTreeSet::from([i])).collect(),
        "chain" => (0..n).map(|i| (i.saturating_sub(1)..=i).collect()).collect(),
        "complete" => (0..n).map(|_| (0..n).collect()).collect(),
        other => {
            return Err(Error::Config(format!(
                "unknown set mapping `{other}`; valid: identity, chain, complete"
            )))
        }
    };
    Ok(f)
}

/// `g(α) = supp(y_α) ∩ [0, n)` for a family indexed by `[n]`.
pub fn support_map(system: &BiorthSystem, family: &[ExactVector]) -> Vec<BTreeSet<usize>> {
    let n = family.len();
    family
        .iter()
        .map(|y| system.support(y).into_iter().filter(|&a| a < n).collect())
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AnnihilatorRecord {
    pub gamma: usize,
    /// `⟨f_γ, y_α⟩` for every `α ∈ H \ {γ}`.
    pub pairings: Vec<(usize, Rational)>,
    /// `H = {γ}`: nothing to check.
    pub vacuous: bool,
}

/// Check `⟨f_γ, y_α⟩ = 0` for all `α ∈ H \ {γ}`.
pub fn support_annihilator_witness(
    system: &BiorthSystem,
    family: &[ExactVector],
    h: &[usize],
    gamma: usize,
) -> Result<AnnihilatorRecord> {
    if !h.contains(&gamma) {
        return Err(Error::Precondition(format!("γ = {gamma} is not in H")));
    }
    if let Some(&a) = h.iter().find(|&&a| a >= family.len()) {
        return Err(Error::Precondition(format!("H contains {a}, outside the family")));
    }
    let pairings: Vec<(usize, Rational)> = h
        .iter()
        .filter(|&&a| a != gamma)
        .map(|&a| (a, system.pair(gamma, &family[a])))
        .collect();
    if let Some((a, p)) = pairings.iter().find(|(_, p)| !p.is_zero()) {
        return Err(Error::cert(
            "support annihilator",
            format!("⟨f_{gamma}, y_{a}⟩ = {p} ≠ 0: H is not free for the support map"),
        ));
    }
    Ok(AnnihilatorRecord {
        gamma,
        vacuous: pairings.is_empty(),
        pairings,
    })
}
