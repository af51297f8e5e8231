use serde::Serialize;

use super::HyperplaneFunctional;
use crate::error::{Error, Result};
use crate::linalg::{ExactVector, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome")]
pub enum CoverOutcome {
    /// `assignment[i]` is the first hyperplane containing point `i`.
    Covered { assignment: Vec<usize> },
    /// A point with a nonzero pairing against every hyperplane.
    Escape { point: usize, pairings: Vec<Rational> },
}

impl CoverOutcome {
    pub fn is_covered(&self) -> bool {
        matches!(self, CoverOutcome::Covered { .. })
    }
}

pub fn hyperplane_cover(points: &[ExactVector], hyperplanes: &[HyperplaneFunctional]) -> Result<CoverOutcome> {
    if hyperplanes.is_empty() {
        return Err(Error::Precondition("hyperplane cover needs a nonempty family".into()));
    }
    let mut assignment = Vec::with_capacity(points.len());
    for (i, x) in points.iter().enumerate() {
        let pairings: Vec<Rational> = hyperplanes.iter().map(|h| h.pair(x)).collect();
        match pairings.iter().position(Rational::is_zero) {
            Some(h) => assignment.push(h),
            None => return Ok(CoverOutcome::Escape { point: i, pairings }),
        }
    }
    Ok(CoverOutcome::Covered { assignment })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Majority {
    pub hyperplane: usize,
    /// Every point of `S` lying in the hyperplane, ascending.
    pub members: Vec<usize>,
    /// `⌈|S|/|H|⌉`.
    pub required: usize,
}

/// The hyperplane containing the most points (lowest index on ties).
pub fn pigeonhole_majority(points: &[ExactVector], hyperplanes: &[HyperplaneFunctional]) -> Result<Majority> {
    if let CoverOutcome::Escape { point, .. } = hyperplane_cover(points, hyperplanes)? {
        return Err(Error::Precondition(format!(
            "pigeonhole needs a cover, but point {point} escapes every hyperplane"
        )));
    }
    let required = points.len().div_ceil(hyperplanes.len());
    let mut best = Majority {
        hyperplane: 0,
        members: Vec::new(),
        required,
    };
    for (h, hyper) in hyperplanes.iter().enumerate() {
        let members: Vec<usize> = (0..points.len()).filter(|&i| hyper.contains(&points[i])).collect();
        if h == 0 || members.len() > best.members.len() {
            best.hyperplane = h;
            best.members = members;
        }
    }
    debug_assert!(best.members.len() >= required);
    Ok(best)
}
