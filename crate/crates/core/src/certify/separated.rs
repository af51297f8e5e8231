use crate::error::{Error, Result};
use crate::linalg::{ExactVector, NormTag, Rational, Scalar};

/// Greedy maximal `δ`-separated subset, scanning points in ascending index.
///
/// Exact thresholds are compared exactly (L2 on squares); a float `δ`
/// compares against float distances.
pub fn greedy_separated_subset(points: &[ExactVector], delta: &Scalar, tag: NormTag) -> Result<Vec<usize>> {
    let far = separation_test(delta, tag)?;
    let mut chosen: Vec<usize> = Vec::new();
    for (i, p) in points.iter().enumerate() {
        if chosen.iter().all(|&j| far(&p.sub(&points[j]))) {
            chosen.push(i);
        }
    }
    Ok(chosen)
}

/// `‖diff‖ ≥ δ` as a predicate.
fn separation_test(delta: &Scalar, tag: NormTag) -> Result<Box<dyn Fn(&ExactVector) -> bool>> {
    let positive = match delta {
        Scalar::Exact(d) => d.is_positive(),
        Scalar::Float(d) => *d > 0.0,
    };
    if !positive {
        return Err(Error::Domain(format!("separation δ = {delta} must be positive")));
    }
    Ok(match (delta.clone(), tag) {
        (Scalar::Exact(d), NormTag::L2) => {
            let d2: Rational = &d * &d;
            Box::new(move |v: &ExactVector| v.l2_squared() >= d2)
        }
        (Scalar::Exact(d), NormTag::L1) => Box::new(move |v: &ExactVector| v.l1() >= d),
        (Scalar::Exact(d), NormTag::Linf) => Box::new(move |v: &ExactVector| v.linf() >= d),
        (Scalar::Float(d), t) => Box::new(move |v: &ExactVector| v.to_float().norm(t) >= d),
    })
}
