//! Greedy δ-separated subsets of random points in the unit ball.

use oclab::certify::greedy_separated_subset;
use oclab::linalg::{q, ExactVector, NormTag, Rational};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn main() -> oclab::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut points = Vec::new();
    while points.len() < 200 {
        let coords: Vec<Rational> = (0..3).map(|_| q(rng.gen_range(-64..=64), 64)).collect();
        let v = ExactVector::new(coords, NormTag::L2);
        if v.l2_squared() <= Rational::one() {
            points.push(v);
        }
    }
    for delta in [q(1, 4), q(1, 2), q(1, 1)] {
        let kept = greedy_separated_subset(&points, &delta.clone().into(), NormTag::L2)?;
        println!("δ = {delta}: kept {} of {}", kept.len(), points.len());
    }
    Ok(())
}
