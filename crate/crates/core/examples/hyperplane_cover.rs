//! Hyperplane covers: pigeonhole on a covered set, an escape point when
//! the set is in general position.

use oclab::certify::{hyperplane_cover, pigeonhole_majority, HyperplaneFunctional};
use oclab::constructors::klee_vectors;
use oclab::linalg::{cofactor_normal, q, ExactVector, NormTag};

fn main() -> oclab::Result<()> {
    let points: Vec<ExactVector> = (0..27)
        .map(|i| [i % 3, (i / 3) % 3, i / 9])
        .filter(|c| c.contains(&0) && c != &[0, 0, 0])
        .map(|c| ExactVector::from_ints(&c, NormTag::L1))
        .collect();
    let hs: Vec<_> = (0..3).map(|i| HyperplaneFunctional::coordinate(3, i)).collect();
    println!("grid: {:?}", hyperplane_cover(&points, &hs)?);
    let m = pigeonhole_majority(&points, &hs)?;
    println!("ker e*_{} holds {:?} (need {})", m.hyperplane, m.members, m.required);

    let lambdas: Vec<_> = (1..=5).map(|i| q(i, 11)).collect();
    let fam = klee_vectors(&lambdas, 3)?;
    let h = HyperplaneFunctional::new(cofactor_normal(&fam.vectors()[..2], 3))?;
    println!("geometric vectors: {:?}", hyperplane_cover(fam.vectors(), &[h])?);
    Ok(())
}
