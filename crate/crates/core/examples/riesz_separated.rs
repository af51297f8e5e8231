//! Riesz steps with exact dual witnesses, giving (1−ε)-separated bases.

use oclab::certify::greedy_separated_subset;
use oclab::constructors::separated_overcomplete_fd;
use oclab::linalg::{q, NormTag, Rational};

fn main() -> oclab::Result<()> {
    let eps = q(1, 5);
    for tag in [NormTag::L1, NormTag::L2, NormTag::Linf] {
        let fam = separated_overcomplete_fd(4, &eps, tag, 11)?;
        println!("{tag}:");
        for (k, step) in fam.steps.iter().enumerate() {
            println!(
                "  x_{k} = {:?}  f = {:?}  dist ≥ {:.4}",
                step.x.coords(),
                step.witness.coords(),
                step.certified_distance()
            );
        }
        let delta = (Rational::one() - &eps).into();
        let kept = greedy_separated_subset(&fam.vectors(), &delta, tag)?;
        println!("  pairwise ≥ 1−ε: {}", kept.len() == fam.steps.len());
    }
    Ok(())
}
