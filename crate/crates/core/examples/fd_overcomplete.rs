//! An overcomplete sequence in ℝ³ that visits a prescribed list of balls.

use oclab::certify::{all_subsets, certify_subsets};
use oclab::constructors::{enumerate_target_balls, fd_overcomplete};
use oclab::linalg::NormTag;

fn main() -> oclab::Result<()> {
    let (d, n) = (3, 12);
    let balls = enumerate_target_balls(d, n, NormTag::L2)?;
    let fd = fd_overcomplete(d, n, Some(&balls), 2024)?;
    for (j, (x, ball)) in fd.vectors.iter().zip(&balls).enumerate() {
        println!(
            "x_{j} = {:?}  in B({:?}, {}): {}  ({} candidates, {} hyperplanes avoided)",
            x.coords(),
            ball.center.coords(),
            ball.radius,
            ball.contains(x),
            fd.attempts[j],
            fd.hyperplanes_avoided[j]
        );
    }
    let certs = certify_subsets(&fd.vectors, &all_subsets(n, d), d)?;
    println!("{} of {} {d}-subsets are bases", certs.iter().filter(|c| c.is_full()).count(), certs.len());
    Ok(())
}
