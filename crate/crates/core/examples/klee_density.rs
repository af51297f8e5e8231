//! Geometric vectors `(1, λ, …, λ^{d-1})`: every d-subset is a basis, and
//! the Vandermonde product formula matches the eliminated determinant.

use oclab::certify::{all_subsets, certify_subsets, DensityVerdict};
use oclab::constructors::klee_vectors;
use oclab::linalg::{det_exact, q, vandermonde_det, ExactMatrix};

fn main() -> oclab::Result<()> {
    let lambdas: Vec<_> = (1..=6).map(|i| q(i, 14)).collect();
    let d = 4;
    let family = klee_vectors(&lambdas, d)?;
    let subsets = all_subsets(family.len(), d);
    let certs = certify_subsets(family.vectors(), &subsets, d)?;
    for cert in &certs {
        cert.verify(family.vectors())?;
        let nodes: Vec<_> = cert.subset.iter().map(|&i| lambdas[i].clone()).collect();
        let rows = ExactMatrix::from_vectors(cert.subset.iter().map(|&i| &family.vectors()[i]));
        let DensityVerdict::Full { pivot_log, .. } = &cert.verdict else {
            unreachable!("distinct nodes always give a basis");
        };
        println!(
            "{:?}: det = {} (product formula {}), pivots {}",
            cert.subset,
            det_exact(&rows)?,
            vandermonde_det(&nodes)?,
            pivot_log.len()
        );
    }

    // Fewer than d vectors never span.
    let short = certify_subsets(family.vectors(), &all_subsets(family.len(), d - 1), d)?;
    println!("{} subsets of size {} are all proper: {}", short.len(), d - 1, short.iter().all(|c| !c.is_full()));
    Ok(())
}
