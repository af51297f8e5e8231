//! `g_k = y_k + Σ (n+2)^{-k} e_n` converging to a point outside the span of
//! finitely supported sequences, with exact distances.

use oclab::certify::weak_norm_convergence_probe;
use oclab::constructors::{incomplete_space_sequence, GeometricRule, IncompleteModel};
use oclab::linalg::NormTag;

fn main() -> oclab::Result<()> {
    let model = IncompleteModel::new(GeometricRule::dyadic(), NormTag::L1, 16);
    let seq = incomplete_space_sequence(&model, 16)?;
    println!("cutoffs T(k): {:?}", model.cutoffs());
    for b in &seq.bounds {
        println!(
            "k = {:2}  ‖y − g_k‖ = {:.3e}  ≤ {:.3e} + {:.3e}: {}",
            b.k,
            b.distance.to_f64(),
            b.approximation_error.to_f64(),
            b.slack.to_f64(),
            b.holds
        );
    }
    let limit = model.target_truncation(seq.dim);
    let probe = weak_norm_convergence_probe(&seq.vectors, &limit, 10, 1e-4)?;
    println!("probe: {:?}", probe.class);
    Ok(())
}
