//! The bounds `B(j,k)` that force a functional annihilating a subsequence
//! of `g_k` to vanish on every `e_j`.

use oclab::certify::{annihilator_decay_check, decay_bound, decay_profile};
use oclab::constructors::{incomplete_space_sequence, GeometricRule, IncompleteModel};
use oclab::linalg::{nullspace_exact, ExactMatrix, NormTag, Rational, Scalar};

fn main() -> oclab::Result<()> {
    let one = Scalar::Exact(Rational::one());
    for k in [10, 20, 40, 60, 100] {
        println!("B(0, {k}) = {:.4e}", decay_bound(0, k, &one).to_float());
    }
    for j in 0..=5 {
        let p = decay_profile(j, 80);
        println!("j = {j}: strictly decreasing from k = {}", p.onset);
    }

    let model = IncompleteModel::new(GeometricRule::dyadic(), NormTag::L1, 12);
    let seq = incomplete_space_sequence(&model, 12)?;
    let ks = [9, 10, 11, 12];
    let mut rows: Vec<Vec<Rational>> = ks.iter().map(|&k| seq.vectors[k].coords().to_vec()).collect();
    rows.push(model.target_truncation(seq.dim).into_coords());
    let e = nullspace_exact(&ExactMatrix::from_rows(rows)).remove(0).with_tag(NormTag::Linf);
    let report = annihilator_decay_check(&model, &seq.vectors, &ks, &[e], 3, 1e-3)?;
    for row in &report.functionals[0].rows {
        println!(
            "j = {}: ⟨e*, e_j⟩ ≈ {:.3e}, min bound {:.3e}, premises {}, within {:?}",
            row.j,
            row.pairing.to_f64(),
            row.min_bound.as_ref().map_or(f64::NAN, Scalar::to_float),
            row.premises_hold,
            row.within_bound
        );
    }
    Ok(())
}
