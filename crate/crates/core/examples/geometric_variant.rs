//! `g_k = y_k + Σ_j λ_k^{j+1} e_j` under the rate condition on `λ_n`.

use oclab::constructors::{geometric_variant_sequence, GeometricRule, GeometricSchedule, IncompleteModel};
use oclab::linalg::{NormTag, Rational};

fn main() -> oclab::Result<()> {
    let model = IncompleteModel::new(GeometricRule::dyadic(), NormTag::L2, 10);
    let schedule = GeometricSchedule::harmonic(11, 3, Rational::one())?;
    let var = geometric_variant_sequence(&model, &schedule, 10)?;
    for c in &var.rate_checks {
        println!("j = {}: nonincreasing from n = {}, last value {:.3e}", c.j, c.onset, c.last.to_f64());
    }
    for (k, d) in var.distances.iter().enumerate() {
        println!("‖y − g_{k}‖² = {:.3e}", d.to_f64());
    }

    let too_fast = GeometricSchedule::dyadic(11, 3, Rational::one())?;
    if let Err(e) = geometric_variant_sequence(&model, &too_fast, 10) {
        println!("dyadic nodes: {e}");
    }
    Ok(())
}
