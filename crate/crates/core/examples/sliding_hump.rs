//! Sliding-hump extraction and the exact ℓ₁ lower-bound chain.

use oclab::certify::{coefficient_samples, l1_lower_bound_certificate};
use oclab::constructors::{prescribed_mass_family, sliding_hump_extract};
use oclab::linalg::q;

fn main() -> oclab::Result<()> {
    let family = prescribed_mass_family(120, &q(1, 4), 4, 8, 3)?;
    let data = sliding_hump_extract(&family, &q(1, 16))?;
    println!(
        "N = {} from α₀ = {} ({}), {} members extracted",
        data.n_value,
        data.alpha0,
        data.alpha0_rule,
        data.extracted.len()
    );
    for m in data.extracted.iter().take(4) {
        println!("  member {} at cut {}", m.source, m.cut);
    }
    let samples = coefficient_samples(data.extracted.len(), 2000, 5);
    let cert = l1_lower_bound_certificate(&data, &samples)?;
    for step in &cert.chain {
        println!("  {}: {}", step.name, step.holds);
    }
    println!(
        "c = {}, (1−N)/2 = {}, sampled minimum = {}",
        cert.constant,
        cert.half_gap,
        cert.sampled_min.expect("samples were given")
    );
    Ok(())
}
