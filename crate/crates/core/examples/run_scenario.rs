//! Run a harness scenario in-process and show that reruns are identical.

use oclab::certify::content_digest;
use oclab::harness::{run_scenario, Scenario, ScenarioConfig};

fn main() -> oclab::Result<()> {
    let name = std::env::args().nth(1).unwrap_or_else(|| "free-set".into());
    let scenario: Scenario = name.parse()?;
    let cfg = ScenarioConfig::defaults(scenario, 42);
    let a = run_scenario(&cfg)?;
    let b = run_scenario(&cfg)?;
    println!(
        "{scenario}: {} constructions, {} certificates, {} ms",
        a.constructions.len(),
        a.certificates.len(),
        a.wall_time_ms.unwrap_or(0)
    );
    println!("canonical digest {}", content_digest(&a.canonical_json()));
    println!("rerun identical: {}", a.canonical_json() == b.canonical_json());
    Ok(())
}
