//! Greedy free sets of a set mapping and the functionals that witness them.

use oclab::certify::{free_set_extract, named_mapping, support_annihilator_witness, support_map};
use oclab::constructors::BiorthSystem;
use oclab::harness::biorth_demonstration;

fn main() -> oclab::Result<()> {
    for name in ["identity", "chain", "complete"] {
        let f = named_mapping(name, 8)?;
        let family = biorth_demonstration(&f);
        let system = BiorthSystem::new(8);
        let inst = free_set_extract(8, &support_map(&system, &family))?;
        println!("{name}: H = {:?}", inst.h);
        for &gamma in &inst.h {
            let rec = support_annihilator_witness(&system, &family, &inst.h, gamma)?;
            println!("  f_{gamma} kills {} members (vacuous: {})", rec.pairings.len(), rec.vacuous);
        }
    }
    Ok(())
}
