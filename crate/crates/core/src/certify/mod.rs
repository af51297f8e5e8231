//! Checkable certificates: density and annihilator witnesses,
//! hyperplane covers, free sets, separation, the ℓ₁ lower bound, the
//! annihilator decay bounds and the convergence probe.

mod cover;
mod decay;
mod density;
mod digest;
mod free_set;
mod l1_bound;
mod probe;
mod separated;

pub use cover::{hyperplane_cover, pigeonhole_majority, CoverOutcome, Majority};
pub use decay::{
    annihilator_decay_check, decay_bound, decay_profile, DecayProfile, DecayReport, DecayRow, FunctionalDecay,
    EXACT_K_LIMIT,
};
pub use density::{
    all_subsets, certify_subsets, density_certificate, replay_pivot_log, DensityCertificate, DensityVerdict,
    HyperplaneFunctional,
};
pub use digest::content_digest;
pub use free_set::{
    free_set_extract, is_free_set, named_mapping, support_annihilator_witness, support_map, AnnihilatorRecord,
    FreeSetInstance,
};
pub use l1_bound::{
    coefficient_samples, combination_norms, l1_lower_bound_certificate, ChainStep, DecompositionEntry,
    L1EquivalenceCertificate, STEP_CONSTANT, STEP_DISJOINT, STEP_MIDDLE, STEP_SAMPLES, STEP_TAIL,
};
pub use probe::{weak_norm_convergence_probe, ProbeClass, ProbeReport, ProbeRow};
pub use separated::greedy_separated_subset;
