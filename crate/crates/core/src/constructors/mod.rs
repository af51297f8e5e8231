//! The explicit sequences and sets, in finite-truncation models.

mod biorth;
mod fd;
mod incomplete;
mod klee;
mod riesz;
mod sliding_hump;

pub use biorth::BiorthSystem;
pub use fd::{enumerate_target_balls, fd_overcomplete, fd_overcomplete_with, FdOvercomplete, OpenBall, SamplerConfig};
pub use incomplete::{
    geometric_variant_sequence, incomplete_space_sequence, ConvergenceBound, Distance, GeometricRule,
    GeometricSchedule, GeometricVariant, IncompleteModel, IncompleteSequence, RateCheck,
};
pub use klee::{evenly_spaced_nodes, klee_vectors, GeometricFamily};
pub use riesz::{riesz_step, separated_overcomplete_fd, RieszStep, SeparatedFamily};
pub use sliding_hump::{
    n_alpha_table, prescribed_mass_family, sliding_hump_extract, ExtractedMember, PropertyFlags, SlidingHumpData,
    ALPHA0_RULE,
};
