//! Finite-truncation constructions of overcomplete sequences and sets, with
//! exact, machine-checkable certificates for every property they claim.
//!
//! * [`linalg`]: exact rationals, vectors, norms, elimination kernels.
//! * [`constructors`]: geometric (Klee) families, hyperplane-avoiding
//!   sequences, Riesz steps, the incomplete-space sequences, sliding humps.
//! * [`certify`]: density certificates, hyperplane covers, free sets,
//!   separation, ℓ₁ lower bounds, decay and convergence diagnostics.
//! * [`harness`]: seeded scenarios and JSON/CSV reports behind the
//!   `oclab` binary.
//!
//! Every capability has a runnable program under `examples/`.

pub mod certify;
pub mod constructors;
mod error;
pub mod harness;
pub mod linalg;

pub use error::{Error, Result};
