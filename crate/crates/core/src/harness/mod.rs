//! Scenario configs, seeded runs and report emission.

mod config;
mod report;
mod scenarios;
mod schema;
mod seed;

pub use config::ScenarioConfig;
pub use report::{emit_report, render, CertificateRecord, ConstructionRecord, Format, Report, TOOLKIT_VERSION};
pub use scenarios::{biorth_demonstration, run_scenario};
pub use schema::{json_schema, ParamKind, ParamSpec, Scenario};
pub use seed::sub_seed;
