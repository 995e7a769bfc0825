//! Pipeline, persistent cache, and report emission for the zeta laboratory.

pub mod cache;
pub mod config;
pub mod pipeline;
pub mod report;

pub use config::RunConfig;
pub use pipeline::{run_all, run_dzeros, run_report, run_scan, run_verify, RunArtifacts};
