//! File formats, experiment drivers and the `ordmatch` command line on top of
//! `ordmatch-core`.

pub mod config;
pub mod experiments;
pub mod formats;
pub mod parallel;
pub mod records;

pub use config::Config;
pub use experiments::{reproduce, ExperimentId, Overrides};
pub use records::ReproductionRecord;
