//! Randomized verification harness: hypothesis-respecting generators, the
//! campaign runner with counterexample shrinking, and report formats.

pub mod campaign;
pub mod generate;
pub mod report;

pub use campaign::{run_campaign, trial_rng, CampaignConfig, Tolerances};
pub use generate::{generate_for_entry, GeneratedInstance, GeneratorSpec};
pub use report::{CampaignReport, Counterexample, LinkOutcome, ReportFile, TrialRow};
