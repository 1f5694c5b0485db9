//! Campaign report and CSV trail formats. Reports are reproducible
//! byte-for-byte from `(seed, config, version)`: nothing volatile is
//! serialized, and all aggregation is order-fixed.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::catalog::{InequalityInstance, LinkReport, SharpnessReport, Verdict};
use crate::error::Result;

use super::campaign::CampaignConfig;

/// One CSV row per trial.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TrialRow {
    pub entry: String,
    pub trial: u64,
    pub n: usize,
    pub a_re: f64,
    pub a_im: f64,
    pub alpha_re: f64,
    pub alpha_im: f64,
    pub beta_re: f64,
    pub beta_im: f64,
    pub r: f64,
    pub z_re: f64,
    pub z_im: f64,
    pub lhs: f64,
    pub rhs: f64,
    pub slack: f64,
    pub pass: String,
}

/// A shrunk failing instance, serialized in full.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Counterexample {
    pub instance: InequalityInstance,
    pub verdict: Verdict,
    pub shrink_steps: u32,
}

/// Outcome of one reduction link inside a campaign.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct LinkOutcome {
    pub link: String,
    pub pass: bool,
    pub max_rel_mismatch: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub min_order: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl From<LinkReport> for LinkOutcome {
    fn from(r: LinkReport) -> Self {
        LinkOutcome {
            link: r.link,
            pass: r.pass,
            max_rel_mismatch: r.max_rel_mismatch,
            min_order: r.min_order,
            detail: None,
        }
    }
}

/// Per-entry campaign summary.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CampaignReport {
    pub entry: String,
    pub trials: u64,
    pub passes: u64,
    pub failures: u64,
    /// Boundary-band re-draws absorbed inside trials; the generators keep
    /// a margin around the band, so this is normally zero.
    pub regenerations: u64,
    pub errors: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub min_slack: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sharpness: Option<SharpnessReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reductions: Option<Vec<LinkOutcome>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
    /// First error message, when any trial errored.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_error: Option<String>,
    /// Wall time is console output, never part of the serialized report.
    #[serde(skip)]
    pub wall_time_secs: f64,
}

/// The serialized report file.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ReportFile {
    pub schema: u32,
    pub version: String,
    /// RNG derivation, named so runs can be reproduced.
    pub rng: String,
    pub config: CampaignConfig,
    pub reports: Vec<CampaignReport>,
}

impl ReportFile {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serialization");
        s.push('\n');
        s
    }

    pub fn write_json(&self, path: &Path) -> Result<()> {
        std::fs::write(path, self.to_json())?;
        Ok(())
    }
}

pub fn write_csv(path: &Path, rows: &[TrialRow]) -> Result<()> {
    let mut writer = csv::Writer::from_path(path)?;
    for row in rows {
        writer.serialize(row)?;
    }
    writer.flush()?;
    Ok(())
}
