//! Campaign runner: seeded parallel trials, order-independent aggregation,
//! counterexample shrinking, and deterministic reports.
//!
//! Each trial derives its own RNG stream from `(seed, entry id, trial
//! index)`, so trials are independent of scheduling and the report is a
//! pure function of `(seed, config, version)`. The `SMIRNOV_THREADS`
//! environment variable caps the work pool.

use num_complex::Complex64;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::catalog::{
    check_with, find_entry, links, reduction_check, sharpness_scan, CheckOptions, FamilyParams,
    Hypothesis, InequalityEntry, InequalityInstance, Verdict,
};
use crate::error::{Error, Result};
use crate::roots::from_roots;
use crate::smirnov::Mutation;

use super::generate::{generate_for_entry, GeneratedInstance, GeneratorSpec};
use super::report::{CampaignReport, Counterexample, LinkOutcome, ReportFile, TrialRow};

/// Tolerance knobs carried in configs and echoed in reports.
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
#[serde(default)]
pub struct Tolerances {
    /// Relative slack allowance for verdicts.
    pub slack: f64,
    /// Requested relative tolerance for circle extrema.
    pub extremum: f64,
    /// Grid cap for campaign extrema; certificates stay rigorous, wider
    /// error bounds are folded into the verdict allowance.
    pub extremum_grid_cap: usize,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            slack: 1e-8,
            extremum: 1e-8,
            extremum_grid_cap: 1 << 17,
        }
    }
}

/// Campaign configuration; the JSON schema is versioned.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(default)]
pub struct CampaignConfig {
    pub schema: u32,
    /// Entry ids, or the single element "all".
    pub entries: Vec<String>,
    pub trials: u64,
    pub seed: u64,
    pub degree_min: usize,
    pub degree_max: usize,
    pub tolerances: Tolerances,
    /// Run the sharpness grid for each entry.
    pub sharpness: bool,
    /// Run the reduction links sourced at each entry.
    pub reductions: bool,
    /// Test fixture: inject a deliberate defect into evaluation.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mutation: Option<Mutation>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub out: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub csv: Option<String>,
}

impl Default for CampaignConfig {
    fn default() -> Self {
        CampaignConfig {
            schema: 1,
            entries: vec!["all".to_string()],
            trials: 1000,
            seed: 1,
            degree_min: 1,
            degree_max: 12,
            tolerances: Tolerances::default(),
            sharpness: false,
            reductions: false,
            mutation: None,
            out: None,
            csv: None,
        }
    }
}

impl CampaignConfig {
    pub fn from_json(s: &str) -> Result<Self> {
        let config: CampaignConfig = serde_json::from_str(s)?;
        if config.schema != 1 {
            return Err(Error::Config(format!(
                "unsupported config schema {}",
                config.schema
            )));
        }
        if config.degree_min < 1 || config.degree_min > config.degree_max {
            return Err(Error::Config("invalid degree range".into()));
        }
        Ok(config)
    }
}

enum TrialOutcome {
    Checked {
        generated: Box<GeneratedInstance>,
        verdict: Verdict,
    },
    Failed(String),
}

/// Runs the configured campaign and returns the full report; JSON and CSV
/// side outputs are written when paths are configured.
pub fn run_campaign(config: &CampaignConfig) -> Result<ReportFile> {
    let entries = resolve_entries(config)?;
    let (reports, rows) = run_in_pool(|| -> Result<_> {
        let mut reports = Vec::new();
        let mut rows = Vec::new();
        for entry in &entries {
            let started = std::time::Instant::now();
            let (mut report, mut entry_rows) = run_entry(entry, config)?;
            report.wall_time_secs = started.elapsed().as_secs_f64();
            reports.push(report);
            rows.append(&mut entry_rows);
        }
        Ok((reports, rows))
    })??;

    let file = ReportFile {
        schema: 1,
        version: env!("CARGO_PKG_VERSION").to_string(),
        rng: "fnv1a/splitmix64-keyed chacha8, one stream per trial".to_string(),
        config: config.clone(),
        reports,
    };
    if let Some(path) = &config.out {
        file.write_json(std::path::Path::new(path))?;
    }
    if let Some(path) = &config.csv {
        super::report::write_csv(std::path::Path::new(path), &rows)?;
    }
    Ok(file)
}

fn resolve_entries(config: &CampaignConfig) -> Result<Vec<&'static InequalityEntry>> {
    if config.entries.len() == 1 && config.entries[0] == "all" {
        Ok(crate::catalog::registry().iter().collect())
    } else {
        config
            .entries
            .iter()
            .map(|id| find_entry(id))
            .collect::<Result<Vec<_>>>()
    }
}

fn check_options(config: &CampaignConfig) -> CheckOptions {
    CheckOptions {
        extremum_tol: config.tolerances.extremum,
        grid_cap: config.tolerances.extremum_grid_cap,
        slack_tol: config.tolerances.slack,
        mutation: config.mutation,
    }
}

fn run_entry(
    entry: &'static InequalityEntry,
    config: &CampaignConfig,
) -> Result<(CampaignReport, Vec<TrialRow>)> {
    let opts = check_options(config);
    let spec = GeneratorSpec {
        degree_min: config.degree_min,
        degree_max: config.degree_max,
        ..GeneratorSpec::default()
    };

    let outcomes: Vec<TrialOutcome> = (0..config.trials)
        .into_par_iter()
        .map(|trial| {
            let mut rng = trial_rng(config.seed, entry.id, trial);
            match generate_for_entry(entry, &spec, &mut rng) {
                Ok(generated) => match check_with(&generated.instance, &opts) {
                    Ok(verdict) => TrialOutcome::Checked {
                        generated: Box::new(generated),
                        verdict,
                    },
                    Err(e) => TrialOutcome::Failed(e.to_string()),
                },
                Err(e) => TrialOutcome::Failed(e.to_string()),
            }
        })
        .collect();

    let mut report = CampaignReport {
        entry: entry.id.to_string(),
        trials: config.trials,
        passes: 0,
        failures: 0,
        regenerations: 0,
        errors: 0,
        min_slack: None,
        sharpness: None,
        reductions: None,
        counterexample: None,
        first_error: None,
        wall_time_secs: 0.0,
    };
    let mut rows = Vec::with_capacity(outcomes.len());
    let mut first_failure: Option<(u64, Box<GeneratedInstance>, Verdict)> = None;

    for (trial, outcome) in outcomes.into_iter().enumerate() {
        match outcome {
            TrialOutcome::Checked { generated, verdict } => {
                report.regenerations += generated.regenerations as u64;
                if verdict.pass {
                    report.passes += 1;
                } else {
                    report.failures += 1;
                    if first_failure.is_none() {
                        first_failure = Some((trial as u64, generated.clone(), verdict));
                    }
                }
                report.min_slack = Some(match report.min_slack {
                    Some(s) => s.min(verdict.slack),
                    None => verdict.slack,
                });
                rows.push(trial_row(entry, trial as u64, &generated.instance, Some(&verdict)));
            }
            TrialOutcome::Failed(message) => {
                report.errors += 1;
                if report.first_error.is_none() {
                    report.first_error = Some(message);
                }
                rows.push(TrialRow {
                    entry: entry.id.to_string(),
                    trial: trial as u64,
                    n: 0,
                    a_re: f64::NAN,
                    a_im: f64::NAN,
                    alpha_re: f64::NAN,
                    alpha_im: f64::NAN,
                    beta_re: f64::NAN,
                    beta_im: f64::NAN,
                    r: f64::NAN,
                    z_re: f64::NAN,
                    z_im: f64::NAN,
                    lhs: f64::NAN,
                    rhs: f64::NAN,
                    slack: f64::NAN,
                    pass: "error".to_string(),
                });
            }
        }
    }

    if let Some((_, generated, verdict)) = first_failure {
        report.counterexample = Some(shrink(entry, *generated, verdict, &opts));
    }
    if config.sharpness {
        report.sharpness = Some(sharpness_scan(entry.id, &FamilyParams::default())?);
    }
    if config.reductions {
        let link_trials = config.trials.min(1000) as usize;
        let mut outcomes = Vec::new();
        for link in links().iter().filter(|l| l.source == entry.id) {
            match reduction_check(link.id, link_trials, config.seed) {
                Ok(r) => outcomes.push(LinkOutcome::from(r)),
                Err(e) => outcomes.push(LinkOutcome {
                    link: link.id.to_string(),
                    pass: false,
                    max_rel_mismatch: f64::NAN,
                    min_order: None,
                    detail: Some(e.to_string()),
                }),
            }
        }
        if !outcomes.is_empty() {
            report.reductions = Some(outcomes);
        }
    }
    Ok((report, rows))
}

fn trial_row(
    entry: &InequalityEntry,
    trial: u64,
    inst: &InequalityInstance,
    verdict: Option<&Verdict>,
) -> TrialRow {
    TrialRow {
        entry: entry.id.to_string(),
        trial,
        n: inst.n,
        a_re: inst.a.re,
        a_im: inst.a.im,
        alpha_re: inst.alpha.re,
        alpha_im: inst.alpha.im,
        beta_re: inst.beta.re,
        beta_im: inst.beta.im,
        r: inst.r,
        z_re: inst.z.re,
        z_im: inst.z.im,
        lhs: verdict.map_or(f64::NAN, |v| v.lhs),
        rhs: verdict.map_or(f64::NAN, |v| v.rhs),
        slack: verdict.map_or(f64::NAN, |v| v.slack),
        pass: verdict.map_or("error".to_string(), |v| v.pass.to_string()),
    }
}

// ---------------------------------------------------------------------------
// Shrinking
// ---------------------------------------------------------------------------

/// Reduces a failing instance to a locally minimal counterexample. Moves:
/// halve the degree, push roots toward 0 or infinity (matching the
/// hypothesis), shrink `beta` then `alpha` toward 0, and pull `R` toward 1.
/// Every step re-checks the verdict and keeps only failing reductions.
fn shrink(
    entry: &'static InequalityEntry,
    generated: GeneratedInstance,
    verdict: Verdict,
    opts: &CheckOptions,
) -> Counterexample {
    let mut current = generated;
    let mut current_verdict = verdict;
    let mut steps = 0u32;

    'outer: for _ in 0..200 {
        for move_idx in 0..5 {
            if let Some(candidate) = apply_move(entry, &current, move_idx) {
                if let Ok(v) = check_with(&candidate.instance, opts) {
                    if !v.pass {
                        current = candidate;
                        current_verdict = v;
                        steps += 1;
                        continue 'outer;
                    }
                }
            }
        }
        break;
    }
    Counterexample {
        instance: current.instance,
        verdict: current_verdict,
        shrink_steps: steps,
    }
}

fn apply_move(
    entry: &InequalityEntry,
    gen: &GeneratedInstance,
    move_idx: usize,
) -> Option<GeneratedInstance> {
    let mut out = gen.clone();
    let rebuild = |out: &mut GeneratedInstance| {
        let p = from_roots(&out.p_roots, out.p_leading);
        out.instance.n = p.degree();
        out.instance.p = p;
    };
    match move_idx {
        0 => {
            // Halve the degree.
            if gen.p_roots.len() < 2 {
                return None;
            }
            out.p_roots.truncate(gen.p_roots.len().div_ceil(2));
            rebuild(&mut out);
        }
        1 => {
            // Push roots toward 0 or infinity, matching the hypothesis.
            if gen.p_roots.is_empty() {
                return None;
            }
            match entry.hypothesis {
                Hypothesis::AllZerosInClosedDisk => {
                    out.p_roots.iter_mut().for_each(|r| *r *= 0.5);
                }
                Hypothesis::NoZerosInOpenDisk => {
                    if gen.p_roots.iter().any(|r| r.norm() > 1e3) {
                        return None;
                    }
                    out.p_roots.iter_mut().for_each(|r| *r *= 2.0);
                }
                _ => return None,
            }
            rebuild(&mut out);
        }
        2 => {
            if !entry.schema.uses_beta || gen.instance.beta.norm() == 0.0 {
                return None;
            }
            out.instance.beta = if gen.instance.beta.norm() < 1e-6 {
                Complex64::new(0.0, 0.0)
            } else {
                gen.instance.beta * 0.5
            };
        }
        3 => {
            if entry.schema.alpha == crate::catalog::AlphaDomain::NotUsed
                || gen.instance.alpha.norm() == 0.0
            {
                return None;
            }
            out.instance.alpha = if gen.instance.alpha.norm() < 1e-6 {
                Complex64::new(0.0, 0.0)
            } else {
                gen.instance.alpha * 0.5
            };
        }
        4 => {
            if !entry.schema.uses_r || gen.instance.r <= 1.0 {
                return None;
            }
            out.instance.r = if gen.instance.r - 1.0 < 1e-6 {
                1.0
            } else {
                1.0 + (gen.instance.r - 1.0) * 0.5
            };
        }
        _ => return None,
    }
    Some(out)
}

// ---------------------------------------------------------------------------
// RNG derivation and the work pool
// ---------------------------------------------------------------------------

fn fnv1a(bytes: &[u8]) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for &b in bytes {
        h ^= b as u64;
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    h
}

fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9e37_79b9_7f4a_7c15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// One independent ChaCha8 stream per `(seed, entry, trial)`.
pub fn trial_rng(seed: u64, entry_id: &str, trial: u64) -> ChaCha8Rng {
    let mut state = seed
        ^ fnv1a(entry_id.as_bytes())
        ^ trial.wrapping_mul(0x9e37_79b9_7f4a_7c15);
    let mut key = [0u8; 32];
    for chunk in key.chunks_mut(8) {
        chunk.copy_from_slice(&splitmix64(&mut state).to_le_bytes());
    }
    ChaCha8Rng::from_seed(key)
}

/// Runs `f` inside a pool capped by `SMIRNOV_THREADS` when set.
pub fn run_in_pool<T: Send>(f: impl FnOnce() -> T + Send) -> Result<T> {
    match std::env::var("SMIRNOV_THREADS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
    {
        Some(t) if t >= 1 => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(t)
                .build()
                .map_err(|e| Error::Config(e.to_string()))?;
            Ok(pool.install(f))
        }
        _ => Ok(f()),
    }
}
