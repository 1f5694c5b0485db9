//! Every cataloged inequality as an executable entry: hypothesis
//! predicate, left/right side evaluators, parameter domain, sharpness
//! family, and reduction links to the entries it specializes to.
//!
//! A [`Verdict`] records both sides, the oriented slack, and whether the
//! instance passes. Certified extremum error bounds are folded into the
//! pass allowance on top of the fixed relative slack tolerance, so a
//! check never fails on float noise while genuine violations (which sit
//! orders of magnitude above the allowance) are always caught.

pub mod entries;
pub mod links;
pub mod sharpness;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::polynomial::ComplexPolynomial;
use crate::roots::{classify_zeros, classify_zeros_with_cap};
use crate::serde_util::complex_pair;
use crate::smirnov::{Mutation, OmegaRegion};

pub use entries::{find_entry, registry};
pub use links::{links, reduction_check, LinkReport, ReductionLink};
pub use sharpness::{sharpness_gap, sharpness_scan, FamilyParams, SharpnessReport};

/// Relative slack tolerance: an instance passes when
/// `slack >= -(SLACK_TOL * scale + certified allowance)`.
pub const SLACK_TOL: f64 = 1e-8;

/// Hypothesis class an entry imposes on its polynomial(s).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Hypothesis {
    AllZerosInClosedDisk,
    NoZerosInOpenDisk,
    DominatedPair,
    Unrestricted,
}

/// Orientation of the cataloged inequality.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Direction {
    LhsLeqRhs,
    LhsGeqRhs,
}

/// Where the free evaluation point lives.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ZDomain {
    NotUsed,
    UnitCircle,
    /// `|z| >= 1`.
    ClosedExterior,
}

/// Domain of the `alpha` parameter.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AlphaDomain {
    NotUsed,
    UnitDisk,
    /// Membership in the closed omega region of radius `|z|`.
    OmegaOfZ,
}

/// Which parameters an entry consumes and their domains. Validation
/// rejects out-of-domain values before any evaluation runs.
#[derive(Clone, Copy, Debug)]
pub struct ParamSchema {
    pub uses_a: bool,
    pub alpha: AlphaDomain,
    pub uses_beta: bool,
    pub uses_r: bool,
    pub z: ZDomain,
    pub uses_cap: bool,
}

impl ParamSchema {
    pub(crate) const fn none() -> Self {
        ParamSchema {
            uses_a: false,
            alpha: AlphaDomain::NotUsed,
            uses_beta: false,
            uses_r: false,
            z: ZDomain::NotUsed,
            uses_cap: false,
        }
    }
}

/// Named extremal family on which an entry attains equality.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum SharpFamily {
    /// `lambda z^n`, `lambda != 0`.
    Monomial,
    /// `z^n + 1`.
    MonicPlusConstant,
    /// `m e^{i gamma} z^n`, `m > 0`.
    RotatedMonomial,
    /// `c1 z^n + c0` with `|c1| = |c0| = modulus`.
    BalancedBinomial { modulus: f64 },
    /// `P = e^{i gamma} F` for a dominated pair.
    RotatedCopy,
    /// `lambda z^n` under a zero-radius root cap.
    MonomialCapZero,
}

/// One catalog row: everything needed to validate, evaluate, and probe
/// sharpness of a single inequality.
pub struct InequalityEntry {
    pub id: &'static str,
    pub citation: &'static str,
    pub hypothesis: Hypothesis,
    pub direction: Direction,
    pub schema: ParamSchema,
    pub sharp_family: SharpFamily,
    pub(crate) eval: fn(&InequalityInstance, &CheckOptions) -> Result<Evaluation>,
}

impl std::fmt::Debug for InequalityEntry {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("InequalityEntry")
            .field("id", &self.id)
            .field("hypothesis", &self.hypothesis)
            .field("direction", &self.direction)
            .finish()
    }
}

/// Raw sides of one evaluation plus the certified-error allowance that
/// accompanies them.
#[derive(Clone, Copy, Debug)]
pub struct Evaluation {
    pub lhs: f64,
    pub rhs: f64,
    pub cert: f64,
}

/// Outcome of checking one instance.
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct Verdict {
    pub lhs: f64,
    pub rhs: f64,
    /// `rhs - lhs` for a `<=` entry, `lhs - rhs` for a `>=` entry.
    pub slack: f64,
    pub scale: f64,
    /// Total tolerance: `SLACK_TOL * scale` plus certified extremum bounds.
    pub allowance: f64,
    pub pass: bool,
}

impl Verdict {
    pub(crate) fn new(direction: Direction, ev: Evaluation, slack_tol: f64) -> Self {
        let slack = match direction {
            Direction::LhsLeqRhs => ev.rhs - ev.lhs,
            Direction::LhsGeqRhs => ev.lhs - ev.rhs,
        };
        let scale = ev.lhs.abs().max(ev.rhs.abs()).max(1.0);
        let allowance = slack_tol * scale + ev.cert;
        Verdict {
            lhs: ev.lhs,
            rhs: ev.rhs,
            slack,
            scale,
            allowance,
            pass: slack >= -allowance,
        }
    }
}

/// A fully instantiated inequality: the polynomial(s) plus every free
/// parameter. Unused parameters keep their defaults (`a = alpha = beta = 0`,
/// `R = 1`, `z = 1`).
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct InequalityInstance {
    pub entry_id: String,
    pub p: ComplexPolynomial,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub f: Option<ComplexPolynomial>,
    #[serde(with = "complex_pair")]
    pub a: Complex64,
    #[serde(with = "complex_pair")]
    pub alpha: Complex64,
    #[serde(with = "complex_pair")]
    pub beta: Complex64,
    pub r: f64,
    #[serde(with = "complex_pair")]
    pub z: Complex64,
    /// Degree class: `degree(p)` for single-polynomial entries, `degree(f)`
    /// for dominated pairs.
    pub n: usize,
    /// Root-modulus cap for capped-growth entries.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cap_k: Option<f64>,
    /// Extremal-family instances sit on the classification boundary by
    /// construction and assert their hypothesis axiomatically.
    #[serde(default)]
    pub trusted: bool,
}

impl InequalityInstance {
    pub fn new(entry_id: &str, p: ComplexPolynomial) -> Self {
        let n = p.degree();
        InequalityInstance {
            entry_id: entry_id.to_string(),
            p,
            f: None,
            a: Complex64::new(0.0, 0.0),
            alpha: Complex64::new(0.0, 0.0),
            beta: Complex64::new(0.0, 0.0),
            r: 1.0,
            z: Complex64::new(1.0, 0.0),
            n,
            cap_k: None,
            trusted: false,
        }
    }

    pub fn with_pair(entry_id: &str, p: ComplexPolynomial, f: ComplexPolynomial) -> Self {
        let n = f.degree();
        InequalityInstance {
            f: Some(f),
            n,
            ..Self::new(entry_id, p)
        }
    }
}

/// Knobs for one check: the extremum tolerance request, the grid cap that
/// bounds its cost, the slack tolerance, and an optional injected defect.
#[derive(Clone, Copy, Debug)]
pub struct CheckOptions {
    pub extremum_tol: f64,
    pub grid_cap: usize,
    pub slack_tol: f64,
    pub mutation: Option<Mutation>,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions {
            extremum_tol: 1e-8,
            grid_cap: 1 << 22,
            slack_tol: SLACK_TOL,
            mutation: None,
        }
    }
}

/// Checks one instance against its entry with default options.
pub fn check(instance: &InequalityInstance) -> Result<Verdict> {
    check_with(instance, &CheckOptions::default())
}

pub fn check_with(instance: &InequalityInstance, opts: &CheckOptions) -> Result<Verdict> {
    let entry = find_entry(&instance.entry_id)?;
    validate_params(entry, instance)?;
    if !instance.trusted {
        verify_hypothesis(entry, instance)?;
    }
    let ev = (entry.eval)(instance, opts)?;
    Ok(Verdict::new(entry.direction, ev, opts.slack_tol))
}

fn validate_params(entry: &InequalityEntry, inst: &InequalityInstance) -> Result<()> {
    let s = &entry.schema;
    if inst.p.is_zero() && entry.hypothesis != Hypothesis::DominatedPair {
        return Err(Error::ParamOutOfDomain(
            "instance polynomial must be nonzero".into(),
        ));
    }
    if entry.hypothesis == Hypothesis::DominatedPair {
        let f = inst
            .f
            .as_ref()
            .ok_or_else(|| Error::ParamOutOfDomain("dominated pair requires f".into()))?;
        if inst.n != f.degree() || f.degree() < 1 {
            return Err(Error::ParamOutOfDomain(format!(
                "degree class {} must equal degree(f) = {}",
                inst.n,
                f.degree()
            )));
        }
        if inst.p.degree() > inst.n {
            return Err(Error::ParamOutOfDomain(format!(
                "degree(p) = {} exceeds degree(f) = {}",
                inst.p.degree(),
                inst.n
            )));
        }
    } else {
        if inst.n != inst.p.degree() || inst.n < 1 {
            return Err(Error::ParamOutOfDomain(format!(
                "degree class {} must equal degree(p) = {} and be >= 1",
                inst.n,
                inst.p.degree()
            )));
        }
    }
    if s.uses_a && inst.a.norm() > 1.0 + 1e-12 {
        return Err(Error::ParamOutOfDomain(format!(
            "|a| = {} exceeds the closed unit disk",
            inst.a.norm()
        )));
    }
    match s.alpha {
        AlphaDomain::NotUsed => {}
        AlphaDomain::UnitDisk => {
            if inst.alpha.norm() > 1.0 + 1e-12 {
                return Err(Error::ParamOutOfDomain(format!(
                    "|alpha| = {} exceeds the closed unit disk",
                    inst.alpha.norm()
                )));
            }
        }
        AlphaDomain::OmegaOfZ => {
            let region = OmegaRegion::new(inst.z.norm().max(1.0))?;
            if !region.contains(inst.alpha) {
                return Err(Error::ParamOutOfDomain(format!(
                    "alpha = {} lies outside the omega region of radius {}",
                    inst.alpha,
                    inst.z.norm()
                )));
            }
        }
    }
    if s.uses_beta && inst.beta.norm() > 1.0 + 1e-12 {
        return Err(Error::ParamOutOfDomain(format!(
            "|beta| = {} exceeds the closed unit disk",
            inst.beta.norm()
        )));
    }
    if s.uses_r && !(inst.r >= 1.0) {
        return Err(Error::ParamOutOfDomain(format!("R = {} must be >= 1", inst.r)));
    }
    match s.z {
        ZDomain::NotUsed => {}
        ZDomain::UnitCircle => {
            if (inst.z.norm() - 1.0).abs() > 1e-12 {
                return Err(Error::ParamOutOfDomain(format!(
                    "|z| = {} is not on the unit circle",
                    inst.z.norm()
                )));
            }
        }
        ZDomain::ClosedExterior => {
            if inst.z.norm() < 1.0 - 1e-12 {
                return Err(Error::ParamOutOfDomain(format!(
                    "|z| = {} lies inside the open unit disk",
                    inst.z.norm()
                )));
            }
        }
    }
    if s.uses_cap {
        match inst.cap_k {
            Some(k) if (0.0..=1.0).contains(&k) => {}
            _ => {
                return Err(Error::ParamOutOfDomain(
                    "entry requires a root cap k in [0, 1]".into(),
                ))
            }
        }
    }
    Ok(())
}

fn verify_hypothesis(entry: &InequalityEntry, inst: &InequalityInstance) -> Result<()> {
    match entry.hypothesis {
        Hypothesis::Unrestricted => Ok(()),
        Hypothesis::AllZerosInClosedDisk => {
            if let Some(k) = inst.cap_k {
                let loc = classify_zeros_with_cap(&inst.p, Some(k))?;
                if !loc.all_in_radius(k) {
                    return Err(Error::HypothesisViolated {
                        entry: entry.id.to_string(),
                        detail: format!(
                            "max root modulus {} exceeds cap {}",
                            loc.max_modulus, k
                        ),
                    });
                }
                Ok(())
            } else {
                let loc = classify_zeros(&inst.p)?;
                if !loc.all_in_closed_disk() {
                    return Err(Error::HypothesisViolated {
                        entry: entry.id.to_string(),
                        detail: format!("max root modulus {}", loc.max_modulus),
                    });
                }
                Ok(())
            }
        }
        Hypothesis::NoZerosInOpenDisk => {
            let loc = classify_zeros(&inst.p)?;
            if !loc.none_in_open_disk() {
                return Err(Error::HypothesisViolated {
                    entry: entry.id.to_string(),
                    detail: format!("min root modulus {}", loc.min_modulus),
                });
            }
            Ok(())
        }
        Hypothesis::DominatedPair => {
            let f = inst.f.as_ref().expect("validated above");
            let loc = classify_zeros(f)?;
            if !loc.all_in_closed_disk() {
                return Err(Error::HypothesisViolated {
                    entry: entry.id.to_string(),
                    detail: format!("f max root modulus {}", loc.max_modulus),
                });
            }
            // Sampled domination check; generated pairs satisfy this by
            // construction with a strict margin.
            let samples = 512;
            let scale = f.max_coeff_norm().max(inst.p.max_coeff_norm());
            for j in 0..samples {
                let th = std::f64::consts::TAU * j as f64 / samples as f64;
                let z = Complex64::from_polar(1.0, th);
                let pv = inst.p.eval(z).norm();
                let fv = f.eval(z).norm();
                if pv > fv * (1.0 + 1e-9) + 1e-12 * scale {
                    return Err(Error::HypothesisViolated {
                        entry: entry.id.to_string(),
                        detail: format!("|p| = {pv} > |f| = {fv} at theta = {th}"),
                    });
                }
            }
            Ok(())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::roots::from_roots;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn registry_ids_are_unique_and_nonempty() {
        let reg = registry();
        assert!(reg.len() >= 30);
        let mut ids: Vec<&str> = reg.iter().map(|e| e.id).collect();
        ids.sort_unstable();
        ids.dedup();
        assert_eq!(ids.len(), reg.len(), "duplicate entry id");
        for e in reg {
            assert!(!e.citation.is_empty(), "{} lacks a citation", e.id);
        }
    }

    #[test]
    fn equality_instance_of_minimum_bound() {
        // p = z^2, a = 0.3, alpha = beta = 0, R = 2, z = 1: both sides are 8.
        let mut inst =
            InequalityInstance::new("thm1-2.1", ComplexPolynomial::monomial(2, c(1.0, 0.0)));
        inst.a = c(0.3, 0.0);
        inst.r = 2.0;
        inst.trusted = true;
        let v = check(&inst).unwrap();
        assert!((v.lhs - 8.0).abs() < 1e-9);
        assert!((v.rhs - 8.0).abs() < 1e-7);
        assert!(v.pass);
    }

    #[test]
    fn equality_instance_of_maximum_bound() {
        // p = z + 1, a = 0, alpha = beta = 0, R = 1, z = 1: both sides are 1.
        let p = ComplexPolynomial::new(vec![c(1.0, 0.0), c(1.0, 0.0)]);
        let mut inst = InequalityInstance::new("thm2-2.3", p);
        inst.trusted = true;
        let v = check(&inst).unwrap();
        assert!((v.lhs - 1.0).abs() < 1e-9);
        assert!((v.rhs - 1.0).abs() < 1e-7);
        assert!(v.pass);
    }

    #[test]
    fn hypothesis_violation_is_reported() {
        let p = from_roots(&[c(0.5, 0.0), c(2.0, 0.0)], c(1.0, 0.0));
        let inst = InequalityInstance::new("thm1-2.1", p);
        match check(&inst) {
            Err(Error::HypothesisViolated { .. }) => {}
            other => panic!("expected hypothesis violation, got {other:?}"),
        }
    }

    #[test]
    fn out_of_domain_parameters_are_rejected() {
        let mut inst =
            InequalityInstance::new("thm1-2.1", ComplexPolynomial::monomial(2, c(1.0, 0.0)));
        inst.trusted = true;
        inst.alpha = c(1.5, 0.0);
        assert!(matches!(check(&inst), Err(Error::ParamOutOfDomain(_))));

        let mut inst =
            InequalityInstance::new("thm1-2.1", ComplexPolynomial::monomial(2, c(1.0, 0.0)));
        inst.trusted = true;
        inst.r = 0.5;
        assert!(matches!(check(&inst), Err(Error::ParamOutOfDomain(_))));

        let mut inst =
            InequalityInstance::new("thm1-2.1", ComplexPolynomial::monomial(2, c(1.0, 0.0)));
        inst.trusted = true;
        inst.z = c(0.3, 0.0);
        assert!(matches!(check(&inst), Err(Error::ParamOutOfDomain(_))));
    }

    #[test]
    fn homogeneity_of_verdicts() {
        // Scaling p by any nonzero c scales both sides; pass is invariant.
        let p = from_roots(&[c(0.4, 0.1), c(-0.2, -0.5), c(0.1, 0.6)], c(1.0, 0.0));
        let mut inst = InequalityInstance::new("thm1-2.1", p.clone());
        inst.a = c(0.2, 0.4);
        inst.alpha = c(0.3, -0.1);
        inst.beta = c(-0.2, 0.2);
        inst.r = 1.7;
        inst.z = c(1.1, 0.3);
        let base = check(&inst).unwrap();
        for &s in &[2.5, 0.125, 40.0] {
            let mut scaled = inst.clone();
            scaled.p = p.scale(c(s, 0.0));
            let v = check(&scaled).unwrap();
            assert_eq!(v.pass, base.pass);
            assert!((v.lhs - s * base.lhs).abs() <= 1e-9 * s * base.lhs.max(1.0));
            assert!((v.rhs - s * base.rhs).abs() <= 1e-6 * s * base.rhs.max(1.0));
        }
    }

    #[test]
    fn rotation_invariance_of_sides() {
        let p = from_roots(&[c(0.4, 0.1), c(-0.3, -0.4)], c(1.0, 0.0));
        let mut inst = InequalityInstance::new("thm1-2.1", p.clone());
        inst.a = c(0.3, 0.2);
        inst.alpha = c(0.1, 0.2);
        inst.beta = c(-0.4, 0.1);
        inst.r = 1.4;
        inst.z = c(1.2, 0.1);
        let base = check(&inst).unwrap();

        let phi = 0.83;
        let rot = Complex64::from_polar(1.0, phi);
        // p(e^{i phi} z) has coefficients c_k e^{i k phi}.
        let rotated = ComplexPolynomial::new(
            p.coeffs()
                .iter()
                .enumerate()
                .map(|(k, &ck)| ck * rot.powu(k as u32))
                .collect(),
        );
        let mut inst2 = inst.clone();
        inst2.p = rotated;
        inst2.a = inst.a * rot;
        inst2.z = inst.z / rot;
        let v = check(&inst2).unwrap();
        assert!((v.lhs - base.lhs).abs() <= 1e-10 * base.lhs.max(1.0));
        assert!((v.rhs - base.rhs).abs() <= 1e-10 * base.rhs.max(1.0));
    }
}
