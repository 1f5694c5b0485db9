//! Sharpness probes: instantiate an entry's extremal family and search a
//! parameter grid for the smallest relative slack. A gap at or below 1e-6
//! certifies observed sharpness for that family.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::polynomial::ComplexPolynomial;
use crate::roots::from_roots;

use super::{
    check_with, find_entry, AlphaDomain, CheckOptions, InequalityEntry, InequalityInstance,
    SharpFamily, ZDomain,
};

/// Free constants of the extremal families. `lambda` scales monomials,
/// `gamma` rotates, `modulus` sets balanced-binomial coefficient size.
#[derive(Clone, Copy, Debug)]
pub struct FamilyParams {
    pub n: usize,
    pub lambda: Complex64,
    pub gamma: f64,
    pub modulus: f64,
}

impl Default for FamilyParams {
    fn default() -> Self {
        FamilyParams {
            n: 4,
            lambda: Complex64::new(0.75, -0.5),
            gamma: 0.7,
            modulus: 1.0,
        }
    }
}

/// Result of a sharpness grid scan.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SharpnessReport {
    pub entry: String,
    pub family: String,
    pub grid_points: usize,
    pub min_gap: f64,
    pub max_gap: f64,
    /// Parameters attaining the minimum gap, as `(a, alpha, beta, R, z)`.
    pub argmin: [f64; 9],
}

/// Minimum relative slack of the entry's extremal family over the search
/// grid.
pub fn sharpness_gap(entry_id: &str, fp: &FamilyParams) -> Result<f64> {
    Ok(sharpness_scan(entry_id, fp)?.min_gap)
}

pub fn sharpness_scan(entry_id: &str, fp: &FamilyParams) -> Result<SharpnessReport> {
    let entry = find_entry(entry_id)?;
    let (p, f, cap_k, family_name) = build_family(entry, fp);
    let opts = CheckOptions {
        grid_cap: 1 << 18,
        ..CheckOptions::default()
    };

    let a_grid: &[Complex64] = if entry.schema.uses_a {
        &[
            Complex64::new(0.0, 0.0),
            Complex64::new(0.5, 0.0),
            Complex64::new(-0.5, 0.0),
            Complex64::new(0.0, 0.5),
            Complex64::new(0.9, 0.0),
        ]
    } else {
        &[Complex64::new(0.0, 0.0)]
    };
    let alpha_grid: &[Complex64] = match entry.schema.alpha {
        AlphaDomain::NotUsed => &[Complex64::new(0.0, 0.0)],
        AlphaDomain::UnitDisk => &[
            Complex64::new(0.0, 0.0),
            Complex64::new(0.5, 0.0),
            Complex64::new(-0.5, 0.0),
            Complex64::new(1.0, 0.0),
            Complex64::new(0.0, 0.5),
        ],
        // phi images of small disk points; members of every omega region
        // with radius >= 1.
        AlphaDomain::OmegaOfZ => &[
            Complex64::new(0.0, 0.0),
            Complex64::new(1.0 / 3.0, 0.0),
            Complex64::new(-1.0, 0.0),
        ],
    };
    let beta_grid: &[Complex64] = if entry.schema.uses_beta {
        &[
            Complex64::new(0.0, 0.0),
            Complex64::new(0.5, 0.0),
            Complex64::new(-0.5, 0.0),
            Complex64::new(1.0, 0.0),
            Complex64::new(-1.0, 0.0),
        ]
    } else {
        &[Complex64::new(0.0, 0.0)]
    };
    let r_grid: &[f64] = if entry.schema.uses_r {
        &[1.0, 1.5, 2.0]
    } else {
        &[1.0]
    };
    let z_grid: Vec<Complex64> = match entry.schema.z {
        ZDomain::NotUsed => vec![Complex64::new(1.0, 0.0)],
        ZDomain::UnitCircle => [0.0, 0.25, 0.5, 1.0]
            .iter()
            .map(|&t| Complex64::from_polar(1.0, std::f64::consts::PI * t))
            .collect(),
        ZDomain::ClosedExterior => {
            let mut zs: Vec<Complex64> = [0.0, 0.25, 0.5, 1.0]
                .iter()
                .map(|&t| Complex64::from_polar(1.0, std::f64::consts::PI * t))
                .collect();
            zs.push(Complex64::from_polar(1.5, 0.7));
            zs
        }
    };

    let mut report = SharpnessReport {
        entry: entry_id.to_string(),
        family: family_name,
        grid_points: 0,
        min_gap: f64::INFINITY,
        max_gap: 0.0,
        argmin: [0.0; 9],
    };
    for &a in a_grid {
        for &alpha in alpha_grid {
            for &beta in beta_grid {
                for &r in r_grid {
                    for &z in &z_grid {
                        let mut inst = InequalityInstance::new(entry.id, p.clone());
                        inst.f = f.clone();
                        if entry.hypothesis == super::Hypothesis::DominatedPair {
                            inst.n = inst.f.as_ref().map(|f| f.degree()).unwrap_or(0);
                        }
                        inst.a = a;
                        inst.alpha = alpha;
                        inst.beta = beta;
                        inst.r = r;
                        inst.z = z;
                        inst.cap_k = cap_k;
                        inst.trusted = true;
                        let verdict = check_with(&inst, &opts)?;
                        let gap = verdict.slack.abs() / verdict.scale;
                        report.grid_points += 1;
                        if gap < report.min_gap {
                            report.min_gap = gap;
                            report.argmin = [
                                a.re, a.im, alpha.re, alpha.im, beta.re, beta.im, r, z.re, z.im,
                            ];
                        }
                        report.max_gap = report.max_gap.max(gap);
                    }
                }
            }
        }
    }
    Ok(report)
}

/// Builds the entry's extremal family polynomial (and partner, for
/// dominated pairs) from the family constants.
fn build_family(
    entry: &InequalityEntry,
    fp: &FamilyParams,
) -> (
    ComplexPolynomial,
    Option<ComplexPolynomial>,
    Option<f64>,
    String,
) {
    let n = fp.n.max(1);
    match entry.sharp_family {
        SharpFamily::Monomial => (
            ComplexPolynomial::monomial(n, fp.lambda),
            None,
            None,
            format!("lambda z^{n}"),
        ),
        SharpFamily::MonomialCapZero => (
            ComplexPolynomial::monomial(n, fp.lambda),
            None,
            Some(0.0),
            format!("lambda z^{n}, cap 0"),
        ),
        SharpFamily::MonicPlusConstant => {
            let mut coeffs = vec![Complex64::new(0.0, 0.0); n + 1];
            coeffs[0] = Complex64::new(1.0, 0.0);
            coeffs[n] = Complex64::new(1.0, 0.0);
            (
                ComplexPolynomial::new(coeffs),
                None,
                None,
                format!("z^{n} + 1"),
            )
        }
        SharpFamily::RotatedMonomial => (
            ComplexPolynomial::monomial(n, Complex64::from_polar(fp.modulus.max(0.1), fp.gamma)),
            None,
            None,
            format!("m e^(i gamma) z^{n}"),
        ),
        SharpFamily::BalancedBinomial { modulus } => {
            // Real aligned coefficients keep the equality point on the
            // z = 1, real-alpha corner of the search grid.
            let mut coeffs = vec![Complex64::new(0.0, 0.0); n + 1];
            coeffs[0] = Complex64::new(modulus, 0.0);
            coeffs[n] = Complex64::new(modulus, 0.0);
            (
                ComplexPolynomial::new(coeffs),
                None,
                None,
                format!("{modulus} z^{n} + {modulus}"),
            )
        }
        SharpFamily::RotatedCopy => {
            let roots = [
                Complex64::new(0.4, 0.0),
                Complex64::new(-0.3, 0.2),
                Complex64::new(0.0, 0.55),
                Complex64::new(-0.5, -0.3),
                Complex64::new(0.2, -0.6),
                Complex64::new(0.6, 0.1),
            ];
            let take = n.min(roots.len()).max(1);
            let f = from_roots(&roots[..take], Complex64::new(1.0, 0.0));
            let p = f.scale(Complex64::from_polar(1.0, fp.gamma));
            (p, Some(f), None, "P = e^(i gamma) F".to_string())
        }
    }
}
