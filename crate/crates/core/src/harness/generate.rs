//! Random instance generators honoring each hypothesis class.
//!
//! Root moduli follow a sqrt-uniform law (area-uniform in the disk) and
//! are kept a fixed margin away from the unit circle, so classification
//! never lands in the boundary band. Nonvanishing polynomials invert
//! disk roots across the circle or take the `z^n + c` form with
//! `|c| >= (1 + margin)^n`; dominated pairs rescale an arbitrary partner
//! below a certified bound of the circle ratio.

use num_complex::Complex64;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::catalog::{AlphaDomain, Hypothesis, InequalityEntry, InequalityInstance, ZDomain};
use crate::error::{Error, Result};
use crate::polynomial::ComplexPolynomial;
use crate::roots::{classify_moduli, find_roots};

/// Controls for instance generation.
#[derive(Clone, Copy, Debug)]
pub struct GeneratorSpec {
    pub degree_min: usize,
    pub degree_max: usize,
    /// Minimum distance of generated root moduli from 1.
    pub boundary_margin: f64,
    /// Fixed root cap for capped entries; drawn uniformly from
    /// `[0.1, 1]` when absent.
    pub cap_k: Option<f64>,
}

impl Default for GeneratorSpec {
    fn default() -> Self {
        GeneratorSpec {
            degree_min: 1,
            degree_max: 12,
            boundary_margin: 1e-3,
            cap_k: None,
        }
    }
}

/// A generated instance with the construction data that shrinking needs.
#[derive(Clone, Debug)]
pub struct GeneratedInstance {
    pub instance: InequalityInstance,
    pub p_roots: Vec<Complex64>,
    pub p_leading: Complex64,
    pub regenerations: u32,
}

const MAX_ATTEMPTS: u32 = 100;

pub fn generate_for_entry(
    entry: &InequalityEntry,
    spec: &GeneratorSpec,
    rng: &mut ChaCha8Rng,
) -> Result<GeneratedInstance> {
    let mut regenerations = 0;
    for attempt in 0..MAX_ATTEMPTS {
        match attempt_generate(entry, spec, rng) {
            Ok(mut gen) => {
                gen.regenerations = regenerations;
                return Ok(gen);
            }
            Err(_) => regenerations = attempt + 1,
        }
    }
    Err(Error::RetryExhausted {
        attempts: MAX_ATTEMPTS,
    })
}

fn attempt_generate(
    entry: &InequalityEntry,
    spec: &GeneratorSpec,
    rng: &mut ChaCha8Rng,
) -> Result<GeneratedInstance> {
    let tau = std::f64::consts::TAU;
    let margin = spec.boundary_margin;
    let n = rng.gen_range(spec.degree_min..=spec.degree_max).max(1);

    let cap_k = if entry.schema.uses_cap {
        Some(spec.cap_k.unwrap_or_else(|| rng.gen_range(0.1..=1.0)))
    } else {
        None
    };

    let (p, p_roots, p_leading, f) = match entry.hypothesis {
        Hypothesis::AllZerosInClosedDisk => {
            let cap = cap_k.unwrap_or(1.0);
            let roots: Vec<Complex64> = (0..n)
                .map(|_| {
                    Complex64::from_polar(
                        cap * rng.gen_range(0.0f64..1.0).sqrt() * (1.0 - margin),
                        rng.gen_range(0.0..tau),
                    )
                })
                .collect();
            let lead = random_leading(rng);
            (crate::roots::from_roots(&roots, lead), roots, lead, None)
        }
        Hypothesis::NoZerosInOpenDisk => {
            if rng.gen_range(0.0f64..1.0) < 0.9 {
                // Disk roots inverted across the circle.
                let roots: Vec<Complex64> = (0..n)
                    .map(|_| {
                        let mut m = rng.gen_range(0.0f64..1.0).sqrt() * (1.0 - margin);
                        while m < 0.25 {
                            m = rng.gen_range(0.0f64..1.0).sqrt() * (1.0 - margin);
                        }
                        let base = Complex64::from_polar(m, rng.gen_range(0.0..tau));
                        base.conj().inv().conj()
                    })
                    .collect();
                let lead = random_leading(rng);
                (crate::roots::from_roots(&roots, lead), roots, lead, None)
            } else {
                // z^n + c with every root modulus at least (1 + margin).
                let modulus = (1.0 + margin).powi(n as i32) * (1.0 + rng.gen_range(0.0f64..1.0));
                let c = Complex64::from_polar(modulus, rng.gen_range(0.0..tau));
                let lead = random_leading(rng);
                let mut coeffs = vec![Complex64::new(0.0, 0.0); n + 1];
                coeffs[0] = c * lead;
                coeffs[n] = lead;
                let p = ComplexPolynomial::new(coeffs);
                let root_mod = modulus.powf(1.0 / n as f64);
                let base_arg = (-c).arg();
                let roots: Vec<Complex64> = (0..n)
                    .map(|j| {
                        Complex64::from_polar(root_mod, (base_arg + tau * j as f64) / n as f64)
                    })
                    .collect();
                (p, roots, lead, None)
            }
        }
        Hypothesis::Unrestricted => {
            let roots: Vec<Complex64> = (0..n)
                .map(|_| {
                    let mut m = 2.0 * rng.gen_range(0.0f64..1.0).sqrt();
                    while (m - 1.0).abs() < margin {
                        m = 2.0 * rng.gen_range(0.0f64..1.0).sqrt();
                    }
                    Complex64::from_polar(m, rng.gen_range(0.0..tau))
                })
                .collect();
            let lead = random_leading(rng);
            (crate::roots::from_roots(&roots, lead), roots, lead, None)
        }
        Hypothesis::DominatedPair => {
            let f_roots: Vec<Complex64> = (0..n)
                .map(|_| {
                    Complex64::from_polar(
                        0.95 * rng.gen_range(0.0f64..1.0).sqrt(),
                        rng.gen_range(0.0..tau),
                    )
                })
                .collect();
            let f = crate::roots::from_roots(&f_roots, random_leading(rng));
            let dp = rng.gen_range(0..=n);
            let raw: Vec<Complex64> = (0..=dp)
                .map(|_| {
                    Complex64::from_polar(
                        rng.gen_range(0.0f64..1.0).sqrt(),
                        rng.gen_range(0.0..tau),
                    )
                })
                .collect();
            let raw = ComplexPolynomial::new(raw);
            let p = dominate(&raw, &f, &f_roots)
                .ok_or_else(|| Error::Config("domination rescale failed".into()))?;
            (p, Vec::new(), Complex64::new(1.0, 0.0), Some(f))
        }
    };

    // Verify classification lands where construction intends and off the
    // boundary band; anything else triggers a regeneration.
    match entry.hypothesis {
        Hypothesis::AllZerosInClosedDisk => {
            let set = find_roots(&p)?;
            let loc = classify_moduli(&set.roots, cap_k);
            let ok = match cap_k {
                Some(k) => loc.all_in_radius(k),
                None => loc.all_in_closed_disk(),
            };
            if !ok || loc.in_boundary_band() {
                return Err(Error::HypothesisViolated {
                    entry: entry.id.to_string(),
                    detail: "generated instance off its class".into(),
                });
            }
        }
        Hypothesis::NoZerosInOpenDisk => {
            let set = find_roots(&p)?;
            let loc = classify_moduli(&set.roots, None);
            if !loc.none_in_open_disk() || loc.in_boundary_band() {
                return Err(Error::HypothesisViolated {
                    entry: entry.id.to_string(),
                    detail: "generated instance off its class".into(),
                });
            }
        }
        Hypothesis::DominatedPair => {
            let f_poly = f.as_ref().expect("pair constructed above");
            let set = find_roots(f_poly)?;
            let loc = classify_moduli(&set.roots, None);
            if !loc.all_in_closed_disk() || loc.in_boundary_band() {
                return Err(Error::HypothesisViolated {
                    entry: entry.id.to_string(),
                    detail: "generated partner off its class".into(),
                });
            }
        }
        Hypothesis::Unrestricted => {}
    }

    let mut instance = InequalityInstance::new(entry.id, p);
    instance.f = f;
    if entry.hypothesis == Hypothesis::DominatedPair {
        instance.n = instance.f.as_ref().map(|f| f.degree()).unwrap_or(1);
    }
    instance.cap_k = cap_k;
    // The classification above already verified the hypothesis on this
    // exact polynomial; checking need not repeat it.
    instance.trusted = true;

    // Free parameters, in a fixed draw order for reproducibility.
    instance.z = match entry.schema.z {
        ZDomain::NotUsed => Complex64::new(1.0, 0.0),
        ZDomain::UnitCircle => Complex64::from_polar(1.0, rng.gen_range(0.0..tau)),
        ZDomain::ClosedExterior => {
            let m = (1.0 + 3.0 * rng.gen_range(0.0f64..1.0)).sqrt();
            Complex64::from_polar(m, rng.gen_range(0.0..tau))
        }
    };
    if entry.schema.uses_a {
        instance.a = disk_point(rng);
    }
    instance.alpha = match entry.schema.alpha {
        AlphaDomain::NotUsed => Complex64::new(0.0, 0.0),
        AlphaDomain::UnitDisk => disk_point(rng),
        AlphaDomain::OmegaOfZ => {
            // Forward image of a disk point of radius |z|, kept away from
            // the pole of the map.
            let radius = instance.z.norm().max(1.0);
            loop {
                let t = Complex64::from_polar(
                    radius * rng.gen_range(0.0f64..1.0).sqrt(),
                    rng.gen_range(0.0..tau),
                );
                let denom = t + Complex64::new(1.0, 0.0);
                if denom.norm() >= 1e-3 {
                    break t / denom;
                }
            }
        }
    };
    if entry.schema.uses_beta {
        instance.beta = disk_point(rng);
    }
    if entry.schema.uses_r {
        instance.r = rng.gen_range(1.0..3.0);
    }

    Ok(GeneratedInstance {
        instance,
        p_roots: p_roots,
        p_leading: p_leading,
        regenerations: 0,
    })
}

fn random_leading(rng: &mut ChaCha8Rng) -> Complex64 {
    Complex64::from_polar(
        rng.gen_range(0.5..2.0),
        rng.gen_range(0.0..std::f64::consts::TAU),
    )
}

fn disk_point(rng: &mut ChaCha8Rng) -> Complex64 {
    Complex64::from_polar(
        rng.gen_range(0.0f64..1.0).sqrt(),
        rng.gen_range(0.0..std::f64::consts::TAU),
    )
}

/// Rescales `p` strictly below `f` on the circle using a certified upper
/// bound of the ratio `|p| / |f|`.
///
/// The bound combines a 4096-point grid scan with a Lipschitz correction
/// built from coefficient-sum bounds on the circle (`max |q| <= sum |c_k|`,
/// `max |q'| <= sum k |c_k|`) and the root-product floor
/// `min |f| >= |lead| prod (1 - |r_j|)`, all rigorous and closed-form.
fn dominate(
    p: &ComplexPolynomial,
    f: &ComplexPolynomial,
    f_roots: &[Complex64],
) -> Option<ComplexPolynomial> {
    let coeff_sum = |q: &ComplexPolynomial| -> f64 { q.coeffs().iter().map(|c| c.norm()).sum() };
    let f_floor = f.leading().norm()
        * f_roots
            .iter()
            .map(|r| 1.0 - r.norm())
            .product::<f64>();
    if !(f_floor > 0.0) {
        return None;
    }
    let p_up = coeff_sum(p);
    let f_up = coeff_sum(f);
    let pd_up = coeff_sum(&p.derivative());
    let fd_up = coeff_sum(&f.derivative());
    let lipschitz = (pd_up * f_up + p_up * fd_up) / (f_floor * f_floor);

    let grid = 4096;
    let h = std::f64::consts::TAU / grid as f64;
    let mut ratio_hat: f64 = 0.0;
    for j in 0..grid {
        let z = Complex64::from_polar(1.0, h * j as f64);
        ratio_hat = ratio_hat.max(p.eval(z).norm() / f.eval(z).norm());
    }
    let bound_grid = ratio_hat + lipschitz * h / 2.0;
    let bound_crude = p_up / f_floor;
    let s = bound_grid.min(bound_crude);
    if !(s > 0.0) || !s.is_finite() {
        return None;
    }
    Some(p.scale(Complex64::new((1.0 - 1e-6) / s, 0.0)))
}
