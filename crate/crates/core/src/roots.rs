//! Simultaneous root finding and zero-location classification.
//!
//! All roots are iterated at once (Aberth-Ehrlich updates, falling back to
//! Durand-Kerner on stagnation); no deflation is performed. Classification
//! supplies the hypothesis predicates used by the inequality catalog:
//! all zeros in the closed unit disk, none in the open disk, or all within
//! a given radius cap.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::polynomial::ComplexPolynomial;

/// Residual acceptance threshold, relative to the largest coefficient.
pub const RESIDUAL_TOL: f64 = 1e-8;

/// Half-width of the classification boundary band around the unit circle.
pub const LOCATION_TOL: f64 = 1e-9;

const MAX_ITERATIONS: u32 = 500;
const UPDATE_TOL: f64 = 1e-14;

/// All roots of a polynomial together with their relative residuals.
#[derive(Clone, Debug)]
pub struct RootSet {
    pub roots: Vec<Complex64>,
    pub residuals: Vec<f64>,
    pub iterations: u32,
}

impl RootSet {
    pub fn max_residual(&self) -> f64 {
        self.residuals.iter().copied().fold(0.0, f64::max)
    }
}

/// Zero-location class relative to the unit circle.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum ZeroClass {
    AllInClosedDisk,
    NoneInOpenDisk,
    AllInRadiusK(f64),
    Mixed,
}

/// Summary of where the zeros of a polynomial sit.
#[derive(Clone, Copy, Debug)]
pub struct ZeroLocation {
    pub class: ZeroClass,
    pub max_modulus: f64,
    pub min_modulus: f64,
    pub boundary_flag: bool,
}

impl ZeroLocation {
    pub fn all_in_closed_disk(&self) -> bool {
        self.max_modulus <= 1.0 + LOCATION_TOL
    }

    pub fn none_in_open_disk(&self) -> bool {
        self.min_modulus >= 1.0 - LOCATION_TOL
    }

    pub fn all_in_radius(&self, k: f64) -> bool {
        self.max_modulus <= k + LOCATION_TOL
    }

    /// True when some root sits inside the boundary band, making the
    /// closed-disk / open-disk classification ambiguous.
    pub fn in_boundary_band(&self) -> bool {
        self.boundary_flag
    }
}

/// Expands `leading * prod (z - r_k)` by iterated convolution.
pub fn from_roots(roots: &[Complex64], leading: Complex64) -> ComplexPolynomial {
    let mut acc = ComplexPolynomial::constant(leading);
    for &r in roots {
        let factor = ComplexPolynomial::new(vec![-r, Complex64::new(1.0, 0.0)]);
        acc = acc.mul(&factor);
    }
    acc
}

/// Finds all `degree(p)` roots by simultaneous iteration.
///
/// Initial guesses sit on a circle of radius given by the Cauchy bound.
/// Aberth-Ehrlich updates run until the largest update falls below 1e-14
/// (relative to the root magnitudes) or 500 iterations; on stagnation the
/// iteration switches to Durand-Kerner updates. Residuals above
/// [`RESIDUAL_TOL`] reject the result as unconverged.
pub fn find_roots(p: &ComplexPolynomial) -> Result<RootSet> {
    let d = p.degree();
    if d == 0 || p.is_zero() {
        return Err(Error::InvalidPolynomial(
            "root finding requires degree >= 1".into(),
        ));
    }
    let coeffs = p.coeffs();
    let leading = coeffs[d];
    let scale = p.max_coeff_norm();

    // Cauchy bound: all roots have modulus below 1 + max |c_k| / |c_d|.
    let cauchy = 1.0
        + coeffs[..d]
            .iter()
            .map(|c| c.norm())
            .fold(0.0, f64::max)
            / leading.norm();
    let radius = cauchy.min(1e6);

    let mut xs: Vec<Complex64> = (0..d)
        .map(|k| {
            // Irrational angle offset breaks symmetric stalls.
            let th = std::f64::consts::TAU * (k as f64 + 0.376) / d as f64;
            Complex64::from_polar(radius, th)
        })
        .collect();

    let deriv = p.derivative();
    let monic: Vec<Complex64> = coeffs.iter().map(|&c| c / leading).collect();
    let monic_poly = ComplexPolynomial::new(monic);

    let mut best_update = f64::INFINITY;
    let mut since_improvement = 0u32;
    let mut use_durand_kerner = false;
    let mut iterations = 0;

    for iter in 0..MAX_ITERATIONS {
        iterations = iter + 1;
        let mut max_update: f64 = 0.0;
        let xs_prev = xs.clone();
        for i in 0..d {
            let xi = xs_prev[i];
            let mut sum = Complex64::new(0.0, 0.0);
            let mut prod = Complex64::new(1.0, 0.0);
            for (j, &xj) in xs_prev.iter().enumerate() {
                if j == i {
                    continue;
                }
                let diff = xi - xj;
                if diff.norm() < 1e-300 {
                    continue;
                }
                sum += diff.inv();
                prod *= diff;
            }
            let w = if use_durand_kerner {
                monic_poly.eval(xi) / prod
            } else {
                let pv = p.eval(xi);
                let dv = deriv.eval(xi);
                if dv.norm() < 1e-300 {
                    monic_poly.eval(xi) / prod
                } else {
                    let newton = pv / dv;
                    let denom = Complex64::new(1.0, 0.0) - newton * sum;
                    if denom.norm() < 1e-300 {
                        newton
                    } else {
                        newton / denom
                    }
                }
            };
            let next = xi - w;
            if !next.re.is_finite() || !next.im.is_finite() {
                return Err(Error::RootsUnconverged {
                    max_residual: f64::INFINITY,
                });
            }
            max_update = max_update.max(w.norm() / xi.norm().max(1.0));
            xs[i] = next;
        }
        if max_update < UPDATE_TOL {
            break;
        }
        if max_update < 0.5 * best_update {
            best_update = max_update;
            since_improvement = 0;
        } else {
            since_improvement += 1;
        }
        if !use_durand_kerner && since_improvement > 40 && iter > 100 {
            use_durand_kerner = true;
            since_improvement = 0;
        }
    }

    let residuals: Vec<f64> = xs.iter().map(|&x| p.eval(x).norm() / scale).collect();
    let max_residual = residuals.iter().copied().fold(0.0, f64::max);
    if max_residual > RESIDUAL_TOL {
        return Err(Error::RootsUnconverged { max_residual });
    }
    Ok(RootSet {
        roots: xs,
        residuals,
        iterations,
    })
}

/// Classifies the zero locations of `p` relative to the unit circle.
///
/// Degree-0 polynomials classify as `NoneInOpenDisk` vacuously.
pub fn classify_zeros(p: &ComplexPolynomial) -> Result<ZeroLocation> {
    classify_zeros_with_cap(p, None)
}

/// Like [`classify_zeros`], but reports `AllInRadiusK(k)` when a cap is
/// supplied and every root modulus stays within it.
pub fn classify_zeros_with_cap(p: &ComplexPolynomial, cap: Option<f64>) -> Result<ZeroLocation> {
    if p.degree() == 0 {
        return Ok(ZeroLocation {
            class: ZeroClass::NoneInOpenDisk,
            max_modulus: 0.0,
            min_modulus: f64::INFINITY,
            boundary_flag: false,
        });
    }
    let set = find_roots(p)?;
    Ok(classify_moduli(&set.roots, cap))
}

pub(crate) fn classify_moduli(roots: &[Complex64], cap: Option<f64>) -> ZeroLocation {
    let moduli: Vec<f64> = roots.iter().map(|r| r.norm()).collect();
    let max_modulus = moduli.iter().copied().fold(0.0, f64::max);
    let min_modulus = moduli.iter().copied().fold(f64::INFINITY, f64::min);
    let boundary_flag = moduli.iter().any(|m| (m - 1.0).abs() <= LOCATION_TOL);
    let class = if let Some(k) = cap {
        if max_modulus <= k + LOCATION_TOL {
            ZeroClass::AllInRadiusK(k)
        } else {
            ZeroClass::Mixed
        }
    } else if max_modulus <= 1.0 + LOCATION_TOL {
        ZeroClass::AllInClosedDisk
    } else if min_modulus >= 1.0 - LOCATION_TOL {
        ZeroClass::NoneInOpenDisk
    } else {
        ZeroClass::Mixed
    };
    ZeroLocation {
        class,
        max_modulus,
        min_modulus,
        boundary_flag,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::smirnov::{modified_smirnov, OperatorContext};
    use rand::Rng;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn match_roots(found: &[Complex64], expected: &[Complex64]) -> f64 {
        // Greedy nearest-neighbor matching; fine for well-separated roots.
        let mut remaining: Vec<Complex64> = found.to_vec();
        let mut worst: f64 = 0.0;
        for &e in expected {
            let (idx, dist) = remaining
                .iter()
                .enumerate()
                .map(|(i, &f)| (i, (f - e).norm()))
                .min_by(|a, b| a.1.total_cmp(&b.1))
                .unwrap();
            worst = worst.max(dist);
            remaining.swap_remove(idx);
        }
        worst
    }

    #[test]
    fn known_quadratic_roots() {
        let p = ComplexPolynomial::new(vec![c(1.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)]);
        let set = find_roots(&p).unwrap();
        let worst = match_roots(&set.roots, &[c(0.0, 1.0), c(0.0, -1.0)]);
        assert!(worst < 1e-10);
    }

    #[test]
    fn round_trip_through_from_roots() {
        let roots = [c(0.5, 0.0), c(0.0, -0.5)];
        let p = from_roots(&roots, c(1.0, 0.0));
        let set = find_roots(&p).unwrap();
        assert!(match_roots(&set.roots, &roots) < 1e-8);
    }

    #[test]
    fn double_root_clusters() {
        // (z-1)^2 (z+1): both copies of the double root within 1e-4.
        let p = from_roots(&[c(1.0, 0.0), c(1.0, 0.0), c(-1.0, 0.0)], c(1.0, 0.0));
        let set = find_roots(&p).unwrap();
        let mut near_one = 0;
        for &r in &set.roots {
            if (r - c(1.0, 0.0)).norm() < 1e-4 {
                near_one += 1;
            }
        }
        assert_eq!(near_one, 2);
    }

    #[test]
    fn from_roots_empty_product() {
        let p = from_roots(&[], c(3.0, 0.0));
        assert_eq!(p.coeffs(), &[c(3.0, 0.0)]);
    }

    #[test]
    fn from_roots_evaluates_to_zero_at_roots() {
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        let roots: Vec<Complex64> = (0..12)
            .map(|_| {
                Complex64::from_polar(
                    rng.gen_range(0.0f64..1.0).sqrt(),
                    rng.gen_range(0.0..std::f64::consts::TAU),
                )
            })
            .collect();
        let p = from_roots(&roots, c(1.0, 0.0));
        let scale = p.max_coeff_norm();
        let set = find_roots(&p).unwrap();
        for &r in &set.roots {
            assert!(p.eval(r).norm() <= 1e-9 * scale);
        }
    }

    #[test]
    fn classify_basic_cases() {
        let inside = from_roots(&[c(0.3, 0.0), c(0.7, 0.0)], c(1.0, 0.0));
        let loc = classify_zeros(&inside).unwrap();
        assert_eq!(loc.class, ZeroClass::AllInClosedDisk);
        assert!(loc.all_in_closed_disk());

        let mixed = from_roots(&[c(0.5, 0.0), c(2.0, 0.0)], c(1.0, 0.0));
        assert_eq!(classify_zeros(&mixed).unwrap().class, ZeroClass::Mixed);
    }

    #[test]
    fn unit_circle_zeros_satisfy_both_predicates() {
        // z^6 + 1: all zeros on the circle.
        let mut coeffs = vec![c(0.0, 0.0); 7];
        coeffs[0] = c(1.0, 0.0);
        coeffs[6] = c(1.0, 0.0);
        let p = ComplexPolynomial::new(coeffs);
        let loc = classify_zeros(&p).unwrap();
        assert!(loc.all_in_closed_disk());
        assert!(loc.none_in_open_disk());
        assert!(loc.boundary_flag);
    }

    #[test]
    fn degree_zero_classifies_vacuously() {
        let p = ComplexPolynomial::constant(c(2.0, 1.0));
        let loc = classify_zeros(&p).unwrap();
        assert_eq!(loc.class, ZeroClass::NoneInOpenDisk);
    }

    #[test]
    fn vieta_product_check() {
        let mut rng = ChaCha8Rng::seed_from_u64(32);
        for _ in 0..100 {
            let d = rng.gen_range(1..=12usize);
            let roots: Vec<Complex64> = (0..d)
                .map(|_| {
                    Complex64::from_polar(
                        rng.gen_range(0.2..2.0),
                        rng.gen_range(0.0..std::f64::consts::TAU),
                    )
                })
                .collect();
            let leading = Complex64::from_polar(
                rng.gen_range(0.5..2.0),
                rng.gen_range(0.0..std::f64::consts::TAU),
            );
            let p = from_roots(&roots, leading);
            let set = find_roots(&p).unwrap();
            let product: f64 = set.roots.iter().map(|r| r.norm()).product();
            let expected = (p.coeff(0) / leading).norm();
            assert!(
                (product - expected).abs() <= 1e-8 * expected.max(1.0),
                "vieta mismatch: {product} vs {expected}"
            );
        }
    }

    #[test]
    fn conjugate_reciprocal_swaps_classes() {
        let mut rng = ChaCha8Rng::seed_from_u64(33);
        for _ in 0..30 {
            let d = rng.gen_range(1..=8usize);
            let roots: Vec<Complex64> = (0..d)
                .map(|_| {
                    Complex64::from_polar(
                        rng.gen_range(0.1..0.9),
                        rng.gen_range(0.0..std::f64::consts::TAU),
                    )
                })
                .collect();
            let p = from_roots(&roots, c(1.0, 0.0));
            if p.coeff(0).norm() < 1e-6 {
                continue;
            }
            let q = p.conjugate_reciprocal(p.degree()).unwrap();
            let loc_p = classify_zeros(&p).unwrap();
            let loc_q = classify_zeros(&q).unwrap();
            assert!(loc_p.all_in_closed_disk());
            assert!(loc_q.none_in_open_disk());
        }
    }

    #[test]
    fn operator_image_keeps_zeros_in_disk_diagnostic() {
        // Boundary |a| = 1 zero-location behavior is diagnostic only: count
        // violations rather than failing on the first.
        let mut rng = ChaCha8Rng::seed_from_u64(34);
        let mut violations = 0u32;
        for _ in 0..500 {
            let d = rng.gen_range(2..=8usize);
            let roots: Vec<Complex64> = (0..d)
                .map(|_| {
                    Complex64::from_polar(
                        rng.gen_range(0.0f64..1.0).sqrt() * 0.999,
                        rng.gen_range(0.0..std::f64::consts::TAU),
                    )
                })
                .collect();
            let p = from_roots(&roots, c(1.0, 0.0));
            let a = Complex64::from_polar(1.0, rng.gen_range(0.0..std::f64::consts::TAU));
            let ctx = OperatorContext::new(a, d).unwrap();
            let image = modified_smirnov(&p, &ctx).unwrap();
            if image.degree() == 0 {
                continue;
            }
            match classify_zeros(&image) {
                Ok(loc) => {
                    if loc.max_modulus > 1.0 + 1e-6 {
                        violations += 1;
                    }
                }
                Err(_) => violations += 1,
            }
        }
        // Diagnostic channel: tolerate a small count, flag gross regressions.
        assert!(violations <= 25, "zero-location diagnostics: {violations}/500");
    }
}
