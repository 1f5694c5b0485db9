//! Complex polynomial core: construction, Horner evaluation, calculus,
//! dilation, and the conjugate-reciprocal transform.
//!
//! Coefficients are stored in ascending powers (`coeffs[k]` multiplies
//! `z^k`) and trailing coefficients below [`TRIM_THRESHOLD`] relative to
//! the largest coefficient magnitude are trimmed away. All values are
//! immutable after construction and every operation is a pure function,
//! so polynomials can be shared freely across threads.

use num_complex::Complex64;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Relative magnitude below which trailing coefficients are dropped.
pub const TRIM_THRESHOLD: f64 = 1e-12;

/// A univariate polynomial with complex coefficients, ascending powers.
///
/// The canonical zero polynomial is the single coefficient `0`; any other
/// value keeps a leading coefficient that is nonzero relative to the
/// largest coefficient magnitude.
#[derive(Clone, Debug, PartialEq)]
pub struct ComplexPolynomial {
    coeffs: Vec<Complex64>,
}

impl ComplexPolynomial {
    /// Builds a polynomial from ascending-power coefficients, trimming the tail.
    pub fn new(coeffs: Vec<Complex64>) -> Self {
        let mut p = ComplexPolynomial { coeffs };
        p.trim();
        p
    }

    /// The canonical zero polynomial.
    pub fn zero() -> Self {
        ComplexPolynomial {
            coeffs: vec![Complex64::new(0.0, 0.0)],
        }
    }

    pub fn constant(c: Complex64) -> Self {
        Self::new(vec![c])
    }

    /// `coeff * z^n`.
    pub fn monomial(n: usize, coeff: Complex64) -> Self {
        let mut coeffs = vec![Complex64::new(0.0, 0.0); n + 1];
        coeffs[n] = coeff;
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// Coefficient of `z^k`, zero beyond the stored length.
    pub fn coeff(&self, k: usize) -> Complex64 {
        self.coeffs
            .get(k)
            .copied()
            .unwrap_or(Complex64::new(0.0, 0.0))
    }

    /// Degree after trimming; the zero polynomial reports degree 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0] == Complex64::new(0.0, 0.0)
    }

    pub fn leading(&self) -> Complex64 {
        *self.coeffs.last().expect("coeffs are never empty")
    }

    pub fn max_coeff_norm(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    /// Horner evaluation.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for &c in self.coeffs.iter().rev() {
            acc = acc * z + c;
        }
        acc
    }

    /// Coefficients `k * coeffs[k]` shifted down one; constants map to zero.
    pub fn derivative(&self) -> Self {
        if self.coeffs.len() == 1 {
            return Self::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, &c)| c * k as f64)
            .collect();
        Self::new(coeffs)
    }

    /// The polynomial `z -> p(r z)`, i.e. `coeffs[k] * r^k`.
    ///
    /// Values `r` in `(0, 1)` are accepted for oracle use; campaigns only
    /// pass `r >= 1`.
    pub fn dilate(&self, r: f64) -> Self {
        debug_assert!(r > 0.0, "dilation factor must be positive");
        let mut rk = 1.0;
        let coeffs = self
            .coeffs
            .iter()
            .map(|&c| {
                let out = c * rk;
                rk *= r;
                out
            })
            .collect();
        Self::new(coeffs)
    }

    /// `Q(z) = z^n * conj(P(1/conj(z)))`: the length-(n+1) coefficient
    /// sequence reversed and conjugated. Requires `n >= degree(p)`;
    /// `|Q| = |P|` on the unit circle.
    pub fn conjugate_reciprocal(&self, n: usize) -> Result<Self> {
        if n < self.degree() && !self.is_zero() {
            return Err(Error::DegreeClassTooSmall {
                class: n,
                degree: self.degree(),
            });
        }
        let mut coeffs = vec![Complex64::new(0.0, 0.0); n + 1];
        for k in 0..=n {
            coeffs[k] = self.coeff(n - k).conj();
        }
        Ok(Self::new(coeffs))
    }

    pub fn add(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len).map(|k| self.coeff(k) + other.coeff(k)).collect();
        Self::new(coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len).map(|k| self.coeff(k) - other.coeff(k)).collect();
        Self::new(coeffs)
    }

    pub fn scale(&self, c: Complex64) -> Self {
        Self::new(self.coeffs.iter().map(|&a| a * c).collect())
    }

    /// Convolution product.
    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut coeffs =
            vec![Complex64::new(0.0, 0.0); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Self::new(coeffs)
    }

    /// `z * p(z)`.
    pub fn mul_z(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(Complex64::new(0.0, 0.0));
        coeffs.extend_from_slice(&self.coeffs);
        Self::new(coeffs)
    }

    /// Parses the literal format used in configs and reports: a JSON array
    /// of `[re, im]` pairs in ascending powers.
    pub fn from_json_literal(s: &str) -> Result<Self> {
        let p: ComplexPolynomial = serde_json::from_str(s)?;
        Ok(p)
    }

    pub fn to_json_literal(&self) -> String {
        serde_json::to_string(self).expect("polynomial serialization cannot fail")
    }

    fn trim(&mut self) {
        if self.coeffs.is_empty() {
            self.coeffs.push(Complex64::new(0.0, 0.0));
            return;
        }
        let max = self.max_coeff_norm();
        if max == 0.0 {
            self.coeffs = vec![Complex64::new(0.0, 0.0)];
            return;
        }
        let cutoff = TRIM_THRESHOLD * max;
        while self.coeffs.len() > 1 {
            if self.coeffs.last().map(|c| c.norm()).unwrap_or(0.0) > cutoff {
                break;
            }
            self.coeffs.pop();
        }
        if self.coeffs.len() == 1 && self.coeffs[0].norm() <= 0.0 {
            self.coeffs[0] = Complex64::new(0.0, 0.0);
        }
    }
}

impl Serialize for ComplexPolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let pairs: Vec<[f64; 2]> = self.coeffs.iter().map(|c| [c.re, c.im]).collect();
        pairs.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for ComplexPolynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let pairs: Vec<[f64; 2]> = Vec::deserialize(deserializer)?;
        if pairs.is_empty() {
            return Err(D::Error::custom("polynomial literal must be non-empty"));
        }
        Ok(ComplexPolynomial::new(
            pairs.iter().map(|p| Complex64::new(p[0], p[1])).collect(),
        ))
    }
}

// ---------------------------------------------------------------------------
// Evaluation points
// ---------------------------------------------------------------------------

/// Region tag for an evaluation point.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Region {
    OnUnitCircle,
    OutsideOpenDisk,
    General,
}

/// A complex evaluation point together with the region its consumer expects.
#[derive(Clone, Copy, Debug)]
pub struct EvaluationPoint {
    pub z: Complex64,
    pub region: Region,
}

impl EvaluationPoint {
    /// Requires `| |z| - 1 | <= 1e-12`.
    pub fn on_unit_circle(z: Complex64) -> Result<Self> {
        if (z.norm() - 1.0).abs() > 1e-12 {
            return Err(Error::ParamOutOfDomain(format!(
                "|z| = {} is not on the unit circle",
                z.norm()
            )));
        }
        Ok(EvaluationPoint {
            z,
            region: Region::OnUnitCircle,
        })
    }

    /// Requires `|z| >= 1 - 1e-12`.
    pub fn outside_open_disk(z: Complex64) -> Result<Self> {
        if z.norm() < 1.0 - 1e-12 {
            return Err(Error::ParamOutOfDomain(format!(
                "|z| = {} lies inside the open unit disk",
                z.norm()
            )));
        }
        Ok(EvaluationPoint {
            z,
            region: Region::OutsideOpenDisk,
        })
    }

    pub fn general(z: Complex64) -> Self {
        EvaluationPoint {
            z,
            region: Region::General,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::Rng;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn random_poly(rng: &mut ChaCha8Rng, degree: usize) -> ComplexPolynomial {
        let coeffs = (0..=degree)
            .map(|_| c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
            .collect();
        ComplexPolynomial::new(coeffs)
    }

    /// Term-by-term power sum, the independent oracle for Horner evaluation.
    fn naive_eval(p: &ComplexPolynomial, z: Complex64) -> Complex64 {
        p.coeffs()
            .iter()
            .enumerate()
            .map(|(k, &ck)| ck * z.powu(k as u32))
            .sum()
    }

    #[test]
    fn eval_quadratic_at_i_cancels_constant() {
        let p = ComplexPolynomial::new(vec![c(1.0, 0.0), c(2.0, 0.0), c(1.0, 0.0)]);
        let v = p.eval(c(0.0, 1.0));
        assert!((v - c(0.0, 2.0)).norm() < 1e-15);
    }

    #[test]
    fn eval_zero_polynomial() {
        let p = ComplexPolynomial::zero();
        assert_eq!(p.eval(c(7.0, 3.0)), c(0.0, 0.0));
    }

    #[test]
    fn eval_matches_power_sum_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..50 {
            let p = random_poly(&mut rng, 8);
            let z = c(0.3, -0.7);
            let horner = p.eval(z);
            let naive = naive_eval(&p, z);
            let scale = naive.norm().max(1e-300);
            assert!((horner - naive).norm() / scale < 1e-12);
        }
    }

    #[test]
    fn derivative_power_rule() {
        let p = ComplexPolynomial::new(vec![c(1.0, 0.0), c(2.0, 0.0), c(1.0, 0.0)]);
        assert_eq!(p.derivative().coeffs(), &[c(2.0, 0.0), c(2.0, 0.0)]);
    }

    #[test]
    fn derivative_of_constant_is_zero() {
        let p = ComplexPolynomial::constant(c(5.0, 0.0));
        assert!(p.derivative().is_zero());
    }

    #[test]
    fn derivative_matches_central_difference() {
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        let h = 1e-6;
        for _ in 0..20 {
            let p = random_poly(&mut rng, 6);
            let d = p.derivative();
            let z = c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
            let fd = (p.eval(z + c(h, 0.0)) - p.eval(z - c(h, 0.0))) / c(2.0 * h, 0.0);
            let exact = d.eval(z);
            let scale = exact.norm().max(1e-6);
            assert!((fd - exact).norm() / scale < 1e-6);
        }
    }

    #[test]
    fn dilate_scales_coefficients() {
        let p = ComplexPolynomial::new(vec![c(1.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)]);
        let d = p.dilate(2.0);
        assert_eq!(d.coeffs(), &[c(1.0, 0.0), c(0.0, 0.0), c(4.0, 0.0)]);
    }

    #[test]
    fn dilate_by_one_is_identity() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        let p = random_poly(&mut rng, 7);
        assert_eq!(p.dilate(1.0), p);
    }

    #[test]
    fn dilate_commutes_with_evaluation() {
        let mut rng = ChaCha8Rng::seed_from_u64(14);
        for _ in 0..20 {
            let p = random_poly(&mut rng, 9);
            let r = rng.gen_range(1.0..3.0);
            let z = c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
            let a = p.dilate(r).eval(z);
            let b = p.eval(z * r);
            let scale = b.norm().max(1e-12);
            assert!((a - b).norm() / scale < 1e-12);
        }
    }

    #[test]
    fn conjugate_reciprocal_reverses_and_conjugates() {
        let p = ComplexPolynomial::new(vec![c(0.0, 2.0), c(1.0, 0.0)]);
        let q = p.conjugate_reciprocal(1).unwrap();
        assert_eq!(q.coeffs(), &[c(1.0, 0.0), c(0.0, -2.0)]);
    }

    #[test]
    fn conjugate_reciprocal_self_inversive() {
        let p = ComplexPolynomial::new(vec![c(1.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)]);
        assert_eq!(p.conjugate_reciprocal(2).unwrap(), p);
    }

    #[test]
    fn conjugate_reciprocal_rejects_small_class() {
        let p = ComplexPolynomial::new(vec![c(1.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)]);
        assert!(p.conjugate_reciprocal(1).is_err());
    }

    #[test]
    fn conjugate_reciprocal_preserves_circle_modulus() {
        let mut rng = ChaCha8Rng::seed_from_u64(15);
        let p = random_poly(&mut rng, 6);
        let q = p.conjugate_reciprocal(p.degree()).unwrap();
        let max_p = (0..1024)
            .map(|j| {
                let th = 2.0 * std::f64::consts::PI * j as f64 / 1024.0;
                p.eval(Complex64::from_polar(1.0, th)).norm()
            })
            .fold(0.0, f64::max);
        for j in 0..1024 {
            let th = 2.0 * std::f64::consts::PI * j as f64 / 1024.0;
            let z = Complex64::from_polar(1.0, th);
            assert!((q.eval(z).norm() - p.eval(z).norm()).abs() <= 1e-12 * max_p);
        }
    }

    #[test]
    fn additive_inverse_trims_to_zero() {
        let p = ComplexPolynomial::new(vec![c(1.0, 0.0), c(1.0, 0.0)]);
        let q = ComplexPolynomial::new(vec![c(-1.0, 0.0), c(-1.0, 0.0)]);
        assert!(p.add(&q).is_zero());
    }

    #[test]
    fn difference_of_squares() {
        let p = ComplexPolynomial::new(vec![c(1.0, 0.0), c(1.0, 0.0)]);
        let q = ComplexPolynomial::new(vec![c(-1.0, 0.0), c(1.0, 0.0)]);
        let r = p.mul(&q);
        assert_eq!(r.coeffs(), &[c(-1.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)]);
    }

    #[test]
    fn product_is_evaluation_homomorphism() {
        let mut rng = ChaCha8Rng::seed_from_u64(16);
        for _ in 0..20 {
            let p = random_poly(&mut rng, 5);
            let q = random_poly(&mut rng, 7);
            let z = c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
            let lhs = p.mul(&q).eval(z);
            let rhs = p.eval(z) * q.eval(z);
            let scale = rhs.norm().max(1e-12);
            assert!((lhs - rhs).norm() / scale < 1e-12);
        }
    }

    #[test]
    fn json_literal_round_trip() {
        let p = ComplexPolynomial::from_json_literal("[[1,0],[0,0],[1,0]]").unwrap();
        assert_eq!(p.degree(), 2);
        assert_eq!(
            ComplexPolynomial::from_json_literal(&p.to_json_literal()).unwrap(),
            p
        );
    }

    #[test]
    fn evaluation_point_tags() {
        assert!(EvaluationPoint::on_unit_circle(c(0.6, 0.8)).is_ok());
        assert!(EvaluationPoint::on_unit_circle(c(1.1, 0.0)).is_err());
        assert!(EvaluationPoint::outside_open_disk(c(1.5, 0.0)).is_ok());
        assert!(EvaluationPoint::outside_open_disk(c(0.5, 0.0)).is_err());
    }

    fn arb_coeffs() -> impl Strategy<Value = Vec<(f64, f64)>> {
        proptest::collection::vec((-10.0f64..10.0, -10.0f64..10.0), 1..10)
    }

    proptest! {
        #[test]
        fn trim_is_idempotent(coeffs in arb_coeffs()) {
            let v: Vec<Complex64> = coeffs.iter().map(|&(re, im)| c(re, im)).collect();
            let once = ComplexPolynomial::new(v);
            let twice = ComplexPolynomial::new(once.coeffs().to_vec());
            prop_assert_eq!(once, twice);
        }

        #[test]
        fn conjugate_reciprocal_involution(coeffs in arb_coeffs()) {
            let v: Vec<Complex64> = coeffs.iter().map(|&(re, im)| c(re, im)).collect();
            let p = ComplexPolynomial::new(v);
            prop_assume!(p.coeff(0).norm() > 1e-6 * p.max_coeff_norm());
            let q = p.conjugate_reciprocal(p.degree()).unwrap();
            let back = q.conjugate_reciprocal(q.degree()).unwrap();
            let scale = p.max_coeff_norm();
            for k in 0..=p.degree() {
                prop_assert!((back.coeff(k) - p.coeff(k)).norm() <= 1e-12 * scale);
            }
        }

        #[test]
        fn dilation_composes(coeffs in arb_coeffs(), r1 in 1.0f64..2.0, r2 in 1.0f64..2.0) {
            let v: Vec<Complex64> = coeffs.iter().map(|&(re, im)| c(re, im)).collect();
            let p = ComplexPolynomial::new(v);
            let a = p.dilate(r1).dilate(r2);
            let b = p.dilate(r1 * r2);
            let scale = b.max_coeff_norm().max(1e-300);
            for k in 0..=a.degree().max(b.degree()) {
                prop_assert!((a.coeff(k) - b.coeff(k)).norm() <= 1e-12 * scale);
            }
        }

        #[test]
        fn derivative_commutes_with_dilation(coeffs in arb_coeffs(), r in 1.0f64..3.0) {
            let v: Vec<Complex64> = coeffs.iter().map(|&(re, im)| c(re, im)).collect();
            let p = ComplexPolynomial::new(v);
            let a = p.dilate(r).derivative();
            let b = p.derivative().dilate(r).scale(c(r, 0.0));
            let scale = b.max_coeff_norm().max(1e-300);
            for k in 0..=a.degree().max(b.degree()) {
                prop_assert!((a.coeff(k) - b.coeff(k)).norm() <= 1e-12 * scale);
            }
        }
    }
}
