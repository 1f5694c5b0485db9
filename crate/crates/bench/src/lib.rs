//! Shared setup for the kernel benchmarks.

use num_complex::Complex64;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use smirnov_core::{from_roots, ComplexPolynomial};

/// A reproducible polynomial with all roots inside the unit disk.
pub fn disk_polynomial(seed: u64, degree: usize) -> ComplexPolynomial {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let roots: Vec<Complex64> = (0..degree)
        .map(|_| {
            Complex64::from_polar(
                rng.gen_range(0.0f64..1.0).sqrt() * 0.999,
                rng.gen_range(0.0..std::f64::consts::TAU),
            )
        })
        .collect();
    from_roots(&roots, Complex64::new(1.0, 0.0))
}
