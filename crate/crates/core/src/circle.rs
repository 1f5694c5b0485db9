//! Certified maximum and minimum of `|P|` over the unit circle.
//!
//! The certificate is derived from the Bernstein derivative bound rather
//! than interval arithmetic. Writing `T(theta) = |P(e^{i theta})|^2`, a
//! real trigonometric polynomial of degree `n`, Bernstein gives
//! `max |T'| <= n max T` and, iterated, `max |T''| <= n^2 max T`. With a
//! grid of spacing `h` this yields two rigorous brackets around the grid
//! extremum: the first-order Lipschitz correction `Mhat / (1 - n h / 2)`
//! and, because `T'` vanishes at the true extremum, the sharper
//! second-order correction `Mhat / sqrt(1 - n^2 h^2 / 8)`. The reported
//! `error_bound` always covers the true extremum; golden-section
//! refinement of the best bracket only improves the attained value.
//!
//! Grid evaluation fans out over a thread pool in fixed-size chunks and
//! is reduced in chunk order, so results are deterministic for a fixed
//! grid size regardless of thread count.

use std::f64::consts::TAU;

use num_complex::Complex64;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::polynomial::ComplexPolynomial;

/// Which extremum a [`CircleExtremum`] certifies.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExtremumKind {
    Max,
    Min,
}

/// A certified circle extremum: the true value lies within
/// `[value - error_bound, value + error_bound]`.
#[derive(Clone, Debug)]
pub struct CircleExtremum {
    pub value: f64,
    /// An attaining argument in `[0, 2 pi)`.
    pub theta: f64,
    /// Rigorous half-width around `value`.
    pub error_bound: f64,
    pub kind: ExtremumKind,
}

/// Grid controls: the starting grid size (raised to `64 n` for degree `n`)
/// and the hard cap beyond which the requested tolerance is reported as
/// unreachable.
#[derive(Clone, Copy, Debug)]
pub struct GridOptions {
    pub initial: usize,
    pub cap: usize,
}

impl Default for GridOptions {
    fn default() -> Self {
        GridOptions {
            initial: 4096,
            cap: 1 << 22,
        }
    }
}

struct GridScan {
    max_val: f64,
    max_idx: usize,
    min_val: f64,
    min_idx: usize,
}

const CHUNK: usize = 8192;

fn scan_grid(p: &ComplexPolynomial, n_points: usize) -> GridScan {
    let h = TAU / n_points as f64;
    let n_chunks = n_points.div_ceil(CHUNK);
    let partials: Vec<(f64, usize, f64, usize)> = (0..n_chunks)
        .into_par_iter()
        .map(|ci| {
            let start = ci * CHUNK;
            let end = ((ci + 1) * CHUNK).min(n_points);
            // Incremental rotation within a chunk, re-seeded at the chunk
            // boundary; the drift this introduces is covered by the
            // certificate padding below.
            let step = Complex64::from_polar(1.0, h);
            let mut z = Complex64::from_polar(1.0, h * start as f64);
            let mut max_val = f64::NEG_INFINITY;
            let mut max_idx = start;
            let mut min_val = f64::INFINITY;
            let mut min_idx = start;
            for j in start..end {
                let v = p.eval(z).norm();
                if v > max_val {
                    max_val = v;
                    max_idx = j;
                }
                if v < min_val {
                    min_val = v;
                    min_idx = j;
                }
                z *= step;
            }
            (max_val, max_idx, min_val, min_idx)
        })
        .collect();
    let mut out = GridScan {
        max_val: f64::NEG_INFINITY,
        max_idx: 0,
        min_val: f64::INFINITY,
        min_idx: 0,
    };
    for (max_val, max_idx, min_val, min_idx) in partials {
        if max_val > out.max_val {
            out.max_val = max_val;
            out.max_idx = max_idx;
        }
        if min_val < out.min_val {
            out.min_val = min_val;
            out.min_idx = min_idx;
        }
    }
    out
}

/// Golden-section refinement of `theta -> |P(e^{i theta})|^2` on a bracket,
/// tracking the best point actually evaluated. Returns `(theta, |P|)`.
fn golden_refine(p: &ComplexPolynomial, lo: f64, hi: f64, maximize: bool) -> (f64, f64) {
    const INVPHI: f64 = 0.618_033_988_749_894_8;
    let sq = |th: f64| p.eval(Complex64::from_polar(1.0, th)).norm_sqr();
    let better = |a: f64, b: f64| if maximize { a > b } else { a < b };

    let (mut a, mut b) = (lo, hi);
    let mut best_theta = a;
    let mut best_val = sq(a);
    for &(th, v) in &[(b, sq(b))] {
        if better(v, best_val) {
            best_val = v;
            best_theta = th;
        }
    }
    let mut c = b - INVPHI * (b - a);
    let mut d = a + INVPHI * (b - a);
    let mut fc = sq(c);
    let mut fd = sq(d);
    for _ in 0..100 {
        if better(fc, best_val) {
            best_val = fc;
            best_theta = c;
        }
        if better(fd, best_val) {
            best_val = fd;
            best_theta = d;
        }
        if better(fc, fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - INVPHI * (b - a);
            fc = sq(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + INVPHI * (b - a);
            fd = sq(d);
        }
        if b - a < 1e-13 {
            break;
        }
    }
    (best_theta.rem_euclid(TAU), best_val.max(0.0).sqrt())
}

fn exact_constant(p: &ComplexPolynomial, kind: ExtremumKind) -> CircleExtremum {
    CircleExtremum {
        value: p.coeff(0).norm(),
        theta: 0.0,
        error_bound: 0.0,
        kind,
    }
}

/// Certified `max |P|` over the unit circle; iterates grid doubling until
/// `error_bound <= tol * value` or the grid cap is exceeded, in which case
/// the best certified result travels with the error.
pub fn certified_max_modulus(p: &ComplexPolynomial, tol: f64) -> Result<CircleExtremum> {
    certified_max_modulus_with(p, tol, GridOptions::default())
}

pub fn certified_max_modulus_with(
    p: &ComplexPolynomial,
    tol: f64,
    opts: GridOptions,
) -> Result<CircleExtremum> {
    assert!(tol > 0.0, "tolerance must be positive");
    let n = p.degree();
    if n == 0 {
        return Ok(exact_constant(p, ExtremumKind::Max));
    }
    let nf = n as f64;
    let mut grid = opts.initial.max(64 * n);
    let mut best: Option<CircleExtremum> = None;
    loop {
        let h = TAU / grid as f64;
        let scan = scan_grid(p, grid);
        let grid_max = scan.max_val;
        let theta_best = h * scan.max_idx as f64;
        let (theta, refined) = golden_refine(p, theta_best - h, theta_best + h, true);
        let value = refined.max(grid_max);

        // First-order Lipschitz and second-order vanishing-derivative
        // corrections, both valid since n h / 2 < 1 on every grid here.
        let first = grid_max / (1.0 - nf * h / 2.0);
        let q = (nf * h).powi(2) / 8.0;
        let second = grid_max / (1.0 - q).sqrt();
        let pad = grid_max * (nf + 2.0) * 1e-12;
        let upper = first.min(second) + pad;
        let upper = upper.max(value);
        let error_bound = upper - value;

        let out = CircleExtremum {
            value,
            theta,
            error_bound,
            kind: ExtremumKind::Max,
        };
        if error_bound <= tol * value {
            return Ok(out);
        }
        if best
            .as_ref()
            .map(|b| out.error_bound < b.error_bound)
            .unwrap_or(true)
        {
            best = Some(out);
        }
        grid *= 2;
        if grid > opts.cap {
            return Err(Error::ExtremumTolUnreachable {
                best: Box::new(best.expect("at least one pass ran")),
            });
        }
    }
}

/// Certified `min |P|` over the unit circle. The Lipschitz constant uses a
/// certified upper bound of the maximum; near-zero minima (below
/// `1e-6 * max`) switch to an absolute acceptance `error_bound <= tol * max`,
/// since a minimum of exactly zero is a legitimate outcome.
pub fn certified_min_modulus(p: &ComplexPolynomial, tol: f64) -> Result<CircleExtremum> {
    certified_min_modulus_with(p, tol, GridOptions::default())
}

pub fn certified_min_modulus_with(
    p: &ComplexPolynomial,
    tol: f64,
    opts: GridOptions,
) -> Result<CircleExtremum> {
    assert!(tol > 0.0, "tolerance must be positive");
    let n = p.degree();
    if n == 0 {
        return Ok(exact_constant(p, ExtremumKind::Min));
    }
    let nf = n as f64;
    let max_upper = {
        let loose = GridOptions {
            initial: opts.initial,
            cap: opts.cap.min(1 << 16),
        };
        let est = max_modulus_lenient(p, 1e-3, loose);
        est.value + est.error_bound
    };
    let mut grid = opts.initial.max(64 * n);
    let mut best: Option<CircleExtremum> = None;
    loop {
        let h = TAU / grid as f64;
        let scan = scan_grid(p, grid);
        let grid_min = scan.min_val;
        let theta_best = h * scan.min_idx as f64;
        let (theta, refined) = golden_refine(p, theta_best - h, theta_best + h, false);
        let value = refined.min(grid_min);

        let pad = max_upper * (nf + 2.0) * 1e-12;
        let first = grid_min - nf * max_upper * h / 2.0;
        let second_sq = grid_min * grid_min - (nf * max_upper * h).powi(2) / 8.0;
        let second = if second_sq > 0.0 { second_sq.sqrt() } else { 0.0 };
        let lower = (first.max(second) - pad).max(0.0);
        let lower = lower.min(value);
        let error_bound = value - lower;

        let out = CircleExtremum {
            value,
            theta,
            error_bound,
            kind: ExtremumKind::Min,
        };
        let near_zero = value <= 1e-6 * max_upper;
        if error_bound <= tol * value || (near_zero && error_bound <= tol * max_upper) {
            return Ok(out);
        }
        if best
            .as_ref()
            .map(|b| out.error_bound < b.error_bound)
            .unwrap_or(true)
        {
            best = Some(out);
        }
        grid *= 2;
        if grid > opts.cap {
            return Err(Error::ExtremumTolUnreachable {
                best: Box::new(best.expect("at least one pass ran")),
            });
        }
    }
}

/// Unwraps a tolerance-unreachable result to its best certified extremum.
/// The bound is still rigorous, just wider than requested.
pub fn max_modulus_lenient(p: &ComplexPolynomial, tol: f64, opts: GridOptions) -> CircleExtremum {
    match certified_max_modulus_with(p, tol, opts) {
        Ok(e) => e,
        Err(Error::ExtremumTolUnreachable { best }) => *best,
        Err(_) => unreachable!("max certification only fails on tolerance"),
    }
}

/// Min-side counterpart of [`max_modulus_lenient`].
pub fn min_modulus_lenient(p: &ComplexPolynomial, tol: f64, opts: GridOptions) -> CircleExtremum {
    match certified_min_modulus_with(p, tol, opts) {
        Ok(e) => e,
        Err(Error::ExtremumTolUnreachable { best }) => *best,
        Err(_) => unreachable!("min certification only fails on tolerance"),
    }
}
