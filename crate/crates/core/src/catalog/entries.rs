//! The inequality registry: one entry per cataloged bound, with its
//! hypothesis class, direction, parameter schema, sharpness family, and
//! evaluator.
//!
//! Conventions shared by every evaluator:
//! - `|S[z^n]|` on a right-hand side is always the closed form
//!   `n |z|^{n-1}` (the degree-n terms of the operator image cancel
//!   identically), never a numerical operator application.
//! - `S[P](Rz)` means the operator applied to the dilated polynomial
//!   `z -> P(Rz)`, evaluated at `z`.
//! - Capital `M` and small `m` are certified circle extrema of `|P|`; their
//!   error bounds are folded into the verdict allowance with the same
//!   coefficients they carry in the bound.

use num_complex::Complex64;

use crate::circle::{max_modulus_lenient, min_modulus_lenient, CircleExtremum, GridOptions};
use crate::error::{Error, Result};
use crate::polynomial::ComplexPolynomial;
use crate::smirnov::{
    composite_transform_mutated, corollary_limit_lhs, half_growth, modified_smirnov_mutated,
    smirnov_alpha, CompositeParams, Mutation, OperatorContext,
};

use super::{
    AlphaDomain, CheckOptions, Direction, Evaluation, Hypothesis, InequalityEntry,
    InequalityInstance, ParamSchema, SharpFamily, ZDomain,
};

// ---------------------------------------------------------------------------
// Shared evaluation helpers
// ---------------------------------------------------------------------------

fn grid(opts: &CheckOptions) -> GridOptions {
    GridOptions {
        initial: 4096,
        cap: opts.grid_cap,
    }
}

fn max_of(p: &ComplexPolynomial, opts: &CheckOptions) -> CircleExtremum {
    max_modulus_lenient(p, opts.extremum_tol, grid(opts))
}

fn min_of(p: &ComplexPolynomial, opts: &CheckOptions) -> CircleExtremum {
    min_modulus_lenient(p, opts.extremum_tol, grid(opts))
}

/// `n |z|^{n-1}`, the modulus of the operator image of `z^n`.
fn monomial_image(n: usize, z: Complex64) -> f64 {
    n as f64 * z.norm().powi(n as i32 - 1)
}

/// Operator value at a point, assembled from pointwise evaluations of `P`
/// and `P'` rather than from the image polynomial.
fn pointwise_operator(
    p: &ComplexPolynomial,
    a: Complex64,
    n: usize,
    z: Complex64,
    mutation: Option<Mutation>,
) -> Complex64 {
    let first = (Complex64::new(1.0, 0.0) + a * z) * p.derivative().eval(z);
    if mutation == Some(Mutation::DropDegreeTerm) {
        first
    } else {
        first - a * (n as f64) * p.eval(z)
    }
}

fn operator_image(
    p: &ComplexPolynomial,
    a: Complex64,
    n: usize,
    mutation: Option<Mutation>,
) -> Result<ComplexPolynomial> {
    let ctx = OperatorContext::new(a, n)?;
    modified_smirnov_mutated(p, &ctx, mutation)
}

fn composite_image(
    inst: &InequalityInstance,
    mutation: Option<Mutation>,
) -> Result<ComplexPolynomial> {
    let ctx = OperatorContext::new(inst.a, inst.n)?;
    let cp = CompositeParams::new(inst.alpha, inst.beta, inst.r)?;
    composite_transform_mutated(&inst.p, &ctx, &cp, mutation)
}

/// The scalar factors `A = |R^n - alpha + kappa|` and `B = |1 - alpha + kappa|`.
fn composite_factors(
    alpha: Complex64,
    beta: Complex64,
    r: f64,
    n: usize,
    mutation: Option<Mutation>,
) -> Result<(f64, f64)> {
    let cp = CompositeParams::new(alpha, beta, r)?;
    let kappa = cp.kappa_mutated(n, mutation);
    let rn = Complex64::new(r.powi(n as i32), 0.0);
    let one = Complex64::new(1.0, 0.0);
    Ok(((rn - alpha + kappa).norm(), (one - alpha + kappa).norm()))
}

/// Right-hand side `0.5 * ((t1 + t2) M - (t1 - t2) m)` and its certified
/// allowance.
fn halved_bracket(t1: f64, t2: f64, max: &CircleExtremum, min: &CircleExtremum) -> (f64, f64) {
    let rhs = 0.5 * ((t1 + t2) * max.value - (t1 - t2) * min.value);
    let cert = 0.5 * ((t1 + t2) * max.error_bound + (t1 - t2).abs() * min.error_bound);
    (rhs, cert)
}

fn pair<'a>(inst: &'a InequalityInstance) -> &'a ComplexPolynomial {
    inst.f.as_ref().expect("pair entries are validated")
}

// ---------------------------------------------------------------------------
// Classical baselines
// ---------------------------------------------------------------------------

fn ev_bernstein_1_1(inst: &InequalityInstance, opts: &CheckOptions) -> Result<Evaluation> {
    let d = max_of(&inst.p.derivative(), opts);
    let m = max_of(&inst.p, opts);
    let n = inst.n as f64;
    Ok(Evaluation {
        lhs: d.value,
        rhs: n * m.value,
        cert: d.error_bound + n * m.error_bound,
    })
}

fn ev_growth_1_2(inst: &InequalityInstance, opts: &CheckOptions) -> Result<Evaluation> {
    let grown = max_of(&inst.p.dilate(inst.r), opts);
    let m = max_of(&inst.p, opts);
    let rn = inst.r.powi(inst.n as i32);
    Ok(Evaluation {
        lhs: grown.value,
        rhs: rn * m.value,
        cert: grown.error_bound + rn * m.error_bound,
    })
}

fn ev_aziz_dawood_3(inst: &InequalityInstance, opts: &CheckOptions) -> Result<Evaluation> {
    let d = min_of(&inst.p.derivative(), opts);
    let m = min_of(&inst.p, opts);
    let n = inst.n as f64;
    Ok(Evaluation {
        lhs: d.value,
        rhs: n * m.value,
        cert: d.error_bound + n * m.error_bound,
    })
}

fn ev_aziz_dawood_4(inst: &InequalityInstance, opts: &CheckOptions) -> Result<Evaluation> {
    let grown = min_of(&inst.p.dilate(inst.r), opts);
    let m = min_of(&inst.p, opts);
    let rn = inst.r.powi(inst.n as i32);
    Ok(Evaluation {
        lhs: grown.value,
        rhs: rn * m.value,
        cert: grown.error_bound + rn * m.error_bound,
    })
}

fn ev_erdos_lax_1_3(inst: &InequalityInstance, opts: &CheckOptions) -> Result<Evaluation> {
    let d = max_of(&inst.p.derivative(), opts);
    let m = max_of(&inst.p, opts);
    let half_n = inst.n as f64 / 2.0;
    Ok(Evaluation {
        lhs: d.value,
        rhs: half_n * m.value,
        cert: d.error_bound + half_n * m.error_bound,
    })
}

fn ev_ankeny_rivlin_1_4(inst: &InequalityInstance, opts: &CheckOptions) -> Result<Evaluation> {
    let grown = max_of(&inst.p.dilate(inst.r), opts);
    let m = max_of(&inst.p, opts);
    let coef = (inst.r.powi(inst.n as i32) + 1.0) / 2.0;
    Ok(Evaluation {
        lhs: grown.value,
        rhs: coef * m.value,
        cert: grown.error_bound + coef * m.error_bound,
    })
}

fn ev_aziz_dawood_5(inst: &InequalityInstance, opts: &CheckOptions) -> Result<Evaluation> {
    let d = max_of(&inst.p.derivative(), opts);
    let mx = max_of(&inst.p, opts);
    let mn = min_of(&inst.p, opts);
    let half_n = inst.n as f64 / 2.0;
    Ok(Evaluation {
        lhs: d.value,
        rhs: half_n * (mx.value - mn.value),
        cert: d.error_bound + half_n * (mx.error_bound + mn.error_bound),
    })
}

fn ev_aziz_dawood_6(inst: &InequalityInstance, opts: &CheckOptions) -> Result<Evaluation> {
    let grown = max_of(&inst.p.dilate(inst.r), opts);
    let mx = max_of(&inst.p, opts);
    let mn = min_of(&inst.p, opts);
    let rn = inst.r.powi(inst.n as i32);
    let c_max = (rn + 1.0) / 2.0;
    let c_min = (rn - 1.0) / 2.0;
    Ok(Evaluation {
        lhs: grown.value,
        rhs: c_max * mx.value - c_min * mn.value,
        cert: grown.error_bound + c_max * mx.error_bound + c_min * mn.error_bound,
    })
}

fn ev_aziz_rather_1_5(inst: &InequalityInstance, opts: &CheckOptions) -> Result<Evaluation> {
    let mx = max_of(&inst.p, opts);
    let lhs = (inst.p.eval(inst.z * inst.r) - inst.alpha * inst.p.eval(inst.z)).norm();
    let factor = (Complex64::new(inst.r.powi(inst.n as i32), 0.0) - inst.alpha).norm();
    let coef = factor * inst.z.norm().powi(inst.n as i32);
    Ok(Evaluation {
        lhs,
        rhs: coef * mx.value,
        cert: coef * mx.error_bound,
    })
}

fn ev_aziz_rather_1_6(inst: &InequalityInstance, opts: &CheckOptions) -> Result<Evaluation> {
    let mx = max_of(&inst.p, opts);
    let lhs = (inst.p.eval(inst.z * inst.r) - inst.alpha * inst.p.eval(inst.z)).norm();
    let one = Complex64::new(1.0, 0.0);
    let factor = (Complex64::new(inst.r.powi(inst.n as i32), 0.0) - inst.alpha).norm();
    let coef = 0.5 * (factor * inst.z.norm().powi(inst.n as i32) + (one - inst.alpha).norm());
    Ok(Evaluation {
        lhs,
        rhs: coef * mx.value,
        cert: coef * mx.error_bound,
    })
}

fn ev_aziz_rather_7(inst: &InequalityInstance, opts: &CheckOptions) -> Result<Evaluation> {
    let q = inst.p.dilate(inst.r).sub(&inst.p.scale(inst.alpha));
    let lhs = min_of(&q, opts);
    let mn = min_of(&inst.p, opts);
    let factor = (Complex64::new(inst.r.powi(inst.n as i32), 0.0) - inst.alpha).norm();
    Ok(Evaluation {
        lhs: lhs.value,
        rhs: factor * mn.value,
        cert: lhs.error_bound + factor * mn.error_bound,
    })
}

fn ev_aziz_rather_8(inst: &InequalityInstance, opts: &CheckOptions) -> Result<Evaluation> {
    let mx = max_of(&inst.p, opts);
    let mn = min_of(&inst.p, opts);
    let lhs = (inst.p.eval(inst.z * inst.r) - inst.alpha * inst.p.eval(inst.z)).norm();
    let t1 = (Complex64::new(inst.r.powi(inst.n as i32), 0.0) - inst.alpha).norm();
    let t2 = (Complex64::new(1.0, 0.0) - inst.alpha).norm();
    let (rhs, cert) = halved_bracket(t1, t2, &mx, &mn);
    Ok(Evaluation { lhs, rhs, cert })
}

fn ev_dominated_derivative(inst: &InequalityInstance, _opts: &CheckOptions) -> Result<Evaluation> {
    Ok(Evaluation {
        lhs: inst.p.derivative().eval(inst.z).norm(),
        rhs: pair(inst).derivative().eval(inst.z).norm(),
        cert: 0.0,
    })
}

fn ev_dominated_smirnov_alpha(
    inst: &InequalityInstance,
    _opts: &CheckOptions,
) -> Result<Evaluation> {
    let lhs = smirnov_alpha(&inst.p, inst.alpha, inst.n)?.eval(inst.z).norm();
    let rhs = smirnov_alpha(pair(inst), inst.alpha, inst.n)?
        .eval(inst.z)
        .norm();
    Ok(Evaluation { lhs, rhs, cert: 0.0 })
}

// ---------------------------------------------------------------------------
// Modified-operator baselines
// ---------------------------------------------------------------------------

fn ev_operator_max_1_8(inst: &InequalityInstance, opts: &CheckOptions) -> Result<Evaluation> {
    let mx = max_of(&inst.p, opts);
    let lhs = operator_image(&inst.p, inst.a, inst.n, opts.mutation)?
        .eval(inst.z)
        .norm();
    let coef = monomial_image(inst.n, inst.z);
    Ok(Evaluation {
        lhs,
        rhs: mx.value * coef,
        cert: coef * mx.error_bound,
    })
}

fn ev_operator_max_1_9(inst: &InequalityInstance, opts: &CheckOptions) -> Result<Evaluation> {
    let mx = max_of(&inst.p, opts);
    let lhs = pointwise_operator(&inst.p, inst.a, inst.n, inst.z, opts.mutation).norm();
    let coef = monomial_image(inst.n, inst.z);
    Ok(Evaluation {
        lhs,
        rhs: mx.value * coef,
        cert: coef * mx.error_bound,
    })
}

fn ev_operator_nonvanishing_1_10(
    inst: &InequalityInstance,
    opts: &CheckOptions,
) -> Result<Evaluation> {
    let mx = max_of(&inst.p, opts);
    let lhs = operator_image(&inst.p, inst.a, inst.n, opts.mutation)?
        .eval(inst.z)
        .norm();
    let coef = 0.5 * (monomial_image(inst.n, inst.z) + inst.n as f64 * inst.a.norm());
    Ok(Evaluation {
        lhs,
        rhs: coef * mx.value,
        cert: coef * mx.error_bound,
    })
}

fn ev_operator_nonvanishing_1_11(
    inst: &InequalityInstance,
    opts: &CheckOptions,
) -> Result<Evaluation> {
    let mx = max_of(&inst.p, opts);
    let lhs = pointwise_operator(&inst.p, inst.a, inst.n, inst.z, opts.mutation).norm();
    let coef = 0.5 * (monomial_image(inst.n, inst.z) + inst.n as f64 * inst.a.norm());
    Ok(Evaluation {
        lhs,
        rhs: coef * mx.value,
        cert: coef * mx.error_bound,
    })
}

fn ev_operator_min_9(inst: &InequalityInstance, opts: &CheckOptions) -> Result<Evaluation> {
    let mn = min_of(&inst.p, opts);
    let lhs = operator_image(&inst.p, inst.a, inst.n, opts.mutation)?
        .eval(inst.z)
        .norm();
    let coef = monomial_image(inst.n, inst.z);
    Ok(Evaluation {
        lhs,
        rhs: coef * mn.value,
        cert: coef * mn.error_bound,
    })
}

fn ev_operator_bracket_10(inst: &InequalityInstance, opts: &CheckOptions) -> Result<Evaluation> {
    let mx = max_of(&inst.p, opts);
    let mn = min_of(&inst.p, opts);
    let lhs = operator_image(&inst.p, inst.a, inst.n, opts.mutation)?
        .eval(inst.z)
        .norm();
    let t1 = monomial_image(inst.n, inst.z);
    let t2 = inst.n as f64 * inst.a.norm();
    let (rhs, cert) = halved_bracket(t1, t2, &mx, &mn);
    Ok(Evaluation { lhs, rhs, cert })
}

fn ev_operator_composite_1_12(
    inst: &InequalityInstance,
    opts: &CheckOptions,
) -> Result<Evaluation> {
    let mx = max_of(&inst.p, opts);
    let ctx = OperatorContext::new(inst.a, inst.n)?;
    let dilated = modified_smirnov_mutated(&inst.p.dilate(inst.r), &ctx, opts.mutation)?;
    let base = modified_smirnov_mutated(&inst.p, &ctx, opts.mutation)?;
    let lhs = dilated.sub(&base.scale(inst.alpha)).eval(inst.z).norm();
    let factor = (Complex64::new(inst.r.powi(inst.n as i32), 0.0) - inst.alpha).norm();
    let coef = factor * monomial_image(inst.n, inst.z);
    Ok(Evaluation {
        lhs,
        rhs: coef * mx.value,
        cert: coef * mx.error_bound,
    })
}

fn ev_operator_composite_1_13(
    inst: &InequalityInstance,
    opts: &CheckOptions,
) -> Result<Evaluation> {
    let mx = max_of(&inst.p, opts);
    let ctx = OperatorContext::new(inst.a, inst.n)?;
    let dilated = modified_smirnov_mutated(&inst.p.dilate(inst.r), &ctx, opts.mutation)?;
    let base = modified_smirnov_mutated(&inst.p, &ctx, opts.mutation)?;
    let lhs = dilated.sub(&base.scale(inst.alpha)).eval(inst.z).norm();
    let one = Complex64::new(1.0, 0.0);
    let factor = (Complex64::new(inst.r.powi(inst.n as i32), 0.0) - inst.alpha).norm();
    let coef = 0.5
        * (factor * monomial_image(inst.n, inst.z)
            + inst.n as f64 * (one - inst.alpha).norm() * inst.a.norm());
    Ok(Evaluation {
        lhs,
        rhs: coef * mx.value,
        cert: coef * mx.error_bound,
    })
}

// ---------------------------------------------------------------------------
// Composite bounds without the operator
// ---------------------------------------------------------------------------

fn ev_composite_min_1_14(inst: &InequalityInstance, opts: &CheckOptions) -> Result<Evaluation> {
    let cp = CompositeParams::new(inst.alpha, inst.beta, inst.r)?;
    let kappa = cp.kappa(inst.n);
    let q = inst
        .p
        .dilate(inst.r)
        .add(&inst.p.scale(kappa - inst.alpha));
    let lhs = min_of(&q, opts);
    let mn = min_of(&inst.p, opts);
    let (factor, _) = composite_factors(inst.alpha, inst.beta, inst.r, inst.n, opts.mutation)?;
    Ok(Evaluation {
        lhs: lhs.value,
        rhs: factor * mn.value,
        cert: lhs.error_bound + factor * mn.error_bound,
    })
}

fn ev_composite_bracket_1_15(
    inst: &InequalityInstance,
    opts: &CheckOptions,
) -> Result<Evaluation> {
    let mx = max_of(&inst.p, opts);
    let mn = min_of(&inst.p, opts);
    let cp = CompositeParams::new(inst.alpha, inst.beta, inst.r)?;
    let kappa = cp.kappa(inst.n);
    let lhs = (inst.p.eval(inst.z * inst.r) + (kappa - inst.alpha) * inst.p.eval(inst.z)).norm();
    let (t1, t2) = composite_factors(inst.alpha, inst.beta, inst.r, inst.n, opts.mutation)?;
    let (rhs, cert) = halved_bracket(t1, t2, &mx, &mn);
    Ok(Evaluation { lhs, rhs, cert })
}

// ---------------------------------------------------------------------------
// Main operator bounds and corollaries
// ---------------------------------------------------------------------------

fn ev_main_min_2_1(inst: &InequalityInstance, opts: &CheckOptions) -> Result<Evaluation> {
    let mn = min_of(&inst.p, opts);
    let lhs = composite_image(inst, opts.mutation)?.eval(inst.z).norm();
    let (factor, _) = composite_factors(inst.alpha, inst.beta, inst.r, inst.n, opts.mutation)?;
    let coef = factor * monomial_image(inst.n, inst.z);
    Ok(Evaluation {
        lhs,
        rhs: coef * mn.value,
        cert: coef * mn.error_bound,
    })
}

fn ev_main_min_alpha0(inst: &InequalityInstance, opts: &CheckOptions) -> Result<Evaluation> {
    let mn = min_of(&inst.p, opts);
    let t = half_growth(inst.r, inst.n);
    let ctx = OperatorContext::new(inst.a, inst.n)?;
    let dilated = modified_smirnov_mutated(&inst.p.dilate(inst.r), &ctx, opts.mutation)?;
    let base = modified_smirnov_mutated(&inst.p, &ctx, opts.mutation)?;
    let lhs = dilated
        .add(&base.scale(inst.beta * t))
        .eval(inst.z)
        .norm();
    let factor = (Complex64::new(inst.r.powi(inst.n as i32), 0.0) + inst.beta * t).norm();
    let coef = factor * monomial_image(inst.n, inst.z);
    Ok(Evaluation {
        lhs,
        rhs: coef * mn.value,
        cert: coef * mn.error_bound,
    })
}

fn ev_main_min_beta0(inst: &InequalityInstance, opts: &CheckOptions) -> Result<Evaluation> {
    let mn = min_of(&inst.p, opts);
    let ctx = OperatorContext::new(inst.a, inst.n)?;
    let dilated = modified_smirnov_mutated(&inst.p.dilate(inst.r), &ctx, opts.mutation)?;
    let base = modified_smirnov_mutated(&inst.p, &ctx, opts.mutation)?;
    let lhs = dilated.sub(&base.scale(inst.alpha)).eval(inst.z).norm();
    let factor = (Complex64::new(inst.r.powi(inst.n as i32), 0.0) - inst.alpha).norm();
    let coef = factor * monomial_image(inst.n, inst.z);
    Ok(Evaluation {
        lhs,
        rhs: coef * mn.value,
        cert: coef * mn.error_bound,
    })
}

fn ev_limit_min_2_2(inst: &InequalityInstance, opts: &CheckOptions) -> Result<Evaluation> {
    let mn = min_of(&inst.p, opts);
    let ctx = OperatorContext::new(inst.a, inst.n)?;
    let lhs = corollary_limit_lhs(&inst.p, &ctx, inst.beta)?
        .eval(inst.z)
        .norm();
    let n = inst.n as f64;
    let coef = n
        * (Complex64::new(1.0, 0.0) + inst.beta / 2.0).norm()
        * monomial_image(inst.n, inst.z);
    Ok(Evaluation {
        lhs,
        rhs: coef * mn.value,
        cert: coef * mn.error_bound,
    })
}

fn ev_main_bracket_2_3(inst: &InequalityInstance, opts: &CheckOptions) -> Result<Evaluation> {
    let mx = max_of(&inst.p, opts);
    let mn = min_of(&inst.p, opts);
    let lhs = composite_image(inst, opts.mutation)?.eval(inst.z).norm();
    let (fa, fb) = composite_factors(inst.alpha, inst.beta, inst.r, inst.n, opts.mutation)?;
    let t1 = fa * monomial_image(inst.n, inst.z);
    let t2 = fb * inst.n as f64 * inst.a.norm();
    let (rhs, cert) = halved_bracket(t1, t2, &mx, &mn);
    Ok(Evaluation { lhs, rhs, cert })
}

fn ev_main_bracket_beta0(inst: &InequalityInstance, opts: &CheckOptions) -> Result<Evaluation> {
    let mx = max_of(&inst.p, opts);
    let mn = min_of(&inst.p, opts);
    let ctx = OperatorContext::new(inst.a, inst.n)?;
    let dilated = modified_smirnov_mutated(&inst.p.dilate(inst.r), &ctx, opts.mutation)?;
    let base = modified_smirnov_mutated(&inst.p, &ctx, opts.mutation)?;
    let lhs = dilated.sub(&base.scale(inst.alpha)).eval(inst.z).norm();
    let one = Complex64::new(1.0, 0.0);
    let t1 = (Complex64::new(inst.r.powi(inst.n as i32), 0.0) - inst.alpha).norm()
        * monomial_image(inst.n, inst.z);
    let t2 = (one - inst.alpha).norm() * inst.n as f64 * inst.a.norm();
    let (rhs, cert) = halved_bracket(t1, t2, &mx, &mn);
    Ok(Evaluation { lhs, rhs, cert })
}

fn ev_main_bracket_alpha0(inst: &InequalityInstance, opts: &CheckOptions) -> Result<Evaluation> {
    let mx = max_of(&inst.p, opts);
    let mn = min_of(&inst.p, opts);
    let t = half_growth(inst.r, inst.n);
    let ctx = OperatorContext::new(inst.a, inst.n)?;
    let dilated = modified_smirnov_mutated(&inst.p.dilate(inst.r), &ctx, opts.mutation)?;
    let base = modified_smirnov_mutated(&inst.p, &ctx, opts.mutation)?;
    let lhs = dilated
        .add(&base.scale(inst.beta * t))
        .eval(inst.z)
        .norm();
    let one = Complex64::new(1.0, 0.0);
    let t1 = (Complex64::new(inst.r.powi(inst.n as i32), 0.0) + inst.beta * t).norm()
        * monomial_image(inst.n, inst.z);
    let t2 = (one + inst.beta * t).norm() * inst.n as f64 * inst.a.norm();
    let (rhs, cert) = halved_bracket(t1, t2, &mx, &mn);
    Ok(Evaluation { lhs, rhs, cert })
}

fn ev_limit_bracket_2_4(inst: &InequalityInstance, opts: &CheckOptions) -> Result<Evaluation> {
    let mx = max_of(&inst.p, opts);
    let mn = min_of(&inst.p, opts);
    let ctx = OperatorContext::new(inst.a, inst.n)?;
    let lhs = corollary_limit_lhs(&inst.p, &ctx, inst.beta)?
        .eval(inst.z)
        .norm();
    let n = inst.n as f64;
    let t1 = (Complex64::new(1.0, 0.0) + inst.beta / 2.0).norm() * monomial_image(inst.n, inst.z);
    let t2 = 0.5 * n * inst.beta.norm() * inst.a.norm();
    let (inner, inner_cert) = halved_bracket(t1, t2, &mx, &mn);
    Ok(Evaluation {
        lhs,
        rhs: n * inner,
        cert: n * inner_cert,
    })
}

// ---------------------------------------------------------------------------
// Lemmas
// ---------------------------------------------------------------------------

fn ev_capped_growth_3_1(inst: &InequalityInstance, _opts: &CheckOptions) -> Result<Evaluation> {
    let k = inst.cap_k.ok_or_else(|| {
        Error::ParamOutOfDomain("capped growth requires a root cap".into())
    })?;
    let bound = ((inst.r + k) / (1.0 + k)).powi(inst.n as i32);
    Ok(Evaluation {
        lhs: inst.p.eval(inst.z * inst.r).norm(),
        rhs: bound * inst.p.eval(inst.z).norm(),
        cert: 0.0,
    })
}

fn ev_dominated_composite_3_2(
    inst: &InequalityInstance,
    opts: &CheckOptions,
) -> Result<Evaluation> {
    let ctx = OperatorContext::new(inst.a, inst.n)?;
    let cp = CompositeParams::new(inst.alpha, inst.beta, inst.r)?;
    let lhs = composite_transform_mutated(&inst.p, &ctx, &cp, opts.mutation)?
        .eval(inst.z)
        .norm();
    let rhs = composite_transform_mutated(pair(inst), &ctx, &cp, opts.mutation)?
        .eval(inst.z)
        .norm();
    Ok(Evaluation { lhs, rhs, cert: 0.0 })
}

fn ev_reciprocal_sum_3_3(inst: &InequalityInstance, opts: &CheckOptions) -> Result<Evaluation> {
    let mx = max_of(&inst.p, opts);
    let q = inst.p.conjugate_reciprocal(inst.n)?;
    let ctx = OperatorContext::new(inst.a, inst.n)?;
    let cp = CompositeParams::new(inst.alpha, inst.beta, inst.r)?;
    let lhs = composite_transform_mutated(&inst.p, &ctx, &cp, opts.mutation)?
        .eval(inst.z)
        .norm()
        + composite_transform_mutated(&q, &ctx, &cp, opts.mutation)?
            .eval(inst.z)
            .norm();
    let (fa, fb) = composite_factors(inst.alpha, inst.beta, inst.r, inst.n, opts.mutation)?;
    let coef =
        fa * monomial_image(inst.n, inst.z) + fb * inst.n as f64 * inst.a.norm();
    Ok(Evaluation {
        lhs,
        rhs: coef * mx.value,
        cert: coef * mx.error_bound,
    })
}

// ---------------------------------------------------------------------------
// Registry
// ---------------------------------------------------------------------------

const UNIT_DISK_ALPHA_R: ParamSchema = ParamSchema {
    uses_a: false,
    alpha: AlphaDomain::UnitDisk,
    uses_beta: false,
    uses_r: true,
    z: ZDomain::NotUsed,
    uses_cap: false,
};

const OPERATOR_POINT: ParamSchema = ParamSchema {
    uses_a: true,
    alpha: AlphaDomain::NotUsed,
    uses_beta: false,
    uses_r: false,
    z: ZDomain::ClosedExterior,
    uses_cap: false,
};

const OPERATOR_FULL: ParamSchema = ParamSchema {
    uses_a: true,
    alpha: AlphaDomain::UnitDisk,
    uses_beta: true,
    uses_r: true,
    z: ZDomain::ClosedExterior,
    uses_cap: false,
};

static REGISTRY: &[InequalityEntry] = &[
    InequalityEntry {
        id: "bernstein-1.1",
        citation: "Bernstein derivative bound (1912)",
        hypothesis: Hypothesis::Unrestricted,
        direction: Direction::LhsLeqRhs,
        schema: ParamSchema::none(),
        sharp_family: SharpFamily::Monomial,
        eval: ev_bernstein_1_1,
    },
    InequalityEntry {
        id: "growth-1.2",
        citation: "maximum modulus growth under dilation",
        hypothesis: Hypothesis::Unrestricted,
        direction: Direction::LhsLeqRhs,
        schema: ParamSchema {
            uses_r: true,
            ..ParamSchema::none()
        },
        sharp_family: SharpFamily::Monomial,
        eval: ev_growth_1_2,
    },
    InequalityEntry {
        id: "aziz-dawood-3",
        citation: "Aziz-Dawood derivative minimum (1988)",
        hypothesis: Hypothesis::AllZerosInClosedDisk,
        direction: Direction::LhsGeqRhs,
        schema: ParamSchema::none(),
        sharp_family: SharpFamily::Monomial,
        eval: ev_aziz_dawood_3,
    },
    InequalityEntry {
        id: "aziz-dawood-4",
        citation: "Aziz-Dawood dilation minimum (1988)",
        hypothesis: Hypothesis::AllZerosInClosedDisk,
        direction: Direction::LhsGeqRhs,
        schema: ParamSchema {
            uses_r: true,
            ..ParamSchema::none()
        },
        sharp_family: SharpFamily::Monomial,
        eval: ev_aziz_dawood_4,
    },
    InequalityEntry {
        id: "erdos-lax-1.3",
        citation: "Erdos conjecture, proved by Lax (1944)",
        hypothesis: Hypothesis::NoZerosInOpenDisk,
        direction: Direction::LhsLeqRhs,
        schema: ParamSchema::none(),
        sharp_family: SharpFamily::BalancedBinomial { modulus: 1.0 },
        eval: ev_erdos_lax_1_3,
    },
    InequalityEntry {
        id: "ankeny-rivlin-1.4",
        citation: "Ankeny-Rivlin growth bound (1955)",
        hypothesis: Hypothesis::NoZerosInOpenDisk,
        direction: Direction::LhsLeqRhs,
        schema: ParamSchema {
            uses_r: true,
            ..ParamSchema::none()
        },
        sharp_family: SharpFamily::BalancedBinomial { modulus: 1.0 },
        eval: ev_ankeny_rivlin_1_4,
    },
    InequalityEntry {
        id: "aziz-dawood-5",
        citation: "Aziz-Dawood refined derivative bound (1988)",
        hypothesis: Hypothesis::NoZerosInOpenDisk,
        direction: Direction::LhsLeqRhs,
        schema: ParamSchema::none(),
        sharp_family: SharpFamily::BalancedBinomial { modulus: 1.0 },
        eval: ev_aziz_dawood_5,
    },
    InequalityEntry {
        id: "aziz-dawood-6",
        citation: "Aziz-Dawood refined growth bound (1988)",
        hypothesis: Hypothesis::NoZerosInOpenDisk,
        direction: Direction::LhsLeqRhs,
        schema: ParamSchema {
            uses_r: true,
            ..ParamSchema::none()
        },
        sharp_family: SharpFamily::BalancedBinomial { modulus: 1.0 },
        eval: ev_aziz_dawood_6,
    },
    InequalityEntry {
        id: "aziz-rather-1.5",
        citation: "Aziz-Rather composite growth bound (1999)",
        hypothesis: Hypothesis::Unrestricted,
        direction: Direction::LhsLeqRhs,
        schema: ParamSchema {
            z: ZDomain::ClosedExterior,
            ..UNIT_DISK_ALPHA_R
        },
        sharp_family: SharpFamily::Monomial,
        eval: ev_aziz_rather_1_5,
    },
    InequalityEntry {
        id: "aziz-rather-1.6",
        citation: "Aziz-Rather nonvanishing composite bound (1999)",
        hypothesis: Hypothesis::NoZerosInOpenDisk,
        direction: Direction::LhsLeqRhs,
        schema: ParamSchema {
            z: ZDomain::ClosedExterior,
            ..UNIT_DISK_ALPHA_R
        },
        sharp_family: SharpFamily::MonicPlusConstant,
        eval: ev_aziz_rather_1_6,
    },
    InequalityEntry {
        id: "aziz-rather-7",
        citation: "Aziz-Rather composite minimum (1988)",
        hypothesis: Hypothesis::AllZerosInClosedDisk,
        direction: Direction::LhsGeqRhs,
        schema: UNIT_DISK_ALPHA_R,
        sharp_family: SharpFamily::RotatedMonomial,
        eval: ev_aziz_rather_7,
    },
    InequalityEntry {
        id: "aziz-rather-8",
        citation: "Aziz-Rather refined composite bound (1988)",
        hypothesis: Hypothesis::NoZerosInOpenDisk,
        direction: Direction::LhsLeqRhs,
        schema: ParamSchema {
            z: ZDomain::UnitCircle,
            ..UNIT_DISK_ALPHA_R
        },
        sharp_family: SharpFamily::BalancedBinomial { modulus: 0.5 },
        eval: ev_aziz_rather_8,
    },
    InequalityEntry {
        id: "thm-a",
        citation: "Bernstein dominated-pair derivative comparison (1930)",
        hypothesis: Hypothesis::DominatedPair,
        direction: Direction::LhsLeqRhs,
        schema: ParamSchema {
            z: ZDomain::ClosedExterior,
            ..ParamSchema::none()
        },
        sharp_family: SharpFamily::RotatedCopy,
        eval: ev_dominated_derivative,
    },
    InequalityEntry {
        id: "thm-b-1.7",
        citation: "Smirnov dominated-pair operator comparison (1964)",
        hypothesis: Hypothesis::DominatedPair,
        direction: Direction::LhsLeqRhs,
        schema: ParamSchema {
            alpha: AlphaDomain::OmegaOfZ,
            z: ZDomain::ClosedExterior,
            ..ParamSchema::none()
        },
        sharp_family: SharpFamily::RotatedCopy,
        eval: ev_dominated_smirnov_alpha,
    },
    InequalityEntry {
        id: "shah-fatima-1.8",
        citation: "Shah-Fatima operator maximum bound (2022)",
        hypothesis: Hypothesis::Unrestricted,
        direction: Direction::LhsLeqRhs,
        schema: OPERATOR_POINT,
        sharp_family: SharpFamily::Monomial,
        eval: ev_operator_max_1_8,
    },
    InequalityEntry {
        id: "shah-fatima-1.9",
        citation: "Shah-Fatima operator maximum bound, expanded form (2022)",
        hypothesis: Hypothesis::Unrestricted,
        direction: Direction::LhsLeqRhs,
        schema: OPERATOR_POINT,
        sharp_family: SharpFamily::Monomial,
        eval: ev_operator_max_1_9,
    },
    InequalityEntry {
        id: "shah-fatima-1.10",
        citation: "Shah-Fatima nonvanishing operator bound (2022)",
        hypothesis: Hypothesis::NoZerosInOpenDisk,
        direction: Direction::LhsLeqRhs,
        schema: OPERATOR_POINT,
        sharp_family: SharpFamily::MonicPlusConstant,
        eval: ev_operator_nonvanishing_1_10,
    },
    InequalityEntry {
        id: "shah-fatima-1.11",
        citation: "Shah-Fatima nonvanishing operator bound, expanded form (2022)",
        hypothesis: Hypothesis::NoZerosInOpenDisk,
        direction: Direction::LhsLeqRhs,
        schema: OPERATOR_POINT,
        sharp_family: SharpFamily::MonicPlusConstant,
        eval: ev_operator_nonvanishing_1_11,
    },
    InequalityEntry {
        id: "shah-fatima-9",
        citation: "Shah-Fatima operator minimum bound (2022)",
        hypothesis: Hypothesis::AllZerosInClosedDisk,
        direction: Direction::LhsGeqRhs,
        schema: OPERATOR_POINT,
        sharp_family: SharpFamily::Monomial,
        eval: ev_operator_min_9,
    },
    InequalityEntry {
        id: "shah-fatima-10",
        citation: "Shah-Fatima operator bracket bound (2022)",
        hypothesis: Hypothesis::NoZerosInOpenDisk,
        direction: Direction::LhsLeqRhs,
        schema: OPERATOR_POINT,
        sharp_family: SharpFamily::MonicPlusConstant,
        eval: ev_operator_bracket_10,
    },
    InequalityEntry {
        id: "wani-liman-1.12",
        citation: "Wani-Liman operator composite bound (2024)",
        hypothesis: Hypothesis::Unrestricted,
        direction: Direction::LhsLeqRhs,
        schema: ParamSchema {
            uses_a: true,
            alpha: AlphaDomain::UnitDisk,
            uses_r: true,
            z: ZDomain::ClosedExterior,
            ..ParamSchema::none()
        },
        sharp_family: SharpFamily::Monomial,
        eval: ev_operator_composite_1_12,
    },
    InequalityEntry {
        id: "wani-liman-1.13",
        citation: "Wani-Liman nonvanishing operator composite bound (2024)",
        hypothesis: Hypothesis::NoZerosInOpenDisk,
        direction: Direction::LhsLeqRhs,
        schema: ParamSchema {
            uses_a: true,
            alpha: AlphaDomain::UnitDisk,
            uses_r: true,
            z: ZDomain::ClosedExterior,
            ..ParamSchema::none()
        },
        sharp_family: SharpFamily::Monomial,
        eval: ev_operator_composite_1_13,
    },
    InequalityEntry {
        id: "dewan-hans-1.14",
        citation: "Dewan-Hans composite minimum (2013)",
        hypothesis: Hypothesis::AllZerosInClosedDisk,
        direction: Direction::LhsGeqRhs,
        schema: ParamSchema {
            uses_beta: true,
            ..UNIT_DISK_ALPHA_R
        },
        sharp_family: SharpFamily::RotatedMonomial,
        eval: ev_composite_min_1_14,
    },
    InequalityEntry {
        id: "dewan-hans-1.15",
        citation: "Dewan-Hans composite bracket bound (2013)",
        hypothesis: Hypothesis::NoZerosInOpenDisk,
        direction: Direction::LhsLeqRhs,
        schema: ParamSchema {
            uses_beta: true,
            z: ZDomain::UnitCircle,
            ..UNIT_DISK_ALPHA_R
        },
        sharp_family: SharpFamily::BalancedBinomial { modulus: 0.5 },
        eval: ev_composite_bracket_1_15,
    },
    InequalityEntry {
        id: "thm1-2.1",
        citation: "operator composite minimum, zeros in the closed disk",
        hypothesis: Hypothesis::AllZerosInClosedDisk,
        direction: Direction::LhsGeqRhs,
        schema: OPERATOR_FULL,
        sharp_family: SharpFamily::Monomial,
        eval: ev_main_min_2_1,
    },
    InequalityEntry {
        id: "thm1-alpha0",
        citation: "operator composite minimum at alpha = 0",
        hypothesis: Hypothesis::AllZerosInClosedDisk,
        direction: Direction::LhsGeqRhs,
        schema: ParamSchema {
            alpha: AlphaDomain::NotUsed,
            ..OPERATOR_FULL
        },
        sharp_family: SharpFamily::Monomial,
        eval: ev_main_min_alpha0,
    },
    InequalityEntry {
        id: "thm1-beta0",
        citation: "operator composite minimum at beta = 0",
        hypothesis: Hypothesis::AllZerosInClosedDisk,
        direction: Direction::LhsGeqRhs,
        schema: ParamSchema {
            uses_beta: false,
            ..OPERATOR_FULL
        },
        sharp_family: SharpFamily::Monomial,
        eval: ev_main_min_beta0,
    },
    InequalityEntry {
        id: "cor-2.2",
        citation: "dilation-limit operator minimum",
        hypothesis: Hypothesis::AllZerosInClosedDisk,
        direction: Direction::LhsGeqRhs,
        schema: ParamSchema {
            uses_a: true,
            uses_beta: true,
            z: ZDomain::ClosedExterior,
            ..ParamSchema::none()
        },
        sharp_family: SharpFamily::Monomial,
        eval: ev_limit_min_2_2,
    },
    InequalityEntry {
        id: "thm2-2.3",
        citation: "operator composite bracket bound, nonvanishing in the disk",
        hypothesis: Hypothesis::NoZerosInOpenDisk,
        direction: Direction::LhsLeqRhs,
        schema: OPERATOR_FULL,
        sharp_family: SharpFamily::MonicPlusConstant,
        eval: ev_main_bracket_2_3,
    },
    InequalityEntry {
        id: "thm2-beta0",
        citation: "operator composite bracket bound at beta = 0",
        hypothesis: Hypothesis::NoZerosInOpenDisk,
        direction: Direction::LhsLeqRhs,
        schema: ParamSchema {
            uses_beta: false,
            ..OPERATOR_FULL
        },
        sharp_family: SharpFamily::MonicPlusConstant,
        eval: ev_main_bracket_beta0,
    },
    InequalityEntry {
        id: "thm2-alpha0",
        citation: "operator composite bracket bound at alpha = 0",
        hypothesis: Hypothesis::NoZerosInOpenDisk,
        direction: Direction::LhsLeqRhs,
        schema: ParamSchema {
            alpha: AlphaDomain::NotUsed,
            ..OPERATOR_FULL
        },
        sharp_family: SharpFamily::MonicPlusConstant,
        eval: ev_main_bracket_alpha0,
    },
    InequalityEntry {
        id: "cor-2.4",
        citation: "dilation-limit operator bracket bound",
        hypothesis: Hypothesis::NoZerosInOpenDisk,
        direction: Direction::LhsLeqRhs,
        schema: ParamSchema {
            uses_a: true,
            uses_beta: true,
            z: ZDomain::ClosedExterior,
            ..ParamSchema::none()
        },
        sharp_family: SharpFamily::MonicPlusConstant,
        eval: ev_limit_bracket_2_4,
    },
    InequalityEntry {
        id: "lemma1-3.1",
        citation: "Aziz capped-root growth lemma (1987)",
        hypothesis: Hypothesis::AllZerosInClosedDisk,
        direction: Direction::LhsGeqRhs,
        schema: ParamSchema {
            uses_r: true,
            z: ZDomain::UnitCircle,
            uses_cap: true,
            ..ParamSchema::none()
        },
        sharp_family: SharpFamily::MonomialCapZero,
        eval: ev_capped_growth_3_1,
    },
    InequalityEntry {
        id: "lemma3-3.2",
        citation: "dominated-pair composite comparison",
        hypothesis: Hypothesis::DominatedPair,
        direction: Direction::LhsLeqRhs,
        schema: OPERATOR_FULL,
        sharp_family: SharpFamily::RotatedCopy,
        eval: ev_dominated_composite_3_2,
    },
    InequalityEntry {
        id: "lemma4-3.3",
        citation: "conjugate-reciprocal composite sum bound",
        hypothesis: Hypothesis::Unrestricted,
        direction: Direction::LhsLeqRhs,
        schema: OPERATOR_FULL,
        sharp_family: SharpFamily::Monomial,
        eval: ev_reciprocal_sum_3_3,
    },
];

/// The full inequality registry, in definition order.
pub fn registry() -> &'static [InequalityEntry] {
    REGISTRY
}

pub fn find_entry(id: &str) -> Result<&'static InequalityEntry> {
    REGISTRY
        .iter()
        .find(|e| e.id == id)
        .ok_or_else(|| Error::UnknownEntry(id.to_string()))
}
