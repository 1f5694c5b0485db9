//! Executable catalog of extremal polynomial inequalities built around the
//! modified Smirnov operator `P -> (1 + a z) P'(z) - n a P(z)`, verified by
//! randomized campaigns over polynomials with restricted zero locations.
//!
//! The crate is organized along the pipeline a verification run follows:
//!
//! - [`polynomial`]: complex polynomial arithmetic (Horner evaluation,
//!   calculus, dilation, conjugate-reciprocal transform);
//! - [`smirnov`]: the modified and classical operators, the omega region
//!   membership predicate, and the composite transforms;
//! - [`roots`]: simultaneous root finding and zero-location classification,
//!   supplying every hypothesis predicate;
//! - [`circle`]: certified maxima and minima of `|P|` on the unit circle;
//! - [`catalog`]: each inequality as an executable entry with sharpness
//!   families and reduction links;
//! - [`harness`]: instance generators, the campaign runner, shrinking, and
//!   report serialization.

pub mod catalog;
pub mod circle;
pub mod error;
pub mod harness;
pub mod polynomial;
pub mod roots;
pub mod smirnov;

pub(crate) mod serde_util;

pub use num_complex::Complex64;

pub use catalog::{
    check, check_with, find_entry, links, reduction_check, registry, sharpness_gap,
    sharpness_scan, AlphaDomain, CheckOptions, Direction, FamilyParams, Hypothesis,
    InequalityEntry, InequalityInstance, LinkReport, ParamSchema, ReductionLink, SharpFamily,
    SharpnessReport, Verdict, ZDomain, SLACK_TOL,
};
pub use circle::{
    certified_max_modulus, certified_min_modulus, CircleExtremum, ExtremumKind, GridOptions,
};
pub use error::{Error, Result};
pub use harness::{
    generate_for_entry, run_campaign, CampaignConfig, CampaignReport, GeneratorSpec, ReportFile,
    Tolerances,
};
pub use polynomial::{ComplexPolynomial, EvaluationPoint, Region, TRIM_THRESHOLD};
pub use roots::{
    classify_zeros, classify_zeros_with_cap, find_roots, from_roots, RootSet, ZeroClass,
    ZeroLocation, LOCATION_TOL, RESIDUAL_TOL,
};
pub use smirnov::{
    composite_transform, corollary_limit_lhs, modified_smirnov, reduction_a_inv_z, smirnov_alpha,
    CompositeParams, Mutation, OmegaRegion, OperatorContext,
};
