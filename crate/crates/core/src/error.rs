//! Error type shared across the crate.

use thiserror::Error;

use crate::circle::CircleExtremum;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// An operator was asked to treat `p` as a member of a degree class
    /// smaller than its actual degree.
    #[error("degree class {class} is smaller than the polynomial degree {degree}")]
    DegreeClassTooSmall { class: usize, degree: usize },

    /// A parameter fell outside the domain an entry or operator requires.
    #[error("parameter out of domain: {0}")]
    ParamOutOfDomain(String),

    #[error("invalid polynomial: {0}")]
    InvalidPolynomial(String),

    /// The simultaneous root iteration did not reach the residual tolerance.
    #[error("root iteration unconverged, max residual {max_residual:e}")]
    RootsUnconverged { max_residual: f64 },

    /// A circle extremum could not be certified to the requested tolerance
    /// within the grid cap. The best certified result is attached so the
    /// caller can decide whether it is usable.
    #[error("extremum tolerance unreachable, best error bound {:e}", best.error_bound)]
    ExtremumTolUnreachable { best: Box<CircleExtremum> },

    /// The hypothesis predicate of an inequality entry does not hold for
    /// the instance polynomial(s).
    #[error("hypothesis violated for entry {entry}: {detail}")]
    HypothesisViolated { entry: String, detail: String },

    /// Instance generation kept landing in the classification boundary band.
    #[error("instance generation retries exhausted after {attempts} attempts")]
    RetryExhausted { attempts: u32 },

    /// A reduction link found a specialization and its target disagreeing.
    #[error("reduction link {link} mismatch, relative error {relative_error:e}: {instance}")]
    LinkMismatch {
        link: String,
        relative_error: f64,
        instance: String,
    },

    #[error("unknown inequality entry `{0}`")]
    UnknownEntry(String),

    #[error("unknown reduction link `{0}`")]
    UnknownLink(String),

    #[error("config error: {0}")]
    Config(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}
