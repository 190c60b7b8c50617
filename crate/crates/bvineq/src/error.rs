//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("interval endpoints must satisfy a < b, got [{a}, {b}]")]
    InvalidInterval { a: f64, b: f64 },

    #[error("breakpoints must be finite and strictly increasing")]
    UnsortedBreakpoints,

    #[error("need at least two breakpoints, got {0}")]
    TooFewBreakpoints(usize),

    #[error("{breakpoints} breakpoints require {expected} pieces, got {actual}")]
    PieceCountMismatch {
        breakpoints: usize,
        expected: usize,
        actual: usize,
    },

    #[error("polynomial coefficients must be finite")]
    NonFiniteCoefficient,

    #[error("piece polynomials are capped at degree 3 ({0} coefficients given)")]
    DegreeTooHigh(usize),

    #[error("atom at breakpoint index {index} is out of range or not finite")]
    InvalidAtom { index: usize },

    #[error("p must be finite and >= 1, got {p}")]
    InvalidExponent { p: f64 },

    #[error("alpha must be finite and > 1, got {alpha}")]
    InvalidAlpha { alpha: f64 },

    #[error("x = {x} lies outside [{a}, {b}]")]
    OutsideInterval { x: f64, a: f64, b: f64 },

    #[error("unknown generator profile `{0}` (expected step, sawtooth, poly or mixed)")]
    UnknownProfile(String),

    #[error("generator profile is invalid: {0}")]
    InvalidProfile(String),

    #[error("{name} must be strictly positive, got {value}")]
    NonPositive { name: &'static str, value: f64 },

    #[error("{name} must lie in (0, 1], got {value}")]
    ExponentOutOfRange { name: &'static str, value: f64 },

    #[error("step extremal requires b > 1, got {b}")]
    StepWidth { b: f64 },

    #[error("registry entry `{name}` is missing the norm (order {order}, p = {p})")]
    MissingNorm { name: String, order: u8, p: String },

    #[error("registry entry `{name}` carries no growth certificate")]
    MissingGrowthCertificate { name: String },

    #[error("no second-derivative evaluator is known for `{name}`")]
    MissingEvaluator { name: String },

    #[error("registry entry `{name}` is invalid: {reason}")]
    InvalidRegistryEntry { name: String, reason: String },

    #[error("function specification is invalid: {0}")]
    BadFunctionSpec(String),

    #[error("empty search space")]
    EmptySearchSpace,

    #[error("json: {0}")]
    Json(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
