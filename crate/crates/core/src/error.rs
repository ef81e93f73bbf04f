use thiserror::Error;

/// Errors raised by the engine. Each variant maps onto one exit-code class
/// of the command-line front end (see [`Error::exit_code`]).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(u32, u32),

    #[error("not divisible")]
    NotDivisible,

    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("expression is not homogeneous")]
    NotHomogeneous,

    #[error("restriction is identically zero (the curve divides the form)")]
    RestrictionZero,

    #[error("unsupported curve: {0}")]
    UnsupportedCurve(String),

    #[error("cube classes live on different carriers")]
    CarrierMismatch,

    #[error("point {0} does not lie on the curve")]
    PointNotOnCurve(String),

    #[error("unsupported local geometry: {0}")]
    UnsupportedLocalGeometry(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("invalid curve: {0}")]
    InvalidCurve(String),

    #[error("invalid function: {0}")]
    InvalidFunction(String),

    #[error("invalid bundle: {0}")]
    InvalidBundle(String),

    #[error("hypothesis violation: {0}")]
    HypothesisViolation(String),

    #[error("manifest error: {0}")]
    Manifest(String),

    #[error("output differs from the golden report: {0}")]
    GoldenMismatch(String),
}

impl Error {
    /// 1 hypothesis violation, 2 unsupported geometry, 3 parse/manifest/input
    /// error, 4 golden output mismatch.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::HypothesisViolation(_) => 1,
            Error::UnsupportedCurve(_)
            | Error::UnsupportedLocalGeometry(_)
            | Error::Unsupported(_)
            | Error::RestrictionZero => 2,
            Error::GoldenMismatch(_) => 4,
            _ => 3,
        }
    }

    pub(crate) fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            pos,
            msg: msg.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
