use thiserror::Error;

/// Errors raised by the library. Every variant except `Parse` is a domain
/// error: the input was well-formed but outside an operation's domain.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("not rational: element has nonzero irrational part")]
    NotRational,
    #[error("singular model: {0}")]
    Singular(String),
    #[error("point is not on the curve")]
    OffCurve,
    #[error("degenerate parameter: {0}")]
    DegenerateParameter(String),
    #[error("malformed action profile: {0}")]
    MalformedProfile(String),
    #[error("unknown stratum label `{0}`")]
    UnknownStratum(String),
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
