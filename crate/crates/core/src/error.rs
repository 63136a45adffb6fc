use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("invalid domain: {0}")]
    InvalidDomain(String),

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("quadrature did not converge (value {value:e}, error estimate {abs_error:e} after {evaluations} evaluations)")]
    NonConvergence {
        value: f64,
        abs_error: f64,
        evaluations: usize,
    },

    #[error("non-finite integrand value at {at}")]
    NonFiniteIntegrand { at: f64 },

    #[error("series failed to converge within {terms} terms")]
    SeriesDivergence { terms: usize },

    #[error("result overflows f64")]
    Overflow,

    #[error("result underflows f64")]
    Underflow,

    #[error("tail beyond the cutoff is too heavy (estimated {tail:e})")]
    TailTooHeavy { tail: f64 },

    #[error("density is not normalizable: {0}")]
    NonNormalizable(String),

    #[error("series parameter is within {distance:e} of a pole")]
    PoleProximity { distance: f64 },

    #[error("cdf value {value} at order statistic {index} lies outside [0, 1]")]
    InvalidCdf { index: usize, value: f64 },

    #[error("degenerate data: {0}")]
    DegenerateData(String),

    #[error("dataset is empty")]
    EmptyDataset,

    #[error("at least two models are required for a comparison")]
    InsufficientModels,

    #[error("invalid range [{lo}, {hi}]")]
    InvalidRange { lo: f64, hi: f64 },
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::InvalidDomain(msg.into())
    }

    pub(crate) fn params(msg: impl Into<String>) -> Self {
        Error::InvalidParams(msg.into())
    }

    /// Numeric failures (as opposed to bad input).
    pub fn is_numeric(&self) -> bool {
        matches!(
            self,
            Error::NonConvergence { .. }
                | Error::NonFiniteIntegrand { .. }
                | Error::SeriesDivergence { .. }
                | Error::Overflow
                | Error::Underflow
                | Error::TailTooHeavy { .. }
                | Error::NonNormalizable(_)
                | Error::PoleProximity { .. }
        )
    }
}
