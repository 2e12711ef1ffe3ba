use thiserror::Error;

/// Errors raised by the evaluators and the harness.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("domain error in {function}: {detail}")]
    Domain {
        function: &'static str,
        detail: String,
    },

    #[error("invalid parameter for {function}: {detail}")]
    Parameter {
        function: &'static str,
        detail: String,
    },

    #[error("numerical failure in {function}: {detail}")]
    Numerical {
        function: &'static str,
        detail: String,
    },

    #[error("indeterminate at this precision in {function}: {detail}")]
    Indeterminate {
        function: &'static str,
        detail: String,
    },

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("usage: {0}")]
    Usage(String),

    #[error("I/O error: {0}")]
    Io(String),

    #[error("report format error: {0}")]
    Format(String),
}

impl Error {
    pub(crate) fn domain(function: &'static str, detail: impl Into<String>) -> Self {
        Error::Domain {
            function,
            detail: detail.into(),
        }
    }

    pub(crate) fn parameter(function: &'static str, detail: impl Into<String>) -> Self {
        Error::Parameter {
            function,
            detail: detail.into(),
        }
    }

    pub(crate) fn numerical(function: &'static str, detail: impl Into<String>) -> Self {
        Error::Numerical {
            function,
            detail: detail.into(),
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;

/// Rejects anything that is not a finite, strictly positive real.
pub(crate) fn require_positive(function: &'static str, name: &str, v: f64) -> Result<()> {
    if v.is_finite() && v > 0.0 {
        Ok(())
    } else {
        Err(Error::domain(
            function,
            format!("{name} must be > 0, got {v}"),
        ))
    }
}

pub(crate) fn require_nonnegative(function: &'static str, name: &str, v: f64) -> Result<()> {
    if v.is_finite() && v >= 0.0 {
        Ok(())
    } else {
        Err(Error::domain(
            function,
            format!("{name} must be >= 0, got {v}"),
        ))
    }
}
