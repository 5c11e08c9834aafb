use std::path::PathBuf;

use num_bigint::BigInt;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("truncation caps differ: {left} vs {right}")]
    CapMismatch { left: String, right: String },

    #[error("constant term {0} is not a unit")]
    NonUnit(BigInt),

    #[error("exponent {exponent} is outside the truncation window (cap {cap})")]
    OutOfWindow { exponent: usize, cap: usize },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("unsupported range: {0}")]
    UnsupportedRange(String),

    #[error("division is not exact: {0}")]
    InexactDivision(String),

    #[error("{}: malformed cache file: {reason}", path.display())]
    Cache { path: PathBuf, reason: String },

    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("serialization failed: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    /// True for errors caused by the caller's arguments rather than by the
    /// environment or a failed computation.
    pub fn is_usage(&self) -> bool {
        matches!(self, Error::Domain(_) | Error::UnsupportedRange(_))
    }
}
