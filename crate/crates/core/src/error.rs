use std::path::PathBuf;

use thiserror::Error;

use crate::groebner::ReductionStats;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("monomial {divisor} does not divide {dividend}")]
    Division { dividend: String, divisor: String },

    #[error("ring mode mismatch: {left} vs {right}")]
    ModeMismatch {
        left: crate::RingMode,
        right: crate::RingMode,
    },

    #[error("operation undefined on the zero polynomial")]
    ZeroPolynomial,

    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("unknown variable `{name}` (ring has {n} blocks)")]
    UnknownVariable { name: String, n: usize },

    #[error("resource limit exceeded: {what} > {limit}")]
    ResourceLimit {
        what: &'static str,
        limit: u64,
        stats: Option<Box<ReductionStats>>,
    },

    #[error("input is not a Groebner basis: {0}")]
    NotAGroebnerBasis(String),

    #[error("ideal is not zero-dimensional: variable {0} has no pure-power leading monomial")]
    NotZeroDimensional(String),

    #[error("point has {got} coordinates, polynomial needs at least {need}")]
    ArityMismatch { need: usize, got: usize },

    #[error("{vars} variables exceed the cap of {cap}")]
    TooManyVariables { vars: usize, cap: usize },

    #[error("generator set lacks the field polynomial of {0}")]
    FieldPolysMissing(String),

    #[error("malformed {what}: {msg}")]
    Format { what: &'static str, msg: String },

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub(crate) fn syntax(pos: usize, msg: impl Into<String>) -> Self {
        Error::Syntax {
            pos,
            msg: msg.into(),
        }
    }

    pub(crate) fn format(what: &'static str, msg: impl Into<String>) -> Self {
        Error::Format {
            what,
            msg: msg.into(),
        }
    }

    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}
