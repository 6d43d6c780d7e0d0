use thiserror::Error;

use crate::io::SchemaError;
use crate::report::Report;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch in {op}: {left:?} vs {right:?}")]
    DimensionMismatch {
        op: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },

    #[error("matrix is not idempotent: (E·E)[{row},{col}] differs from E[{row},{col}]")]
    NotIdempotent { row: usize, col: usize },

    #[error("linear system has no solution")]
    NoSolution,

    #[error("shape error: {0}")]
    Shape(String),

    /// A construction's self-certification failed; the report carries witnesses.
    #[error("{what}: {} failing check(s), first: {}", report.failures().count(), report.first_failure_name().unwrap_or("?"))]
    CheckFailed { what: String, report: Box<Report> },

    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),

    #[error("e·a differs from e·a·e for basis element {index} ({name})")]
    BadIdempotent { index: usize, name: String },

    #[error("Frobenius section does not vanish on the relation span")]
    IllDefinedSection,

    #[error(transparent)]
    Schema(#[from] SchemaError),

    #[error("cannot access {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub(crate) fn check_failed(what: impl Into<String>, report: Report) -> Self {
        Error::CheckFailed {
            what: what.into(),
            report: Box::new(report),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
