use std::path::PathBuf;

use crate::corpus::UnitKind;
use crate::incidence::Semantics;
use crate::scheme::CountingScheme;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("failed to read {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("duplicate publication id `{0}`")]
    DuplicateId(String),

    #[error("unit kind absent from corpus: {0}")]
    UnitKindAbsent(UnitKind),

    #[error("unknown unit `{0}`")]
    UnknownUnit(String),

    #[error("counting scheme {scheme} is not valid for {semantics} matrices")]
    SchemeMismatch {
        scheme: CountingScheme,
        semantics: Semantics,
    },

    #[error("maximum column margin must be at least 2, got {0}")]
    InvalidThreshold(usize),

    #[error("thresholds must be strictly increasing")]
    NonIncreasingThresholds,

    #[error("matrix form is oracle only: {cells} dense cells exceed the cap of {cap}")]
    DenseCapExceeded { cells: usize, cap: usize },

    #[error("matrix form does not support {0}")]
    MatrixFormUnsupported(String),

    #[error("invalid synthetic corpus configuration: {0}")]
    InvalidConfig(String),

    #[error("{0}")]
    Invalid(String),
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}
