//! Error type shared across the crate.

use std::path::PathBuf;

/// Everything that can go wrong while loading data, building features,
/// training, or evaluating.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("io error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    /// Malformed input file (wrong column count, bad label token, bad flag).
    #[error("parse error in {path} at line {line}: {message}")]
    Parse {
        path: PathBuf,
        line: usize,
        message: String,
    },

    /// A structural rule was violated (label hierarchy, duplicate id, empty text).
    #[error("validation error: {0}")]
    Validation(String),

    /// Test tweets and gold labels do not cover the same id set.
    #[error("id join error: {missing_from_labels} id(s) without labels, {missing_from_tweets} label(s) without tweets; first few: {sample:?}")]
    Join {
        missing_from_labels: usize,
        missing_from_tweets: usize,
        sample: Vec<String>,
    },

    #[error("task mismatch: expected {expected}, found {found}")]
    TaskMismatch { expected: String, found: String },

    #[error("corpus is empty")]
    EmptyCorpus,

    #[error("vocabulary is empty: every token fell below the document-frequency cutoff")]
    EmptyVocabulary,

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("training data contains a single class; at least two are required")]
    SingleClass,

    #[error("non-finite feature value at row {row}, column {column}")]
    NonFiniteFeature { row: usize, column: usize },

    #[error("negative feature value at row {row}, column {column}")]
    NegativeFeature { row: usize, column: usize },

    #[error("label {0:?} not found")]
    LabelNotFound(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// Operation requires a different model kind (e.g. feature weights of a tree).
    #[error("unsupported model kind: expected {expected}, found {found}")]
    ModelKind { expected: String, found: String },

    #[error("serialization error: {0}")]
    Serialize(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    pub(crate) fn parse(path: impl Into<PathBuf>, line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            path: path.into(),
            line,
            message: message.into(),
        }
    }
}
