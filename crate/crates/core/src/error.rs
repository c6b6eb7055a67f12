//! Crate-wide error type.

use std::fmt;

/// Errors produced by any stage of the imputation pipeline.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Two operands have incompatible shapes. Both shapes are reported as
    /// `(rows, cols)`; vectors are `(1, len)`.
    Dimension {
        op: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },
    /// A CSV cell failed to parse as a number or the `NA` token.
    Parse {
        row: usize,
        col: usize,
        value: String,
    },
    /// Invalid configuration (unknown column, bad rule, malformed config file).
    Config(String),
    /// The dataset is too small for the requested operation.
    TooSmall { n: usize, min: usize },
    /// A feature has no observed values in the train split, so no
    /// normalization statistics exist for it.
    DegenerateFeature { feature: usize },
    /// A metric is undefined for the given inputs (e.g. NRMS with no missing
    /// cells, or zero dispersion in the ground truth).
    UndefinedMetric(String),
    /// Training produced a non-finite loss.
    Diverged { step: u64 },
    /// A caller violated an API contract (e.g. incomplete matrix passed to
    /// the downstream evaluator).
    Contract(String),
    /// Underlying I/O failure.
    Io(String),
    /// Malformed serialized artifact (model container, mask CSV, ...).
    Format(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Dimension { op, left, right } => write!(
                f,
                "{op}: incompatible shapes {}x{} vs {}x{}",
                left.0, left.1, right.0, right.1
            ),
            Error::Parse { row, col, value } => {
                write!(f, "row {row}, column {col}: cannot parse {value:?} as a number or NA")
            }
            Error::Config(msg) => write!(f, "configuration error: {msg}"),
            Error::TooSmall { n, min } => {
                write!(f, "dataset has {n} rows, at least {min} required")
            }
            Error::DegenerateFeature { feature } => {
                write!(f, "feature {feature} has no observed values in the train split")
            }
            Error::UndefinedMetric(msg) => write!(f, "metric undefined: {msg}"),
            Error::Diverged { step } => write!(f, "training diverged at step {step}"),
            Error::Contract(msg) => write!(f, "contract violation: {msg}"),
            Error::Io(msg) => write!(f, "io error: {msg}"),
            Error::Format(msg) => write!(f, "format error: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
