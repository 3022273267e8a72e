use thiserror::Error;

/// Errors produced by the library surface.
#[derive(Debug, Error)]
pub enum Error {
    /// An input value is outside the domain of the operation
    /// (non-finite angle, empty grid, sample count below 2, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// A requested selector, format, or flag combination is not valid.
    #[error("usage error: {0}")]
    Usage(String),

    /// The requested diffraction order does not propagate: J*lambda/d > 1.
    #[error("evanescent order: J*lambda/d = {0} exceeds 1, no propagating maximum")]
    EvanescentOrder(f64),

    /// A column named in the CSV schema mapping is missing from the header.
    #[error("schema error: missing column '{0}'")]
    MissingColumn(String),

    /// Strict-mode ingestion rejected a malformed data row.
    #[error("row error at line {line}: {message}")]
    StrictRow { line: u64, message: String },

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
