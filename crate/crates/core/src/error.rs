use thiserror::Error;

use crate::report::Witness;

/// Errors produced by construction, verification and parsing.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ragged matrix: row {row} has {found} entries, expected {expected}")]
    Ragged {
        row: usize,
        expected: usize,
        found: usize,
    },

    #[error("matrix must have at least one row and one column")]
    Empty,

    #[error(
        "row {row}: declared width {declared} is below the {distinct} distinct symbols present"
    )]
    WidthTooSmall {
        row: usize,
        declared: usize,
        distinct: usize,
    },

    #[error("row {row}: symbol {symbol} outside declared width {width}")]
    SymbolOutOfRange {
        row: usize,
        symbol: u64,
        width: usize,
    },

    #[error("expected {expected} widths, got {found}")]
    WidthCount { expected: usize, found: usize },

    #[error("row count mismatch: expected {expected}, found {found}")]
    RowCountMismatch { expected: usize, found: usize },

    #[error("row index {row} out of range for {rows} rows")]
    RowOutOfRange { row: usize, rows: usize },

    #[error("column index {col} out of range for {cols} columns")]
    ColumnOutOfRange { col: usize, cols: usize },

    #[error("strength {t} exceeds the {k} available columns")]
    StrengthExceedsColumns { k: usize, t: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("bound not applicable: {0}")]
    BoundNotApplicable(String),

    #[error("d-subset {0:?} is not contained in any set of the covering")]
    UncoveredSubset(Vec<usize>),

    #[error("placement mismatch: {0}")]
    PlacementMismatch(String),

    #[error("ingredient {index} is not fractal: {witness}")]
    NotFractal { index: usize, witness: Witness },

    #[error("part count mismatch: {0}")]
    PartCountMismatch(String),

    #[error("covering array pairing mismatch: {0}")]
    PairingMismatch(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }

    pub(crate) fn invalid(message: impl Into<String>) -> Self {
        Error::InvalidParameter(message.into())
    }
}
