use thiserror::Error;

/// Errors raised by the crystal library.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    /// The triple `(n, m, i)` violates `1 <= i <= n`.
    #[error("invalid shape: n={n}, m={m}, i={i} (need 1 <= i <= n)")]
    InvalidShape { n: usize, m: u32, i: usize },

    /// A grid does not have the `(n - i + 1) x i` dimensions of its shape.
    #[error("grid has wrong dimensions: expected {expected_rows} rows of width {expected_cols}")]
    Dimension {
        expected_rows: usize,
        expected_cols: usize,
    },

    /// A grid is well shaped but violates the non-negativity or path bound.
    #[error("grid is not a member of B^{{{m},{i}}} for n={n}")]
    NotMember { n: usize, m: u32, i: usize },

    /// A crystal index outside the supported index set.
    #[error("crystal index {index} out of range 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },

    /// Two truncated columns that do not cover the same rows.
    #[error("truncated columns cover different rows")]
    MismatchedRows,

    /// A tableau that is not a semistandard rectangle.
    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    /// An internal postcondition failed. This is always a bug.
    #[error("internal invariant violated: {0}")]
    Invariant(String),

    #[error("json: {0}")]
    Json(String),
}

impl From<serde_json::Error> for Error {
    fn from(err: serde_json::Error) -> Self {
        Error::Json(err.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
