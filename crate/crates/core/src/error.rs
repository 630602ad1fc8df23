use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// Unsupported (type, rank) combination or unknown group name.
    #[error("configuration error: {0}")]
    Config(String),

    #[error("variable arity mismatch: {0}")]
    Arity(String),

    #[error("weight {0:?} is not dominant")]
    NonDominant(Vec<i64>),

    #[error("weight not in character lattice: {0}")]
    NotInLattice(String),

    #[error("representation is not orthogonal: {0}")]
    NotOrthogonal(String),

    #[error("k = {k} exceeds the configured cap {cap}")]
    KOverCap { k: usize, cap: usize },

    #[error("size guard exceeded: {0}")]
    Guard(String),

    #[error("singular matrix: {0}")]
    Singular(String),

    /// Division that was required to be exact left a remainder.
    #[error("inexact division, remainder {remainder}")]
    InexactDivision { remainder: String },

    #[error("non-integer coefficient: {0}")]
    NonInteger(String),

    #[error("degenerate sample system: {0}")]
    Degenerate(String),

    #[error("integer overflow in {0}")]
    Overflow(&'static str),

    #[error("invariant violated: {0}")]
    Invariant(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Errors caused by user input rather than by a broken internal invariant.
    pub fn is_domain(&self) -> bool {
        matches!(
            self,
            Error::Config(_)
                | Error::NonDominant(_)
                | Error::NotInLattice(_)
                | Error::NotOrthogonal(_)
                | Error::KOverCap { .. }
                | Error::Guard(_)
        )
    }
}
