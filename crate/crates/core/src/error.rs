use thiserror::Error;

/// Errors raised by the library. Variants map onto CLI exit codes.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("capacity exceeded: {what} (limit {limit})")]
    Capacity { what: String, limit: usize },
    #[error("quiver is not symmetric")]
    NotSymmetric,
    #[error("weight is not integral")]
    NotIntegral,
    #[error("weight is not dominant")]
    NotDominant,
    #[error("r-invariant is infinite: weight is not in the span of the polytope")]
    InfiniteR,
    #[error("r-invariant is zero: no face character")]
    ZeroR,
    #[error("negative rank {rank} at d={d:?}, w={w}")]
    NegativeRank { d: Vec<u32>, w: i64, rank: i64 },
    #[error("rewriting did not terminate after {0} steps")]
    NonTerminating(usize),
    #[error("inexact division: nonzero remainder")]
    InexactDivision,
    #[error("rank window too small: missing n_rank at d={d:?}, w={w}")]
    WindowTooSmall { d: Vec<u32>, w: i64 },
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Process exit status: 2 for bad input, 3 for capacity, 4 for internal invariants.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Capacity { .. } => 3,
            Error::InexactDivision | Error::Invariant(_) | Error::NonTerminating(_) | Error::NegativeRank { .. } => 4,
            _ => 2,
        }
    }
}
