//! Error type shared by all modules.

use crate::triortho::Violation;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// Two operands have incompatible lengths or shapes.
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    /// A matrix required to be triorthogonal is not.
    #[error("matrix is not triorthogonal: {0}")]
    NotTriorthogonal(Violation),

    /// A matrix required to be full rank is not.
    #[error("matrix is rank-deficient: rank {rank} < {rows} rows")]
    RankDeficient { rank: usize, rows: usize },

    /// A code required to be a triorthogonal space is not.
    #[error("code is not a triorthogonal space")]
    NotTriorthogonalSpace,

    /// A generator matrix required to span a self-dual code does not.
    #[error("not a self-dual code: {0}")]
    NotSelfDual(String),

    /// An argument is outside its documented range.
    #[error("invalid parameter: {0}")]
    Parameter(String),

    /// Minimum distance of the zero code is undefined.
    #[error("minimum distance is undefined for the zero code")]
    UndefinedDistance,

    /// d_Z is undefined for a matrix with no odd-weight rows.
    #[error("no logical qubits: the matrix has no odd-weight rows")]
    NoLogicalQubits,

    /// An exhaustive enumeration would exceed the configured budget.
    /// `upper_bound` is a non-exact bound from sampled codewords, when one
    /// was found; it is never a substitute for the exact value.
    #[error("enumeration budget exceeded: 2^{needed_log2} codewords needed, limit {limit}")]
    BudgetExceeded {
        needed_log2: u32,
        limit: u64,
        upper_bound: Option<usize>,
    },

    /// Matrix text or recipe text failed to parse.
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// A recipe referenced an unknown node, file, or malformed step.
    #[error("recipe error: {0}")]
    Recipe(String),

    /// Filesystem failure while loading or emitting matrices.
    #[error("io error on {path}: {msg}")]
    Io { path: String, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
