use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix is singular (rank {rank} < {dim})")]
    SingularMatrix { rank: usize, dim: usize },

    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("invalid monomial order: {0}")]
    InvalidOrder(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("not a partition: {0}")]
    NotAPartition(String),

    #[error("relation {class} is not symmetric: ({x},{y}) in R_{class} but ({y},{x}) is not")]
    NotSymmetric { class: usize, x: usize, y: usize },

    #[error(
        "intersection number p_{i}{j}^{k} is not constant: pair {first:?} gives {first_count}, pair {second:?} gives {second_count}"
    )]
    NotConstantIntersectionNumber {
        i: usize,
        j: usize,
        k: usize,
        first: (usize, usize),
        first_count: u64,
        second: (usize, usize),
        second_count: u64,
    },

    #[error("scheme is not commutative: p_{i}{j}^{k} != p_{j}{i}^{k}")]
    NotCommutative { i: usize, j: usize, k: usize },

    #[error("invalid radix r={r} for m={m}: need 1 < r < m and gcd(r, m) = 1")]
    InvalidRadix { m: u64, r: u64 },

    #[error("inconsistent intersection tensor: {0}")]
    InconsistentTensor(String),

    #[error("back-substitution stuck at variable x{var}: no generator is linear in it over an irrational partial point")]
    NotTriangularEnough { var: usize },

    #[error("variable x{0} is not expressible in terms of the chosen variables")]
    NotExpressible(usize),

    #[error("no generic coordinate found after {attempts} coordinate changes")]
    AttemptsExhausted { attempts: usize },

    #[error("internal invariant violated: {0}")]
    InternalInvariantViolation(String),
}

impl Error {
    /// True for violations of the scheme axioms (bad input data rather than
    /// a failed analysis).
    pub fn is_scheme_violation(&self) -> bool {
        matches!(
            self,
            Error::NotAPartition(_)
                | Error::NotSymmetric { .. }
                | Error::NotConstantIntersectionNumber { .. }
                | Error::NotCommutative { .. }
                | Error::InvalidRadix { .. }
                | Error::InconsistentTensor(_)
        )
    }
}
