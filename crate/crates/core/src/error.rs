use num_bigint::BigUint;

/// Library-wide error type.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("unsupported field order {0}; supported orders are 2,3,4,5,7,8,9,11,13,16,25,27")]
    UnsupportedOrder(u16),

    #[error("element index {index} out of range for GF({q})")]
    ElementOutOfRange { q: u16, index: usize },

    #[error("field mismatch: GF({0}) vs GF({1})")]
    FieldMismatch(u16, u16),

    #[error("zero element has no multiplicative inverse")]
    ZeroInverse,

    #[error("zero subspace not representable")]
    ZeroSubspace,

    #[error("ambient dimension mismatch: {0} vs {1}")]
    AmbientMismatch(usize, usize),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("matrix is singular")]
    SingularMatrix,

    #[error("input is not a clique")]
    NotAClique,

    #[error("restricted-star size formula inapplicable when c(X) = 0; the size is the full star size [n-k+1]_q")]
    FormulaInapplicable,

    #[error("subspace is degenerate (contained in a coordinate hyperplane)")]
    DegenerateSubspace,

    #[error("vertex budget exceeded: requires {required}, budget is {budget}")]
    BudgetExceeded { required: BigUint, budget: u64 },

    #[error("time budget of {limit_secs} s exceeded during {context}")]
    TimeBudget {
        limit_secs: u64,
        context: &'static str,
    },

    #[error("{0}")]
    InvalidArgument(String),
}

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
