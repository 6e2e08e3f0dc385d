use thiserror::Error;

/// Why the majority-voting decoder gave up on a syndrome index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DecodeFailure {
    /// No candidate pair was found for the syndrome index.
    NoCandidates { l: usize },
    /// Two or more values share the largest number of votes.
    TiedVote { l: usize },
}

impl DecodeFailure {
    pub fn index(&self) -> usize {
        match *self {
            DecodeFailure::NoCandidates { l } | DecodeFailure::TiedVote { l } => l,
        }
    }
}

impl std::fmt::Display for DecodeFailure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            DecodeFailure::NoCandidates { l } => write!(f, "no candidates for s_{l}"),
            DecodeFailure::TiedVote { l } => write!(f, "tied vote for s_{l}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NonPrime(u32),
    #[error("polynomial {0:?} is reducible over GF({1})")]
    Reducible(Vec<u32>, u32),
    #[error("field size {p}^{m} exceeds 2^16")]
    SizeExceeded { p: u32, m: u32 },
    #[error("invalid field polynomial: {0}")]
    InvalidPolynomial(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("value {value} out of range for a field of size {q}")]
    OutOfRange { value: u64, q: u32 },

    #[error("matrix is singular")]
    Singular,
    #[error("linear system is inconsistent")]
    Inconsistent,
    #[error("extension of the prefix is not uniquely determined")]
    NotUnique,
    #[error("prefix does not lie in the row space")]
    NotInRowSpace,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("operands belong to different fields")]
    FieldMismatch,

    #[error("index {index} out of range 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("vectors do not form a basis (rank {rank} < {n})")]
    NotABasis { rank: usize, n: usize },
    #[error("table does not belong to the given basis pair: {0}")]
    BasisMismatch(String),
    #[error("index set is empty")]
    EmptyIndexSet,
    #[error("index set covers all of 1..={0}; the dual code is trivial")]
    FullIndexSet(usize),
    #[error("bases do not satisfy g_i . h_j = delta(i, n-j+1)")]
    NotDualPair,
    #[error("t = {t} out of range 1..={max}")]
    TOutOfRange { t: usize, max: usize },

    #[error("duplicate point {value} in point set {set}")]
    DuplicatePoint { set: usize, value: u32 },
    #[error("point set {0} is empty")]
    EmptyPointSet(usize),
    #[error("too many points: {0} > 4096")]
    TooManyPoints(usize),
    #[error("{0:?} is not an element of the weight set")]
    NotInDelta(Vec<u32>),
    #[error("invalid monomial order: {0}")]
    InvalidOrder(String),
    #[error("invalid semigroup data: {0}")]
    InvalidSemigroup(String),
    #[error("target dimension {dim} out of range 1..={n}")]
    DimOutOfRange { dim: usize, n: usize },
    #[error("operation requires a primary code")]
    SideMismatch,
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("syndrome s_{0} is unknown")]
    PrefixUnknown(usize),
    #[error("({i},{j}) is not a candidate for s_{l}")]
    NotCandidate { i: usize, j: usize, l: usize },
    #[error("well-behaving table is inconsistent with the bases at ({i},{j})")]
    InvalidTable { i: usize, j: usize },
    #[error("decoding failed: {0}")]
    Decode(DecodeFailure),
}

pub type Result<T> = std::result::Result<T, Error>;
