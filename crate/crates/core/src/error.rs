use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{what}: n = {n} exceeds the configured limit {limit}")]
    SizeLimit {
        what: &'static str,
        n: usize,
        limit: usize,
    },

    #[error("monotone triangle is not complete: bottom row is {bottom:?}")]
    NotComplete { bottom: Vec<i64> },

    #[error("invalid matrix: {0}")]
    InvalidAsm(String),

    #[error("invalid monotone triangle: {0}")]
    InvalidTriangle(String),

    #[error("bottom row is not weakly increasing: {0:?}")]
    NotWeaklyIncreasing(Vec<i64>),

    #[error("malformed index tuple {indices:?} for n = {n}")]
    MalformedIndices { n: usize, indices: Vec<usize> },

    #[error("table for n = {n}, d = {d} is incomplete")]
    IncompleteTable { n: usize, d: usize },

    #[error("singular system: rank {rank} of {size}")]
    Singular { rank: usize, size: usize },

    #[error("inconsistent linear system (rank {rank})")]
    Inconsistent { rank: usize },

    #[error("index ({i}, {j}) is excluded from the explicit formula for n = {n}")]
    ExcludedIndex { n: usize, i: usize, j: usize },

    #[error("explicit formula is not integral at n = {n}, (i, j) = ({i}, {j}): {value}")]
    NonIntegral {
        n: usize,
        i: usize,
        j: usize,
        value: String,
    },

    #[error("zero denominator in the explicit formula at n = {n}, (i, j) = ({i}, {j}), k = {k}")]
    FormulaPole { n: usize, i: usize, j: usize, k: i64 },

    #[error("identity `{identity}` violated at {witness}")]
    IdentityViolation { identity: String, witness: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
