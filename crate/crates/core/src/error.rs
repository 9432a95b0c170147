use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid degree {0}: must be at least {1}")]
    InvalidDegree(usize, usize),
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("generator index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("word uses generator {index}, which needs degree at least {needed} (got {n})")]
    DegreeTooSmall { index: usize, needed: usize, n: usize },
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("permutation is odd, so it does not lie in A_n")]
    OddPermutation,
    #[error("normal-form coordinate k_{j} = {value} out of range 0..={max}")]
    TupleOutOfRange { j: usize, value: usize, max: usize },
    #[error("tuple has {got} coordinates, degree {n} needs {expected}")]
    TupleLength { n: usize, got: usize, expected: usize },
    #[error("rank {rank} out of range 0..{order}")]
    RankOutOfRange { rank: u128, order: u128 },
    #[error("group order of degree {0} overflows 128-bit ranks")]
    RankOverflow(usize),
    #[error("parameter i = {i} outside the admissible range {lo}..={hi} for degree {n}")]
    ParameterOutOfRange { i: usize, lo: usize, hi: usize, n: usize },
    #[error("alphabet mismatch: expected {expected} word")]
    WrongAlphabet { expected: &'static str },
    #[error("degree {n} outside supported range {lo}..={hi}")]
    UnsupportedDegree { n: usize, lo: usize, hi: usize },
    #[error("search budget of {0} steps exhausted")]
    BudgetExhausted(u64),
    #[error("internal consistency failure: {0}")]
    Defect(String),
}

pub(crate) fn parse_err(pos: usize, msg: impl Into<String>) -> Error {
    Error::Parse { pos, msg: msg.into() }
}
