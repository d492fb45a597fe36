use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("not a dominant weight: [{0}, {1}, {2}]")]
    NotDominant(i64, i64, i64),
    #[error("invalid Gelfand-Tsetlin pattern: {0}")]
    InvalidPattern(String),
    #[error("shift vectors are only defined for top rows with m3 = 0 (got m3 = {0})")]
    NonzeroM3(i64),
    #[error("shift vector {0:?} is not the shift of a valid pattern")]
    InvalidShift([i64; 6]),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },
    #[error("lattice basis is linearly dependent")]
    DependentBasis,
    #[error("support polytope is not certifiably bounded")]
    UnboundedSupport,
    #[error("degenerate shift: vanishing denominator in t-coefficient at s = {0}")]
    DegenerateShift(usize),
    #[error("multiplicity label {0} is not valid for the given weights")]
    InvalidLabel(String),
    #[error("lattice has rank {got}, expected {expected}")]
    LatticeRank { expected: usize, got: usize },
    #[error("no solution for shift vector constraints: {0}")]
    NoSolution(String),
    #[error("degree cap {cap} exceeded (degree {degree})")]
    DegreeCap { cap: u32, degree: u32 },
    #[error("inconsistent linear system: {0}")]
    Inconsistent(String),
    #[error("invalid index: {0}")]
    Index(String),
}

pub type Result<T> = std::result::Result<T, Error>;
