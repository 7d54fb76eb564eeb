use thiserror::Error;

/// Largest supported degree. `20!` still fits in a `u64`.
pub const MAX_DEGREE: usize = 20;

/// Errors produced by this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree {0} is out of range (expected 1..={MAX_DEGREE})")]
    DegreeOutOfRange(usize),

    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("image sequence is not a bijection of 1..={0}")]
    NotABijection(usize),

    #[error("malformed cycle notation: {0}")]
    Malformed(String),

    #[error("element {element} is out of range for degree {n}")]
    ElementOutOfRange { element: usize, n: usize },

    #[error("element {0} appears more than once")]
    RepeatedElement(usize),

    #[error("missing elements: cycle notation does not cover 1..={0}")]
    MissingElements(usize),

    #[error("rank {index} is out of range for degree {n}")]
    IndexOutOfRange { index: u64, n: usize },

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("permutations are not conjugate: types {left} and {right} differ (two permutations are conjugate iff they have the same type)")]
    NotConjugate { left: String, right: String },

    #[error("{phi} is not in the flock {partition}")]
    NotInFlock { phi: String, partition: String },

    #[error("degree {0} is too large for the brute-force oracle (limit 7)")]
    OracleTooLarge(usize),

    #[error("count overflows 64-bit arithmetic")]
    Overflow,

    #[error("flock of size {size} exceeds the atlas limit of {limit} nodes")]
    TooLarge { size: u64, limit: u64 },

    #[error("component is not a single weakly connected functional graph")]
    NotAComponent,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn check_degree(n: usize) -> Result<()> {
    if (1..=MAX_DEGREE).contains(&n) {
        Ok(())
    } else {
        Err(Error::DegreeOutOfRange(n))
    }
}
