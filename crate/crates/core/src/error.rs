use thiserror::Error;

/// Errors raised by domain operations (bad indices, invalid inputs, unstable
/// correlators). Syntax errors live in [`crate::cli::ParseError`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("leaf has no decomposition")]
    LeafDecomposition,
    #[error("index {index} out of range 0..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("invalid permutation word {0:?}")]
    InvalidPermutation(Vec<usize>),
    #[error("invalid word {0:?}: adjacent L letters")]
    InvalidWord(String),
    #[error("input is not homogeneous: {0}")]
    NotHomogeneous(String),
    #[error("graph {0} is irregular")]
    Irregular(String),
    #[error("unstable correlator (g={g}, k={k}): need 2g-2+k >= 1")]
    Unstable { g: u32, k: u32 },
    #[error("series truncated at q^{precision}, residue needs q^-1")]
    TruncationInsufficient { precision: i64 },
}

pub type Result<T> = std::result::Result<T, Error>;
