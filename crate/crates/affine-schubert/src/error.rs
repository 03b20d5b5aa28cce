use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("index out of range")]
    IndexOutOfRange,
    #[error("non-square minor")]
    NonSquareMinor,
    #[error("sampling failed")]
    SamplingFailed,
    #[error("not a coset representative")]
    NotCosetRepresentative,
    #[error("enumeration too large: estimated {estimate} items, cap is {cap}")]
    EnumerationTooLarge { estimate: u128, cap: u128 },
    #[error("shuffle not defined")]
    ShuffleNotDefined,
    #[error("coordinate vanishes on X(w_s)")]
    VanishingCoordinate,
    #[error("independence not certified")]
    NotCertified,
    #[error("not nilpotent")]
    NotNilpotent,
    #[error("content must be a partition")]
    ContentNotPartition,
    #[error("partitions have different sizes ({0} and {1})")]
    SizeMismatch(usize, usize),
    #[error("wrong number of values: expected {expected}, got {got}")]
    WrongValueCount { expected: usize, got: usize },
    #[error("tuple is not in the Z-set of the chain element")]
    NotInZSet,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;

/// Fails with [`Error::EnumerationTooLarge`] when `estimate` exceeds `cap`.
pub fn check_cap(estimate: u128, cap: u128) -> Result<()> {
    if estimate > cap {
        Err(Error::EnumerationTooLarge { estimate, cap })
    } else {
        Ok(())
    }
}
