use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("polynomial division left a nonzero remainder")]
    NonExactDivision,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("constant term {0} is not a unit over the integers")]
    NonUnitConstantTerm(String),
    #[error("expected {expected} entries, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },
    #[error("dimension must be at least 1")]
    ZeroDimension,
    #[error("weights must be positive, found 0 at position {0}")]
    NonPositiveWeight(usize),
    #[error("coordinates sum to {sum}, exceeding the dilation factor {r}")]
    OutsideSimplex { sum: u64, r: u32 },
    #[error("tableau entry {entry} outside 1..={d}")]
    EntryOutOfRange { entry: u32, d: usize },
    #[error("tableau letters start at 1")]
    ZeroEntry,
    #[error("tableau entries must weakly increase")]
    NotSemistandard,
    #[error("sequence is not weakly decreasing")]
    NotWeaklyDecreasing,
    #[error("partition parts must be positive")]
    ZeroPart,
    #[error("largest part {width} does not fit beside {d} rows in ambient size {n}")]
    PartitionTooWide { width: u32, d: usize, n: usize },
    #[error("one-line notation is not a permutation of 1..={0}")]
    NotAPermutation(usize),
    #[error("values must be pairwise distinct for the bialternant formula")]
    RepeatedValues,
}
