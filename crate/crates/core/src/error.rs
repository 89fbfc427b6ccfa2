use crate::crystal::Alphabet;

/// Input validation failures.
///
/// These are reserved for malformed data. The null crystal element is not an
/// error: operators that may annihilate return `Option` instead.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("letters from different alphabets cannot be compared")]
    AlphabetMismatch,
    #[error("value {0} is not a letter of the {1:?} alphabet")]
    BadLetter(i64, Alphabet),
    #[error("parts must be positive and weakly decreasing")]
    BadPartition,
    #[error("inner shape is not contained in the outer shape")]
    BadSkewShape,
    #[error("invalid diagonal coordinates: {0}")]
    BadFrobenius(&'static str),
    #[error("empty support")]
    EmptySupport,
    #[error("row data does not fit the declared shape")]
    ShapeMismatch,
    #[error("tableau is not semistandard")]
    NotSemistandard,
    #[error("tableau is not a standard filling")]
    NotStandard,
    #[error("biword pairs are out of order")]
    UnsortedBiword,
    #[error("matrix entries must be positive integers")]
    BadMatrixEntry,
    #[error("matrix is not symmetric with diagonal divisible by {0}")]
    NotFolded(u32),
    #[error("shape is not self-conjugate")]
    NotSelfConjugate,
    #[error("fold parameter must be 1 or 2")]
    BadFoldParameter,
    #[error("outside the image: {0}")]
    OutsideImage(&'static str),
    #[error("weight is outside the folded lattice")]
    OffFoldedLattice,
    #[error("cannot specialize weight: {0}")]
    BadSpecialization(&'static str),
    #[error("invalid flags: {0}")]
    BadFlags(&'static str),
    #[error("malformed series data: {0}")]
    BadSeries(&'static str),
    #[error("plane partition rows must be weakly decreasing along rows and columns")]
    BadPlanePartition,
    #[error("elements belong to different groups")]
    GroupMismatch,
    #[error("not enough variables: need at least {0}")]
    NotEnoughVariables(usize),
}
