use thiserror::Error;

/// Every failure the library can report.
///
/// Variant names double as the stable error names printed by the CLI
/// (see [`Error::name`]).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("illegal character {found:?} at position {position}")]
    IllegalCharacter { position: usize, found: char },
    #[error("path drops below the axis at step {position}")]
    NegativeHeight { position: usize },
    #[error("path ends at height {height}, expected 0")]
    NonzeroEnd { height: i64 },

    #[error("sequence has length {found}, expected {expected}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("inconsistent domain: {0}")]
    DomainMismatch(String),
    #[error("path has {hills} hill(s), expected none")]
    NotHillFree { hills: usize },
    #[error("path has a horizontal step at height 0")]
    NotLittle,
    #[error("path has no hills")]
    ZeroHills,
    #[error("invalid digit {found:?} for a {kind} sequence")]
    InvalidDigit { kind: &'static str, found: char },

    #[error("syntax error at byte {position}: {message}")]
    SyntaxError { position: usize, message: String },
    #[error("node {index} has the same label as its right child")]
    RightChainViolation { index: usize },
    #[error("node {index} already has a left child")]
    LeftChildOccupied { index: usize },
    #[error("node {index} already has a right child")]
    RightChildOccupied { index: usize },
    #[error("node {index} carries the same label as the attached root")]
    LabelClash { index: usize },
    #[error("node index {index} out of range 1..={len}")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("tree is not right-branching")]
    NotRightBranching,
    #[error("operation needs a nonempty tree")]
    EmptyTree,
    #[error("tree lies in the embedded subclass; invert with embed_star instead")]
    StarMember,

    #[error("permutation is not a bijection on 1..=n: {0}")]
    InvalidPermutation(String),

    #[error("A/Z sequences have length {available}, need {needed}")]
    InsufficientSequenceLength { needed: usize, available: usize },

    #[error("verification failed: {0}")]
    VerificationFailure(String),
}

impl Error {
    /// Stable identifier of the variant.
    pub fn name(&self) -> &'static str {
        match self {
            Error::IllegalCharacter { .. } => "IllegalCharacter",
            Error::NegativeHeight { .. } => "NegativeHeight",
            Error::NonzeroEnd { .. } => "NonzeroEnd",
            Error::LengthMismatch { .. } => "LengthMismatch",
            Error::DomainMismatch(_) => "DomainMismatch",
            Error::NotHillFree { .. } => "NotHillFree",
            Error::NotLittle => "NotLittle",
            Error::ZeroHills => "ZeroHills",
            Error::InvalidDigit { .. } => "InvalidDigit",
            Error::SyntaxError { .. } => "SyntaxError",
            Error::RightChainViolation { .. } => "RightChainViolation",
            Error::LeftChildOccupied { .. } => "LeftChildOccupied",
            Error::RightChildOccupied { .. } => "RightChildOccupied",
            Error::LabelClash { .. } => "LabelClash",
            Error::IndexOutOfRange { .. } => "IndexOutOfRange",
            Error::NotRightBranching => "NotRightBranching",
            Error::EmptyTree => "EmptyTree",
            Error::StarMember => "StarMember",
            Error::InvalidPermutation(_) => "InvalidPermutation",
            Error::InsufficientSequenceLength { .. } => "InsufficientSequenceLength",
            Error::VerificationFailure(_) => "VerificationFailure",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
