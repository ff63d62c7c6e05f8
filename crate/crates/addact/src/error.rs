//! One error type for the whole crate.
//!
//! Variant names double as the stable identifiers surfaced by the CLI, so
//! renaming one is a breaking change to the command-line contract.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("SyntaxError: {0}")]
    Syntax(String),

    #[error("UnknownVariable: `{0}` is not an ambient variable")]
    UnknownVariable(String),

    #[error("NegativeExponent: exponents must be non-negative integers")]
    NegativeExponent,

    #[error("VariableMismatch: operands live over different ambient variable lists")]
    VariableMismatch,

    #[error("IndexOutOfRange: variable index {index} not below {len}")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("DimensionMismatch: coordinate vector length {got}, algebra dimension {expected}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("NonzeroConstantTerm: relation `{0}` has a nonzero constant term")]
    NonzeroConstantTerm(String),

    #[error(
        "TruncationCapExceeded: quotient dimensions still growing at degree {cap}; \
         the ideal is not m-primary (no finite local quotient)"
    )]
    TruncationCapExceeded { cap: usize },

    #[error("NotNilpotent: element has a nonzero unit coordinate")]
    NotNilpotent,

    #[error("UnitPartNotOne: element's unit coordinate is not exactly 1")]
    UnitPartNotOne,

    #[error("NotInMaximalIdeal: vector has a nonzero unit coordinate")]
    NotInMaximalIdeal,

    #[error("WrongCodimension: U must have dimension {expected}, got {got}")]
    WrongCodimension { expected: usize, got: usize },

    #[error("DoesNotGenerate: the subspace does not generate the algebra")]
    DoesNotGenerate,

    #[error("ComplementInU: the complement vector lies in U")]
    ComplementInU,

    #[error("NotAnIdeal: subspace is not closed under multiplication by the algebra")]
    NotAnIdeal,

    #[error("QuotientIsZero: the ideal is the whole algebra")]
    QuotientIsZero,

    #[error("IdealNotInsideU: the reduction ideal must be contained in U")]
    IdealNotInsideU,

    #[error("ZeroIdeal: the relation list generates the zero ideal")]
    ZeroIdeal,

    #[error("NondegenerateInput: the pair is non-degenerate, nothing to construct")]
    NondegenerateInput,

    #[error("ZeroPolynomial: operation undefined for the zero polynomial")]
    ZeroPolynomial,

    #[error("InvalidRange: {0}")]
    InvalidRange(String),

    #[error("PassLimitExceeded: no strict shrink after {passes} passes")]
    PassLimitExceeded { passes: usize },

    #[error("InternalInvariantViolation: {0}")]
    InternalInvariantViolation(String),

    #[error("FileFormat: {0}")]
    FileFormat(String),
}

impl Error {
    /// Stable identifier used in CLI output and structured reports.
    pub fn name(&self) -> &'static str {
        match self {
            Error::Syntax(_) => "SyntaxError",
            Error::UnknownVariable(_) => "UnknownVariable",
            Error::NegativeExponent => "NegativeExponent",
            Error::VariableMismatch => "VariableMismatch",
            Error::IndexOutOfRange { .. } => "IndexOutOfRange",
            Error::DimensionMismatch { .. } => "DimensionMismatch",
            Error::NonzeroConstantTerm(_) => "NonzeroConstantTerm",
            Error::TruncationCapExceeded { .. } => "TruncationCapExceeded",
            Error::NotNilpotent => "NotNilpotent",
            Error::UnitPartNotOne => "UnitPartNotOne",
            Error::NotInMaximalIdeal => "NotInMaximalIdeal",
            Error::WrongCodimension { .. } => "WrongCodimension",
            Error::DoesNotGenerate => "DoesNotGenerate",
            Error::ComplementInU => "ComplementInU",
            Error::NotAnIdeal => "NotAnIdeal",
            Error::QuotientIsZero => "QuotientIsZero",
            Error::IdealNotInsideU => "IdealNotInsideU",
            Error::ZeroIdeal => "ZeroIdeal",
            Error::NondegenerateInput => "NondegenerateInput",
            Error::ZeroPolynomial => "ZeroPolynomial",
            Error::InvalidRange(_) => "InvalidRange",
            Error::PassLimitExceeded { .. } => "PassLimitExceeded",
            Error::InternalInvariantViolation(_) => "InternalInvariantViolation",
            Error::FileFormat(_) => "FileFormat",
        }
    }
}
