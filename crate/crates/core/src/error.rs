use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus {0} is not prime")]
    CompositeModulus(u64),
    #[error("modulus {0} is outside 2..=251")]
    OutOfRange(u64),
    #[error("symbol {0:?} is not one of 0, 1, a, b")]
    BadSymbol(char),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix does not have full row rank")]
    RankDeficient,
    #[error("zero vector has no span")]
    ZeroVector,
    #[error("row {0} is zero")]
    ZeroRow(usize),
    #[error("matrix is singular")]
    Singular,
    #[error("matrix is not square")]
    NotSquare,
    #[error("matrices are not an orthogonal pair of complementary rank")]
    NotOrthogonalPair,
    #[error("not a characteristic matrix: {0}")]
    NotCharacteristic(String),
    #[error("matrices are not in duality")]
    NotInDuality,
    #[error("c(x)d(x) is not x^n - 1")]
    NotFactorOfXnMinus1,
    #[error("enumeration too large: {0}")]
    TooLarge(String),
    #[error("generator {0}: span is not a span of its vector")]
    BadSpan(usize),
    #[error("generator {0}: labels do not close around the cycle")]
    NotClosed(usize),
    #[error("selected rows are linearly dependent")]
    DependentSelection,
    #[error("code has no generators")]
    EmptyCode,
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
