use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("q = {0} is not a prime")]
    NotPrime(u32),

    #[error("operands use different bases (q = {left} and q = {right})")]
    BaseMismatch { left: u32, right: u32 },

    #[error("invalid modulus: {0}")]
    InvalidModulus(String),

    #[error("modulus {0:?} is reducible over GF({1})")]
    Reducible(Vec<u32>, u32),

    #[error("field GF({q}^{m}) is too large for this tool")]
    FieldTooLarge { q: u32, m: usize },

    #[error("element {value} is outside GF({q}^{m})")]
    ElementOutOfRange { value: u64, q: u32, m: usize },

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("generator rows are linearly dependent over GF(q^m)")]
    DependentRows,

    #[error("evaluation points are linearly dependent over GF(q)")]
    DependentPoints,

    #[error("enumeration needs {required} codewords but the cap is {cap}")]
    CapExceeded { required: String, cap: u64 },

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("parameter out of range: {0}")]
    OutOfRange(String),

    #[error("coefficient B_{index} = {value} is not an integer; input is not a code distribution")]
    NonIntegral { index: usize, value: String },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
