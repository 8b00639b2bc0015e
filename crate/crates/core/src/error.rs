use thiserror::Error;

/// Errors raised by the exact-arithmetic, group and analysis layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(String, String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("zero has no multiplicative order")]
    ZeroElement,
    #[error("element has infinite multiplicative order")]
    InfiniteOrder,
    #[error("finite field of size {0} exceeds the search guard")]
    ExtensionTooLarge(u128),
    #[error("p-singular element: order {order} is divisible by the characteristic {p}")]
    PSingular { order: u64, p: u64 },
    #[error("singular matrix")]
    SingularMatrix,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("group enumeration exceeded the cap of {0} elements")]
    CapExceeded(usize),
    #[error("element order exceeds the cap of {0}")]
    OrderCapExceeded(usize),
    #[error("subset is not contained in the group")]
    NotSubgroup,
    #[error("empty input")]
    EmptyInput,
    #[error("zero polynomial in input")]
    ZeroPolynomial,
    #[error("pole of order {0} at the evaluation point")]
    Pole(usize),
    #[error("rational function has a pole at t = 0")]
    PoleAtZero,
    #[error("ratio is not a monomial in t: {0}")]
    NotMonomial(String),
    #[error("characteristic {p} divides the group order {order}")]
    Modular { p: u64, order: usize },
    #[error("value is not in the group of {0}-th roots of unity")]
    NotInRoots(u64),
    #[error("map is not a homomorphism: {0}")]
    NotHomomorphism(String),
    #[error("inconclusive: {0}")]
    Inconclusive(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal assertion failed: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
