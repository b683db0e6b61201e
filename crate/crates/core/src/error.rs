use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid sequence: {0}")]
    InvalidSequence(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("integer overflow while computing {0}")]
    Overflow(&'static str),

    #[error("Frobenius number undefined: generators have gcd {0}")]
    FrobeniusUndefined(u64),

    #[error("degree {degree} has more than {cap} factorizations")]
    CapExceeded { degree: u64, cap: usize },

    #[error("degree bound {bound} too small: disconnected factorization graph at degree {degree}")]
    BoundTooSmall { bound: u64, degree: u64 },

    #[error("scan cost {cost} exceeds budget {budget}")]
    WindowTooLarge { cost: u128, budget: u128 },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("sequence {0} is not a complete intersection")]
    NotCompleteIntersection(String),

    #[error("invalid certificate: {0}")]
    InvalidCertificate(String),
}

pub type Result<T> = std::result::Result<T, Error>;
