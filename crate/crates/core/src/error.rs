use thiserror::Error;

/// Errors raised by the exact and numeric kernels.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("matrix size mismatch: {left} x {left} vs {right} x {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("polynomial is not monic")]
    NotMonic,

    #[error("polynomial is zero")]
    ZeroPolynomial,

    #[error("invalid Grover size {0}: need n >= 2")]
    InvalidSize(usize),

    #[error("index ({i}, {j}) out of range for n = {n}")]
    IndexOutOfRange { n: usize, i: usize, j: usize },

    #[error("U_{0} has infinite period; its matrix zeta is not a product of cyclotomic factors")]
    NotFinitePeriod(usize),

    #[error("automorphy identity failed for n = {0}")]
    AutomorphyFailed(usize),

    #[error("pole: {0}")]
    Pole(String),

    #[error("argument outside domain: {0}")]
    Domain(String),

    #[error("non-finite value produced by {0}")]
    NonFinite(&'static str),

    #[error("series diverges: {0}")]
    Divergent(String),

    #[error("quadrature failed: {0}")]
    Quadrature(String),

    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;
