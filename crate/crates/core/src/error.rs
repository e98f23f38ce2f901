use thiserror::Error;

/// Errors raised by ring, module, lattice and harness operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid modulus {0}: modular rings need n >= 2")]
    InvalidModulus(String),

    #[error("modulus {0} exceeds the supported bound 2^62")]
    ModulusTooLarge(u64),

    #[error("element {element} does not belong to {ring}")]
    ElementRingMismatch { element: String, ring: String },

    #[error("ring mismatch: {left} vs {right}")]
    RingMismatch { left: String, right: String },

    #[error("`{0}` needs a finite ring; the integers cannot be enumerated")]
    InfiniteRing(&'static str),

    #[error("cyclic factor {factor} does not divide the characteristic {modulus}")]
    FactorDoesNotDivide { factor: u64, modulus: u64 },

    #[error("submodules belong to different parent modules")]
    ParentMismatch,

    #[error("expected {expected} coordinates, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("submodule lattice exceeds the cap of {cap} submodules")]
    LatticeCap { cap: usize },

    #[error("module of order {order} exceeds the brute-force bound {bound}")]
    TooLarge { order: String, bound: u64 },

    #[error("free rank >= 1 unsupported except rank-1 Z")]
    UnsupportedInfinite,

    #[error("negative input {0}")]
    NegativeInput(String),

    #[error("the result is the zero ring")]
    TrivialRing,

    #[error("cross-check failed: {0}")]
    CrossCheck(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("{0}")]
    Unsupported(String),

    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
