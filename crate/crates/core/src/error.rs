use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("strand count mismatch: {0} vs {1}")]
    StrandMismatch(usize, usize),

    #[error("letter {letter} out of range for {n} strands")]
    LetterOutOfRange { letter: i32, n: usize },

    #[error("invalid strand count {0} (supported range 1..=64)")]
    InvalidStrandCount(usize),

    #[error("indices ({i},{j}) out of range for n={n}; need 1 <= i < j <= n")]
    IndexOutOfRange { i: usize, j: usize, n: usize },

    #[error("braid is not pure (permutation is {0})")]
    NotPure(String),

    #[error("permutation {0} is not a power of the cyclic generator")]
    NotCyclicMember(String),

    #[error("modulus {0} is not a valid group order (need n >= 2)")]
    InvalidModulus(usize),

    #[error("homomorphism is not valid: {0}")]
    InvalidHom(String),

    #[error("precondition violated: {0}")]
    Domain(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("tracing failed: {0}")]
    Tracing(String),

    #[error("strand collision at sample time {t}: strands {i} and {j} coincide; refine the resolution")]
    Resolution { t: f64, i: usize, j: usize },

    #[error("preimage search exhausted word length bound {0}")]
    SearchExhausted(usize),

    #[error("unsupported: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
