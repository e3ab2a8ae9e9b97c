use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("generator a{index} is out of range for rank {rank}")]
    GeneratorOutOfRange { index: u32, rank: u32 },

    #[error("cannot parse word token `{0}`")]
    BadToken(String),

    #[error("the trivial class has no {0}")]
    TrivialClass(&'static str),

    #[error("word is a proper power (exponent {exponent}); a primitive word is required")]
    NotPrimitive { exponent: u32 },

    #[error("invalid surface: {0}")]
    InvalidSurface(String),

    #[error("rays did not diverge within {cap} letters (tangential strands)")]
    DivergenceCap { cap: usize },

    #[error("index {index} out of range (size {len})")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("pair ({0}, {1}) is not a nontrivial self-intersection of that circle")]
    NotASelfIntersection(usize, usize),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    /// Errors that indicate a bug or an unsupported degenerate configuration
    /// rather than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::DivergenceCap { .. } | Error::Internal(_))
    }
}
