use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("strand count {0} is below 2")]
    TooFewStrands(usize),
    #[error("generator {gen} out of range for {n} strands")]
    GeneratorOutOfRange { gen: i32, n: usize },
    #[error("invalid sliding letter {quadrant}({k},{l}) for {n} strands")]
    BadLetter {
        quadrant: String,
        k: usize,
        l: usize,
        n: usize,
    },
    #[error("parse error at column {column}: {message}")]
    Parse { column: usize, message: String },
    #[error("strand counts differ: {0} vs {1}")]
    StrandMismatch(usize, usize),
    #[error("integer overflow in coordinate action")]
    Overflow,
    #[error("operation undefined on the trivial lamination")]
    TrivialLamination,
    #[error("left-oriented letter {0} where a right-oriented one is required")]
    NotRightOriented(String),
    #[error("transition precondition failed for {0}")]
    NoTransition(String),
    #[error("alphabet mismatch between automata")]
    AlphabetMismatch,
    #[error("budget exceeded: {0}")]
    Budget(String),
    #[error("malformed automaton: {0}")]
    Malformed(String),
    #[error("invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
