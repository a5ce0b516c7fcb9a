use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different alphabets")]
    AlphabetMismatch,
    #[error("no image given for generator {0}")]
    MissingImage(String),
    #[error("rewriting did not terminate within {fuel} rule applications (at word {word})")]
    NonTermination { fuel: usize, word: String },
    #[error("unknown name: {0}")]
    UnknownName(String),
    #[error("element is not supported on powers of a single axis letter: {0}")]
    AxisError(String),
    #[error("element is not in the subalgebra T: {0}")]
    NotInT(String),
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },
    #[error("malformed algebra spec (line {line}): {message}")]
    SpecFormat { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
