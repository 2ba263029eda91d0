use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("Tribonacci index {0} is below -3")]
    IndexBelowRange(i64),

    #[error("digit {digit:?} at position {position} is not binary")]
    NonBinaryDigit { position: usize, digit: char },

    #[error("letter {0:?} is not one of a, b, c")]
    UnknownLetter(char),

    #[error("difference quadruple {0:?} does not label any row")]
    UnlabeledRow([u64; 4]),

    #[error("argument out of range: {0}")]
    OutOfRange(String),

    #[error("allocation failed after {completed} complete {unit}")]
    Capacity { completed: usize, unit: &'static str },

    #[error("Sprague-Grundy value exceeded 32 bits at cell {0}")]
    ValueOverflow(usize),
}
