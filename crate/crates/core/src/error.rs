use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("negative degree {0} in input")]
    NegativeDegree(i64),

    #[error("sequence is not graphical")]
    NotGraphical,

    #[error("degree {degree} is out of range for a sequence of length {len}")]
    DegreeOutOfRange { degree: usize, len: usize },

    #[error("partition weights differ ({left} vs {right})")]
    WeightMismatch { left: usize, right: usize },

    #[error("degree sum {0} is odd")]
    OddWeight(usize),

    #[error("sequence contains zero degrees where a zero-free sequence is required")]
    ZeroDegree,

    #[error("Havel-Hakimi reduction produced a negative term")]
    NegativeResidueTerm,

    #[error("invalid generator spec: {0}")]
    InvalidGenSpec(String),

    #[error("no graphical sequence accepted after {0} attempts")]
    GenerationFailed(u64),
}

pub type Result<T> = std::result::Result<T, Error>;
