use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degenerate pair: the two points coincide")]
    DegeneratePair,
    #[error("too few points: need at least {needed}, got {got}")]
    TooFewPoints { needed: usize, got: usize },
    #[error("duplicate point {point} at entries {first} and {second}")]
    DuplicatePoint {
        point: String,
        first: usize,
        second: usize,
    },
    #[error("point index {0} out of range")]
    IndexOutOfRange(usize),
    #[error("pairs are incomparable: {0}")]
    Incomparable(String),
    #[error("not a metric: {0}")]
    NotAMetric(String),
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("invalid coordinate `{0}`")]
    InvalidCoord(String),
    #[error("sweep too large: {0}")]
    SweepTooLarge(String),
    #[error("cannot avoid duplicates: {0}")]
    CannotAvoidDuplicates(String),
    #[error("rotation reduction violated: {0}")]
    RotationMismatch(String),
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
}
