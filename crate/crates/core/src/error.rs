use thiserror::Error;

/// Which structural rule a step sequence broke.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PathViolation {
    Empty,
    LastStepNotDown,
    /// The running height went below zero before the last step.
    DipsBelowAxis { position: usize },
    /// Heights must total exactly -1.
    WrongFinalHeight { height: i64 },
}

impl std::fmt::Display for PathViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            PathViolation::Empty => write!(f, "path has no steps"),
            PathViolation::LastStepNotDown => write!(f, "last step is not D"),
            PathViolation::DipsBelowAxis { position } => {
                write!(f, "height drops below 0 at step {} before the last step", position + 1)
            }
            PathViolation::WrongFinalHeight { height } => {
                write!(f, "final height is {height}, expected -1")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unrecognized token {0:?}")]
    Token(String),
    #[error("invalid Łukasiewicz path: {0}")]
    InvalidPath(PathViolation),
    #[error("malformed tree: {0}")]
    Tree(String),
    #[error("malformed multiset: {0}")]
    Multiset(String),
    #[error("malformed profile: {0}")]
    Profile(String),
    #[error("malformed polynomial: {0}")]
    Polynomial(String),
}

pub type Result<T> = std::result::Result<T, Error>;
