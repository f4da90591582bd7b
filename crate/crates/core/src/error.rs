use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("unexpected character '{0}'")]
    UnexpectedChar(char),
    #[error("missing exponent after '^'")]
    MissingExponent,
    #[error("zero exponent")]
    ZeroExponent,
    #[error("exponent out of range")]
    ExponentOverflow,
    #[error("word exceeds {limit} letters")]
    TooLong { limit: usize },
}

/// Syntax error with a 1-based character position.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at {position}: {kind}")]
pub struct ParseError {
    pub position: usize,
    pub kind: ParseErrorKind,
}

impl ParseError {
    pub fn new(position: usize, kind: ParseErrorKind) -> Self {
        ParseError { position, kind }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("closure is not a knot")]
    NotAKnot,
    #[error("word is not positive")]
    NotPositive,
    #[error("{0}")]
    Precondition(String),
    #[error("internal inconsistency: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
