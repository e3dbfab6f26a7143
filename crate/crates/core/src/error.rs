use std::fmt;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// A syntax error in game notation, with a byte offset into the input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(position: usize, message: impl Into<String>) -> Self {
        ParseError {
            position,
            message: message.into(),
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at offset {}: {}", self.position, self.message)
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid form handle #{0}")]
    InvalidHandle(u32),
    #[error("birthday {0} exceeds the engine limit of 65535")]
    BirthdayGuard(u32),
    #[error("nimber size {0} exceeds the engine limit of 65535")]
    NimberGuard(u32),
    #[error("game is not tepid")]
    NotTepid,
    #[error("right stop {0} is positive")]
    RightStopPositive(crate::Dyadic),
    #[error("invalid star system: {0}")]
    StarSystem(&'static str),
    #[error("day {0} is beyond the enumeration limit of 3")]
    DayGuard(u32),
    #[error("birthday {0} is beyond the decomposition search limit of 4")]
    DecomposeGuard(u32),
    #[error("no components given")]
    EmptyComponents,
    #[error("the player has no move in any component")]
    NoMove,
    #[error("hackenbush string too long ({0} edges, limit 1023)")]
    HackenbushGuard(usize),
    #[error("parse error {0}")]
    Parse(#[from] ParseError),
    #[error("malformed day-set cache: {0}")]
    Cache(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
