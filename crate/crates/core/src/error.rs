use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("pole: denominator vanishes at {0}")]
    Pole(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("argument out of range: {0}")]
    OutOfRange(String),
    #[error("operator is not invertible: {0}")]
    NotInvertible(String),
    #[error("unknown check '{name}'{}", suggest(.suggestions))]
    UnknownCheck { name: String, suggestions: Vec<String> },
    #[error("cache corrupted: {0}")]
    CacheCorrupt(String),
    #[error("io error: {0}")]
    Io(String),
}

fn suggest(s: &[String]) -> String {
    if s.is_empty() {
        String::new()
    } else {
        format!("; did you mean: {}?", s.join(", "))
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
