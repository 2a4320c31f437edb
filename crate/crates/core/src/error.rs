use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("dimension error: {0}")]
    Dimension(String),
    #[error("computation too large: {0}")]
    TooLarge(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("undecidable with this representation: {0}")]
    Undecidable(String),
}

pub type Result<T> = std::result::Result<T, Error>;
