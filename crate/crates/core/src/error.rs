use thiserror::Error;

use crate::word::Subspace;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("{what} is not in {space}")]
    NotInSubspace { what: String, space: Subspace },

    #[error("{0}")]
    Domain(String),

    #[error("weight {weight} is a zero grade: all of A1..A4 vanish below weight 3")]
    ZeroGrade { weight: usize },

    #[error("weight mismatch: basis has weight {expected}, query {found}")]
    WeightMismatch { expected: usize, found: String },

    #[error("config: {0}")]
    Config(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
