use thiserror::Error;

use crate::simplicial::Violation;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid complex: {}", summarize(.0))]
    InvalidComplex(Vec<Violation>),

    #[error("invalid map: {0}")]
    InvalidMap(String),

    #[error("not a monomorphism: {0}")]
    NotMono(String),

    #[error("index {index} out of range for a simplex of dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },

    #[error("unknown simplex `{0}`")]
    UnknownSimplex(String),

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("invalid omega-category: {0}")]
    InvalidOmegaCat(String),

    #[error("composition undefined: {0}")]
    Undefined(String),

    #[error("search budget of {limit} nodes exceeded")]
    BudgetExceeded { limit: u64 },

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

fn summarize(violations: &[Violation]) -> String {
    match violations {
        [] => "no violations".to_string(),
        [v] => v.to_string(),
        [v, rest @ ..] => format!("{v} (and {} more)", rest.len()),
    }
}
