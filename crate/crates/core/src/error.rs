use std::io;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("i/o error: {0}")]
    Io(#[from] io::Error),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("validation error: {0}")]
    Validation(String),

    #[error("invalid vertex ids: {0}")]
    Ids(String),

    #[error("invalid parameter: {0}")]
    InvalidParam(String),

    #[error("graph is disconnected")]
    Disconnected,

    #[error("round cap of {0} exceeded")]
    RoundCap(usize),

    #[error("message of {bits} bits exceeds budget of {budget} bits (node {node}, round {round})")]
    MessageTooLarge {
        node: usize,
        round: usize,
        bits: usize,
        budget: usize,
    },

    #[error("bound violated: {0}")]
    Bound(String),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
