//! Exact spectral-threshold membership for symmetric hollow integer
//! matrices and signed graphs: certification of minimal forbidden
//! submatrices and subgraphs, blow-up decomposition, and bounded-order
//! searches, all on exact arithmetic.

pub mod exactnum;
pub mod matrixcore;
pub mod blowup;
pub mod search;
pub mod signedgraph;

use thiserror::Error;

/// A line-numbered error from one of the text input formats.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl ParseError {
    pub fn at(line: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            message: message.into(),
        }
    }
}
