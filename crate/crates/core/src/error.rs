use thiserror::Error;

use crate::weyl::Node;

/// Errors raised by the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unknown node {0}")]
    UnknownNode(Node),
    #[error("invalid Cartan tag `{0}`")]
    BadTag(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("word {0:?} is not minimal in its coset")]
    NotMinimal(Vec<Node>),
    #[error("vertex is not in the principal component")]
    NotPrincipal,
    #[error("dilatation schedule exhausted (last m = {0})")]
    ScheduleExhausted(usize),
    #[error("rank {rank} exceeds the window {window}")]
    WindowExceeded { rank: usize, window: usize },
    #[error("column {0:?} is not admissible")]
    Inadmissible(Vec<i32>),
    #[error("partition {0:?} is not {1}-regular")]
    NotRegular(Vec<usize>, usize),
    #[error("multisegment is not in the orbit image")]
    NotInOrbit,
    #[error("shape mismatch")]
    ShapeMismatch,
}

pub type Result<T> = std::result::Result<T, Error>;
