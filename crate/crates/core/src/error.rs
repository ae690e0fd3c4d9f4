use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid labeling: {0}")]
    InvalidLabeling(String),
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("target graph has isolated vertices")]
    IsolatedVertices,
    #[error("graph has {n} vertices, above the isomorphism cap of {cap}")]
    GraphTooLarge { n: usize, cap: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("arithmetic overflow while building labels")]
    Overflow,
    #[error("construction self-check failed: {0}")]
    SelfCheckFailed(String),
    #[error("no labeling with range at most {max_range}")]
    Infeasible { max_range: i64 },
    #[error("search budget of {budget} candidates exceeded while at range {range}")]
    BudgetExceeded { budget: u64, examined: u64, range: i64 },
    #[error("isolate count for the target is unknown; supply it explicitly")]
    UnknownIsolateCount,
}

pub type Result<T> = std::result::Result<T, Error>;
