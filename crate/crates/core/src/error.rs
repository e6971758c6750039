use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed edge-list input. `line` is 1-based.
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("contract violated: {0}")]
    Contract(String),

    #[error("graph is not a tree")]
    NotATree,

    #[error("graph is trivial (fewer than two vertices)")]
    TrivialGraph,

    #[error("{what} is limited to {limit} vertices, got {n}")]
    TooLarge { what: &'static str, limit: usize, n: usize },

    #[error("search budget of {0} nodes exhausted")]
    BudgetExceeded(u64),

    #[error("construction failed: {0}")]
    Construction(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn contract(msg: impl Into<String>) -> Error {
    Error::Contract(msg.into())
}
