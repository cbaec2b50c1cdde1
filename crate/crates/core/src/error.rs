use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not a unit: {0}")]
    NotAUnit(String),
    #[error("reduction budget of {0} steps exceeded")]
    BudgetExceeded(usize),
    #[error("relation cannot be oriented ({reason}): {relation}")]
    NotOrientable { relation: String, reason: String },
    #[error("completion still producing rules after {0} rounds")]
    CompletionDiverged(usize),
    #[error("bad dimension: {0}")]
    BadDimension(String),
    #[error("matrix is singular over the scalar ring")]
    SingularMatrix,
    #[error("no quadratic relation: {0}")]
    NoQuadraticRelation(String),
    #[error("not invertible: {0}")]
    NotInvertible(String),
    #[error("no star image for {letter}{hint}")]
    NoImage { letter: String, hint: String },
    #[error("not proved within depth {depth}: {reason}")]
    NotProved { depth: usize, reason: String },
    #[error("syntax error at {line}:{col}: {msg}")]
    Syntax { line: usize, col: usize, msg: String },
    #[error("unknown generator `{name}` at {line}:{col}")]
    UnknownGenerator { name: String, line: usize, col: usize },
    #[error("config error: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;
