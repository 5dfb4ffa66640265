use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("node {node} out of range for a graph with {n} nodes")]
    NodeOutOfRange { node: usize, n: usize },
    #[error("self-loop at node {0}")]
    SelfLoop(usize),
    #[error("invalid size: {0}")]
    InvalidSize(String),
    #[error("graph is not a forest")]
    NotAForest,
    #[error("graph is not a tree")]
    NotATree,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, offset {offset}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub offset: usize,
    pub message: String,
}

impl ParseError {
    pub(crate) fn new(line: usize, offset: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            offset,
            message: message.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StrategyError {
    #[error("step {step} uses {size} firefighters but the budget is {m}")]
    OverBudget { step: usize, size: usize, m: usize },
    #[error("step {step} names node {node}, graph has {n} nodes")]
    NodeOutOfRange { step: usize, node: usize, n: usize },
}

/// Reasons a search stopped before reaching a verdict.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("state limit of {limit} exceeded")]
    StateLimit { limit: usize },
    #[error("time limit of {limit_ms} ms exceeded")]
    TimeLimit { limit_ms: u64 },
    #[error("graph too large: {0}")]
    TooLarge(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("invalid path decomposition: {0}")]
    InvalidDecomposition(String),
    #[error("constructed strategy failed verification: {0}")]
    Verification(String),
    #[error(transparent)]
    Solve(#[from] SolveError),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error(transparent)]
    Construct(#[from] ConstructError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GadgetError {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructError {
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("constructed strategy loses: {0}")]
    Verification(String),
    #[error("invalid path decomposition: {0}")]
    InvalidDecomposition(String),
    #[error(transparent)]
    Strategy(#[from] StrategyError),
}
