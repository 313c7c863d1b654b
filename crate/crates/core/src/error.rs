use thiserror::Error;

/// Errors produced by the constructors, the solver and the file formats.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid move: {0}")]
    InvalidMove(String),

    #[error("invalid board: {0}")]
    InvalidBoard(String),

    #[error("coordinate {0} lies outside the board")]
    OutOfBounds(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("no tour exists: {0}")]
    Infeasible(crate::feasibility::Obstruction),

    #[error("not constructed by this tool: {0}")]
    Unsupported(String),

    #[error("tour lacks required link {0}")]
    MissingLink(String),

    #[error("bridge edge {0} is not present in the cycle")]
    BridgeMissing(String),

    #[error("no bridge joins the remaining components {0:?}")]
    Unmergeable(Vec<usize>),

    #[error("search limit reached after {nodes} nodes")]
    Timeout { nodes: u64 },

    #[error("search space exhausted: no solution exists")]
    Exhausted,

    #[error("construction invariant broken: {0}")]
    Construction(String),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
