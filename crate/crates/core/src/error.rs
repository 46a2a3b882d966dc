use thiserror::Error;

/// Errors raised across the toolkit.
#[derive(Debug, Error)]
pub enum Error {
    #[error("syntax error at offset {offset}: {message}")]
    Syntax { offset: usize, message: String },

    #[error("invalid symbol `{0}`: expected a letter followed by optional digits")]
    InvalidSymbol(String),

    #[error("symbol `{0}` is not in the automaton alphabet")]
    UnknownSymbol(String),

    #[error("unknown state `{0}`")]
    UnknownState(String),

    #[error("automaton is not deterministic")]
    NotDeterministic,

    #[error("automaton has lambda-transitions; remove them first")]
    RequiresLambdaFree,

    #[error("automaton is not bideterministic")]
    NotBideterministic,

    #[error("digraph has {vertices} vertices, exceeding the exact cycle-rank budget of {budget}")]
    BudgetExceeded { vertices: usize, budget: usize },

    #[error("derivative saturation exceeded {0} states")]
    SaturationCap(usize),

    #[error("invalid ordering: {0}")]
    InvalidOrdering(String),

    #[error("cannot eliminate state {0}")]
    NotEliminable(usize),

    #[error("invalid family parameters: {0}")]
    InvalidFamily(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("malformed automaton file: {0}")]
    Format(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
