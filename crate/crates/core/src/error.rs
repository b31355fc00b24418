use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("invalid instance: {0}")]
    InvalidInstance(String),

    #[error("promise violated: independence number {alpha} is not below k = {k}")]
    PromiseViolation { alpha: usize, k: usize },

    #[error("{what} refuses n = {n} (limit {limit})")]
    SizeGuard {
        what: &'static str,
        n: usize,
        limit: usize,
    },

    #[error("graph must be connected")]
    Disconnected,

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("only {found} internally disjoint paths exist, {need} required")]
    FanShortfall { found: usize, need: usize },

    #[error("invariant violated: {0}")]
    InvariantViolation(String),
}

pub type Result<T> = std::result::Result<T, Error>;
