use thiserror::Error;

/// Every refusal the library can produce.
///
/// The CLI maps these onto exit codes: `Config` and `InvalidInput` -> 2,
/// `UnderResolved` and `Budget` -> 3.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("under-resolved: spacing {spacing:.3e} exceeds required {required:.3e} ({what})")]
    UnderResolved {
        spacing: f64,
        required: f64,
        what: String,
    },
    #[error("budget exceeded: {needed} points requested, limit {limit}")]
    Budget { needed: usize, limit: usize },
    #[error("unsupported state kind for {op}: {kind}")]
    WrongKind { op: &'static str, kind: String },
    #[error("no correlation structure: {0}")]
    NoStructure(String),
    #[error("refused test function: {0}")]
    RefusedFunction(String),
    #[error("config error: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;
