use thiserror::Error;

/// Errors shared by every module in the crate.
///
/// Computed negative answers (a morphism that is not a covering, a coloring
/// that does not exist, a weak equivalence that fails) are *not* errors; they
/// are returned as values. Errors mark inputs that violate a precondition or
/// internal states that should be impossible.
#[derive(Debug, Error)]
pub enum Error {
    #[error("unknown node `{0}`")]
    UnknownNode(String),
    #[error("unknown {kind} `{id}`")]
    UnknownId { kind: &'static str, id: String },
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("invalid morphism: {0}")]
    InvalidMorphism(String),
    #[error("flavor mismatch: {0}")]
    FlavorMismatch(String),
    #[error("unknown standard graph kind `{0}`")]
    UnknownKind(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("graph has loops: {0}")]
    HasLoops(String),
    #[error("not a covering: {0}")]
    NotACovering(String),
    #[error("invalid action: {0}")]
    InvalidAction(String),
    #[error("generator mismatch: {0}")]
    GeneratorMismatch(String),
    #[error("internal consistency failure: {0}")]
    Inconsistency(String),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
