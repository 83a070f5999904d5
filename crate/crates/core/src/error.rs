use thiserror::Error;

/// Malformed JSON text or a malformed path expression.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum ParseError {
    #[error("{message} at line {line} column {column}")]
    Syntax {
        message: String,
        line: usize,
        column: usize,
    },
    #[error("malformed path expression `{expression}`: {reason}")]
    PathExpression { expression: String, reason: String },
}

/// Invalid diff configuration. Detected when the configuration is built,
/// never during a diff.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum ConfigError {
    #[error("invalid path regex `{pattern}`: {reason}")]
    InvalidPattern { pattern: String, reason: String },
    #[error("pair threshold must lie in [0, 1], got {0}")]
    Threshold(f64),
    #[error("max depth must be positive")]
    MaxDepth,
    #[error("operator name `{0}` is registered twice")]
    DuplicateOperator(String),
    #[error("unknown array mode `{0}` (expected ordered-exact, ordered-fuzzy, unordered-exact or unordered-fuzzy)")]
    UnknownMode(String),
    #[error("unknown built-in operator `{0}`")]
    UnknownOperator(String),
    #[error("operator `{operator}`: {reason}")]
    OperatorParams { operator: String, reason: String },
}

/// Failure while a diff is running.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum DiffError {
    #[error("operator `{operator}` failed: {message}")]
    Operator { operator: String, message: String },
    #[error("comparison depth limit {limit} exceeded at `{path}`")]
    DepthLimit { limit: usize, path: String },
}

impl DiffError {
    pub fn operator(operator: impl Into<String>, message: impl Into<String>) -> Self {
        DiffError::Operator {
            operator: operator.into(),
            message: message.into(),
        }
    }
}
