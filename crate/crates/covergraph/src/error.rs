use thiserror::Error;

/// Errors produced by toolkit operations.
///
/// Exact-only policy: when an instance exceeds a configured search bound the
/// operation refuses with [`Error::Capacity`] instead of approximating.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("invalid order: {0}")]
    InvalidOrder(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("malformed input at {location}: {message}")]
    Malformed { location: String, message: String },

    #[error("capacity exceeded for {operation}: instance needs {needed}, bound is {bound}{hint}")]
    Capacity {
        operation: String,
        needed: usize,
        bound: usize,
        hint: String,
    },

    #[error("orientation is not acyclic")]
    CyclicOrientation,

    #[error("not a Hasse diagram: arc {0} -> {1} is dependent")]
    NotHasse(String, String),

    #[error("homomorphism is not edge-preserving: edge ({0}, {1}) maps to a non-edge")]
    NotHomomorphism(String, String),

    #[error("embedding invalid: {0}")]
    InvalidEmbedding(String),

    #[error("graph mismatch: {0}")]
    Mismatch(String),

    #[error("hypothesis not met: {0}")]
    OutOfHypothesis(String),

    #[error("unknown format: {0}")]
    UnknownFormat(String),
}

impl Error {
    pub(crate) fn capacity(operation: &str, needed: usize, bound: usize) -> Self {
        Error::Capacity {
            operation: operation.to_string(),
            needed,
            bound,
            hint: String::new(),
        }
    }

    pub(crate) fn capacity_hint(operation: &str, needed: usize, bound: usize, hint: &str) -> Self {
        Error::Capacity {
            operation: operation.to_string(),
            needed,
            bound,
            hint: format!(" ({hint})"),
        }
    }

    pub(crate) fn malformed(location: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Malformed {
            location: location.into(),
            message: message.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
