use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A table violates one of the laws of the structure it claims to be.
    #[error("{structure}: law `{law}` violated at {witness:?}")]
    Law {
        structure: String,
        law: String,
        witness: Vec<usize>,
    },

    /// Table shapes or identifiers are inconsistent (wrong sizes, out of range ids).
    #[error("malformed {structure}: {detail}")]
    Malformed { structure: String, detail: String },

    /// A construction was called outside its domain of definition.
    #[error("precondition failed: {0}")]
    Precondition(String),
}

impl Error {
    pub(crate) fn malformed(structure: &str, detail: impl Into<String>) -> Self {
        Error::Malformed {
            structure: structure.to_string(),
            detail: detail.into(),
        }
    }

    pub(crate) fn precondition(detail: impl Into<String>) -> Self {
        Error::Precondition(detail.into())
    }

    /// Name of the violated law, when this is a law violation.
    pub fn law(&self) -> Option<&str> {
        match self {
            Error::Law { law, .. } => Some(law),
            _ => None,
        }
    }
}
