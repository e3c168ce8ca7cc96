use crate::solver::Bounds;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    Parameter(String),

    #[error("graph is not connected")]
    Disconnected,

    #[error("malformed graph file: {0}")]
    Format(String),

    #[error("unknown vertex label {0}")]
    UnknownLabel(String),

    #[error("strategy requires a bipartite graph")]
    NotBipartite,

    #[error("search budget exhausted; best known bounds [{}, {}]", bounds.lower, bounds.upper)]
    Timeout { bounds: Box<Bounds> },

    #[error("cached result failed re-verification: {0}")]
    CacheCorrupt(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
