use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("graph6 parse error: {0}")]
    Graph6(String),

    #[error("edge list line {line}: {msg}")]
    EdgeList { line: usize, msg: String },

    #[error("invalid family parameters: {0}")]
    InvalidFamily(String),

    #[error("graph is disconnected ({components} components)")]
    Disconnected { components: usize },

    #[error("graph has {0} vertex; at least 2 are required")]
    TooSmall(usize),

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("matrix is singular (rank {rank} of {order})")]
    Singular { rank: usize, order: usize },

    #[error("block precondition violated: {0}")]
    BlockPrecondition(String),

    #[error("matrix is not symmetric (max asymmetry {0:e})")]
    NotSymmetric(f64),

    #[error("eigensolver did not converge after {sweeps} sweeps (off-diagonal norm {off_norm:e})")]
    NoConvergence { sweeps: usize, off_norm: f64 },

    #[error("spectrum invariant violated: {0}")]
    SpectrumInvariant(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("enumeration budget exceeded: {edges} edges (limit {limit})")]
    Budget { edges: usize, limit: usize },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
