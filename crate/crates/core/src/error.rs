use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),

    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),

    #[error("edge endpoint {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("graph is not bipartite")]
    NotBipartite,

    #[error("graph is not connected")]
    Disconnected,

    #[error("graph has no edges")]
    EmptyEdgeSet,

    #[error("cycle of odd length {0} has no cycle binomial")]
    OddCycle(usize),

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("monomial length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),

    #[error("numerator is not divisible by (1-t)^{0}")]
    InexactDivision(usize),

    #[error("size guard exceeded: {0}")]
    SizeGuardExceeded(String),

    /// An internal consistency check failed; always a bug.
    #[error("internal invariant violated: {0}")]
    Internal(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Domain errors are properties of the input (not bipartite, bad parameters, ...),
    /// as opposed to I/O failures or internal bugs.
    pub fn is_domain(&self) -> bool {
        !matches!(self, Error::Internal(_) | Error::Io(_) | Error::Json(_))
    }
}

macro_rules! ensure_internal {
    ($cond:expr, $($arg:tt)+) => {
        if !$cond {
            return Err($crate::error::Error::Internal(format!($($arg)+)));
        }
    };
}
pub(crate) use ensure_internal;
