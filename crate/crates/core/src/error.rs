use thiserror::Error;

/// Errors produced by the landscape toolkit.
#[derive(Debug, Error)]
pub enum Error {
    /// An input violated a domain precondition (bad simplex point, boundary
    /// evaluation of a log-singular derivative, out-of-range argument).
    #[error("domain error: {0}")]
    Domain(String),

    /// A root or equation has no solution for the given parameters.
    #[error("no solution: {0}")]
    NoSolution(String),

    /// An iterative solver failed (bracket failure, Newton divergence).
    #[error("solver failure: {0}")]
    Solver(String),

    /// The requested exact enumeration exceeds the configured size cap.
    #[error(
        "size cap exceeded: N={requested} needs about {approx_bytes} bytes of table \
         (cap N={cap}); raise the cap explicitly if this is intended"
    )]
    CapExceeded {
        requested: usize,
        cap: usize,
        approx_bytes: u128,
    },

    /// The operation is not defined for this coupling variant.
    #[error("unsupported: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
