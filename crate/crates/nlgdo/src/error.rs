use thiserror::Error;

/// Errors emitted by the numerical pipeline.
#[derive(Debug, Error)]
pub enum Error {
    /// A grid could not be constructed from the requested parameters.
    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    /// A vector or matrix was sampled on a different grid than expected.
    #[error("grid mismatch: expected {expected} nodes, got {got}")]
    GridMismatch { expected: usize, got: usize },

    /// The dense eigensolver failed to converge.
    #[error("eigendecomposition failed to converge")]
    EigenFailed,

    /// A boundary-bordered linear system was (numerically) singular. For the
    /// Jost solver this signals a spurious/resonant wavenumber.
    #[error("singular linear system (solution growth {growth:.3e}); k may sit at a spurious threshold")]
    SingularSystem { growth: f64 },

    /// The kernel representation does not support the requested operation
    /// (e.g. complex continuation of a grid-sampled kernel).
    #[error("unsupported kernel representation: {0}")]
    UnsupportedRepresentation(String),

    /// The kernel has not decayed below the tolerance at the matching radius.
    #[error("kernel row norm {norm:.3e} at x = {x:.6} exceeds decay tolerance {tol:.3e}")]
    KernelNotDecayed { x: f64, norm: f64, tol: f64 },

    /// The nonlocal-to-local mapping broke down (current zero in the window).
    #[error("local-equivalent mapping breakdown: {0}")]
    MappingBreakdown(String),

    /// No usable points remain after masking.
    #[error("empty window: {0}")]
    EmptyWindow(String),

    /// A precondition on the operation inputs was violated.
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
