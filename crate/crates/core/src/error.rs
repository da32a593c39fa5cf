use alloc::string::String;

/// Errors shared by the numeric layers.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// A function was evaluated wholly outside its domain.
    #[error("domain error: {0}")]
    Domain(&'static str),
    /// Two enclosures overlap, so an order comparison cannot be decided.
    #[error("indeterminate comparison")]
    Indeterminate,
    /// Adaptive precision reached its cap without deciding a question.
    #[error("precision exhausted at {0} bits")]
    PrecisionExhausted(u32),
    /// An iterative float-grade method did not converge.
    #[error("no convergence after {0} iterations")]
    ConvergenceFailure(usize),
    /// Input rejected by a precondition.
    #[error("invalid input: {0}")]
    InvalidInput(String),
    /// Unknown verification check id.
    #[error("unknown check `{0}`")]
    UnknownCheck(String),
}
