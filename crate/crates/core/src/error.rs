use thiserror::Error;

/// Errors raised across the crate.
///
/// Indices carried in error payloads are 0-based; the `Display` output
/// renders qubit and generator positions 1-based to match user-facing text.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    Dimension { expected: usize, found: usize },

    #[error("index {index} out of range (bound {bound})")]
    IndexOutOfRange { index: usize, bound: usize },

    #[error("{what} of {requested} exceeds the configured cap of {cap}")]
    Resource {
        what: &'static str,
        requested: usize,
        cap: usize,
    },

    #[error("validation failed: {0}")]
    Validation(String),

    #[error("generators {} and {} anticommute", .first + 1, .second + 1)]
    NonCommuting { first: usize, second: usize },

    #[error("-1 lies in the generated group (product of generators {}); the codespace is trivial", one_based(.certificate))]
    TrivialCodespace { certificate: Vec<usize> },

    #[error("delta is undefined for the trivial group")]
    UndefinedDelta,

    #[error("work budget exhausted after {examined} subsets; value is at least {lower_bound}")]
    BudgetExceeded { examined: u64, lower_bound: usize },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("internal consistency check failed: {0}")]
    Consistency(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid cellulation: {0}")]
    Cellulation(String),
}

fn one_based(indices: &[usize]) -> String {
    indices
        .iter()
        .map(|i| (i + 1).to_string())
        .collect::<Vec<_>>()
        .join(", ")
}

pub type Result<T> = std::result::Result<T, Error>;
