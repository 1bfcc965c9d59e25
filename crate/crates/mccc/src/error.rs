use thiserror::Error;

/// Errors produced by the estimators, solvers, and the experiment harness.
#[derive(Debug, Error)]
pub enum Error {
    /// A parameter or configuration field is outside its valid range.
    #[error("invalid configuration: {0}")]
    Config(String),

    /// Paired inputs whose shapes must agree did not.
    #[error("shape mismatch in {context}: {left} vs {right}")]
    Shape {
        context: &'static str,
        left: usize,
        right: usize,
    },

    /// An operation received an empty input it cannot handle.
    #[error("{context}: input must contain at least one sample")]
    Empty { context: &'static str },

    /// A NaN or infinity reached an operation boundary.
    #[error("non-finite value in {context}")]
    NonFinite { context: &'static str },

    /// A Hermitian solve failed even after regularization.
    #[error("matrix is numerically singular (smallest pivot {pivot:e})")]
    Singular { pivot: f64 },

    /// A non-finite intermediate appeared while iterating.
    #[error("numeric breakdown at sweep {sweep}: {detail}")]
    Numeric { sweep: usize, detail: String },

    /// An error inside a Monte Carlo trial, annotated with its indices.
    #[error("trial {trial}, iteration {iteration}: {source}")]
    Trial {
        trial: u64,
        iteration: usize,
        #[source]
        source: Box<Error>,
    },
}

impl Error {
    /// True for failures of the numerical process itself (as opposed to
    /// rejected inputs): singular systems and non-finite intermediates.
    pub fn is_runtime_numeric(&self) -> bool {
        match self {
            Error::Singular { .. } | Error::Numeric { .. } => true,
            Error::Trial { source, .. } => source.is_runtime_numeric(),
            _ => false,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
