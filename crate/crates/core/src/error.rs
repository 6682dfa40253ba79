use thiserror::Error;

/// Errors raised by state validation, linear algebra, and the solvers.
///
/// Validation variants name the violated invariant so that callers (and the
/// CLI) can report exactly which check a malformed input failed.
#[derive(Debug, Error)]
pub enum Error {
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),

    #[error("dimension must be at least {min} (got {got})")]
    DimensionTooSmall { min: usize, got: usize },

    #[error("hermiticity violated (max |m - m\u{2020}| entry {0:.3e})")]
    NotHermitian(f64),

    #[error("trace is not 1 (got {0})")]
    TraceNotOne(f64),

    #[error("not positive semidefinite (min eigenvalue {0:.3e})")]
    NotPositiveSemidefinite(f64),

    #[error("bloch vector outside the state body (min eigenvalue {0:.3e})")]
    NotAState(f64),

    #[error("bloch vector has wrong length: expected {expected}, got {got}")]
    BlochLength { expected: usize, got: usize },

    #[error("projector {index} is not idempotent (max |X\u{b2} - X| entry {residual:.3e})")]
    NotIdempotent { index: usize, residual: f64 },

    #[error("projectors {0} and {1} are not orthogonal (|Tr(X_i X_j)| = {2:.3e})")]
    NotOrthogonal(usize, usize, f64),

    #[error("projectors do not sum to the identity (max residual entry {0:.3e})")]
    IncompleteMeasurement(f64),

    #[error("measurement has {projectors} projectors but {outcomes} outcome labels")]
    OutcomeCountMismatch { projectors: usize, outcomes: usize },

    #[error("degenerate measurement unsupported in Bloch frame (projector {index} has rank {rank})")]
    DegenerateMeasurement { index: usize, rank: usize },

    #[error("probabilities do not sum to 1 (sum {0})")]
    ProbabilityNotNormalized(f64),

    #[error("negative probability ({0:.3e})")]
    NegativeProbability(f64),

    #[error("probability vectors have different lengths: {0} vs {1}")]
    LengthMismatch(usize, usize),

    #[error("invalid rank {rank} for dimension {dim}")]
    InvalidRank { rank: usize, dim: usize },

    #[error("eigensolver did not converge after {0} iterations")]
    EigNoConvergence(usize),

    #[error("optimizer stagnated: {0}")]
    OptimizerStagnation(String),

    #[error("restarts must be at least 1")]
    NoRestarts,

    #[error("property `{0}` is not registered with this backend")]
    UnregisteredProperty(String),

    #[error("outcome index {index} out of range for property `{property}` ({len} outcomes)")]
    OutcomeOutOfRange {
        property: String,
        index: usize,
        len: usize,
    },

    #[error("cannot update on outcome {index} of `{property}`: probability is zero")]
    ZeroProbabilityOutcome { property: String, index: usize },

    #[error("outcome labels of property `{0}` are not distinct")]
    DuplicateOutcomeLabels(String),

    #[error("property `{0}` needs at least 2 outcomes")]
    TooFewOutcomes(String),

    #[error("joint table has {got} entries, expected {expected}")]
    TableSizeMismatch { expected: usize, got: usize },

    #[error("mix called with {weights} weights for {states} states")]
    MixArityMismatch { weights: usize, states: usize },

    #[error("mix called with no states")]
    EmptyMix,

    #[error("realism criterion needs a nonempty measurement family")]
    EmptyFamily,

    #[error("json parse error: {0}")]
    Json(#[from] serde_json::Error),

    #[error("{field}: {source}")]
    Field {
        field: String,
        #[source]
        source: Box<Error>,
    },
}

impl Error {
    /// Wraps an error with the name of the input field it was detected in.
    pub fn in_field(self, field: impl Into<String>) -> Self {
        Error::Field {
            field: field.into(),
            source: Box::new(self),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
