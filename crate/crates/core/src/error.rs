use thiserror::Error;

/// Errors raised by the geometry primitives and solvers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("degenerate segment: endpoints coincide")]
    DegenerateSegment,
    #[error("empty point set")]
    EmptyInput,
    #[error("need at least {need} distinct points, got {got}")]
    TooFewPoints { need: usize, got: usize },
    #[error("non-finite coordinate at index {index}")]
    NonFinite { index: usize },
    #[error("frequency mismatch: {0} vs {1}")]
    FrequencyMismatch(u8, u8),
    #[error("unsupported frequency {0}; only 1 and 2 are allowed")]
    UnsupportedFrequency(u32),
    #[error("operation requires base-0 frequency-1 sinusoids")]
    NotBaseZeroFrequencyOne,
    #[error("identical curves")]
    IdenticalCurves,
    #[error("envelope of an empty sequence")]
    EmptyEnvelope,
    #[error("interval [{lo}, {hi}] is not inside the function domain")]
    OutsideDomain { lo: f64, hi: f64 },
    #[error("invalid piecewise function: {0}")]
    InvalidPiecewise(&'static str),
    #[error("point {index} lies outside the bounding rectangle")]
    PointOutsideBox { index: usize },
    #[error("oracle size guard: at most {limit} points, got {got}")]
    SizeGuard { limit: usize, got: usize },
    #[error("invalid oracle configuration: {0}")]
    InvalidConfig(&'static str),
    #[error("piece violates preconditions: {0}")]
    InvalidPiece(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
