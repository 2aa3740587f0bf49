use thiserror::Error;

/// Errors surfaced by set construction, predicates, and the harness.
#[derive(Debug, Error)]
pub enum Error {
    #[error("empty set")]
    EmptySet,

    #[error("degenerate set")]
    DegenerateSet,

    /// Hole taxonomy requires |A| > n/2 + 1; below that the H1/H2/H3
    /// trichotomy need not cover every hole.
    #[error("density hypothesis fails: |A| = {size}, span = {span}")]
    DensityHypothesis { size: usize, span: i64 },

    #[error("not dense/anti-symmetric on required side")]
    NotDenseAntiSymmetric,

    #[error("no forms exist at odd span {0}")]
    OddSpan(i64),

    #[error("duplicate point in input")]
    DuplicatePoint,

    #[error("set not contained in host interval [{lo}, {hi}]")]
    OutsideHost { lo: i64, hi: i64 },

    #[error("invalid host interval [{lo}, {hi}]")]
    InvalidHost { lo: i64, hi: i64 },

    #[error("span out of range: {got} (allowed {min}..={max})")]
    SpanRange { min: i64, max: i64, got: i64 },

    #[error("theorem {0} requires a second set")]
    MissingOperand(&'static str),

    #[error("invalid set literal: {0}")]
    Parse(String),

    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
