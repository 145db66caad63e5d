use thiserror::Error;

/// Errors raised by constructors, parsers and bounded searches.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid line label {0:?}")]
    InvalidLine(String),
    #[error("empty segment [{b},{e}]")]
    EmptySegment { b: i64, e: i64 },
    #[error("invalid Speh quadruple ({a},{b},{c},{d})")]
    InvalidSpeh { a: i64, b: i64, c: i64, d: i64 },
    #[error("invalid Moeglin-Waldspurger parameters (2t={t2}, 2a={a2}, 2b={b2})")]
    InvalidMw { t2: i64, a2: i64, b2: i64 },
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("empty multisegment")]
    EmptyMultisegment,
    #[error("multisegment spans more than one line")]
    MultipleLines,
    #[error("empty product")]
    EmptyProduct,
    #[error("downset budget exceeded after {visited} states")]
    BudgetExceeded { visited: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
