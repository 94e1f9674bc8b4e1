use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("vector length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("performance vector is empty")]
    EmptyVector,

    #[error("component {index} is not strictly positive: {value}")]
    NonPositive { index: usize, value: f64 },

    #[error("{0:?} is not on the half-unit grid")]
    OffGrid(String),

    #[error("significance level must be non-negative, got {0}")]
    NegativeSigma(String),

    #[error("tie groups too large to enumerate: {0} orderings exceed the guard")]
    OracleGuard(u128),

    #[error("relation is not cycle-free; cyclic components: {}", format_components(.0))]
    Cyclic(Vec<Vec<usize>>),

    #[error("expected {expected} labels, got {got}")]
    LabelCount { expected: usize, got: usize },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("line {line}, column {column}: {message}")]
    Cell {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("duplicate {kind} name {name:?}")]
    DuplicateName { kind: &'static str, name: String },

    #[error("performance matrix must have at least one function and one algorithm")]
    EmptyMatrix,
}

/// Renders 0-based components with 1-based algorithm numbers.
fn format_components(comps: &[Vec<usize>]) -> String {
    comps
        .iter()
        .map(|c| {
            let inner: Vec<String> = c.iter().map(|i| (i + 1).to_string()).collect();
            format!("{{{}}}", inner.join(","))
        })
        .collect::<Vec<_>>()
        .join(" ")
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
