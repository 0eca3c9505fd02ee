use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for n = {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("edge {{{0},{1}}} listed twice")]
    DuplicateEdge(usize, usize),
    #[error("digraph is not oriented: digon between {0} and {1}")]
    Digon(usize, usize),
    #[error("digraph is not oriented: arc ({0},{1}) repeated")]
    RepeatedArc(usize, usize),
    #[error("blowup factor must be at least 1")]
    ZeroBlowup,
    #[error("vertex {0} is not odd-dominating")]
    NotOddDominating(usize),
}

/// Parse failure with a 1-based position.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("line {line}, column {column}: {message}")]
pub struct FormatError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl FormatError {
    pub(crate) fn new(line: usize, column: usize, message: impl Into<String>) -> Self {
        Self { line, column, message: message.into() }
    }
}

/// Failures of exact arithmetic. Both variants indicate that a result
/// could not be trusted and must never be reported as a verdict.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ArithmeticError {
    #[error("integer overflow in exact arithmetic ({0})")]
    Overflow(&'static str),
    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SpectraError {
    #[error("theta = {0} is outside (0, pi]")]
    ThetaOutOfRange(f64),
    #[error("eigensolver did not converge for a {0}x{0} matrix")]
    NoConvergence(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SearchError {
    #[error("graph has {edges} edges; cap is {cap} (raise the edge cap to at least {edges})")]
    EdgeCapExceeded { edges: usize, cap: usize },
    #[error("n = {n} exceeds the limit {cap} for {what}")]
    OrderCapExceeded { n: usize, cap: usize, what: &'static str },
    #[error("line {line}: {message}")]
    Catalog { line: usize, message: String },
    #[error(transparent)]
    Arithmetic(#[from] ArithmeticError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WalkError {
    #[error("walk must contain at least one vertex")]
    Empty,
    #[error("step {index} ({from} -> {to}) does not follow an arc")]
    InvalidStep { index: usize, from: usize, to: usize },
    #[error("walk vertex {vertex} out of range for n = {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("walk length {r} exceeds cap {cap}")]
    LengthCap { r: usize, cap: usize },
    #[error("digraph order {n} exceeds walk-enumeration cap {cap}")]
    OrderCap { n: usize, cap: usize },
    #[error(transparent)]
    Arithmetic(#[from] ArithmeticError),
}
