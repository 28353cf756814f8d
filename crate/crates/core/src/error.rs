use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("a graph needs at least one vertex")]
    NoVertices,
    #[error("vertex {vertex} is outside 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop at vertex {0} is not allowed in a simple graph")]
    Loop(usize),
    #[error("vertex sets overlap or the edge supports leave their parts")]
    OverlappingParts,
    #[error("graphs have different vertex counts ({0} vs {1})")]
    VertexCountMismatch(usize, usize),
    #[error("invalid extremal parameters n={n}, m={m}, i={i}: {reason}")]
    InvalidExtremalParams { n: usize, m: usize, i: usize, reason: &'static str },
    #[error("invalid (n, m) = ({n}, {m}): {reason}")]
    InvalidThresholdParams { n: usize, m: usize, reason: &'static str },
    #[error("graph6: {0}")]
    Graph6(String),
    #[error("edge list line {line}: {reason}")]
    EdgeList { line: usize, reason: String },
    #[error("tolerance must be positive and finite, got {0}")]
    InvalidTolerance(f64),
    #[error("power iteration did not converge in {iterations} iterations (residual {residual:e})")]
    NonConvergence { iterations: usize, residual: f64 },
    #[error("edge {{{0}, {1}}} is already present")]
    EdgePresent(usize, usize),
    #[error("shift needs two distinct vertices, got x = y = {0}")]
    SameShiftPair(usize),
    #[error("graph is not connected")]
    NotConnected,
    #[error("N({v}) \\ (N({u}) ∪ {{{u}}}) is empty; nothing to rewire")]
    EmptyRewireSet { u: usize, v: usize },
    #[error("isomorphism search is limited to n <= {limit}, got n = {n}")]
    IsomorphismTooLarge { n: usize, limit: usize },
    #[error("family has no members")]
    EmptyFamily,
    #[error("all members share the same {0} set")]
    AllEqual(&'static str),
    #[error("member {index} is not a labeled copy of {expected}")]
    NotExtremal { index: usize, expected: &'static str },
    #[error("family needs n >= 2m + 2 (n = {n}, m = {m}) and m + 1 members (got {members})")]
    FamilyShape { n: usize, m: usize, members: usize },
    #[error("exhaustive sweep needs {needed} instances, budget is {budget}")]
    BudgetExceeded { needed: u128, budget: u64 },
    #[error("{0}")]
    Usage(String),
    #[error("i/o: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
