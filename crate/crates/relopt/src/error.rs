use thiserror::Error;

/// Failure modes shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("a graph needs at least one vertex")]
    NoVertices,
    #[error("endpoint {vertex} out of range for {n} vertices")]
    EndpointOutOfRange { vertex: usize, n: usize },
    #[error("vertex {0} does not exist")]
    NoSuchVertex(usize),
    #[error("edge {0} does not exist")]
    NoSuchEdge(usize),
    #[error("edge {0} is a loop and cannot be contracted")]
    ContractLoop(usize),
    #[error("vertex {0} is not a loopless 2-vertex")]
    NotSuppressible(usize),
    #[error("invalid expansion at vertex {vertex}: {reason}")]
    InvalidExpansion { vertex: usize, reason: String },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("{what} limit exceeded: {actual} > {limit}")]
    CapExceeded { what: &'static str, limit: usize, actual: usize },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("invalid weighting: {0}")]
    InvalidWeights(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("{what}: closed form gives {formula}, enumeration gives {oracle}")]
    OracleMismatch { what: &'static str, formula: String, oracle: String },
    #[error("budget exhausted: {0}")]
    BudgetExceeded(String),
    #[error("unknown name `{0}`")]
    UnknownName(String),
}

pub type Result<T> = std::result::Result<T, Error>;
