use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not a prime in [2, 2^31)")]
    NotPrime(u64),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    /// An ambient map failed to send a relation of its domain quotient into
    /// the relations of its codomain.
    #[error("map is not well defined on the quotient: {context} (relation #{relation})")]
    NotWellDefined { context: String, relation: usize },

    #[error("element does not lie in the space: {0}")]
    ElementNotInSpace(String),

    #[error("invalid group table: {0}")]
    InvalidTable(String),

    #[error("polynomial is reducible over GF({0})")]
    ReduciblePolynomial(u32),

    #[error("no depth-two certificate: f2 is not bijective ({detail})")]
    NoD2Certificate { detail: String },

    #[error("axiom failure: {0}")]
    AxiomFailure(String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("facet #{0} is empty")]
    EmptyFacet(usize),

    #[error("size limit exceeded: {0}")]
    SizeLimit(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
