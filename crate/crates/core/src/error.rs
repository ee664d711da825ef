use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Malformed or out-of-range input from a caller.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("{what} would have {v} vertices, above the limit of {max}")]
    ScaleGuard { what: String, v: u128, max: usize },

    #[error("adjacency predicate is not symmetric at ({0}, {1})")]
    AsymmetricPredicate(usize, usize),

    #[error("adjacency predicate is reflexive at vertex {0}")]
    ReflexivePredicate(usize),

    #[error("no closed form for {0}")]
    NoClosedForm(String),

    #[error("infeasible intersection array: {0}")]
    InfeasibleArray(String),

    /// Lemma-style identities that must hold for any intersection tensor.
    #[error("relation {relation} violated: {detail}")]
    RelationViolated { relation: &'static str, detail: String },

    #[error("division is not exact: {0}")]
    NonExactDivision(String),

    #[error("action is not transitive: orbit of point 0 has {orbit} of {degree} points")]
    Intransitive { orbit: usize, degree: usize },

    #[error("intersection number p^{h}_{{{i}{j}}} depends on the representative pair ({first} vs {second})")]
    NotWellDefined { h: usize, i: usize, j: usize, first: u64, second: u64 },

    #[error("symbolic check failed: {0}")]
    SymbolicMismatch(String),

    /// A construction produced something its own invariants rule out.
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidInput(msg.into())
}
