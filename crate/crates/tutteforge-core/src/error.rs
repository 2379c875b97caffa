use alloc::string::String;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("a basis family must be non-empty")]
    EmptyFamily,
    #[error("label `{0}` is not in the ground set")]
    UnknownLabel(String),
    #[error("the given set is not an almost-basis")]
    NotAlmostBasis,
    #[error("the given set is not an over-basis")]
    NotOverBasis,
    #[error("the given set is not a basis")]
    NotABasis,
    #[error("operation requires the exchange property, which the input fails")]
    NotAMatroid,
    #[error("bad parameters: {0}")]
    BadParameters(String),
    #[error("a matrix must have at least one column")]
    EmptyMatrix,
    #[error("the graph has no edges")]
    NoEdges,
    #[error("the two elements must be distinct")]
    SameElement,
    #[error("the map is not a bijection")]
    NotABijection,
    #[error("the operands live on different ground sets")]
    GroundMismatch,
    #[error("the map is not defined on the whole support")]
    PartialMap,
    #[error("arithmetic overflow")]
    Overflow,
    #[error("subset enumeration budget exceeded (needed {needed}, limit {limit})")]
    BudgetExceeded { needed: u128, limit: u64 },
    #[error("precondition violated: {0}")]
    PreconditionViolated(&'static str),
    #[error("the linking has not been verified")]
    UnverifiedLinking,
    #[error("the linking is neither the identity nor complementation")]
    ClassificationFailure,
    #[error("internal consistency check failed: {0}")]
    AssertionFailure(&'static str),
    #[error("the graph is not connected")]
    Disconnected,
    #[error("subset expansion produced a negative coefficient")]
    NegativeCoefficient,
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
