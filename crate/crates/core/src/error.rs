use thiserror::Error;

/// Errors shared across the crate.
///
/// Anything tagged "internal consistency" is unreachable for valid inputs;
/// it fires only when two independent routes to the same quantity disagree,
/// which means an implementation bug, never bad user data.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A subset of Weierstrass indices violates a structural requirement
    /// (odd cardinality, index outside 1..=8, empty where a curve is needed).
    #[error("invalid subset: {0}")]
    InvalidSubset(String),

    /// A scalar parameter is out of range (non-prime p, p too small, bad degree).
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// The supplied generators do not span a Klein (order-4) subgroup.
    #[error("degenerate generators: {0}")]
    DegenerateGenerators(String),

    /// Two independent computations of the same quantity disagree.
    #[error("internal consistency violation: {0}")]
    InternalConsistency(String),

    /// Point counts do not assemble into a valid Weil polynomial.
    #[error("count inconsistency: {0}")]
    CountInconsistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;
