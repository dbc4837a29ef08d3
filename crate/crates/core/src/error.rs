use thiserror::Error;

/// Errors shared across the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Argument sequences carry at least one explicit entry.
    #[error("argument sequence must contain at least one value")]
    EmptyArgs,
    /// A series needs at least a constant term.
    #[error("series must contain at least a constant term")]
    EmptySeries,
    /// An exhaustive oracle was asked to search past its configured bound.
    #[error("oracle bound exceeded ({size} > {bound})")]
    OracleBoundExceeded { size: u64, bound: u64 },
    #[error("multiplicative inverse requires a nonzero constant term")]
    ZeroConstantTerm,
    #[error("inner series of a composition must have zero constant term")]
    NonzeroInnerConstant,
    #[error("compositional inverse requires a zero constant term")]
    NonzeroConstant,
    #[error("compositional inverse requires a nonzero linear coefficient")]
    ZeroLinearTerm,
    #[error("the weight of out-degree 0 must be nonzero")]
    ZeroLeafWeight,
    /// A computation that is integral by construction produced a proper
    /// fraction; this signals a bug, not bad input.
    #[error("expected an integer value, found {0}")]
    NonIntegerResult(String),
    #[error("{0}")]
    Parse(String),
}
