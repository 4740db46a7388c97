use alloc::string::String;

/// Errors raised by tree, polynomial and basis operations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("branching arity must be at least 2, got {0}")]
    BranchingArity(usize),
    #[error("trees use different branching arities ({0} and {1})")]
    MismatchedBranching(usize, usize),
    #[error("leaf index {index} out of range for a tree of arity {arity}")]
    LeafIndex { index: usize, arity: usize },
    #[error("arity {arity} is not of the form 1 + k*{step}")]
    InvalidArity { arity: usize, step: usize },
    #[error("cannot compare trees of arity {0} and {1}")]
    ArityMismatch(usize, usize),
    #[error("invalid path sequence")]
    InvalidPathSequence,
    #[error("invalid tree shape code")]
    InvalidShape,
    #[error("polynomials live in different graded contexts")]
    ContextMismatch,
    #[error("the zero polynomial has no leading term")]
    ZeroPolynomial,
    #[error("leading monomial {divisor} does not divide {dividend}")]
    NotDivisible { divisor: String, dividend: String },
    #[error("occurrence does not match the pattern being substituted")]
    OccurrenceMismatch,
    #[error("arity bound {bound} is below generator arity {arity}")]
    BoundBelowGenerator { bound: usize, arity: usize },
    #[error("basis is only certified up to arity {checked}, arity {requested} requested")]
    IncompleteBasis { checked: usize, requested: usize },
    #[error("weight must be at least {min}, got {got}")]
    WeightTooSmall { min: usize, got: usize },
    #[error("oracle spanning set exceeds the limit of {0} vectors")]
    SpanLimit(usize),
    #[error(transparent)]
    Parse(#[from] ParseError),
}

/// Syntax error in the polynomial notation, with a byte offset into the input.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{message} at offset {position}")]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
