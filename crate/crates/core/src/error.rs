//! Shared error type for the whole library.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Argument labels are nonempty strings over `[A-Za-z0-9_]`.
    #[error("invalid argument label {0:?} (labels are nonempty and drawn from [A-Za-z0-9_])")]
    InvalidLabel(String),

    /// An operation was given an argument (or a set containing one) that the
    /// framework does not declare.
    #[error("argument {0:?} does not belong to the framework")]
    MemberOutOfFramework(String),

    /// `dpu_partition` was given a set that is not one of the framework's
    /// strongly connected components.
    #[error("the given set is not a strongly connected component of the framework")]
    NotAnScc,

    /// An input is larger than the documented limit for the operation.
    #[error("{what} exceeds the supported capacity of {limit}: got {actual}")]
    CapacityExceeded {
        what: &'static str,
        limit: usize,
        actual: usize,
    },

    /// A semantics name could not be parsed.
    #[error("unknown semantics {0:?}")]
    UnknownSemantics(String),

    /// Skeptical and intersection-based aggregation are undefined when the
    /// extension family is empty (only stable semantics can produce that).
    #[error("the extension family is empty; skeptical and intersection-based aggregation are undefined")]
    NoExtensions,

    /// Pairwise principle checks are only defined across normal expansions.
    #[error("the pair of frameworks is not a normal expansion")]
    NotNormalExpansion,

    /// A framework document could not be parsed.
    #[error("parse error on line {line}: {reason}")]
    ParseError { line: usize, reason: String },

    /// An `att`/`pref` statement referenced a label with no `arg` declaration
    /// anywhere in the document.
    #[error("line {line} references undeclared argument {label:?}")]
    UndeclaredArgument { label: String, line: usize },

    /// The transitive closure of the preference relation relates two distinct
    /// arguments in both directions, so it is not a partial order.
    #[error("preferences are not a partial order: {0:?} and {1:?} are each weakly preferred to the other")]
    ConflictingPreferences(String, String),

    /// A parameter is outside its documented domain (for example an attack
    /// probability outside `[0, 1]`).
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// Audit sequences must be uniformly abstract or uniformly
    /// preference-based.
    #[error("audit sequences must be uniformly abstract or uniformly preference-based")]
    MixedDocumentKinds,
}

pub type Result<T> = std::result::Result<T, Error>;
