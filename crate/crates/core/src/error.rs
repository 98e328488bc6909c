use thiserror::Error;

/// Every failure the library surfaces.
///
/// Budget exhaustion inside exact searches is reported through this type (or
/// through an explicit `Unknown` outcome) and never silently turned into a
/// negative answer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed input: {0}")]
    MalformedInput(String),

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    InvalidVertex { vertex: usize, n: usize },

    #[error("copy enumeration truncated after {limit} copies")]
    EnumerationTruncated { limit: usize },

    #[error("{graph} is not A-degenerate with respect to the pattern")]
    NotDegenerate { graph: String },

    #[error("{graph} is A-degenerate with respect to the pattern")]
    IsDegenerate { graph: String },

    #[error("a family member is A-degenerate, so no F-free dense graph exists: {graph}")]
    NotApplicable { graph: String },

    #[error("unsupported pattern: {0}")]
    UnsupportedPattern(String),

    #[error("subset space C({n}, {k}) exceeds the exact-mode cap of {cap}")]
    SubsetSpaceTooLarge { n: usize, k: usize, cap: u64 },

    #[error("parameter out of range: {0}")]
    ParamOutOfRange(String),

    #[error("instance too large: {0}")]
    TooLarge(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
