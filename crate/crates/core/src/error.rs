use std::fmt;

use thiserror::Error;

/// Location and cause of a text-format rejection.
///
/// `position` is the 0-based character offset where parsing stopped.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub position: usize,
    pub reason: String,
}

impl ParseError {
    pub(crate) fn new(position: usize, reason: impl Into<String>) -> Self {
        ParseError {
            position,
            reason: reason.into(),
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at position {}: {}", self.position, self.reason)
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid permutation {input:?} {source}")]
    PermutationSyntax {
        input: String,
        #[source]
        source: ParseError,
    },

    #[error("invalid pattern {input:?} {source}")]
    PatternSyntax {
        input: String,
        #[source]
        source: ParseError,
    },

    #[error("invalid statistic {0:?}")]
    UnknownStatistic(String),

    #[error("invalid avoidance class {0:?}: expected one of 123, 132, 213, 231, 312, 321")]
    InvalidClass(String),

    #[error("{perm} does not avoid {pattern}")]
    NotAvoiding { perm: String, pattern: String },

    #[error("operation is undefined on the empty permutation")]
    EmptyPermutation,

    #[error("{what}: n = {n} exceeds the configured ceiling {max} (set VINC_MAX_N to raise it)")]
    LimitExceeded { what: &'static str, n: usize, max: usize },

    #[error("multistatistic arity mismatch: {left} vs {right}")]
    ArityMismatch { left: usize, right: usize },

    #[error("unknown check {0:?}")]
    UnknownCheck(String),

    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
