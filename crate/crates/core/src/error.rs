use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid composition: token {position} ({token:?}) {reason}")]
    Parse {
        position: usize,
        token: String,
        reason: String,
    },

    #[error("{operation}: {param} = {value} exceeds the size guard {limit}; raise it with --max-n or COMPOLY_MAX_N")]
    GuardExceeded {
        operation: &'static str,
        param: &'static str,
        value: usize,
        limit: usize,
    },

    #[error("{0} must be a positive integer")]
    NonPositive(&'static str),

    #[error("point {point:?} violates {what}")]
    NotInPolytope { point: Vec<usize>, what: String },

    #[error("invalid recording tuple {tuple:?}: {reason}")]
    InvalidHTuple { tuple: Vec<usize>, reason: String },

    #[error("invalid b-profile {profile:?}: {reason}")]
    InvalidBProfile { profile: Vec<usize>, reason: String },

    #[error("coordinate sum {sum} exceeds {n}; no lattice path represents this point")]
    PathOverflow { sum: usize, n: usize },

    #[error("malformed lattice path: {0}")]
    InvalidPath(String),

    #[error("duplicate abscissa {0} in interpolation data")]
    DuplicateAbscissa(String),

    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,

    #[error("polynomial is not palindromic with respect to degree {0}")]
    NotPalindromic(usize),

    #[error("count overflowed 64 bits in {0}")]
    CountOverflow(&'static str),

    /// Two routes that must agree did not. This always signals a bug.
    #[error("internal consistency failure: {0}")]
    Internal(String),
}
