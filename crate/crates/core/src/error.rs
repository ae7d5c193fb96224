//! Error type shared by all modules of the crate.

use thiserror::Error;

/// Errors produced by construction and query operations.
///
/// Variants are grouped in two families: malformed input (bad syntax,
/// entries outside the allowed set, invalid indices) and domain errors
/// (well-formed requests whose mathematical preconditions fail).
/// [`Error::is_malformed_input`] tells them apart, which the CLI uses
/// to pick its exit code.
#[derive(Debug, Error)]
pub enum Error {
    /// Input could not be parsed or contains entries outside the allowed set.
    #[error("malformed input: {0}")]
    MalformedInput(String),

    /// The matrix is a valid Coxeter datum but not of finite crystallographic type.
    #[error("not a finite crystallographic type: {0}")]
    NotFiniteType(String),

    /// A custom multiplicity table does not assign a weight to every positive root.
    #[error("multiplicity table is missing a weight for positive root {0}")]
    MissingRootWeight(String),

    /// The Weyl group is larger than the configured enumeration bound.
    #[error("group order {order} exceeds the enumeration capacity {capacity}")]
    CapacityExceeded { order: u128, capacity: u64 },

    /// A one-line input is not a permutation of 1..n.
    #[error("not a permutation of 1..{0}")]
    NotAPermutation(usize),

    /// A longest-element action was requested on a quotient with ι(θ) ≠ θ.
    #[error("the longest element does not act on this quotient: ι(θ) ≠ θ for θ = {0}")]
    IotaViolation(String),

    /// An operation requiring θ = Δ was called on a two-sided quotient.
    #[error("operation requires θ = Δ (a one-sided quotient), got θ = {0}")]
    ThetaNotFull(String),

    /// An operation requiring the trivial quotient (θ = η = Δ) was called elsewhere.
    #[error("operation requires the full quotient θ = η = Δ")]
    NotFullQuotient,

    /// The given coset set is not downward closed.
    #[error("the set is not an ideal (not downward closed)")]
    NotAnIdeal,

    /// The given ideal is not slim.
    #[error("the ideal is not slim: it meets its image under the longest element")]
    NotSlim,

    /// The longest element fixes a coset, so no balanced ideal exists.
    #[error("the longest element fixes a coset of this quotient; no balanced ideal exists")]
    FixedPointExists,

    /// List-mode enumeration found more ideals than the caller allowed.
    #[error("enumeration found more than {limit} balanced ideals")]
    LimitExceeded { limit: u64 },

    /// A structurally valid argument violates an operation precondition.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// Cache file I/O failure.
    #[error("cache i/o: {0}")]
    CacheIo(#[from] std::io::Error),

    /// Cache file exists but cannot be used.
    #[error("cache format: {0}")]
    CacheFormat(String),
}

impl Error {
    /// True for errors that indicate unparseable or out-of-range input,
    /// as opposed to domain preconditions.
    pub fn is_malformed_input(&self) -> bool {
        matches!(
            self,
            Error::MalformedInput(_)
                | Error::NotFiniteType(_)
                | Error::MissingRootWeight(_)
                | Error::NotAPermutation(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
