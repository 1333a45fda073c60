//! Crate-wide error type and result alias.

use thiserror::Error;

/// Errors produced by the library and surfaced by the CLI.
#[derive(Debug, Error)]
pub enum Error {
    /// No positive generator remained after normalization.
    #[error("generator set is empty after removing zeros")]
    EmptyGeneratorSet,

    /// An operation requiring a finite gapset met an empty residue class.
    #[error("gapset is infinite: residue class {class} has no element")]
    InfiniteGapset {
        /// The first residue class with an infinite head.
        class: u64,
    },

    /// A rebase target that is not an element of the sub-semigroup.
    #[error("{value} is not an element of the sub-semigroup")]
    NotAMember {
        /// The rejected value.
        value: u64,
    },

    /// A search bound or genus bound below the required minimum.
    #[error("bound {bound} is below the required minimum {required}")]
    InvalidBound {
        /// The bound that was supplied.
        bound: u64,
        /// The smallest acceptable bound.
        required: u64,
    },

    /// A head array violating the structural invariants.
    #[error("malformed head set: {0}")]
    MalformedHeadSet(String),

    /// Addition of two finite head values exceeded the 64-bit range.
    #[error("arithmetic overflow while combining head values")]
    Overflow,

    /// A modulus outside the supported range for the requested operation.
    #[error("invalid modulus {0}: must be at least 2")]
    InvalidModulus(u64),

    /// Gap sets never contain 0; inputs with 0 are rejected at the boundary.
    #[error("0 cannot be a gap: gapsets contain positive integers only")]
    ZeroInGapset,

    /// The minimal node of an extension level has no parent.
    #[error("the root of an extension level has no parent")]
    RootHasNoParent,

    /// A configured memory or node-count cap was exceeded.
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),

    /// The brute-force counting oracle refuses combinatorially explosive input.
    #[error("genus {genus} is too large for brute-force counting (maximum {max})")]
    GenusTooLarge {
        /// The requested genus.
        genus: u64,
        /// The largest accepted genus.
        max: u64,
    },

    /// A checkpoint file that failed validation on load.
    #[error("corrupt checkpoint: {0}")]
    CorruptCheckpoint(String),

    /// An internal invariant violation; always a bug, never a user error.
    #[error("internal error: {0}")]
    Internal(String),

    /// An underlying I/O failure.
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

/// Result alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
