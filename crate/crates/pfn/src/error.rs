//! Crate-wide error type.
//!
//! Structural violations ([`Error::Structure`], [`Error::Unclassifiable`],
//! [`Error::RiseRecovery`]) are "theorem falsified" conditions: they can only
//! fire if the combinatorics in this crate disagrees with itself, and the
//! verification drivers surface them as failures instead of panicking.

use thiserror::Error;

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// A one-line word failed validation (range, symmetry, fixed point, ...).
    #[error("invalid element: {0}")]
    InvalidElement(String),

    /// Two elements of different sizes were compared.
    #[error("size mismatch: n={left} vs n={right}")]
    SizeMismatch { left: usize, right: usize },

    /// An element does not belong to the poset it was used with.
    #[error("element {0} is not in the poset")]
    NotInPoset(String),

    /// Möbius/interval queries require comparable endpoints.
    #[error("elements {x} and {y} are not comparable (need x <= y)")]
    NotComparable { x: String, y: String },

    /// Refusal to build a structure larger than the configured bound.
    #[error("size guard: n={n} exceeds the default bound {limit} (use the forced variant to override)")]
    SizeGuard { n: usize, limit: usize },

    /// The point-count census only supports small prime fields.
    #[error("census unsupported for n={n}, q={q}: q must be one of 2, 3, 5 and n within its cap")]
    UnsupportedCensus { n: usize, q: u64 },

    /// A Hasse edge did not match any move pattern (would falsify the cover
    /// classification).
    #[error("unclassifiable cover {lower} -> {upper}: {reason}")]
    Unclassifiable {
        lower: String,
        upper: String,
        reason: String,
    },

    /// Rise recovery for a c-move found no unique witness (would falsify the
    /// labeling rules).
    #[error("rise recovery for {lower} -> {upper} found {found} candidate rises (expected exactly 1)")]
    RiseRecovery {
        lower: String,
        upper: String,
        found: usize,
    },

    /// A `ct` transformation was called outside its precondition.
    #[error("invalid rise ({i1},{i2}) for {v}: {reason}")]
    InvalidRise {
        v: String,
        i1: usize,
        i2: usize,
        reason: String,
    },

    /// A structural invariant of the poset failed during construction.
    #[error("structure violation: {0}")]
    Structure(String),
}
