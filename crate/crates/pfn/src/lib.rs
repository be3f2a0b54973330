//! Exact combinatorics of the Bruhat order on partial fixed-point-free
//! involutions.
//!
//! The objects are symmetric `n x n` partial permutation matrices with empty
//! diagonal, ordered by entrywise domination of rank-control matrices.  The
//! crate builds the full poset for small `n`, labels its Hasse diagram with
//! an EL-labeling, certifies the order complex is a ball by exhaustive
//! computation, and reproduces the associated length generating functions
//! and finite-field point-count identities with exact integer arithmetic.
//!
//! Everything is deterministic: elements are always listed in lexicographic
//! one-line order, and all polynomial arithmetic is exact.

pub mod census;
pub mod error;
pub mod export;
pub mod involution;
pub mod labeling;
pub mod poset;
pub mod qpoly;
pub mod qseries;
pub mod rank;
pub mod topology;
pub mod verify;

pub use error::{Error, Result};
pub use involution::{Arc, Involution, PartialInvolution};
pub use labeling::{CoverLabel, ElLabeling, MoveType};
pub use poset::{Interval, Poset};
pub use rank::RankControlMatrix;
pub use topology::{BallCertificate, Verdict};
pub use verify::{run_all, run_suite, Suite, SuiteReport};

/// The working polynomial type: exact `q`-polynomials over [`num_bigint::BigInt`].
pub type QPoly = qpoly::Poly<num_bigint::BigInt>;
