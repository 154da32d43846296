//! Enumeration and verification of two-dimensional q-ary simplex codes and
//! the graph formed by their projective lines.
//!
//! A length-(q+1) vector over GF(q) is *simplex* when exactly one of its
//! coordinates is zero; a projective line (2-dimensional subspace) is simplex
//! when all of its points are. For q in {3, 4, 5} this crate enumerates
//! simplex points and lines, builds the adjacency graph (two lines are
//! adjacent when they meet in a point), classifies distances around a base
//! line, computes orbits and stabilizers under the monomial semilinear group,
//! and cross-checks the bundled reference line tables against enumeration
//! from scratch.
//!
//! Entry points:
//! - [`field::FieldTable`] — exact GF(p^m) arithmetic for p^m ≤ 25.
//! - [`simplex::SimplexUniverse`] — simplex points, lines, incidence.
//! - [`graph::SimplexGraph`] and [`graph::stratify`] — distances, cliques,
//!   spreads, and the distance-2 stratification around a base line.
//! - [`symmetry`] — monomial semilinear maps, projective actions, line
//!   stabilizers, orbit decompositions.
//! - [`verify`] — named check suites producing machine-readable reports.
//!
//! The `examples/` directory holds one runnable example per capability; the
//! `simplex-graphs` binary exposes `enumerate`, `verify`, and `export`
//! subcommands on top of the same library.

pub mod appendix;
pub mod export;
pub mod field;
pub mod graph;
pub mod projective;
pub mod simplex;
pub mod symmetry;
pub mod verify;

pub use field::{FieldTable, GfElem};
pub use graph::{SimplexGraph, Stratification};
pub use projective::{GfVector, Hyperplane, Line, ProjPoint, ProjectiveSpace};
pub use simplex::SimplexUniverse;
pub use symmetry::{MonomialMap, Permutation, ProjectiveMap};

/// Index of a projective point in its space's canonical enumeration.
pub type PointId = u32;
/// Index of a simplex line in its universe's canonical enumeration.
pub type LineId = u32;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("unsupported field GF({p}^{m}): order exceeds {max} or no fixed modulus", max = field::MAX_ORDER)]
    UnsupportedField { p: u64, m: u32 },
    #[error("unsupported order q={0}; supported: 3, 4, 5")]
    UnsupportedOrder(u64),
    #[error("0 has no multiplicative inverse")]
    ZeroInverse,
    #[error("the zero vector spans no point")]
    ZeroVector,
    #[error("expected a vector of length {expected}, got {got}")]
    VectorLength { expected: usize, got: usize },
    #[error("points must be distinct")]
    CoincidentPoints,
    #[error("lines must be distinct")]
    CoincidentLines,
    #[error("point {0} is not simplex")]
    NotSimplexPoint(PointId),
    #[error("no point with id {0}")]
    NoSuchPoint(PointId),
    #[error("no line with id {0}")]
    NoSuchLine(LineId),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("{what}: expected {expected}, got {actual}")]
    CountMismatch {
        what: String,
        expected: u64,
        actual: u64,
    },
    #[error("map does not act on the simplex lines: {0}")]
    ActionNotWellDefined(String),
    #[error("{what} has {size} elements, above the enumeration limit {limit}")]
    EnumerationTooLarge {
        what: String,
        size: u64,
        limit: u64,
    },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
