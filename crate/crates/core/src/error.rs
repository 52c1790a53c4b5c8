use thiserror::Error;

use crate::arith::Rational;

/// Errors raised by the computational layers (arithmetic, conversion,
/// polarity). File-format problems use [`crate::repr::ParseError`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("representation kinds differ")]
    KindMismatch,
    #[error("invalid representation: {0}")]
    InvalidRepresentation(String),
    #[error("the polyhedron is empty")]
    Infeasible,
    /// The polyhedron (or cone) contains a line; the basis spans its
    /// lineality space.
    #[error("not pointed: lineality space has dimension {}", lineality.len())]
    NotPointed { lineality: Vec<Vec<Rational>> },
    /// `0 ∉ P`, so `V(P)` cannot be fed to an H-to-V conversion directly.
    #[error("the origin is not contained in the polyhedron")]
    OriginNotContained,
    /// The polar contains a line; `witness` is a nonzero direction `z` with
    /// `s·z = 0` and `r·z = 0` for every generator.
    #[error("the polar is not pointed")]
    PolarNotPointed { witness: Vec<Rational> },
    #[error("brute force over C({m}, {k}) subsets exceeds the cap of {cap}")]
    CapExceeded { m: usize, k: usize, cap: u64 },
    #[error("V-row {v_row} violates H-row {h_row}")]
    InconsistentPair { h_row: usize, v_row: usize },
}
