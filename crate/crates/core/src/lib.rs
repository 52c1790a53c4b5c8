//! Exact conversion between H- and V-representations of pointed rational
//! polyhedra, together with polars, bipolar closures and HV-symmetry.
//!
//! A polyhedron `P ⊆ Rⁿ` is stored as an `(m × (n+1))` matrix in one of two
//! readings:
//!
//! * [`HRep`]: row `(b, a)` means `b + a·x ≥ 0`. Rows with `b = 0` are the
//!   homogeneous block.
//! * [`VRep`]: row `(1, s)` is a vertex and row `(0, r)` an extreme ray, so
//!   that `P = conv(S) + cone(R)`.
//!
//! The same matrix can be read either way. Reading `V(P)` as an H-matrix
//! describes the polar `P⁺ = {z : 1 + z·x ≥ 0 ∀x ∈ P}` (see
//! [`polarity::polar_hrep`]), and `P` is HV-symmetric exactly when converting
//! that polar back gives an H-matrix of `P`. For pointed `P` and `P⁺` this
//! happens if and only if `0 ∈ P` ([`polarity::verify_theorem1`]).
//!
//! All arithmetic is exact ([`arith::Rational`]).
//!
//! ```
//! use polarbox::{conversion, repr, Rep};
//!
//! let text = "H-representation\nbegin\n2 3 rational\n-1 1 0\n-1 0 1\nend\n";
//! let Rep::H(wedge) = repr::parse_rep(text).unwrap() else { unreachable!() };
//! let (v, _) = conversion::vertex_enumeration(&wedge).unwrap();
//! assert_eq!(v.num_vertices(), 1);
//! assert_eq!(v.num_rays(), 2);
//! ```
//!
//! The homogenization used throughout appends the row `(1, 0ₙ)`, the
//! hyperplane at infinity `1 + 0·x ≥ 0`. It is valid for every H-matrix, and
//! its V-side twin is the origin `(1, 0ₙ)`; the asymmetry between the two
//! readings is precisely whether the origin belongs to `P`.

pub mod arith;
pub mod conversion;
mod error;
pub mod instances;
pub mod polarity;
pub mod repr;

pub use arith::{RMatrix, Rational};
pub use conversion::{ConeRays, ConversionReport};
pub use error::Error;
pub use polarity::{OriginLocation, SymmetryReason, SymmetryVerdict, Theorem1Check};
pub use repr::{HRep, ParseError, Rep, VRep};

/// Default cap on the number of subsets the brute-force routines enumerate.
pub const DEFAULT_BRUTE_FORCE_CAP: u64 = 5000;
