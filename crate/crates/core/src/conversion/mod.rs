//! H↔V conversion on the homogenized cone, with redundancy removal,
//! membership certificates and brute-force oracles.
//!
//! An H-matrix `[b A]` becomes the cone `{(x₀, x) : b x₀ + A x ≥ 0, x₀ ≥ 0}`
//! whose extreme rays with `x₀ > 0` are the vertices of `P` and with
//! `x₀ = 0` its extreme rays. For the reverse direction the V-matrix itself
//! is read as a cone over `(b, a)` and each extreme ray is a facet.

mod brute;
mod dd;
mod enumerate;
mod redundancy;

pub use brute::{binomial, brute_force_rays, count_cone_bases, count_feasible_bases};
pub use dd::{dd_extreme_rays, dd_extreme_rays_with_stats, DdStats};
pub use enumerate::{
    facet_enumeration_direct, facet_enumeration_lifted, facet_vertex_incidence,
    lifted_cone_rows, vertex_enumeration, FacetIncidence,
};
pub(crate) use enumerate::without_infinity_row;
pub use redundancy::{
    feasible_point, implicit_equalities, member_certificate, remove_redundancy_h,
    remove_redundancy_v, Certificate,
};

use num_traits::{One, Zero};

use crate::arith::{matrix_rank, nullspace, RMatrix, Rational};
use crate::repr::{row_order, HRep, VRep};

/// Extreme rays of a pointed cone `{y : rows · y ≥ 0}`, one per row, each a
/// coprime integer vector, sorted in canonical row order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConeRays {
    pub dim: usize,
    pub rays: RMatrix,
}

impl ConeRays {
    pub(crate) fn from_sorted(dim: usize, mut rays: Vec<Vec<Rational>>) -> Self {
        rays.sort_by(|a, b| row_order(a, b));
        rays.dedup();
        let rays = RMatrix::from_rows(dim, rays).expect("rays have cone width");
        Self { dim, rays }
    }

    pub fn len(&self) -> usize {
        self.rays.nrows()
    }

    pub fn is_empty(&self) -> bool {
        self.rays.is_empty()
    }
}

/// Sizes and counts gathered during a conversion.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ConversionReport {
    pub input_rows: usize,
    pub output_rows: usize,
    /// Feasible bases of the working cone, when counted (see
    /// [`count_cone_bases`]). Degenerate inputs have several bases per
    /// output row, and the count is of bases.
    pub feasible_basis_count: Option<u64>,
    /// Largest ray list held by the double description loop.
    pub max_intermediate_rays: usize,
}

/// Pointedness of an H-described polyhedron.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Pointedness {
    Pointed,
    /// Basis of the lineality space `{x : Ax = 0, Bx = 0}`.
    Lineality(Vec<Vec<Rational>>),
}

/// Cone rows of the homogenization: each `(b, a)` read as
/// `b·x₀ + a·x ≥ 0`, equations expanded into opposing pairs, and the row
/// `(1, 0ₙ)` for `x₀ ≥ 0` appended last.
pub fn homogenize(h: &HRep) -> RMatrix {
    let mut rows = h.expanded_rows();
    let mut infinity = vec![Rational::zero(); h.dim() + 1];
    infinity[0] = Rational::one();
    rows.push_row(infinity).expect("same width");
    rows
}

/// A non-empty polyhedron is pointed iff its coefficient block has rank `n`.
pub fn is_pointed_h(h: &HRep) -> Pointedness {
    let n = h.dim();
    if n == 0 {
        return Pointedness::Pointed;
    }
    let block = h.coefficient_block();
    if matrix_rank(&block) == n {
        Pointedness::Pointed
    } else {
        Pointedness::Lineality(nullspace(&block))
    }
}

fn coordinate_block(v: &VRep) -> Option<RMatrix> {
    (v.dim() > 0).then(|| v.rows().drop_leading_columns(1))
}

/// Whether `Q = {z : 1 + Sz ≥ 0, Rz ≥ 0}` (the polar of `P`) is pointed,
/// i.e. whether the stacked `[S; R]` has rank `n`.
pub fn polar_is_pointed(v: &VRep) -> bool {
    coordinate_block(v).is_none_or(|b| matrix_rank(&b) == v.dim())
}

/// A nonzero `z` with `s·z = r·z = 0` for all generators, when one exists.
pub fn polar_lineality_witness(v: &VRep) -> Option<Vec<Rational>> {
    coordinate_block(v).and_then(|b| nullspace(&b).into_iter().next())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;

    #[test]
    fn homogenize_wedge() {
        let h = HRep::from_i64_rows(&[&[-1, 1, 0], &[-1, 0, 1]]);
        assert_eq!(
            homogenize(&h),
            RMatrix::from_i64_rows(&[&[-1, 1, 0], &[-1, 0, 1], &[1, 0, 0]])
        );
    }

    #[test]
    fn homogenize_empty_system() {
        let h = HRep::inequalities(RMatrix::empty(2)).unwrap();
        assert_eq!(homogenize(&h), RMatrix::from_i64_rows(&[&[1, 0]]));
    }

    #[test]
    fn homogenize_pyramid() {
        let h = HRep::from_i64_rows(&[&[1, 1, -1, -1], &[1, -1, -1, -1], &[0, 0, 0, 1], &[0, 0, 1, 0]]);
        let c = homogenize(&h);
        assert_eq!(c.nrows(), 5);
        assert_eq!(c.row(4), &[int(1), int(0), int(0), int(0)]);
        assert_eq!(c.row(0), h.rows().row(0));
    }

    #[test]
    fn pointedness() {
        let wedge = HRep::from_i64_rows(&[&[-1, 1, 0], &[-1, 0, 1]]);
        assert_eq!(is_pointed_h(&wedge), Pointedness::Pointed);
        let half = HRep::from_i64_rows(&[&[0, 1, 1]]);
        assert_eq!(
            is_pointed_h(&half),
            Pointedness::Lineality(vec![vec![int(-1), int(1)]])
        );
    }

    #[test]
    fn polar_pointedness() {
        let wedge = VRep::from_i64_rows(&[&[1, 1, 1], &[0, 1, 0], &[0, 0, 1]]);
        assert!(polar_is_pointed(&wedge));
        let pyramid = VRep::from_i64_rows(&[&[1, 0, 1, 0], &[1, -1, 0, 0], &[1, 1, 0, 0], &[1, 0, 0, 1]]);
        assert!(polar_is_pointed(&pyramid));
        let origin = VRep::from_i64_rows(&[&[1, 0, 0]]);
        assert!(!polar_is_pointed(&origin));
        assert!(polar_lineality_witness(&origin).is_some());
    }
}
