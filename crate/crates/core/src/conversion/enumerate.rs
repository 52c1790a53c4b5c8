use std::collections::BTreeSet;

use num_traits::{Signed, Zero};

use super::{
    dd_extreme_rays_with_stats, feasible_point, homogenize, is_pointed_h, member_certificate,
    polar_is_pointed, polar_lineality_witness, ConversionReport, Pointedness,
};
use crate::arith::{dot, matrix_rank, negated, nullspace, RMatrix, Rational};
use crate::error::Error;
use crate::repr::{HRep, VRep};

/// H→V: vertices and extreme rays of a non-empty pointed polyhedron.
///
/// The homogenized cone is handed to double description; rays with
/// `x₀ > 0` are scaled to `x₀ = 1` and become vertices, rays with `x₀ = 0`
/// stay rays. The output is canonical.
pub fn vertex_enumeration(h: &HRep) -> Result<(VRep, ConversionReport), Error> {
    if feasible_point(h).is_none() {
        return Err(Error::Infeasible);
    }
    if let Pointedness::Lineality(lineality) = is_pointed_h(h) {
        return Err(Error::NotPointed { lineality });
    }
    let cone = homogenize(h);
    let (rays, stats) = dd_extreme_rays_with_stats(&cone)?;
    let rows: Vec<Vec<Rational>> = rays
        .rays
        .iter_rows()
        .map(|r| {
            if r[0].is_zero() {
                r.to_vec()
            } else {
                let x0 = r[0].clone();
                r.iter().map(|x| x / &x0).collect()
            }
        })
        .collect();
    let matrix = RMatrix::from_rows(h.dim() + 1, rows)?;
    let v = VRep::new(matrix)
        .map_err(|_| Error::Infeasible)?
        .canonical();
    let report = ConversionReport {
        input_rows: h.num_rows(),
        output_rows: v.num_rows(),
        feasible_basis_count: None,
        max_intermediate_rays: stats.max_intermediate_rays,
    };
    Ok((v, report))
}

/// Cone rows of the lifted facet problem: `V(P)` itself, read as
/// constraints on `(b, a)`, plus both signs of a basis of its null space
/// when `P` is not full-dimensional. The null space vectors are the
/// equations of the affine hull.
pub fn lifted_cone_rows(v: &VRep) -> (RMatrix, Vec<Vec<Rational>>) {
    let mut rows = v.rows().clone();
    let equations = nullspace(v.rows());
    for e in &equations {
        rows.push_row(e.clone()).expect("same width");
        rows.push_row(negated(e)).expect("same width");
    }
    (rows, equations)
}

/// V→H through the lifted cone `{(b, a) : b·λ + a·x ≥ 0 for all rows of V(P)}`.
///
/// Each extreme ray is a facet `b + a·x ≥ 0`. The ray that is constant on
/// `P` (the hyperplane at infinity `1 ≥ 0`, up to the equations) is not a
/// facet and is dropped. For lower-dimensional `P` the equations of its
/// affine hull come first and are marked.
pub fn facet_enumeration_lifted(v: &VRep) -> Result<(HRep, ConversionReport), Error> {
    let (cone, equations) = lifted_cone_rows(v);
    let (rays, stats) = dd_extreme_rays_with_stats(&cone)?;
    let facets = rays.rays.iter_rows().filter(|y| !is_constant_on(v, y)).map(<[Rational]>::to_vec);
    let n_eq = equations.len();
    let mut rows = RMatrix::empty(v.dim() + 1);
    for r in equations.into_iter().chain(facets) {
        rows.push_row(r)?;
    }
    let h = HRep::new(rows, (0..n_eq).collect::<BTreeSet<_>>())?.canonical();
    let report = ConversionReport {
        input_rows: v.num_rows(),
        output_rows: h.num_rows(),
        feasible_basis_count: None,
        max_intermediate_rays: stats.max_intermediate_rays,
    };
    Ok((h, report))
}

/// Whether `b + a·x` takes one value on all of `P`.
fn is_constant_on(v: &VRep, y: &[Rational]) -> bool {
    let mut vertex_value: Option<Rational> = None;
    for row in v.rows().iter_rows() {
        let val = dot(row, y);
        if row[0].is_zero() {
            if !val.is_zero() {
                return false;
            }
        } else {
            match &vertex_value {
                None => vertex_value = Some(val),
                Some(first) if *first != val => return false,
                _ => {}
            }
        }
    }
    true
}

/// V→H without lifting, valid when `0 ∈ P` and the polar is pointed: read
/// `V(P)` as `H(P⁺)`, enumerate the vertices and rays of `P⁺`, and read them
/// back as inequalities of `P`. A polar vertex at the origin stands for the
/// row `1 ≥ 0` and is dropped.
pub fn facet_enumeration_direct(v: &VRep) -> Result<(HRep, ConversionReport), Error> {
    let origin = vec![Rational::zero(); v.dim()];
    if member_certificate(v, &origin)?.is_none() {
        return Err(Error::OriginNotContained);
    }
    if !polar_is_pointed(v) {
        return Err(Error::PolarNotPointed {
            witness: polar_lineality_witness(v).unwrap_or_default(),
        });
    }
    let (polar, inner) = vertex_enumeration(&v.as_hrep())?;
    let h = without_infinity_row(&polar.as_hrep());
    let report = ConversionReport {
        input_rows: v.num_rows(),
        output_rows: h.num_rows(),
        ..inner
    };
    Ok((h, report))
}

/// Drops rows equal to `(1, 0ₙ)` up to positive scaling; returns the
/// canonical result.
pub(crate) fn without_infinity_row(h: &HRep) -> HRep {
    let keep: Vec<usize> = (0..h.num_rows())
        .filter(|&i| {
            let r = h.rows().row(i);
            !(r[0].is_positive() && r[1..].iter().all(Zero::is_zero))
        })
        .collect();
    let eqs = h
        .equalities()
        .iter()
        .filter_map(|e| keep.iter().position(|k| k == e))
        .collect();
    HRep::new(h.rows().select_rows(&keep), eqs)
        .expect("subset of valid rows")
        .canonical()
}

/// V-rows tight on one H-row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FacetIncidence {
    pub h_row: usize,
    /// Indices of incident V-rows (vertices with `b + a·s = 0`, rays with
    /// `a·r = 0`).
    pub incident: Vec<usize>,
    /// Rank of the incident V-rows as `(n+1)`-vectors; the affine dimension
    /// of the face they span is `rank − 1`.
    pub rank: usize,
    /// The incident rows span a face one dimension below `P`.
    pub spans_facet: bool,
}

/// Incidence between every H-row and the V-rows tight on it.
///
/// Errors with [`Error::InconsistentPair`] when a vertex or ray violates an
/// inequality (or leaves an equation).
pub fn facet_vertex_incidence(h: &HRep, v: &VRep) -> Result<Vec<FacetIncidence>, Error> {
    if h.dim() != v.dim() {
        return Err(Error::DimensionMismatch {
            expected: h.dim(),
            found: v.dim(),
        });
    }
    let dim_p = matrix_rank(v.rows()) - 1;
    let mut out = Vec::with_capacity(h.num_rows());
    for (i, hrow) in h.rows().iter_rows().enumerate() {
        let mut incident = Vec::new();
        for (k, vrow) in v.rows().iter_rows().enumerate() {
            let val = dot(hrow, vrow);
            if val.is_negative() || (h.is_equality(i) && !val.is_zero()) {
                return Err(Error::InconsistentPair { h_row: i, v_row: k });
            }
            if val.is_zero() {
                incident.push(k);
            }
        }
        let rank = if incident.is_empty() {
            0
        } else {
            matrix_rank(&v.rows().select_rows(&incident))
        };
        out.push(FacetIncidence {
            h_row: i,
            spans_facet: !h.is_equality(i) && rank == dim_p,
            incident,
            rank,
        });
    }
    Ok(out)
}
