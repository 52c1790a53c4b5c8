//! Polars, bipolar closure, origin location and HV-symmetry.
//!
//! For a pointed `P` with generator matrix `V(P)`, the same matrix read as
//! inequalities describes `P⁺ = {z : 1 + z·x ≥ 0 ∀x ∈ P}`: every
//! `x ∈ P` is `Σλ_v v + Σμ_r r`, so `1 + z·x = Σλ_v(1 + v·z) + Σμ_r (r·z)`.
//! The bipolar `P⁺⁺` is `conv(P ∪ {0})`, closed because `P` is polyhedral.
//!
//! The polar convention here is `P⁺`; the other common one, `P° = {z : z·x ≤ 1}`,
//! is `-P⁺`.

use num_traits::{Signed, Zero};

use crate::arith::Rational;
use crate::conversion::{
    facet_enumeration_lifted, member_certificate, polar_is_pointed, polar_lineality_witness,
    remove_redundancy_h, remove_redundancy_v, vertex_enumeration, without_infinity_row,
};
use crate::error::Error;
use crate::repr::{reps_equal, HRep, Rep, VRep};

/// Where the origin sits relative to an H-described polyhedron.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OriginLocation {
    /// Every irredundant inequality is strict at 0 and there are no
    /// equations.
    Interior,
    /// 0 is feasible and some irredundant row is tight there.
    Boundary,
    /// `witness` is an irredundant row violated at 0: an inequality
    /// `b + a·x ≥ 0` with `b < 0`, or an equation with `b ≠ 0`.
    Outside { witness: Vec<Rational> },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SymmetryReason {
    OriginOutside,
    PolarNotPointed,
    Verified,
}

/// Outcome of the HV-symmetry test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetryVerdict {
    pub symmetric: bool,
    pub reason: SymmetryReason,
    /// `(V(Q) read as H, H(P))`, both canonical, when the polar is pointed.
    pub witness: Option<(HRep, HRep)>,
}

/// The four statements that are equivalent for pointed `P` and `P⁺`, each
/// computed by its own route.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Theorem1Check {
    /// `0 ∈ P`, by an LP membership certificate.
    pub origin_in_p: bool,
    /// `P = P⁺⁺`, by appending the origin and removing redundancy.
    pub p_equals_bipolar: bool,
    /// `V(P⁺)` read as inequalities describes `P`, by converting it back.
    pub polar_v_encodes_h: bool,
    /// `P` is HV-symmetric, by the literal matrix comparison.
    pub hv_symmetric: bool,
}

impl Theorem1Check {
    pub fn all_equal(&self) -> bool {
        let a = self.origin_in_p;
        a == self.p_equals_bipolar && a == self.polar_v_encodes_h && a == self.hv_symmetric
    }

    pub fn as_tuple(&self) -> (bool, bool, bool, bool) {
        (
            self.origin_in_p,
            self.p_equals_bipolar,
            self.polar_v_encodes_h,
            self.hv_symmetric,
        )
    }
}

/// `H(P⁺)`: the generator matrix read as inequalities. No computation.
pub fn polar_hrep(v: &VRep) -> HRep {
    v.as_hrep()
}

/// `V(P⁺)`, by vertex enumeration of [`polar_hrep`].
pub fn polar_vrep(v: &VRep) -> Result<VRep, Error> {
    if !polar_is_pointed(v) {
        return Err(Error::PolarNotPointed {
            witness: polar_lineality_witness(v).unwrap_or_default(),
        });
    }
    vertex_enumeration(&polar_hrep(v)).map(|(q, _)| q)
}

/// Locates the origin after removing redundant rows, so a redundant row
/// with negative `b` cannot misclassify it. With equations present and the
/// origin on them, the answer is `Boundary`.
pub fn origin_location(h: &HRep) -> Result<OriginLocation, Error> {
    let reduced = remove_redundancy_h(h)?;
    let mut tight = false;
    for (i, row) in reduced.rows().iter_rows().enumerate() {
        let b = &row[0];
        let violated = if reduced.is_equality(i) {
            !b.is_zero()
        } else {
            b.is_negative()
        };
        if violated {
            return Ok(OriginLocation::Outside {
                witness: row.to_vec(),
            });
        }
        tight |= b.is_zero();
    }
    Ok(if tight {
        OriginLocation::Boundary
    } else {
        OriginLocation::Interior
    })
}

/// `P⁺⁺ = conv(S ∪ {0}) + cone(R)`, irredundant and canonical.
pub fn bipolar_vrep(v: &VRep) -> VRep {
    remove_redundancy_v(&v.with_origin())
}

/// Whether `q_as_h` (a polar's generators read as inequalities) is an
/// H-encoding of `P`, given `h_p`, the lifted facet enumeration of `P`.
fn encodes(q_as_h: &HRep, h_p: &HRep, v: &VRep) -> Result<bool, Error> {
    if reps_equal(&Rep::H(q_as_h.clone()), &Rep::H(h_p.clone()))? {
        return Ok(true);
    }
    if h_p.equalities().is_empty() {
        return Ok(false);
    }
    // lower-dimensional P has no unique H-matrix; compare the polyhedra
    defines_same_polyhedron(q_as_h, v)
}

fn defines_same_polyhedron(h: &HRep, v: &VRep) -> Result<bool, Error> {
    match vertex_enumeration(h) {
        Ok((w, _)) => Ok(w == remove_redundancy_v(v)),
        Err(Error::Infeasible | Error::NotPointed { .. }) => Ok(false),
        Err(e) => Err(e),
    }
}

/// Literal HV-symmetry test: read `V(P)` as `H(Q)`, enumerate `V(Q)`, and
/// ask whether it encodes an H-representation of `P`.
///
/// The polar's vertex at the origin, when present, encodes the row at
/// infinity `1 ≥ 0` that every H-representation carries implicitly; it is
/// left out of the comparison.
pub fn is_hv_symmetric(v: &VRep) -> Result<SymmetryVerdict, Error> {
    if !polar_is_pointed(v) {
        return Ok(SymmetryVerdict {
            symmetric: false,
            reason: SymmetryReason::PolarNotPointed,
            witness: None,
        });
    }
    let vq = polar_vrep(v)?;
    let q_as_h = without_infinity_row(&vq.as_hrep());
    let (h_p, _) = facet_enumeration_lifted(v)?;
    let symmetric = encodes(&q_as_h, &h_p, v)?;
    Ok(SymmetryVerdict {
        symmetric,
        reason: if symmetric {
            SymmetryReason::Verified
        } else {
            SymmetryReason::OriginOutside
        },
        witness: Some((q_as_h, h_p)),
    })
}

/// Evaluates the four equivalent statements independently.
///
/// Refuses with [`Error::PolarNotPointed`] when `P⁺` is not pointed, since
/// the equivalence is only claimed for pointed `P` and `P⁺`.
pub fn verify_theorem1(v: &VRep) -> Result<Theorem1Check, Error> {
    if !polar_is_pointed(v) {
        return Err(Error::PolarNotPointed {
            witness: polar_lineality_witness(v).unwrap_or_default(),
        });
    }
    let origin = vec![Rational::zero(); v.dim()];
    let origin_in_p = member_certificate(v, &origin)?.is_some();

    let reduced = remove_redundancy_v(v);
    let p_equals_bipolar = reduced == bipolar_vrep(v);

    let vq = polar_vrep(v)?;
    let polar_v_encodes_h = defines_same_polyhedron(&vq.as_hrep(), v)?;

    let hv_symmetric = is_hv_symmetric(v)?.symmetric;
    Ok(Theorem1Check {
        origin_in_p,
        p_equals_bipolar,
        polar_v_encodes_h,
        hv_symmetric,
    })
}

/// `m_R = 0`.
pub fn is_bounded(v: &VRep) -> bool {
    v.num_rays() == 0
}

/// Whether the origin is interior to `P⁺`; agrees with [`is_bounded`].
pub fn origin_interior_to_polar(v: &VRep) -> Result<bool, Error> {
    Ok(origin_location(&polar_hrep(v))? == OriginLocation::Interior)
}
