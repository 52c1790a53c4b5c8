//! H- and V-representations, their canonical forms and the cdd/lrs text
//! format.

mod canonical;
mod format;

pub use canonical::{canonicalize, reps_equal, row_order};
pub use format::{emit_rep, parse_rep, ParseError};

use std::collections::BTreeSet;

use num_traits::{One, Signed, Zero};

use crate::arith::{is_zero_vec, negated, RMatrix, Rational};
use crate::error::Error;

/// Inequality system `b + A x ≥ 0, B x ≥ 0` stored as the matrix
/// `[b A; 0 B]`, with an optional set of rows marked as equations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HRep {
    rows: RMatrix,
    equalities: BTreeSet<usize>,
}

impl HRep {
    /// Builds an H-representation in dimension `rows.ncols() - 1`.
    ///
    /// Rejects all-zero rows and out-of-range equality marks.
    pub fn new(rows: RMatrix, equalities: BTreeSet<usize>) -> Result<Self, Error> {
        if let Some(i) = rows.iter_rows().position(is_zero_vec) {
            return Err(Error::InvalidRepresentation(format!("H-row {i} is all zero")));
        }
        if let Some(&i) = equalities.iter().find(|&&i| i >= rows.nrows()) {
            return Err(Error::InvalidRepresentation(format!(
                "equality mark {i} out of range"
            )));
        }
        Ok(Self { rows, equalities })
    }

    /// Pure inequality system.
    pub fn inequalities(rows: RMatrix) -> Result<Self, Error> {
        Self::new(rows, BTreeSet::new())
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        Self::inequalities(RMatrix::from_i64_rows(rows)).expect("valid H rows")
    }

    /// Ambient dimension `n`.
    pub fn dim(&self) -> usize {
        self.rows.ncols() - 1
    }

    pub fn rows(&self) -> &RMatrix {
        &self.rows
    }

    pub fn num_rows(&self) -> usize {
        self.rows.nrows()
    }

    pub fn equalities(&self) -> &BTreeSet<usize> {
        &self.equalities
    }

    pub fn is_equality(&self, i: usize) -> bool {
        self.equalities.contains(&i)
    }

    /// Inequality matrix with every marked equation replaced by the two
    /// opposing inequalities `(b, a)` and `(-b, -a)`.
    pub fn expanded_rows(&self) -> RMatrix {
        let mut out = RMatrix::empty(self.rows.ncols());
        for (i, row) in self.rows.iter_rows().enumerate() {
            out.push_row(row.to_vec()).expect("same width");
            if self.is_equality(i) {
                out.push_row(negated(row)).expect("same width");
            }
        }
        out
    }

    /// Columns `1..=n`: the stacked `[A; B]` block.
    pub fn coefficient_block(&self) -> RMatrix {
        if self.rows.ncols() == 1 {
            return RMatrix::zeros(self.num_rows(), 1);
        }
        self.rows.drop_leading_columns(1)
    }

    /// Whether `x` satisfies every row (equations with equality).
    pub fn contains(&self, x: &[Rational]) -> bool {
        self.rows.iter_rows().enumerate().all(|(i, row)| {
            let v = &row[0] + crate::arith::dot(&row[1..], x);
            if self.is_equality(i) {
                v.is_zero()
            } else {
                !v.is_negative()
            }
        })
    }

    /// The same matrix read as generators. Fails unless every leading entry
    /// is 0 or 1 and at least one is 1.
    pub fn as_vrep(&self) -> Result<VRep, Error> {
        VRep::new(self.rows.clone())
    }
}

/// Generator system `conv(S) + cone(R)` stored as `[1 S; 0 R]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VRep {
    rows: RMatrix,
}

impl VRep {
    /// Builds a V-representation; every leading entry must be exactly 0 or 1,
    /// at least one row must be a vertex and no ray may be zero.
    pub fn new(rows: RMatrix) -> Result<Self, Error> {
        let mut vertices = 0;
        for (i, row) in rows.iter_rows().enumerate() {
            if row[0].is_one() {
                vertices += 1;
            } else if row[0].is_zero() {
                if is_zero_vec(&row[1..]) {
                    return Err(Error::InvalidRepresentation(format!("ray row {i} is zero")));
                }
            } else {
                return Err(Error::InvalidRepresentation(format!(
                    "row {i} has leading entry {}, expected 0 or 1",
                    row[0]
                )));
            }
        }
        if vertices == 0 {
            return Err(Error::InvalidRepresentation(
                "a V-representation needs at least one vertex".into(),
            ));
        }
        Ok(Self { rows })
    }

    /// Like [`VRep::new`] but first divides every row with a positive
    /// leading entry by that entry.
    pub fn from_scaled_rows(rows: RMatrix) -> Result<Self, Error> {
        let scaled = rows
            .iter_rows()
            .map(|row| {
                if row[0].is_positive() && !row[0].is_one() {
                    let inv = row[0].recip();
                    row.iter().map(|x| x * &inv).collect()
                } else {
                    row.to_vec()
                }
            })
            .collect();
        Self::new(RMatrix::from_rows(rows.ncols(), scaled)?)
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        Self::new(RMatrix::from_i64_rows(rows)).expect("valid V rows")
    }

    /// Builds `[1 S; 0 R]` from vertex and ray coordinates in dimension `n`.
    pub fn from_parts(n: usize, vertices: &[Vec<Rational>], rays: &[Vec<Rational>]) -> Result<Self, Error> {
        let mut m = RMatrix::empty(n + 1);
        for (lead, block) in [(Rational::one(), vertices), (Rational::zero(), rays)] {
            for coords in block {
                let mut row = Vec::with_capacity(n + 1);
                row.push(lead.clone());
                row.extend(coords.iter().cloned());
                m.push_row(row)?;
            }
        }
        Self::new(m)
    }

    pub fn dim(&self) -> usize {
        self.rows.ncols() - 1
    }

    pub fn rows(&self) -> &RMatrix {
        &self.rows
    }

    pub fn num_rows(&self) -> usize {
        self.rows.nrows()
    }

    pub fn is_vertex_row(&self, i: usize) -> bool {
        self.rows[(i, 0)].is_one()
    }

    /// Coordinates of the vertex rows, in row order.
    pub fn vertices(&self) -> impl Iterator<Item = &[Rational]> + '_ {
        self.rows
            .iter_rows()
            .filter(|r| r[0].is_one())
            .map(|r| &r[1..])
    }

    /// Directions of the ray rows, in row order.
    pub fn rays(&self) -> impl Iterator<Item = &[Rational]> + '_ {
        self.rows
            .iter_rows()
            .filter(|r| r[0].is_zero())
            .map(|r| &r[1..])
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices().count()
    }

    pub fn num_rays(&self) -> usize {
        self.rays().count()
    }

    /// The same matrix read as inequalities: vertex `(1, s)` becomes
    /// `1 + s·z ≥ 0` and ray `(0, r)` becomes `r·z ≥ 0`.
    pub fn as_hrep(&self) -> HRep {
        HRep::inequalities(self.rows.clone()).expect("V rows are never all zero")
    }

    /// A copy with the origin row `(1, 0ₙ)` appended.
    pub fn with_origin(&self) -> VRep {
        let mut rows = self.rows.clone();
        let mut origin = vec![Rational::zero(); self.dim() + 1];
        origin[0] = Rational::one();
        rows.push_row(origin).expect("same width");
        VRep { rows }
    }
}

/// Either reading of an `(n+1)`-column matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Rep {
    H(HRep),
    V(VRep),
}

impl Rep {
    pub fn dim(&self) -> usize {
        match self {
            Rep::H(h) => h.dim(),
            Rep::V(v) => v.dim(),
        }
    }

    pub fn rows(&self) -> &RMatrix {
        match self {
            Rep::H(h) => h.rows(),
            Rep::V(v) => v.rows(),
        }
    }
}

impl From<HRep> for Rep {
    fn from(h: HRep) -> Self {
        Rep::H(h)
    }
}

impl From<VRep> for Rep {
    fn from(v: VRep) -> Self {
        Rep::V(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};

    #[test]
    fn zero_h_row_rejected() {
        let m = RMatrix::from_i64_rows(&[&[0, 0, 0]]);
        assert!(HRep::inequalities(m).is_err());
    }

    #[test]
    fn v_rows_validated() {
        assert!(VRep::new(RMatrix::from_i64_rows(&[&[0, 1, 0]])).is_err());
        assert!(VRep::new(RMatrix::from_i64_rows(&[&[1, 0], &[0, 0]])).is_err());
        assert!(VRep::new(RMatrix::from_i64_rows(&[&[2, 2, 2]])).is_err());
        let v = VRep::from_scaled_rows(RMatrix::from_i64_rows(&[&[2, 2, 2]])).unwrap();
        assert_eq!(v.rows().row(0), &[int(1), int(1), int(1)]);
        let v = VRep::from_scaled_rows(RMatrix::from_i64_rows(&[&[3, 1], &[0, 1]])).unwrap();
        assert_eq!(v.vertices().next().unwrap(), &[rat(1, 3)]);
        assert!(VRep::from_scaled_rows(RMatrix::from_i64_rows(&[&[-1, 1]])).is_err());
    }

    #[test]
    fn equality_expansion() {
        let h = HRep::new(
            RMatrix::from_i64_rows(&[&[-5, 1], &[0, 1]]),
            BTreeSet::from([0]),
        )
        .unwrap();
        let e = h.expanded_rows();
        assert_eq!(e.nrows(), 3);
        assert_eq!(e.row(1), &[int(5), int(-1)]);
        assert!(h.contains(&[int(5)]));
        assert!(!h.contains(&[int(4)]));
    }

    #[test]
    fn parts_and_views() {
        let v = VRep::from_parts(2, &[vec![int(1), int(1)]], &[vec![int(1), int(0)], vec![int(0), int(1)]]).unwrap();
        assert_eq!(v.num_vertices(), 1);
        assert_eq!(v.num_rays(), 2);
        assert_eq!(v.as_hrep().rows(), v.rows());
        assert_eq!(v.with_origin().num_vertices(), 2);
    }
}
