use std::cmp::Ordering;
use std::collections::BTreeSet;

use num_traits::{Signed, Zero};

use super::{HRep, Rep, VRep};
use crate::arith::{first_nonzero, primitive_integer, to_rationals, RMatrix, Rational};
use crate::error::Error;

/// Row order used by canonical forms: leading column descending, then the
/// remaining entries ascending.
pub fn row_order(a: &[Rational], b: &[Rational]) -> Ordering {
    b[0].cmp(&a[0]).then_with(|| a[1..].cmp(&b[1..]))
}

/// Canonical form up to row permutation and positive row scaling.
///
/// * H rows and V ray rows become coprime integer vectors.
/// * V vertex rows keep their leading 1 and rational coordinates.
/// * Equation rows may also be negated; their first nonzero entry is made
///   positive. An inequality that repeats an equation (either sign) is
///   dropped.
/// * Duplicates are removed and rows sorted by [`row_order`].
pub fn canonicalize(rep: &Rep) -> Rep {
    match rep {
        Rep::H(h) => Rep::H(canonical_h(h)),
        Rep::V(v) => Rep::V(canonical_v(v)),
    }
}

pub(crate) fn canonical_h(h: &HRep) -> HRep {
    let mut eqs: Vec<Vec<Rational>> = Vec::new();
    let mut ineqs: Vec<Vec<Rational>> = Vec::new();
    for (i, row) in h.rows().iter_rows().enumerate() {
        let mut ints = primitive_integer(row);
        if h.is_equality(i) {
            let lead = first_nonzero(&ints).expect("H rows are nonzero");
            if ints[lead].is_negative() {
                ints.iter_mut().for_each(|x| *x = -&*x);
            }
            eqs.push(to_rationals(&ints));
        } else {
            ineqs.push(to_rationals(&ints));
        }
    }
    eqs.sort_by(|a, b| row_order(a, b));
    eqs.dedup();
    ineqs.retain(|r| {
        let neg: Vec<Rational> = r.iter().map(|x| -x).collect();
        !eqs.contains(r) && !eqs.contains(&neg)
    });
    let mut tagged: Vec<(Vec<Rational>, bool)> = eqs
        .into_iter()
        .map(|r| (r, true))
        .chain(ineqs.into_iter().map(|r| (r, false)))
        .collect();
    tagged.sort_by(|a, b| row_order(&a.0, &b.0).then(b.1.cmp(&a.1)));
    tagged.dedup();
    let cols = h.rows().ncols();
    let equalities: BTreeSet<usize> = tagged
        .iter()
        .enumerate()
        .filter(|(_, (_, eq))| *eq)
        .map(|(i, _)| i)
        .collect();
    let rows = RMatrix::from_rows(cols, tagged.into_iter().map(|(r, _)| r).collect())
        .expect("rectangular");
    HRep::new(rows, equalities).expect("canonical rows stay valid")
}

pub(crate) fn canonical_v(v: &VRep) -> VRep {
    let mut rows: Vec<Vec<Rational>> = v
        .rows()
        .iter_rows()
        .map(|row| {
            if row[0].is_zero() {
                to_rationals(&primitive_integer(row))
            } else {
                row.to_vec()
            }
        })
        .collect();
    rows.sort_by(|a, b| row_order(a, b));
    rows.dedup();
    let m = RMatrix::from_rows(v.rows().ncols(), rows).expect("rectangular");
    VRep::new(m).expect("canonical rows stay valid")
}

impl HRep {
    pub fn canonical(&self) -> HRep {
        canonical_h(self)
    }
}

impl VRep {
    pub fn canonical(&self) -> VRep {
        canonical_v(self)
    }
}

/// Syntactic equality: both canonical matrices (and equation marks) agree.
pub fn reps_equal(a: &Rep, b: &Rep) -> Result<bool, Error> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch {
            expected: a.dim(),
            found: b.dim(),
        });
    }
    match (a, b) {
        (Rep::H(x), Rep::H(y)) => Ok(canonical_h(x) == canonical_h(y)),
        (Rep::V(x), Rep::V(y)) => Ok(canonical_v(x) == canonical_v(y)),
        _ => Err(Error::KindMismatch),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};
    use proptest::prelude::*;

    #[test]
    fn ray_scaled_to_coprime() {
        let v = VRep::from_i64_rows(&[&[1, 0, 0], &[0, 2, 4]]).canonical();
        assert_eq!(v.rows().row(1), &[int(0), int(1), int(2)]);
    }

    #[test]
    fn positive_multiples_merge() {
        let h = HRep::from_i64_rows(&[&[-2, 2, 0], &[-1, 1, 0]]).canonical();
        assert_eq!(h.rows(), &RMatrix::from_i64_rows(&[&[-1, 1, 0]]));
    }

    #[test]
    fn negative_multiples_do_not_merge() {
        let h = HRep::from_i64_rows(&[&[0, 1, 0], &[0, -1, 0]]).canonical();
        assert_eq!(h.num_rows(), 2);
    }

    #[test]
    fn vertex_rows_keep_rational_coordinates() {
        let m = RMatrix::from_rows(2, vec![vec![int(1), rat(1, 2)]]).unwrap();
        let v = VRep::new(m.clone()).unwrap().canonical();
        assert_eq!(v.rows(), &m);
    }

    #[test]
    fn pyramid_polar_rows_sort_stably() {
        let a = VRep::from_i64_rows(&[&[1, 1, -1, -1], &[1, -1, -1, -1], &[0, 0, 0, 1], &[0, 0, 1, 0]]);
        let b = VRep::from_i64_rows(&[&[0, 0, 1, 0], &[1, -1, -1, -1], &[0, 0, 0, 1], &[1, 1, -1, -1]]);
        let ca = a.canonical();
        assert_eq!(ca, b.canonical());
        assert_eq!(
            ca.rows(),
            &RMatrix::from_i64_rows(&[&[1, -1, -1, -1], &[1, 1, -1, -1], &[0, 0, 0, 1], &[0, 0, 1, 0]])
        );
    }

    #[test]
    fn equations_normalize_sign_and_absorb_inequalities() {
        let h = HRep::new(
            RMatrix::from_i64_rows(&[&[5, -1], &[-5, 1], &[1, 0]]),
            BTreeSet::from([0]),
        )
        .unwrap()
        .canonical();
        assert_eq!(h.rows(), &RMatrix::from_i64_rows(&[&[5, -1], &[1, 0]]));
        assert_eq!(h.equalities(), &BTreeSet::from([0]));
    }

    #[test]
    fn kind_and_dimension_checked() {
        let h: Rep = HRep::from_i64_rows(&[&[1, 0, 0]]).into();
        let v: Rep = VRep::from_i64_rows(&[&[1, 0, 0]]).into();
        let v1: Rep = VRep::from_i64_rows(&[&[1, 0]]).into();
        assert_eq!(reps_equal(&h, &v), Err(Error::KindMismatch));
        assert!(matches!(reps_equal(&v, &v1), Err(Error::DimensionMismatch { .. })));
    }

    fn small_h() -> impl Strategy<Value = HRep> {
        proptest::collection::vec(proptest::collection::vec(-3i64..=3, 3), 1..6).prop_filter_map(
            "nonzero rows",
            |rows| {
                let rows: Vec<Vec<Rational>> =
                    rows.into_iter().map(|r| r.into_iter().map(int).collect()).collect();
                HRep::inequalities(RMatrix::from_rows(3, rows).ok()?).ok()
            },
        )
    }

    proptest! {
        #[test]
        fn canonical_is_idempotent(h in small_h()) {
            let c = h.canonical();
            prop_assert_eq!(c.canonical(), c);
        }

        #[test]
        fn permuting_and_scaling_is_invisible(h in small_h(), k in 1i64..5) {
            let mut rows = h.rows().to_rows();
            rows.reverse();
            for r in rows.iter_mut() {
                r.iter_mut().for_each(|x| *x *= int(k));
            }
            let g = HRep::inequalities(RMatrix::from_rows(3, rows).unwrap()).unwrap();
            prop_assert!(reps_equal(&h.clone().into(), &g.into()).unwrap());
        }
    }
}
