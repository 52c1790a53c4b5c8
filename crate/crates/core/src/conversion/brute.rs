//! Subset enumeration: an independent extreme-ray oracle and the feasible
//! basis counter.
//!
//! In a pointed cone of dimension `d` every extreme ray is the one-dimensional
//! solution space of some `d − 1` rows taken as equations. Enumerating all
//! such subsets finds every extreme ray (with repetition on degenerate input),
//! and a subset whose direction satisfies all rows is a feasible basis.

use std::collections::BTreeSet;

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::Signed;

use super::{homogenize, ConeRays};
use crate::arith::{dot, matrix_rank, nullspace, primitive_integer, to_rationals, RMatrix, Rational};
use crate::error::Error;
use crate::repr::HRep;

/// `C(m, k)`, saturating at `u128::MAX`.
pub fn binomial(m: usize, k: usize) -> u128 {
    if k > m {
        return 0;
    }
    let k = k.min(m - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = match acc.checked_mul((m - i) as u128) {
            Some(v) => v / (i as u128 + 1),
            None => return u128::MAX,
        };
    }
    acc
}

fn check_cap(m: usize, k: usize, cap: u64) -> Result<(), Error> {
    if binomial(m, k) > cap as u128 {
        return Err(Error::CapExceeded { m, k, cap });
    }
    Ok(())
}

/// The feasible direction spanned by `subset`, if the subset has rank `d − 1`
/// and one orientation of its null line satisfies every row.
fn basis_direction(rows: &RMatrix, subset: &[usize]) -> Option<Vec<BigInt>> {
    let d = rows.ncols();
    let sub = if subset.is_empty() {
        RMatrix::empty(d)
    } else {
        rows.select_rows(subset)
    };
    if matrix_rank(&sub) + 1 != d {
        return None;
    }
    let dir: Vec<Rational> = nullspace(&sub).pop()?;
    let values: Vec<Rational> = rows.iter_rows().map(|r| dot(r, &dir)).collect();
    let mut ints = primitive_integer(&dir);
    if values.iter().all(|v| !v.is_negative()) {
        Some(ints)
    } else if values.iter().all(|v| !v.is_positive()) {
        ints.iter_mut().for_each(|x| *x = -&*x);
        Some(ints)
    } else {
        None
    }
}

/// Extreme rays of `{y : cone_rows · y ≥ 0}` by trying every `(d−1)`-subset.
///
/// Errors with [`Error::NotPointed`] on a cone with a line, and with
/// [`Error::CapExceeded`] when `C(m, d−1)` exceeds `cap`.
pub fn brute_force_rays(cone_rows: &RMatrix, cap: u64) -> Result<ConeRays, Error> {
    let (m, d) = (cone_rows.nrows(), cone_rows.ncols());
    if matrix_rank(cone_rows) < d {
        return Err(Error::NotPointed {
            lineality: nullspace(cone_rows),
        });
    }
    check_cap(m, d - 1, cap)?;
    let found: BTreeSet<Vec<BigInt>> = (0..m)
        .combinations(d - 1)
        .filter_map(|s| basis_direction(cone_rows, &s))
        .collect();
    Ok(ConeRays::from_sorted(
        d,
        found.iter().map(|r| to_rationals(r)).collect(),
    ))
}

/// Number of `(d−1)`-subsets of cone rows that are feasible bases: rank
/// `d − 1`, with a null direction satisfying every row. A degenerate ray is
/// counted once per basis that defines it.
pub fn count_cone_bases(cone_rows: &RMatrix, cap: u64) -> Result<u64, Error> {
    let (m, d) = (cone_rows.nrows(), cone_rows.ncols());
    check_cap(m, d - 1, cap)?;
    Ok((0..m)
        .combinations(d - 1)
        .filter(|s| basis_direction(cone_rows, s).is_some())
        .count() as u64)
}

/// Feasible bases of an H-described polyhedron, counted on its
/// homogenization: vertex bases (`n` rows meeting in a feasible point) plus
/// the bases of its extreme rays, including those that use the row at
/// infinity.
pub fn count_feasible_bases(h: &HRep, cap: u64) -> Result<u64, Error> {
    count_cone_bases(&homogenize(h), cap)
}
