//! Incremental double description on integer rays.
//!
//! Start from the simplicial cone cut out by `d` independent rows, then add
//! the remaining rows one at a time. A new row splits the current rays into
//! positive, zero and negative sides; negative rays are dropped and every
//! adjacent (positive, negative) pair contributes the ray where the segment
//! between them crosses the new hyperplane. Two rays are adjacent iff no
//! third ray is tight on every row both of them are tight on.

use fixedbitset::FixedBitSet;
use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::ConeRays;
use crate::arith::{
    dot_int, matrix_rank, nullspace, primitive_int, primitive_integer, to_rationals, RMatrix,
};
use crate::error::Error;
use crate::repr::row_order;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct DdStats {
    /// Largest ray list held after any insertion (including the initial one).
    pub max_intermediate_rays: usize,
    /// Rows inserted after the initial simplicial cone.
    pub iterations: usize,
}

struct Ray {
    coords: Vec<BigInt>,
    tight: FixedBitSet,
}

/// Extreme rays of `{y : cone_rows · y ≥ 0}`.
///
/// Errors with [`Error::NotPointed`] when the rows have rank below the
/// column count (the cone contains a line).
pub fn dd_extreme_rays(cone_rows: &RMatrix) -> Result<ConeRays, Error> {
    dd_extreme_rays_with_stats(cone_rows).map(|(rays, _)| rays)
}

pub fn dd_extreme_rays_with_stats(cone_rows: &RMatrix) -> Result<(ConeRays, DdStats), Error> {
    let d = cone_rows.ncols();
    if matrix_rank(cone_rows) < d {
        return Err(Error::NotPointed {
            lineality: nullspace(cone_rows),
        });
    }

    // integer rows in canonical order; zero rows constrain nothing
    let mut rows: Vec<Vec<BigInt>> = cone_rows
        .iter_rows()
        .map(primitive_integer)
        .filter(|r| r.iter().any(|x| !x.is_zero()))
        .collect();
    rows.sort_by(|a, b| row_order(&to_rationals(a), &to_rationals(b)));
    rows.dedup();
    let m = rows.len();

    // first d independent rows, in order
    let mut basis: Vec<usize> = Vec::with_capacity(d);
    for i in 0..m {
        let mut trial = basis.clone();
        trial.push(i);
        if rank_of(&rows, &trial, d) == trial.len() {
            basis = trial;
            if basis.len() == d {
                break;
            }
        }
    }
    debug_assert_eq!(basis.len(), d);

    let mut rays: Vec<Ray> = Vec::with_capacity(d);
    for (k, &row_k) in basis.iter().enumerate() {
        let others: Vec<usize> = basis.iter().copied().filter(|&j| j != row_k).collect();
        let sub = int_matrix(&rows, &others, d);
        let dir = nullspace(&sub)
            .into_iter()
            .next()
            .expect("d-1 independent rows leave a line");
        let mut coords = primitive_integer(&dir);
        if dot_int(&rows[row_k], &coords).is_negative() {
            coords.iter_mut().for_each(|x| *x = -&*x);
        }
        let mut tight = FixedBitSet::with_capacity(m);
        for (j, &row_j) in basis.iter().enumerate() {
            if j != k {
                tight.insert(row_j);
            }
        }
        rays.push(Ray { coords, tight });
    }

    let mut stats = DdStats {
        max_intermediate_rays: rays.len(),
        iterations: 0,
    };
    let in_basis: FixedBitSet = basis.iter().copied().collect::<FixedBitSet>();
    for i in (0..m).filter(|&i| !in_basis.contains(i)) {
        rays = insert_row(rays, &rows[i], i, d);
        stats.iterations += 1;
        stats.max_intermediate_rays = stats.max_intermediate_rays.max(rays.len());
    }

    let out = rays
        .into_iter()
        .map(|r| to_rationals(&r.coords))
        .collect();
    Ok((ConeRays::from_sorted(d, out), stats))
}

fn insert_row(rays: Vec<Ray>, row: &[BigInt], idx: usize, d: usize) -> Vec<Ray> {
    let values: Vec<BigInt> = rays.iter().map(|r| dot_int(row, &r.coords)).collect();
    if values.iter().all(|v| !v.is_negative()) {
        return rays
            .into_iter()
            .zip(&values)
            .map(|(mut r, v)| {
                if v.is_zero() {
                    r.tight.insert(idx);
                }
                r
            })
            .collect();
    }
    let pos: Vec<usize> = (0..rays.len()).filter(|&k| values[k].is_positive()).collect();
    let neg: Vec<usize> = (0..rays.len()).filter(|&k| values[k].is_negative()).collect();

    let mut created = Vec::new();
    for &p in &pos {
        for &q in &neg {
            let mut common = rays[p].tight.clone();
            common.intersect_with(&rays[q].tight);
            if common.count_ones(..) < d.saturating_sub(2) {
                continue;
            }
            let blocked = rays
                .iter()
                .enumerate()
                .any(|(k, r)| k != p && k != q && common.is_subset(&r.tight));
            if blocked {
                continue;
            }
            let coords: Vec<BigInt> = rays[q]
                .coords
                .iter()
                .zip(&rays[p].coords)
                .map(|(yq, yp)| &values[p] * yq - &values[q] * yp)
                .collect();
            common.insert(idx);
            created.push(Ray {
                coords: primitive_int(coords),
                tight: common,
            });
        }
    }

    let mut next: Vec<Ray> = rays
        .into_iter()
        .zip(&values)
        .filter(|(_, v)| !v.is_negative())
        .map(|(mut r, v)| {
            if v.is_zero() {
                r.tight.insert(idx);
            }
            r
        })
        .collect();
    next.extend(created);
    next
}

fn int_matrix(rows: &[Vec<BigInt>], idx: &[usize], d: usize) -> RMatrix {
    if idx.is_empty() {
        return RMatrix::empty(d);
    }
    RMatrix::from_rows(d, idx.iter().map(|&i| to_rationals(&rows[i])).collect())
        .expect("rows have cone width")
}

fn rank_of(rows: &[Vec<BigInt>], idx: &[usize], d: usize) -> usize {
    matrix_rank(&int_matrix(rows, idx, d))
}
