//! Seeded random instances for tests, benchmarks and the CLI.
//!
//! Every generator takes the RNG by reference, so a seeded RNG gives a
//! reproducible stream of instances.

use num_traits::{Signed, Zero};
use rand::Rng;

use crate::arith::{dot, int, matrix_rank, RMatrix, Rational};
use crate::conversion::{binomial, polar_is_pointed};
use crate::repr::{HRep, VRep};

/// Where the origin should end up relative to a generated `P`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OriginPlacement {
    /// Leave the instance as drawn.
    Any,
    /// Translate so the centroid of the vertices is the origin.
    Inside,
    /// Translate so a linear functional is positive on all of `P`.
    Outside,
}

fn random_vec(rng: &mut impl Rng, len: usize, lo: i64, hi: i64) -> Vec<Rational> {
    (0..len).map(|_| int(rng.random_range(lo..=hi))).collect()
}

fn nonzero_vec(rng: &mut impl Rng, len: usize, lo: i64, hi: i64) -> Vec<Rational> {
    loop {
        let v = random_vec(rng, len, lo, hi);
        if v.iter().any(|x| !x.is_zero()) {
            return v;
        }
    }
}

/// A V-representation in `R^n`, `2 ≤ n ≤ 4`, with 3 to 8 rows and integer
/// entries in `[-3, 3]` before any translation. `cone(R)` is pointed and
/// so is the polar.
pub fn random_pointed_vrep(rng: &mut impl Rng, placement: OriginPlacement) -> VRep {
    loop {
        let n = rng.random_range(2..=4);
        let m = rng.random_range(3..=8);
        if let Some(v) = try_vrep(rng, n, m, placement) {
            return v;
        }
    }
}

/// As [`random_pointed_vrep`] with fixed dimension and row count.
pub fn random_pointed_vrep_sized(
    rng: &mut impl Rng,
    n: usize,
    m: usize,
    placement: OriginPlacement,
) -> VRep {
    assert!(n >= 1 && m >= 1);
    loop {
        if let Some(v) = try_vrep(rng, n, m, placement) {
            return v;
        }
    }
}

fn try_vrep(rng: &mut impl Rng, n: usize, m: usize, placement: OriginPlacement) -> Option<VRep> {
    // rays are oriented positively on c, which keeps cone(R) pointed
    let c = nonzero_vec(rng, n, -3, 3);
    let n_rays = if m > 1 { rng.random_range(0..m.min(n + 1)) } else { 0 };
    let mut vertices: Vec<Vec<Rational>> = (0..m - n_rays).map(|_| random_vec(rng, n, -3, 3)).collect();
    let mut rays = Vec::with_capacity(n_rays);
    for _ in 0..n_rays {
        let mut r = nonzero_vec(rng, n, -3, 3);
        let s = dot(&c, &r);
        if s.is_zero() {
            return None;
        }
        if s.is_negative() {
            r.iter_mut().for_each(|x| *x = -x.clone());
        }
        rays.push(r);
    }

    match placement {
        OriginPlacement::Any => {}
        OriginPlacement::Inside => {
            let k = int(vertices.len() as i64);
            let centroid: Vec<Rational> = (0..n)
                .map(|j| vertices.iter().map(|s| s[j].clone()).sum::<Rational>() / &k)
                .collect();
            for s in &mut vertices {
                for j in 0..n {
                    s[j] -= &centroid[j];
                }
            }
        }
        OriginPlacement::Outside => {
            // shift by t·c so that c·s ≥ 1 for every vertex
            let cc = dot(&c, &c);
            let lowest = vertices.iter().map(|s| dot(&c, s)).min()?;
            let t = (int(rng.random_range(1..=3)) - lowest) / cc;
            for s in &mut vertices {
                for j in 0..n {
                    s[j] += &t * &c[j];
                }
            }
        }
    }

    let v = VRep::from_parts(n, &vertices, &rays).ok()?;
    polar_is_pointed(&v).then_some(v)
}

/// Rows of a pointed cone `{y : A y ≥ 0}` in `R^d`, with `m` rows and
/// entries in `[-3, 3]`, all positive on a random interior point.
/// Returns `None` when `C(m, d−1)` exceeds `cap`.
pub fn random_pointed_cone(rng: &mut impl Rng, d: usize, m: usize, cap: u64) -> Option<RMatrix> {
    assert!(d >= 1 && m >= d);
    if binomial(m, d - 1) > cap as u128 {
        return None;
    }
    loop {
        let y = nonzero_vec(rng, d, -3, 3);
        let mut rows = Vec::with_capacity(m);
        while rows.len() < m {
            let mut a = nonzero_vec(rng, d, -3, 3);
            let s = dot(&a, &y);
            if s.is_zero() {
                continue;
            }
            if s.is_negative() {
                a.iter_mut().for_each(|x| *x = -x.clone());
            }
            rows.push(a);
        }
        let a = RMatrix::from_rows(d, rows).expect("width d");
        if matrix_rank(&a) == d {
            return Some(a);
        }
    }
}

/// A full-dimensional pointed H-representation in `R^n` with `m ≥ n` rows:
/// `A` has rank `n` and a random integer point is strictly interior.
pub fn random_full_dim_hrep(rng: &mut impl Rng, n: usize, m: usize) -> HRep {
    assert!(n >= 1 && m >= n);
    loop {
        let x = random_vec(rng, n, -2, 2);
        let rows: Vec<Vec<Rational>> = (0..m)
            .map(|_| {
                let a = nonzero_vec(rng, n, -3, 3);
                let b = int(rng.random_range(1..=3)) - dot(&a, &x);
                std::iter::once(b).chain(a).collect()
            })
            .collect();
        let h = HRep::inequalities(RMatrix::from_rows(n + 1, rows).expect("width n+1"))
            .expect("no zero rows");
        if matrix_rank(&h.coefficient_block()) == n {
            return h;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::conversion::{feasible_point, member_certificate};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn placements_hold() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..30 {
            let inside = random_pointed_vrep(&mut rng, OriginPlacement::Inside);
            let zero = vec![Rational::zero(); inside.dim()];
            assert!(member_certificate(&inside, &zero).unwrap().is_some());
            let outside = random_pointed_vrep(&mut rng, OriginPlacement::Outside);
            let zero = vec![Rational::zero(); outside.dim()];
            assert!(member_certificate(&outside, &zero).unwrap().is_none());
            assert!(polar_is_pointed(&outside));
            assert!((2..=4).contains(&outside.dim()));
            assert!((3..=8).contains(&outside.num_rows()));
        }
    }

    #[test]
    fn cones_and_hreps() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let a = random_pointed_cone(&mut rng, 4, 9, 5000).unwrap();
        assert_eq!(matrix_rank(&a), 4);
        assert!(random_pointed_cone(&mut rng, 5, 60, 5000).is_none());
        let h = random_full_dim_hrep(&mut rng, 3, 7);
        assert!(feasible_point(&h).is_some());
    }

    #[test]
    fn seeded_streams_repeat() {
        let draw = |seed| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (0..5)
                .map(|_| random_pointed_vrep(&mut rng, OriginPlacement::Any))
                .collect::<Vec<_>>()
        };
        assert_eq!(draw(3), draw(3));
    }
}
