use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{RMatrix, Rational};
use crate::error::Error;

/// Outcome of [`solve_linear_system`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LinearSolution {
    Unique(Vec<Rational>),
    None,
    InfinitelyMany,
}

/// Scales a rational row by the lcm of its denominators.
fn integer_row(row: &[Rational]) -> Vec<BigInt> {
    let lcm = row
        .iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    row.iter()
        .map(|x| x.numer() * (&lcm / x.denom()))
        .collect()
}

/// Fraction-free (Bareiss) forward elimination in place.
///
/// Returns the pivot columns; the first `pivots.len()` rows of `m` are the
/// echelon rows. Every division is exact.
fn bareiss_echelon(m: &mut [Vec<BigInt>], ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..ncols {
        if r == m.len() {
            break;
        }
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        for i in r + 1..m.len() {
            for j in c + 1..ncols {
                let v = &m[r][c] * &m[i][j] - &m[i][c] * &m[r][j];
                debug_assert!((&v % &prev).is_zero());
                m[i][j] = v / &prev;
            }
            m[i][c] = BigInt::zero();
        }
        prev = m[r][c].clone();
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Exact rank over the rationals.
pub fn matrix_rank(m: &RMatrix) -> usize {
    let mut rows: Vec<Vec<BigInt>> = m.iter_rows().map(integer_row).collect();
    bareiss_echelon(&mut rows, m.ncols()).len()
}

/// Solves `m · x = rhs` exactly and classifies the system.
pub fn solve_linear_system(m: &RMatrix, rhs: &[Rational]) -> Result<LinearSolution, Error> {
    if rhs.len() != m.nrows() {
        return Err(Error::DimensionMismatch {
            expected: m.nrows(),
            found: rhs.len(),
        });
    }
    let n = m.ncols();
    let mut rows: Vec<Vec<BigInt>> = m
        .iter_rows()
        .zip(rhs)
        .map(|(row, b)| {
            let mut aug = row.to_vec();
            aug.push(b.clone());
            integer_row(&aug)
        })
        .collect();
    let pivots = bareiss_echelon(&mut rows, n + 1);
    if pivots.last() == Some(&n) {
        return Ok(LinearSolution::None);
    }
    if pivots.len() < n {
        return Ok(LinearSolution::InfinitelyMany);
    }
    // square upper-triangular block in rows 0..n, pivot of row i in column i
    let mut x = vec![Rational::zero(); n];
    for i in (0..n).rev() {
        let mut acc = Rational::from_integer(rows[i][n].clone());
        for j in i + 1..n {
            acc -= Rational::from_integer(rows[i][j].clone()) * &x[j];
        }
        x[i] = acc / Rational::from_integer(rows[i][i].clone());
    }
    Ok(LinearSolution::Unique(x))
}

/// Basis of the right null space `{x : m · x = 0}`, one vector per free
/// column of the reduced row echelon form. The basis is deterministic.
pub fn nullspace(m: &RMatrix) -> Vec<Vec<Rational>> {
    let n = m.ncols();
    let mut rows: Vec<Vec<Rational>> = m.to_rows();
    let mut pivots: Vec<usize> = Vec::new();
    let mut r = 0;
    for c in 0..n {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        for x in rows[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, p) in row[c..n].iter_mut().zip(&pivot_row[c..n]) {
                    *x -= &f * p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    (0..n)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![Rational::zero(); n];
            v[free] = Rational::one();
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = -rows[i][free].clone();
            }
            v
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{dot, int, rat};
    use proptest::prelude::*;

    #[test]
    fn identity_solve() {
        let m = RMatrix::identity(2);
        assert_eq!(
            solve_linear_system(&m, &[int(3), int(5)]).unwrap(),
            LinearSolution::Unique(vec![int(3), int(5)])
        );
    }

    #[test]
    fn rank_deficient_consistent() {
        let m = RMatrix::from_i64_rows(&[&[1, 1], &[2, 2]]);
        assert_eq!(
            solve_linear_system(&m, &[int(1), int(2)]).unwrap(),
            LinearSolution::InfinitelyMany
        );
    }

    #[test]
    fn inconsistent() {
        let m = RMatrix::from_i64_rows(&[&[1, 1], &[2, 2]]);
        assert_eq!(
            solve_linear_system(&m, &[int(1), int(3)]).unwrap(),
            LinearSolution::None
        );
    }

    #[test]
    fn rhs_length_checked() {
        let m = RMatrix::identity(2);
        assert!(matches!(
            solve_linear_system(&m, &[int(1)]),
            Err(Error::DimensionMismatch { expected: 2, found: 1 })
        ));
    }

    #[test]
    fn fractional_solution() {
        let m = RMatrix::from_i64_rows(&[&[2, 1], &[1, 3]]);
        // 2x + y = 1, x + 3y = 0 -> x = 3/5, y = -1/5
        assert_eq!(
            solve_linear_system(&m, &[int(1), int(0)]).unwrap(),
            LinearSolution::Unique(vec![rat(3, 5), rat(-1, 5)])
        );
    }

    #[test]
    fn ranks() {
        assert_eq!(matrix_rank(&RMatrix::zeros(3, 3)), 0);
        assert_eq!(matrix_rank(&RMatrix::identity(3)), 3);
        // vertex block of the square-based pyramid: hand elimination gives 3
        let s = RMatrix::from_i64_rows(&[&[0, 1, 0], &[-1, 0, 0], &[1, 0, 0], &[0, 0, 1]]);
        assert_eq!(matrix_rank(&s), 3);
        assert_eq!(matrix_rank(&RMatrix::empty(4)), 0);
    }

    #[test]
    fn nullspace_of_halfplane_row() {
        let m = RMatrix::from_i64_rows(&[&[1, 1]]);
        assert_eq!(nullspace(&m), vec![vec![int(-1), int(1)]]);
        assert_eq!(nullspace(&RMatrix::identity(2)).len(), 0);
        assert_eq!(nullspace(&RMatrix::empty(2)).len(), 2);
    }

    fn small_matrix() -> impl Strategy<Value = RMatrix> {
        (1usize..5, 1usize..5).prop_flat_map(|(r, c)| {
            proptest::collection::vec(-4i64..=4, r * c).prop_map(move |v| {
                let rows = v.chunks(c).map(|ch| ch.iter().map(|&x| int(x)).collect()).collect();
                RMatrix::from_rows(c, rows).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn rank_is_transpose_invariant(m in small_matrix()) {
            prop_assert_eq!(matrix_rank(&m), matrix_rank(&m.transpose()));
        }

        #[test]
        fn unique_solutions_substitute_back(m in small_matrix(), seed in proptest::collection::vec(-5i64..=5, 4)) {
            let rhs: Vec<Rational> = (0..m.nrows()).map(|i| int(seed[i % seed.len()])).collect();
            match solve_linear_system(&m, &rhs).unwrap() {
                LinearSolution::Unique(x) => {
                    for (row, b) in m.iter_rows().zip(&rhs) {
                        prop_assert_eq!(&dot(row, &x), b);
                    }
                }
                LinearSolution::InfinitelyMany => prop_assert!(matrix_rank(&m) < m.ncols()),
                LinearSolution::None => {}
            }
        }

        #[test]
        fn nullspace_dimension_and_membership(m in small_matrix()) {
            let basis = nullspace(&m);
            prop_assert_eq!(basis.len() + matrix_rank(&m), m.ncols());
            for v in &basis {
                for row in m.iter_rows() {
                    prop_assert!(dot(row, v).is_zero());
                }
            }
        }
    }
}
