//! Exact rational arithmetic: scalars, dense matrices, fraction-free
//! elimination and a Bland-rule simplex.
//!
//! Everything here works over [`Rational`], an arbitrary-precision fraction
//! that is kept in lowest terms with a positive denominator after every
//! operation. There is no floating point anywhere in the crate.

mod linalg;
mod lp;
mod matrix;

pub use linalg::{matrix_rank, nullspace, solve_linear_system, LinearSolution};
pub use lp::{lp_solve, solve_standard_form, LpOutcome, Sense, StandardFormOutcome};
pub use matrix::RMatrix;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

/// Exact fraction with arbitrary-precision numerator and denominator.
pub type Rational = num_rational::BigRational;

/// Shorthand for `p/q`. Panics on `q == 0`.
pub fn rat(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Integer as a rational.
pub fn int(p: i64) -> Rational {
    Rational::from_integer(BigInt::from(p))
}

/// Exact dot product. Slices must have equal length.
pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    debug_assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .fold(Rational::zero(), |acc, (x, y)| acc + x * y)
}

/// Integer dot product. Slices must have equal length.
pub(crate) fn dot_int(a: &[BigInt], b: &[BigInt]) -> BigInt {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).fold(BigInt::zero(), |acc, (x, y)| acc + x * y)
}

/// Scales a rational vector by a positive factor so that it becomes an
/// integer vector whose entries have gcd 1. The zero vector maps to itself.
pub fn primitive_integer(row: &[Rational]) -> Vec<BigInt> {
    let lcm = row
        .iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = row
        .iter()
        .map(|x| x.numer() * (&lcm / x.denom()))
        .collect();
    primitive_int(ints)
}

/// Divides an integer vector by the gcd of its entries (a positive number).
pub(crate) fn primitive_int(mut row: Vec<BigInt>) -> Vec<BigInt> {
    let g = row.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if !g.is_zero() && !g.is_one() {
        for x in row.iter_mut() {
            *x = &*x / &g;
        }
    }
    row
}

pub(crate) fn to_rationals(row: &[BigInt]) -> Vec<Rational> {
    row.iter().cloned().map(Rational::from_integer).collect()
}

pub(crate) fn is_zero_vec(row: &[Rational]) -> bool {
    row.iter().all(Zero::is_zero)
}

/// Index of the first nonzero entry, if any.
pub(crate) fn first_nonzero<T: Zero>(row: &[T]) -> Option<usize> {
    row.iter().position(|x| !x.is_zero())
}

pub(crate) fn negated(row: &[Rational]) -> Vec<Rational> {
    row.iter().map(|x| -x).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals_stay_in_lowest_terms() {
        let x = rat(6, -4);
        assert_eq!(x.numer(), &BigInt::from(-3));
        assert_eq!(x.denom(), &BigInt::from(2));
        assert_eq!(rat(1, 3) + rat(1, 6), rat(1, 2));
    }

    #[test]
    fn primitive_scaling() {
        let row = vec![rat(0, 1), rat(2, 3), rat(4, 3)];
        assert_eq!(
            primitive_integer(&row),
            vec![BigInt::from(0), BigInt::from(1), BigInt::from(2)]
        );
        let neg = vec![int(-2), int(2), int(0)];
        assert_eq!(
            primitive_integer(&neg),
            vec![BigInt::from(-1), BigInt::from(1), BigInt::from(0)]
        );
        assert_eq!(primitive_integer(&[int(0), int(0)]), vec![BigInt::zero(); 2]);
    }
}
