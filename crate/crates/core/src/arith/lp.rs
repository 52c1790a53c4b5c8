//! Dense two-phase simplex over exact rationals.
//!
//! Pivoting uses Bland's rule (smallest eligible index enters, ties in the
//! ratio test broken by smallest basic index), so the method terminates on
//! degenerate problems. Problem sizes here are tiny, so the tableau is dense
//! and reduced costs are recomputed from scratch each iteration.

use num_traits::{One, Signed, Zero};

use super::{dot, matrix_rank, nullspace, RMatrix, Rational};
use crate::error::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sense {
    Min,
    Max,
}

/// Result of [`solve_standard_form`]: `min c·y` s.t. `E y = f`, `y ≥ 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StandardFormOutcome {
    Optimal { value: Rational, y: Vec<Rational> },
    Unbounded,
    Infeasible,
}

/// Result of [`lp_solve`] over free variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LpOutcome {
    Optimal { value: Rational, point: Vec<Rational> },
    Unbounded,
    Infeasible,
}

impl LpOutcome {
    pub fn is_infeasible(&self) -> bool {
        matches!(self, LpOutcome::Infeasible)
    }
}

struct Tableau {
    rows: Vec<Vec<Rational>>,
    rhs: Vec<Rational>,
    basis: Vec<usize>,
}

enum Phase {
    Optimal,
    Unbounded,
}

impl Tableau {
    fn pivot(&mut self, r: usize, c: usize) {
        let inv = self.rows[r][c].recip();
        for x in self.rows[r].iter_mut() {
            *x *= &inv;
        }
        self.rhs[r] *= &inv;
        for i in 0..self.rows.len() {
            if i == r || self.rows[i][c].is_zero() {
                continue;
            }
            let f = self.rows[i][c].clone();
            for j in 0..self.rows[i].len() {
                if !self.rows[r][j].is_zero() {
                    let delta = &f * &self.rows[r][j];
                    self.rows[i][j] -= delta;
                }
            }
            let delta = &f * &self.rhs[r];
            self.rhs[i] -= delta;
        }
        self.basis[r] = c;
    }

    /// Runs Bland-rule iterations on columns `0..ncols` with the given costs.
    fn run(&mut self, cost: &[Rational], ncols: usize) -> Phase {
        loop {
            let entering = (0..ncols).find(|&j| {
                if self.basis.contains(&j) {
                    return false;
                }
                let mut reduced = cost[j].clone();
                for (i, &b) in self.basis.iter().enumerate() {
                    if !self.rows[i][j].is_zero() {
                        reduced -= &cost[b] * &self.rows[i][j];
                    }
                }
                reduced.is_negative()
            });
            let Some(c) = entering else {
                return Phase::Optimal;
            };
            let mut leave: Option<(usize, Rational)> = None;
            for i in 0..self.rows.len() {
                if !self.rows[i][c].is_positive() {
                    continue;
                }
                let ratio = &self.rhs[i] / &self.rows[i][c];
                let better = match &leave {
                    None => true,
                    Some((li, lr)) => {
                        ratio < *lr || (ratio == *lr && self.basis[i] < self.basis[*li])
                    }
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
            match leave {
                Some((r, _)) => self.pivot(r, c),
                None => return Phase::Unbounded,
            }
        }
    }
}

/// Solves `min c·y` subject to `E y = f`, `y ≥ 0` exactly.
///
/// The returned `y` is a basic feasible solution.
pub fn solve_standard_form(
    e: &RMatrix,
    f: &[Rational],
    c: &[Rational],
) -> Result<StandardFormOutcome, Error> {
    let (m, nv) = (e.nrows(), e.ncols());
    if f.len() != m {
        return Err(Error::DimensionMismatch {
            expected: m,
            found: f.len(),
        });
    }
    if c.len() != nv {
        return Err(Error::DimensionMismatch {
            expected: nv,
            found: c.len(),
        });
    }
    // columns: originals 0..nv, artificials nv..nv+m
    let mut rows = Vec::with_capacity(m);
    let mut rhs = Vec::with_capacity(m);
    for (i, row) in e.iter_rows().enumerate() {
        let flip = f[i].is_negative();
        let mut t: Vec<Rational> = row
            .iter()
            .map(|x| if flip { -x } else { x.clone() })
            .collect();
        t.extend((0..m).map(|k| if k == i { Rational::one() } else { Rational::zero() }));
        rows.push(t);
        rhs.push(if flip { -&f[i] } else { f[i].clone() });
    }
    let mut tab = Tableau {
        rows,
        rhs,
        basis: (nv..nv + m).collect(),
    };

    let mut phase1_cost = vec![Rational::zero(); nv + m];
    for x in phase1_cost[nv..].iter_mut() {
        *x = Rational::one();
    }
    // phase 1 is bounded below by zero
    tab.run(&phase1_cost, nv + m);
    let infeasibility: Rational = tab
        .basis
        .iter()
        .zip(&tab.rhs)
        .filter(|(&b, _)| b >= nv)
        .map(|(_, v)| v.clone())
        .sum();
    if infeasibility.is_positive() {
        return Ok(StandardFormOutcome::Infeasible);
    }

    // drive zero-level artificials out of the basis, dropping redundant rows
    let mut i = 0;
    while i < tab.rows.len() {
        if tab.basis[i] >= nv {
            match (0..nv).find(|&j| !tab.rows[i][j].is_zero()) {
                Some(j) => tab.pivot(i, j),
                None => {
                    tab.rows.remove(i);
                    tab.rhs.remove(i);
                    tab.basis.remove(i);
                    continue;
                }
            }
        }
        i += 1;
    }
    for row in tab.rows.iter_mut() {
        row.truncate(nv);
    }

    match tab.run(c, nv) {
        Phase::Unbounded => Ok(StandardFormOutcome::Unbounded),
        Phase::Optimal => {
            let mut y = vec![Rational::zero(); nv];
            for (&b, v) in tab.basis.iter().zip(&tab.rhs) {
                y[b] = v.clone();
            }
            let value = dot(c, &y);
            Ok(StandardFormOutcome::Optimal { value, y })
        }
    }
}

/// Optimizes `objective · x` over `{x : b_i + a_i·x ≥ 0}` with free `x`.
///
/// `constraints` holds one row `(b_i, a_i)` per inequality. A finite optimum
/// is returned at a basic point: it is tight on `rank(A)` linearly independent
/// constraints, so on a pointed system it is a vertex.
pub fn lp_solve(
    objective: &[Rational],
    constraints: &RMatrix,
    sense: Sense,
) -> Result<LpOutcome, Error> {
    let n = objective.len();
    if constraints.ncols() != n + 1 {
        return Err(Error::DimensionMismatch {
            expected: n + 1,
            found: constraints.ncols(),
        });
    }
    let m = constraints.nrows();
    // x = u - w; a·u - a·w - s = -b
    let nv = 2 * n + m;
    let mut e = RMatrix::zeros(m, nv);
    let mut f = Vec::with_capacity(m);
    for (i, row) in constraints.iter_rows().enumerate() {
        for j in 0..n {
            e[(i, j)] = row[j + 1].clone();
            e[(i, n + j)] = -&row[j + 1];
        }
        e[(i, 2 * n + i)] = -Rational::one();
        f.push(-&row[0]);
    }
    let sign = match sense {
        Sense::Min => Rational::one(),
        Sense::Max => -Rational::one(),
    };
    let mut c = vec![Rational::zero(); nv];
    for j in 0..n {
        c[j] = &sign * &objective[j];
        c[n + j] = -&c[j];
    }
    match solve_standard_form(&e, &f, &c)? {
        StandardFormOutcome::Infeasible => Ok(LpOutcome::Infeasible),
        StandardFormOutcome::Unbounded => Ok(LpOutcome::Unbounded),
        StandardFormOutcome::Optimal { y, .. } => {
            let x: Vec<Rational> = (0..n).map(|j| &y[j] - &y[n + j]).collect();
            let point = purify(constraints, x);
            let value = dot(objective, &point);
            Ok(LpOutcome::Optimal { value, point })
        }
    }
}

fn slack(row: &[Rational], x: &[Rational]) -> Rational {
    &row[0] + dot(&row[1..], x)
}

/// Moves an optimal point along directions that keep every tight constraint
/// tight until the tight rows reach the rank of the whole coefficient block.
/// Such directions are orthogonal to the objective at an optimum, so the
/// objective value is unchanged.
fn purify(constraints: &RMatrix, mut x: Vec<Rational>) -> Vec<Rational> {
    let coeffs = |idx: &[usize]| {
        constraints
            .select_rows(idx)
            .drop_leading_columns(1)
    };
    let all: Vec<usize> = (0..constraints.nrows()).collect();
    let full_rank = if all.is_empty() { 0 } else { matrix_rank(&coeffs(&all)) };
    loop {
        let tight: Vec<usize> = all
            .iter()
            .copied()
            .filter(|&i| slack(constraints.row(i), &x).is_zero())
            .collect();
        let tight_coeffs = if tight.is_empty() {
            RMatrix::empty(x.len())
        } else {
            coeffs(&tight)
        };
        if matrix_rank(&tight_coeffs) >= full_rank {
            return x;
        }
        let dir = nullspace(&tight_coeffs)
            .into_iter()
            .find(|d| {
                constraints
                    .iter_rows()
                    .any(|row| !dot(&row[1..], d).is_zero())
            })
            .expect("rank gap implies a direction that moves some row");
        // step along whichever sign is blocked first
        let step = |d: &[Rational]| -> Option<Rational> {
            constraints
                .iter_rows()
                .filter_map(|row| {
                    let rate = dot(&row[1..], d);
                    rate.is_negative().then(|| slack(row, &x) / -rate)
                })
                .min()
        };
        let neg: Vec<Rational> = dir.iter().map(|v| -v).collect();
        let (d, t) = match step(&dir) {
            Some(t) => (dir, t),
            None => {
                let t = step(&neg).expect("a moving row blocks one of the two directions");
                (neg, t)
            }
        };
        for (xi, di) in x.iter_mut().zip(&d) {
            *xi += &t * di;
        }
    }
}
