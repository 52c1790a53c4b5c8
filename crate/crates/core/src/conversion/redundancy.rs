//! LP-based redundancy removal, implicit equalities and membership
//! certificates.

use std::collections::BTreeSet;

use num_traits::{One, Signed, Zero};

use crate::arith::{
    lp_solve, matrix_rank, negated, solve_standard_form, LpOutcome, RMatrix, Rational,
    Sense, StandardFormOutcome,
};
use crate::error::Error;
use crate::repr::{HRep, VRep};

/// Weights writing a point as `[1, x] = [λ, μ] · V(P)`: `λ` over vertex rows
/// and `μ` over ray rows, both in row order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub lambda: Vec<Rational>,
    pub mu: Vec<Rational>,
}

/// Some point of the polyhedron, or `None` when it is empty.
pub fn feasible_point(h: &HRep) -> Option<Vec<Rational>> {
    let zero = vec![Rational::zero(); h.dim()];
    match lp_solve(&zero, &h.expanded_rows(), Sense::Min).expect("matching widths") {
        LpOutcome::Optimal { point, .. } => Some(point),
        _ => None,
    }
}

fn rows_matrix(cols: usize, rows: impl IntoIterator<Item = Vec<Rational>>) -> RMatrix {
    let mut m = RMatrix::empty(cols);
    for r in rows {
        m.push_row(r).expect("same width");
    }
    m
}

/// Indices of inequality rows that hold with equality on all of `P`
/// (marked equations are not listed).
pub fn implicit_equalities(h: &HRep) -> Result<BTreeSet<usize>, Error> {
    let system = h.expanded_rows();
    let mut out = BTreeSet::new();
    for (i, row) in h.rows().iter_rows().enumerate() {
        if h.is_equality(i) {
            continue;
        }
        match lp_solve(&row[1..], &system, Sense::Max)? {
            LpOutcome::Infeasible => return Err(Error::Infeasible),
            LpOutcome::Optimal { value, .. } if (&row[0] + &value).is_zero() => {
                out.insert(i);
            }
            _ => {}
        }
    }
    Ok(out)
}

/// Irredundant form of `h`: implicit equalities are detected and marked,
/// linearly dependent equations dropped, and each inequality implied by the
/// others removed. The result is canonical.
pub fn remove_redundancy_h(h: &HRep) -> Result<HRep, Error> {
    if feasible_point(h).is_none() {
        return Err(Error::Infeasible);
    }
    let cols = h.dim() + 1;
    let implicit = implicit_equalities(h)?;

    // independent equations
    let mut eqs: Vec<Vec<Rational>> = Vec::new();
    for (i, row) in h.rows().iter_rows().enumerate() {
        if h.is_equality(i) || implicit.contains(&i) {
            let mut trial = eqs.clone();
            trial.push(row.to_vec());
            if matrix_rank(&rows_matrix(cols, trial.clone())) == trial.len() {
                eqs = trial;
            }
        }
    }

    let mut ineqs: Vec<Vec<Rational>> = h
        .rows()
        .iter_rows()
        .enumerate()
        .filter(|(i, _)| !h.is_equality(*i) && !implicit.contains(i))
        .map(|(_, r)| r.to_vec())
        .collect();

    let mut k = 0;
    while k < ineqs.len() {
        let others = eqs
            .iter()
            .flat_map(|e| [e.clone(), negated(e)])
            .chain(
                ineqs
                    .iter()
                    .enumerate()
                    .filter(|(j, _)| *j != k)
                    .map(|(_, r)| r.clone()),
            );
        let system = rows_matrix(cols, others);
        let row = &ineqs[k];
        let redundant = match lp_solve(&row[1..], &system, Sense::Min)? {
            LpOutcome::Optimal { value, .. } => !(&row[0] + value).is_negative(),
            _ => false,
        };
        if redundant {
            ineqs.remove(k);
        } else {
            k += 1;
        }
    }

    let n_eq = eqs.len();
    let rows = rows_matrix(cols, eqs.into_iter().chain(ineqs));
    Ok(HRep::new(rows, (0..n_eq).collect())?.canonical())
}

/// Feasibility of `Σ λ_k s_k + Σ μ_l r_l = target` with `λ, μ ≥ 0` and, when
/// `vertices` is non-empty, `Σ λ = 1`.
fn combination(
    n: usize,
    vertices: &[&[Rational]],
    rays: &[&[Rational]],
    target: &[Rational],
    require_convex: bool,
) -> Option<(Vec<Rational>, Vec<Rational>)> {
    let nv = vertices.len() + rays.len();
    if nv == 0 {
        return None;
    }
    let extra = usize::from(require_convex);
    let mut e = RMatrix::zeros(n + extra, nv);
    let mut f = Vec::with_capacity(n + extra);
    if require_convex {
        for k in 0..vertices.len() {
            e[(0, k)] = Rational::one();
        }
        f.push(Rational::one());
    }
    for j in 0..n {
        for (k, s) in vertices.iter().chain(rays.iter()).enumerate() {
            e[(extra + j, k)] = s[j].clone();
        }
        f.push(target[j].clone());
    }
    let c = vec![Rational::zero(); nv];
    match solve_standard_form(&e, &f, &c).expect("consistent sizes") {
        StandardFormOutcome::Optimal { y, .. } => {
            let mu = y[vertices.len()..].to_vec();
            let mut lambda = y;
            lambda.truncate(vertices.len());
            Some((lambda, mu))
        }
        _ => None,
    }
}

/// Certificate that `x ∈ P = conv(S) + cone(R)`, or `None` if `x ∉ P`.
pub fn member_certificate(v: &VRep, x: &[Rational]) -> Result<Option<Certificate>, Error> {
    if x.len() != v.dim() {
        return Err(Error::DimensionMismatch {
            expected: v.dim(),
            found: x.len(),
        });
    }
    let vertices: Vec<&[Rational]> = v.vertices().collect();
    let rays: Vec<&[Rational]> = v.rays().collect();
    Ok(combination(v.dim(), &vertices, &rays, x, true).map(|(lambda, mu)| Certificate { lambda, mu }))
}

/// Drops every vertex in the convex hull of the other vertices plus the cone
/// of the rays, and every ray in the cone of the other rays. The result is
/// canonical.
pub fn remove_redundancy_v(v: &VRep) -> VRep {
    let n = v.dim();
    let mut keep: Vec<bool> = vec![true; v.num_rows()];
    for i in 0..v.num_rows() {
        let row = v.rows().row(i);
        let others = |want_vertex: bool| -> Vec<&[Rational]> {
            (0..v.num_rows())
                .filter(|&j| j != i && keep[j] && v.is_vertex_row(j) == want_vertex)
                .map(|j| &v.rows().row(j)[1..])
                .collect()
        };
        let rays = others(false);
        let redundant = if v.is_vertex_row(i) {
            let vertices = others(true);
            !vertices.is_empty() && combination(n, &vertices, &rays, &row[1..], true).is_some()
        } else {
            combination(n, &[], &rays, &row[1..], false).is_some()
        };
        if redundant {
            keep[i] = false;
        }
    }
    let idx: Vec<usize> = (0..v.num_rows()).filter(|&i| keep[i]).collect();
    VRep::new(v.rows().select_rows(&idx))
        .expect("a vertex always survives")
        .canonical()
}
