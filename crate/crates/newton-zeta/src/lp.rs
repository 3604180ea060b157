//! Exact convex-position tests via phase-one simplex over the rationals.
//!
//! The only question asked here is membership of a point in the convex hull
//! of finitely many integer points: feasibility of
//! `sum λ_i g_i = p, sum λ_i = 1, λ >= 0`. Bland's rule guarantees
//! termination; all pivots are exact `BigRational` arithmetic.

use crate::linalg::{Int, Rat};
use num_traits::{One, Signed, Zero};

/// Is `target` in the convex hull of `generators`?
pub(crate) fn in_convex_hull(target: &[Int], generators: &[&[Int]]) -> bool {
    let dim = target.len();
    let rows = dim + 1;
    let nvars = generators.len();
    if nvars == 0 {
        return false;
    }
    // Constraint matrix: one row per coordinate plus the barycentric row.
    let mut a: Vec<Vec<Rat>> = Vec::with_capacity(rows);
    let mut b: Vec<Rat> = Vec::with_capacity(rows);
    for c in 0..dim {
        a.push(generators.iter().map(|g| Rat::from(g[c].clone())).collect());
        b.push(Rat::from(target[c].clone()));
    }
    a.push(vec![Rat::one(); nvars]);
    b.push(Rat::one());
    feasible(a, b)
}

/// Phase-one simplex feasibility for `{ x >= 0 : A x = b }`.
fn feasible(mut a: Vec<Vec<Rat>>, mut b: Vec<Rat>) -> bool {
    let rows = a.len();
    let nvars = a[0].len();
    // Make the right-hand side non-negative.
    for i in 0..rows {
        if b[i].is_negative() {
            b[i] = -b[i].clone();
            for x in a[i].iter_mut() {
                *x = -x.clone();
            }
        }
    }
    // Tableau columns: original variables, then one artificial per row.
    let ncols = nvars + rows;
    let mut t: Vec<Vec<Rat>> = Vec::with_capacity(rows);
    for i in 0..rows {
        let mut row = a[i].clone();
        for j in 0..rows {
            row.push(if i == j { Rat::one() } else { Rat::zero() });
        }
        row.push(b[i].clone());
        t.push(row);
    }
    let mut basis: Vec<usize> = (nvars..ncols).collect();
    // Cost row for minimizing the sum of artificials, expressed in the
    // current (all-artificial) basis: cost_j = -sum_i a_ij, obj = -sum_i b_i.
    let mut cost: Vec<Rat> = (0..=ncols)
        .map(|j| -t.iter().map(|row| row[j].clone()).sum::<Rat>())
        .collect();
    for j in nvars..ncols {
        cost[j] = Rat::zero();
    }

    // Bland: entering column = smallest index with negative reduced cost.
    while let Some(enter) = (0..ncols).find(|&j| cost[j].is_negative()) {
        // Ratio test, ties broken by smallest basis variable (Bland).
        let mut leave: Option<usize> = None;
        let mut best: Option<Rat> = None;
        for i in 0..rows {
            if t[i][enter].is_positive() {
                let ratio = &t[i][ncols] / &t[i][enter];
                let better = match &best {
                    None => true,
                    Some(r) => ratio < *r || (ratio == *r && basis[i] < basis[leave.unwrap()]),
                };
                if better {
                    best = Some(ratio);
                    leave = Some(i);
                }
            }
        }
        // Phase-one objective is bounded below by zero, so some positive
        // pivot entry must exist.
        let leave = leave.expect("phase-one simplex cannot be unbounded");
        // Pivot.
        let pivot = t[leave][enter].clone();
        for x in t[leave].iter_mut() {
            *x = &*x / &pivot;
        }
        for i in 0..rows {
            if i != leave && !t[i][enter].is_zero() {
                let f = t[i][enter].clone();
                let src = t[leave].clone();
                for (x, s) in t[i].iter_mut().zip(&src) {
                    *x = &*x - &(s * &f);
                }
            }
        }
        if !cost[enter].is_zero() {
            let f = cost[enter].clone();
            for (x, s) in cost.iter_mut().zip(&t[leave]) {
                *x = &*x - &(s * &f);
            }
        }
        basis[leave] = enter;
    }
    // Feasible iff the optimum of the artificial sum is zero.
    cost[ncols].is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::vec_int;

    fn hull_test(p: &[i64], gens: &[&[i64]]) -> bool {
        let target = vec_int(p);
        let gs: Vec<Vec<Int>> = gens.iter().map(|g| vec_int(g)).collect();
        let refs: Vec<&[Int]> = gs.iter().map(|g| g.as_slice()).collect();
        in_convex_hull(&target, &refs)
    }

    #[test]
    fn point_in_triangle() {
        let tri: &[&[i64]] = &[&[0, 0], &[3, 0], &[0, 3]];
        assert!(hull_test(&[1, 1], tri));
        assert!(hull_test(&[0, 0], tri));
        assert!(hull_test(&[2, 1], tri)); // on the edge
        assert!(!hull_test(&[2, 2], tri));
        assert!(!hull_test(&[-1, 0], tri));
    }

    #[test]
    fn point_on_segment() {
        let seg: &[&[i64]] = &[&[0, 0], &[4, 2]];
        assert!(hull_test(&[2, 1], seg));
        assert!(!hull_test(&[1, 1], seg));
        assert!(!hull_test(&[6, 3], seg));
    }

    #[test]
    fn single_generator() {
        assert!(hull_test(&[5, 7], &[&[5, 7]]));
        assert!(!hull_test(&[5, 8], &[&[5, 7]]));
        assert!(!in_convex_hull(&vec_int(&[0, 0]), &[]));
    }

    #[test]
    fn cube_interior_3d() {
        let cube: Vec<Vec<i64>> = (0..8)
            .map(|k| vec![(k & 1) * 2, ((k >> 1) & 1) * 2, ((k >> 2) & 1) * 2])
            .collect();
        let refs: Vec<&[i64]> = cube.iter().map(|v| v.as_slice()).collect();
        assert!(hull_test(&[1, 1, 1], &refs));
        assert!(hull_test(&[2, 2, 2], &refs));
        assert!(!hull_test(&[3, 1, 1], &refs));
    }
}
