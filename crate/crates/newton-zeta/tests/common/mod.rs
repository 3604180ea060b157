//! Shared helpers for the integration suites: seeded random inputs and the
//! brute-force essential-covector oracle. The oracle deliberately avoids the
//! production enumeration path: candidates come from hyperplanes spanned by
//! arbitrary subsets of the raw pairwise-sum points (no hull, no vertex
//! filter), and the mixed-volume sums use the inclusion-exclusion route.

use itertools::Itertools;
use num_traits::Zero;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use newton_zeta::linalg::{self, Int, Rat};
use newton_zeta::newton::CoordinateSubset;
use newton_zeta::polytope::{mixed_volume_oracle, LatticePolytope};
use newton_zeta::{GermSupport, NewtonDiagram, NewtonPair};

pub fn random_support(
    rng: &mut ChaCha8Rng,
    dim: usize,
    max_points: usize,
    max_exp: i64,
) -> GermSupport {
    let count = rng.gen_range(1..=max_points);
    let mut points = Vec::new();
    while points.len() < count {
        let p: Vec<i64> = (0..dim).map(|_| rng.gen_range(0..=max_exp)).collect();
        if p.iter().all(|&c| c == 0) {
            continue; // germs vanish at the origin
        }
        points.push(p.iter().map(|&c| Int::from(c)).collect::<Vec<Int>>());
    }
    GermSupport::new(dim, points).expect("generated support is valid")
}

pub fn random_diagram(
    rng: &mut ChaCha8Rng,
    dim: usize,
    max_points: usize,
    max_exp: i64,
) -> NewtonDiagram {
    NewtonDiagram::new(random_support(rng, dim, max_points, max_exp))
}

pub fn random_polytope(
    rng: &mut ChaCha8Rng,
    dim: usize,
    max_points: usize,
    max_coord: i64,
) -> LatticePolytope {
    let count = rng.gen_range(1..=max_points);
    let points: Vec<Vec<Int>> = (0..count)
        .map(|_| {
            (0..dim)
                .map(|_| Int::from(rng.gen_range(0..=max_coord)))
                .collect()
        })
        .collect();
    LatticePolytope::new(dim, points).expect("generated polytope is valid")
}

/// Oracle row: restricted-coordinate data compared against the production
/// [`newton_zeta::newton::essential_covectors`] output.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleCovector {
    pub covector: Vec<Int>,
    pub m1: Int,
    pub m2: Int,
    pub v_a: Rat,
}

fn argmin(points: &[Vec<Int>], a: &[Int]) -> (Int, Vec<Vec<Int>>) {
    let m = points
        .iter()
        .map(|p| linalg::dot(a, p))
        .min()
        .expect("non-empty");
    let pts = points
        .iter()
        .filter(|p| linalg::dot(a, p) == m)
        .cloned()
        .collect();
    (m, pts)
}

fn affine_rank(points: &[Vec<Int>]) -> usize {
    let diffs: Vec<Vec<Int>> = points[1..]
        .iter()
        .map(|p| linalg::sub(p, &points[0]))
        .collect();
    linalg::rank(&diffs)
}

/// Brute-force enumeration of `E_I`: every `l`-subset of the pairwise-sum
/// point set spans a candidate hyperplane; both orientations of its normal
/// are tested against the defining conditions.
pub fn brute_force_essential_covectors(
    pair: &NewtonPair,
    subset: &CoordinateSubset,
) -> Vec<OracleCovector> {
    let l = subset.len();
    let (Some(r1), Some(r2)) = (
        pair.gamma1().restrict(subset),
        pair.gamma2().restrict(subset),
    ) else {
        return Vec::new();
    };
    let s1 = r1.support().points().to_vec();
    let s2 = r2.support().points().to_vec();
    let mut sums: Vec<Vec<Int>> = Vec::new();
    for p in &s1 {
        for q in &s2 {
            let s = linalg::add(p, q);
            if !sums.contains(&s) {
                sums.push(s);
            }
        }
    }

    let mut candidates: Vec<Vec<Int>> = Vec::new();
    for combo in sums.iter().combinations(l) {
        let dirs: Vec<Vec<Int>> = combo[1..]
            .iter()
            .map(|p| linalg::sub(p, combo[0]))
            .collect();
        let normal = linalg::cross_normal(&dirs);
        if normal.iter().all(Zero::is_zero) {
            continue;
        }
        let prim = linalg::primitive(&normal).unwrap();
        let neg: Vec<Int> = prim.iter().map(|x| -x).collect();
        for cand in [prim, neg] {
            if !candidates.contains(&cand) {
                candidates.push(cand);
            }
        }
    }

    let mut rows = Vec::new();
    for a in candidates {
        if !a.iter().all(|x| x > &Int::zero()) {
            continue;
        }
        let (m1, d1) = argmin(&s1, &a);
        let (m2, d2) = argmin(&s2, &a);
        let face_sums: Vec<Vec<Int>> = d1
            .iter()
            .cartesian_product(&d2)
            .map(|(p, q)| linalg::add(p, q))
            .collect();
        if affine_rank(&face_sums) != l - 1 {
            continue;
        }
        let p1 = LatticePolytope::new(l, d1).unwrap();
        let p2 = LatticePolytope::new(l, d2).unwrap();
        let mut v_a = Rat::zero();
        for s in 0..l {
            let mut bodies: Vec<&LatticePolytope> = Vec::new();
            for _ in 0..s {
                bodies.push(&p1);
            }
            for _ in 0..(l - 1 - s) {
                bodies.push(&p2);
            }
            v_a += mixed_volume_oracle(&bodies).unwrap();
        }
        rows.push(OracleCovector {
            covector: subset.embed(&a),
            m1,
            m2,
            v_a,
        });
    }
    rows.sort_by(|x, y| x.covector.cmp(&y.covector));
    rows
}
