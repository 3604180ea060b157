//! Newton diagrams and the combinatorics behind the zeta-function formulas.
//!
//! The Newton polyhedron of a support `S` is the convex hull of
//! `union of (k + R+^n)` over `k in S`; its diagram is the union of compact
//! faces. For a covector `a` that is non-negative (strictly positive on the
//! working coordinates), `m(a, Γ)` is the minimum of the pairing over the
//! support and the face `Δ(a, Γ)` is the hull of the argmin set.
//!
//! The heart of the module is [`essential_covectors`]: for a coordinate
//! subset `I` of size `l`, the finitely many primitive covectors `a`,
//! strictly positive on `I`, with `dim(Δ(a, Γ_1) + Δ(a, Γ_2)) = l - 1`.
//! These are exactly the inner normals of the compact facets of the Newton
//! polyhedron of the pairwise-sum support, and that is how the enumeration
//! works: candidate normals come from hyperplanes spanned by hull vertices
//! and survive an exact argmin-dimension filter. The power-denominator face
//! walk reuses the same facet enumeration on a single support.

use num_traits::Zero;

use crate::linalg::{self, dot, rank, sub, Int, Rat};
use crate::parse::GermSupport;
use crate::polytope::{mixed_volume_pattern, primitive_covector, GeometryError, LatticePolytope};

/// A Newton diagram: the support together with the cached hull of its
/// points. The diagram itself (the compact faces of the polyhedron) is
/// determined by the support, so no face complex is materialized.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NewtonDiagram {
    support: GermSupport,
    hull: LatticePolytope,
}

impl NewtonDiagram {
    pub fn new(support: GermSupport) -> Self {
        let hull = LatticePolytope::new(support.ambient_dim(), support.points().to_vec())
            .expect("a germ support is a valid point set");
        NewtonDiagram { support, hull }
    }

    pub fn ambient_dim(&self) -> usize {
        self.support.ambient_dim()
    }

    pub fn support(&self) -> &GermSupport {
        &self.support
    }

    pub fn hull(&self) -> &LatticePolytope {
        &self.hull
    }

    /// Intersection with the coordinate subspace `L_I`, re-indexed into the
    /// `|I|` coordinates of `I`. `None` when no support point lies in `L_I`.
    pub fn restrict(&self, subset: &CoordinateSubset) -> Option<NewtonDiagram> {
        let mut points = Vec::new();
        for p in self.support.points() {
            let off_subset_zero = (0..self.ambient_dim())
                .filter(|i| !subset.contains(*i))
                .all(|i| p[i].is_zero());
            if off_subset_zero {
                points.push(subset.indices().iter().map(|&i| p[i].clone()).collect());
            }
        }
        if points.is_empty() {
            return None;
        }
        let support =
            GermSupport::new(subset.len(), points).expect("restricted support stays valid");
        Some(NewtonDiagram::new(support))
    }
}

/// Ordered pair of Newton diagrams (numerator, denominator).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NewtonPair {
    gamma1: NewtonDiagram,
    gamma2: NewtonDiagram,
}

impl NewtonPair {
    pub fn new(gamma1: NewtonDiagram, gamma2: NewtonDiagram) -> Result<Self, GeometryError> {
        if gamma1.ambient_dim() != gamma2.ambient_dim() {
            return Err(GeometryError::DimensionMismatch {
                left: gamma1.ambient_dim(),
                right: gamma2.ambient_dim(),
            });
        }
        Ok(NewtonPair { gamma1, gamma2 })
    }

    pub fn from_supports(s1: GermSupport, s2: GermSupport) -> Result<Self, GeometryError> {
        Self::new(NewtonDiagram::new(s1), NewtonDiagram::new(s2))
    }

    pub fn ambient_dim(&self) -> usize {
        self.gamma1.ambient_dim()
    }

    pub fn gamma1(&self) -> &NewtonDiagram {
        &self.gamma1
    }

    pub fn gamma2(&self) -> &NewtonDiagram {
        &self.gamma2
    }

    /// The pair with numerator and denominator exchanged.
    pub fn swapped(&self) -> NewtonPair {
        NewtonPair {
            gamma1: self.gamma2.clone(),
            gamma2: self.gamma1.clone(),
        }
    }
}

/// Non-empty subset `I` of the coordinates `{0, .., n}`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct CoordinateSubset {
    indices: Vec<usize>,
    ambient_dim: usize,
}

impl CoordinateSubset {
    pub fn new(ambient_dim: usize, indices: impl IntoIterator<Item = usize>) -> Option<Self> {
        let mut indices: Vec<usize> = indices.into_iter().collect();
        indices.sort_unstable();
        indices.dedup();
        if indices.is_empty() || indices.last().copied().unwrap_or(0) >= ambient_dim {
            return None;
        }
        Some(CoordinateSubset {
            indices,
            ambient_dim,
        })
    }

    /// All subsets of size `l`, in lexicographic order.
    pub fn all_of_size(ambient_dim: usize, l: usize) -> Vec<CoordinateSubset> {
        use itertools::Itertools;
        (0..ambient_dim)
            .combinations(l)
            .map(|indices| CoordinateSubset {
                indices,
                ambient_dim,
            })
            .collect()
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn contains(&self, i: usize) -> bool {
        self.indices.binary_search(&i).is_ok()
    }

    /// Embed a vector on the subset coordinates back into the ambient space,
    /// zero off the subset.
    pub fn embed(&self, v: &[Int]) -> Vec<Int> {
        let mut out = vec![Int::zero(); self.ambient_dim];
        for (slot, &i) in self.indices.iter().enumerate() {
            out[i] = v[slot].clone();
        }
        out
    }
}

/// `m(a, Γ) = min over the support of <a, k>`. The covector must be
/// non-negative, strictly positive on every coordinate the recession cone of
/// the working subspace can move in.
pub fn support_min(diagram: &NewtonDiagram, covector: &[Int]) -> Int {
    diagram
        .support()
        .points()
        .iter()
        .map(|p| dot(covector, p))
        .min()
        .expect("support is non-empty")
}

/// `Δ(a, Γ)`: the convex hull of the support points attaining `m(a, Γ)`.
pub fn face(diagram: &NewtonDiagram, covector: &[Int]) -> LatticePolytope {
    let m = support_min(diagram, covector);
    let pts: Vec<Vec<Int>> = diagram
        .support()
        .points()
        .iter()
        .filter(|p| dot(covector, p) == m)
        .cloned()
        .collect();
    LatticePolytope::new(diagram.ambient_dim(), pts).expect("argmin set is non-empty")
}

fn argmin_points(points: &[Vec<Int>], covector: &[Int]) -> (Int, Vec<Vec<Int>>) {
    let m = points
        .iter()
        .map(|p| dot(covector, p))
        .min()
        .expect("non-empty point set");
    let pts = points
        .iter()
        .filter(|p| dot(covector, p) == m)
        .cloned()
        .collect();
    (m, pts)
}

fn affine_rank(points: &[Vec<Int>]) -> usize {
    let diffs: Vec<Vec<Int>> = points[1..].iter().map(|p| sub(p, &points[0])).collect();
    rank(&diffs)
}

/// Strictly positive primitive covectors `a` on `Z^l` whose argmin face over
/// `points` has affine dimension `l - 1`: the inner normals of the compact
/// facets of the Newton polyhedron of the point set. Sorted lexicographically.
pub(crate) fn positive_facet_normals(points: &[Vec<Int>], l: usize) -> Vec<Vec<Int>> {
    use itertools::Itertools;
    use std::collections::BTreeSet;

    if l == 1 {
        // The only positive primitive covector on a line.
        return vec![vec![Int::from(1)]];
    }
    let hull = LatticePolytope::new(l, points.to_vec()).expect("non-empty point set");
    let vertices = hull.vertices();
    let mut candidates: BTreeSet<Vec<Int>> = BTreeSet::new();
    for combo in vertices.iter().combinations(l) {
        let dirs: Vec<Vec<Int>> = combo[1..].iter().map(|p| sub(p, combo[0])).collect();
        let normal = linalg::cross_normal(&dirs);
        if normal.iter().all(Zero::is_zero) {
            continue;
        }
        let prim = primitive_covector(&normal).expect("non-zero normal");
        candidates.insert(prim.iter().map(|x| -x).collect());
        candidates.insert(prim);
    }
    candidates
        .into_iter()
        .filter(|a| a.iter().all(|x| x > &Int::zero()))
        .filter(|a| {
            let (_, face_pts) = argmin_points(points, a);
            affine_rank(&face_pts) == l - 1
        })
        .collect()
}

/// A member of the essential set `E_I`: a primitive covector supported on
/// `I` together with the support minima, the faces of both diagrams, and the
/// mixed-volume sum `V_a`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EssentialCovector {
    /// Ambient-length covector: strictly positive on `I`, zero off `I`,
    /// entries of gcd 1.
    pub covector: Vec<Int>,
    /// `m(a, Γ_{1,I})` and `m(a, Γ_{2,I})`.
    pub m1: Int,
    pub m2: Int,
    /// Faces `Δ(a, Γ_{1,I})`, `Δ(a, Γ_{2,I})` in ambient coordinates.
    pub delta1: LatticePolytope,
    pub delta2: LatticePolytope,
    /// `V_a = sum over s of V_{l-1}(Δ_1 .. s times .., Δ_2 ..)`.
    pub v_a: Rat,
}

/// The complete set `E_I` for a pair of diagrams already restricted to a
/// coordinate subset, in lexicographic covector order. Empty when either
/// restriction is absent (such subsets contribute the trivial factor, which
/// the caller owns).
pub fn essential_covectors(
    pair: &NewtonPair,
    subset: &CoordinateSubset,
) -> Result<Vec<EssentialCovector>, GeometryError> {
    let l = subset.len();
    let (Some(r1), Some(r2)) = (
        pair.gamma1().restrict(subset),
        pair.gamma2().restrict(subset),
    ) else {
        return Ok(Vec::new());
    };
    let s1 = r1.support().points();
    let s2 = r2.support().points();

    let sums: Vec<Vec<Int>> = {
        use std::collections::BTreeSet;
        let mut set = BTreeSet::new();
        for p in s1 {
            for q in s2 {
                set.insert(linalg::add(p, q));
            }
        }
        set.into_iter().collect()
    };

    let mut out = Vec::new();
    for a in positive_facet_normals(&sums, l) {
        let (m1, d1) = argmin_points(s1, &a);
        let (m2, d2) = argmin_points(s2, &a);
        // dim(Δ1 + Δ2) must be exactly l - 1; the facet filter above ran on
        // the sum set, which gives the same dimension, but keep the check on
        // the faces themselves so the invariant is explicit.
        let sum_face: Vec<Vec<Int>> = d1
            .iter()
            .flat_map(|p| d2.iter().map(move |q| linalg::add(p, q)))
            .collect();
        if affine_rank(&sum_face) != l - 1 {
            continue;
        }
        let poly1 = LatticePolytope::new(l, d1)?;
        let poly2 = LatticePolytope::new(l, d2)?;
        let v_a = mixed_volume_pattern(&poly1, &poly2, l - 1)?
            .into_iter()
            .sum();
        out.push(EssentialCovector {
            covector: subset.embed(&a),
            m1,
            m2,
            delta1: embed_polytope(&poly1, subset),
            delta2: embed_polytope(&poly2, subset),
            v_a,
        });
    }
    Ok(out)
}

fn embed_polytope(p: &LatticePolytope, subset: &CoordinateSubset) -> LatticePolytope {
    LatticePolytope::new(
        subset.ambient_dim(),
        p.vertices().iter().map(|v| subset.embed(v)),
    )
    .expect("embedding preserves the vertex set")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::vec_int;
    use num_traits::One;

    fn diagram(dim: usize, pts: &[&[i64]]) -> NewtonDiagram {
        NewtonDiagram::new(GermSupport::from_ints(dim, pts).unwrap())
    }

    fn example1() -> NewtonPair {
        NewtonPair::new(diagram(2, &[&[3, 0], &[1, 1]]), diagram(2, &[&[0, 1]])).unwrap()
    }

    fn example2() -> NewtonPair {
        NewtonPair::new(
            diagram(3, &[&[1, 1, 1], &[7, 0, 0], &[0, 6, 0], &[0, 0, 5]]),
            diagram(3, &[&[4, 0, 0], &[0, 4, 0], &[0, 0, 4]]),
        )
        .unwrap()
    }

    #[test]
    fn restrict_to_axes() {
        let pair = example1();
        let x = CoordinateSubset::new(2, [0]).unwrap();
        let y = CoordinateSubset::new(2, [1]).unwrap();
        let rx = pair.gamma1().restrict(&x).unwrap();
        assert_eq!(rx.support().points(), &[vec_int(&[3])]);
        assert!(pair.gamma1().restrict(&y).is_none());
        assert!(pair.gamma2().restrict(&x).is_none());
        let full = CoordinateSubset::new(2, [0, 1]).unwrap();
        assert_eq!(&pair.gamma1().restrict(&full).unwrap(), pair.gamma1());
    }

    #[test]
    fn support_min_and_face_on_example_1() {
        let pair = example1();
        let a = vec_int(&[1, 2]);
        assert_eq!(support_min(pair.gamma1(), &a), Int::from(3));
        assert_eq!(support_min(pair.gamma2(), &a), Int::from(2));
        let f1 = face(pair.gamma1(), &a);
        assert_eq!(
            f1,
            LatticePolytope::from_ints(2, &[&[3, 0], &[1, 1]]).unwrap()
        );
        let f2 = face(pair.gamma2(), &a);
        assert_eq!(f2, LatticePolytope::from_ints(2, &[&[0, 1]]).unwrap());
    }

    #[test]
    fn face_of_homogeneous_denominator() {
        let q = diagram(3, &[&[4, 0, 0], &[0, 4, 0], &[0, 0, 4]]);
        let a = vec_int(&[1, 1, 1]);
        assert_eq!(support_min(&q, &a), Int::from(4));
        assert_eq!(face(&q, &a).vertices().len(), 3);
    }

    #[test]
    fn essential_covectors_example_1() {
        let pair = example1();
        let full = CoordinateSubset::new(2, [0, 1]).unwrap();
        let covs = essential_covectors(&pair, &full).unwrap();
        assert_eq!(covs.len(), 1);
        let c = &covs[0];
        assert_eq!(c.covector, vec_int(&[1, 2]));
        assert_eq!(c.m1, Int::from(3));
        assert_eq!(c.m2, Int::from(2));
        assert_eq!(c.v_a, Rat::one());
    }

    #[test]
    fn essential_covectors_example_2_yz_plane() {
        let pair = example2();
        let yz = CoordinateSubset::new(3, [1, 2]).unwrap();
        let covs = essential_covectors(&pair, &yz).unwrap();
        assert_eq!(covs.len(), 2);
        // Lexicographic order: (0,1,1) before (0,5,6).
        assert_eq!(covs[0].covector, vec_int(&[0, 1, 1]));
        assert_eq!(covs[0].m1, Int::from(5));
        assert_eq!(covs[0].m2, Int::from(4));
        assert_eq!(covs[0].v_a, Rat::from(Int::from(4)));
        assert_eq!(covs[1].covector, vec_int(&[0, 5, 6]));
        assert_eq!(covs[1].m1, Int::from(30));
        assert_eq!(covs[1].m2, Int::from(20));
        assert_eq!(covs[1].v_a, Rat::one());
    }

    #[test]
    fn essential_covectors_dim_condition_unsatisfiable() {
        let pair = NewtonPair::new(diagram(2, &[&[1, 0]]), diagram(2, &[&[0, 1]])).unwrap();
        let full = CoordinateSubset::new(2, [0, 1]).unwrap();
        assert!(essential_covectors(&pair, &full).unwrap().is_empty());
    }

    #[test]
    fn essential_covectors_l1_unit_covector() {
        let pair = example2();
        let x = CoordinateSubset::new(3, [0]).unwrap();
        let covs = essential_covectors(&pair, &x).unwrap();
        assert_eq!(covs.len(), 1);
        assert_eq!(covs[0].covector, vec_int(&[1, 0, 0]));
        assert_eq!(covs[0].m1, Int::from(7));
        assert_eq!(covs[0].m2, Int::from(4));
        assert_eq!(covs[0].v_a, Rat::one());
    }

    #[test]
    fn essential_covectors_absent_restriction_gives_empty() {
        // Neither support meets the y-axis subspace.
        let pair = NewtonPair::new(diagram(2, &[&[1, 0]]), diagram(2, &[&[2, 0]])).unwrap();
        let y = CoordinateSubset::new(2, [1]).unwrap();
        assert!(essential_covectors(&pair, &y).unwrap().is_empty());
    }

    #[test]
    fn essential_covectors_flat_sum_hull() {
        // The pairwise-sum hull is itself (l-1)-dimensional; the affine
        // hull's normal must still be discovered as a candidate.
        let pair =
            NewtonPair::new(diagram(2, &[&[1, 0], &[0, 1]]), diagram(2, &[&[1, 0]])).unwrap();
        let full = CoordinateSubset::new(2, [0, 1]).unwrap();
        let covs = essential_covectors(&pair, &full).unwrap();
        assert_eq!(covs.len(), 1);
        assert_eq!(covs[0].covector, vec_int(&[1, 1]));
        // Both minima equal 1: the covector contributes to neither side.
        assert_eq!(covs[0].m1, Int::from(1));
        assert_eq!(covs[0].m2, Int::from(1));
        assert_eq!(covs[0].v_a, Rat::one());
    }

    #[test]
    fn no_sum_point_below_the_facet() {
        let pair = example2();
        for l in 1..=3 {
            for subset in CoordinateSubset::all_of_size(3, l) {
                for c in essential_covectors(&pair, &subset).unwrap() {
                    let bound = &c.m1 + &c.m2;
                    for p in pair.gamma1().support().points() {
                        for q in pair.gamma2().support().points() {
                            // Only sums inside L_I are relevant.
                            let in_subspace = (0..3)
                                .filter(|i| !subset.contains(*i))
                                .all(|i| p[i].is_zero() && q[i].is_zero());
                            if in_subspace {
                                let v = dot(&c.covector, &linalg::add(p, q));
                                assert!(v >= bound);
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn swap_exchanges_roles() {
        let pair = example2();
        let swapped = pair.swapped();
        for l in 1..=3 {
            for subset in CoordinateSubset::all_of_size(3, l) {
                let a = essential_covectors(&pair, &subset).unwrap();
                let b = essential_covectors(&swapped, &subset).unwrap();
                assert_eq!(a.len(), b.len());
                for (x, y) in a.iter().zip(&b) {
                    assert_eq!(x.covector, y.covector);
                    assert_eq!(x.m1, y.m2);
                    assert_eq!(x.m2, y.m1);
                    assert_eq!(x.delta1, y.delta2);
                    assert_eq!(x.delta2, y.delta1);
                    assert_eq!(x.v_a, y.v_a);
                }
            }
        }
    }
}
