//! Exact geometry over the integer lattice.
//!
//! Convex hulls keep only true vertices (decided by rational linear
//! programming), affine frames carry a saturated basis of the direction
//! lattice (via Smith normal form), volumes are normalized so the unit cell
//! of the saturated lattice has volume 1, and mixed volumes come from exact
//! polynomial interpolation of volumes of Minkowski combinations, with an
//! independent inclusion-exclusion oracle.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::linalg::{
    self, binomial, det, factorial, rank, saturated_row_basis, solve_in_rows, sub, Int, Rat,
};
use crate::lp;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeometryError {
    #[error("point set must be non-empty")]
    EmptyPoints,
    #[error("ambient dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("point has {got} coordinates, expected {expected}")]
    BadPoint { expected: usize, got: usize },
    #[error("the zero vector has no primitive direction")]
    ZeroVector,
    #[error("bodies jointly span {spanned} dimensions, more than the requested {requested}")]
    TooManyDimensions { spanned: usize, requested: usize },
    #[error("measuring dimension {requested} is below the affine dimension {affine}")]
    DimensionTooSmall { requested: usize, affine: usize },
}

/// A polytope stored as the vertex set of its own convex hull, with integer
/// coordinates. Construction removes duplicate and non-vertex points, so two
/// values are equal iff they describe the same polytope.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LatticePolytope {
    ambient_dim: usize,
    vertices: Vec<Vec<Int>>,
}

/// An origin plus a saturated integer basis of the direction lattice of a
/// polytope's affine hull: every lattice point of the direction space is an
/// integer combination of the basis rows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineLatticeFrame {
    pub origin: Vec<Int>,
    pub basis: Vec<Vec<Int>>,
}

impl AffineLatticeFrame {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Integer coordinates of `point` relative to the frame. `None` when the
    /// point is outside the affine hull; points of the hull's lattice always
    /// have integer coordinates because the basis is saturated.
    pub fn coords(&self, point: &[Int]) -> Option<Vec<Int>> {
        let rel = sub(point, &self.origin);
        let x = solve_in_rows(&self.basis, &rel)?;
        let mut out = Vec::with_capacity(x.len());
        for c in x {
            if !c.is_integer() {
                return None;
            }
            out.push(c.to_integer());
        }
        Some(out)
    }
}

impl LatticePolytope {
    /// Convex hull of an integer point set: duplicates and non-vertex points
    /// are dropped, vertices are stored in lexicographic order.
    pub fn new(
        ambient_dim: usize,
        points: impl IntoIterator<Item = Vec<Int>>,
    ) -> Result<Self, GeometryError> {
        let set: BTreeSet<Vec<Int>> = points.into_iter().collect();
        if set.is_empty() {
            return Err(GeometryError::EmptyPoints);
        }
        for p in &set {
            if p.len() != ambient_dim {
                return Err(GeometryError::BadPoint {
                    expected: ambient_dim,
                    got: p.len(),
                });
            }
        }
        let pts: Vec<Vec<Int>> = set.into_iter().collect();
        let vertices = reduce_to_vertices(pts);
        Ok(LatticePolytope {
            ambient_dim,
            vertices,
        })
    }

    pub fn from_ints(ambient_dim: usize, points: &[&[i64]]) -> Result<Self, GeometryError> {
        Self::new(ambient_dim, points.iter().map(|p| linalg::vec_int(p)))
    }

    pub fn point(coords: Vec<Int>) -> Self {
        LatticePolytope {
            ambient_dim: coords.len(),
            vertices: vec![coords],
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn vertices(&self) -> &[Vec<Int>] {
        &self.vertices
    }

    pub fn affine_dim(&self) -> usize {
        let diffs: Vec<Vec<Int>> = self.vertices[1..]
            .iter()
            .map(|v| sub(v, &self.vertices[0]))
            .collect();
        rank(&diffs)
    }

    /// Saturated affine frame of the polytope: origin at the lex-least
    /// vertex, basis rows generating `(direction space) ∩ Z^n`.
    pub fn frame(&self) -> AffineLatticeFrame {
        let origin = self.vertices[0].clone();
        let diffs: Vec<Vec<Int>> = self.vertices[1..].iter().map(|v| sub(v, &origin)).collect();
        AffineLatticeFrame {
            origin,
            basis: saturated_row_basis(&diffs),
        }
    }

    /// Volume in the polytope's own affine dimension, normalized so a unit
    /// cell of the saturated direction lattice measures 1. A point has
    /// volume 1 (the empty product convention in dimension 0).
    pub fn lattice_volume(&self) -> Rat {
        let frame = self.frame();
        let m = frame.dim();
        let coords: Vec<Vec<Int>> = self
            .vertices
            .iter()
            .map(|v| frame.coords(v).expect("vertex lies in its own affine hull"))
            .collect();
        volume_of_points(coords, m)
    }

    /// Volume measured `m`-dimensionally: zero when the polytope is thinner
    /// than `m`, the normalized volume when `m` equals the affine dimension.
    pub fn volume_in_dim(&self, m: usize) -> Result<Rat, GeometryError> {
        let affine = self.affine_dim();
        if m > affine {
            return Ok(Rat::zero());
        }
        if m < affine {
            return Err(GeometryError::DimensionTooSmall {
                requested: m,
                affine,
            });
        }
        Ok(self.lattice_volume())
    }

    /// Minkowski sum: convex hull of all pairwise vertex sums.
    pub fn minkowski_sum(&self, other: &Self) -> Result<Self, GeometryError> {
        if self.ambient_dim != other.ambient_dim {
            return Err(GeometryError::DimensionMismatch {
                left: self.ambient_dim,
                right: other.ambient_dim,
            });
        }
        let sums = self
            .vertices
            .iter()
            .flat_map(|p| other.vertices.iter().map(move |q| linalg::add(p, q)));
        Self::new(self.ambient_dim, sums)
    }

    pub fn translate(&self, v: &[Int]) -> Self {
        LatticePolytope {
            ambient_dim: self.ambient_dim,
            vertices: self.vertices.iter().map(|p| linalg::add(p, v)).collect(),
        }
    }

    /// Dilate by a non-negative integer; `k = 0` collapses to the origin.
    pub fn dilate(&self, k: u64) -> Self {
        if k == 0 {
            return LatticePolytope::point(vec![Int::zero(); self.ambient_dim]);
        }
        let k = Int::from(k);
        LatticePolytope {
            ambient_dim: self.ambient_dim,
            vertices: self.vertices.iter().map(|p| linalg::scale(p, &k)).collect(),
        }
    }

    /// Exact membership test (used by oracles and tests).
    pub fn contains(&self, point: &[Int]) -> bool {
        let refs: Vec<&[Int]> = self.vertices.iter().map(|v| v.as_slice()).collect();
        lp::in_convex_hull(point, &refs)
    }
}

/// Vertex set of the convex hull of a finite integer point set.
pub fn convex_hull(
    points: impl IntoIterator<Item = Vec<Int>>,
    dim: usize,
) -> Result<LatticePolytope, GeometryError> {
    LatticePolytope::new(dim, points)
}

fn reduce_to_vertices(pts: Vec<Vec<Int>>) -> Vec<Vec<Int>> {
    if pts.len() <= 1 {
        return pts;
    }
    let mut vertices = Vec::new();
    for (i, p) in pts.iter().enumerate() {
        let others: Vec<&[Int]> = pts
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, q)| q.as_slice())
            .collect();
        if !lp::in_convex_hull(p, &others) {
            vertices.push(p.clone());
        }
    }
    vertices
}

/// `v / gcd(entries)` with the direction kept. Errors on the zero vector.
pub fn primitive_covector(v: &[Int]) -> Result<Vec<Int>, GeometryError> {
    linalg::primitive(v).ok_or(GeometryError::ZeroVector)
}

/// Normalized volume of the convex hull of `points` given in coordinates of
/// a saturated rank-`m` lattice (so the ambient is effectively `Z^m`).
/// Computed by an incremental (beneath-beyond) triangulation with exact
/// integer orientation tests; returns 0 when the points span fewer than `m`
/// dimensions.
pub(crate) fn volume_of_points(points: Vec<Vec<Int>>, m: usize) -> Rat {
    if m == 0 {
        return Rat::one();
    }
    let pts: Vec<Vec<Int>> = points
        .into_iter()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    if pts.len() < m + 1 {
        return Rat::zero();
    }

    // Greedy affinely independent seed simplex.
    let mut chosen = vec![0usize];
    let mut dirs: Vec<Vec<Int>> = Vec::new();
    for i in 1..pts.len() {
        if chosen.len() == m + 1 {
            break;
        }
        let d = sub(&pts[i], &pts[0]);
        dirs.push(d);
        if rank(&dirs) == dirs.len() {
            chosen.push(i);
        } else {
            dirs.pop();
        }
    }
    if chosen.len() < m + 1 {
        return Rat::zero();
    }

    let simplex_volume = |ids: &[usize]| -> Int {
        let base = &pts[ids[0]];
        let rows: Vec<Vec<Int>> = ids[1..].iter().map(|&i| sub(&pts[i], base)).collect();
        det(&rows).abs()
    };

    let mut simplices: Vec<Vec<usize>> = vec![chosen.clone()];
    let mut total = simplex_volume(&chosen);

    let in_seed: BTreeSet<usize> = chosen.iter().copied().collect();
    for p in 0..pts.len() {
        if in_seed.contains(&p) {
            continue;
        }
        // Boundary facets: (m-1)-faces owned by exactly one simplex.
        let mut facet_owner: BTreeMap<Vec<usize>, Option<(usize, usize)>> = BTreeMap::new();
        for (sid, simplex) in simplices.iter().enumerate() {
            for drop in 0..simplex.len() {
                let mut facet: Vec<usize> = simplex
                    .iter()
                    .enumerate()
                    .filter(|&(k, _)| k != drop)
                    .map(|(_, &v)| v)
                    .collect();
                facet.sort_unstable();
                facet_owner
                    .entry(facet)
                    .and_modify(|e| *e = None)
                    .or_insert(Some((sid, simplex[drop])));
            }
        }
        let mut added = Vec::new();
        for (facet, owner) in &facet_owner {
            let Some((_sid, opposite)) = owner else {
                continue;
            };
            let base = &pts[facet[0]];
            let mut rows: Vec<Vec<Int>> = facet[1..].iter().map(|&i| sub(&pts[i], base)).collect();
            rows.push(sub(&pts[p], base));
            let d_p = det(&rows);
            if d_p.is_zero() {
                continue;
            }
            *rows.last_mut().unwrap() = sub(&pts[*opposite], base);
            let d_o = det(&rows);
            debug_assert!(!d_o.is_zero());
            if d_p.sign() != d_o.sign() {
                let mut simplex = facet.clone();
                simplex.push(p);
                total += d_p.abs();
                added.push(simplex);
            }
        }
        simplices.extend(added);
    }
    Rat::new(total, factorial(m))
}

/// Translate every body so its lex-least vertex sits at the origin, and set
/// up the common saturated direction lattice of the Minkowski sum of all
/// bodies. Returns the bodies' points in lattice coordinates, or the joint
/// rank when it differs from `m`.
fn common_frame_coords(
    bodies: &[&LatticePolytope],
    m: usize,
) -> Result<Option<Vec<Vec<Vec<Int>>>>, GeometryError> {
    let translated: Vec<Vec<Vec<Int>>> = bodies
        .iter()
        .map(|b| {
            let base = &b.vertices()[0];
            b.vertices().iter().map(|v| sub(v, base)).collect()
        })
        .collect();
    let all_dirs: Vec<Vec<Int>> = translated.iter().flatten().cloned().collect();
    let basis = saturated_row_basis(&all_dirs);
    if basis.len() > m {
        return Err(GeometryError::TooManyDimensions {
            spanned: basis.len(),
            requested: m,
        });
    }
    if basis.len() < m {
        return Ok(None);
    }
    let coords = translated
        .iter()
        .map(|body| {
            body.iter()
                .map(|p| {
                    let x = solve_in_rows(&basis, p).expect("direction lies in its own span");
                    x.into_iter()
                        .map(|c| {
                            debug_assert!(c.is_integer());
                            c.to_integer()
                        })
                        .collect()
                })
                .collect()
        })
        .collect();
    Ok(Some(coords))
}

fn minkowski_points(bodies: &[&[Vec<Int>]]) -> Vec<Vec<Int>> {
    let dim = bodies[0][0].len();
    let mut acc: Vec<Vec<Int>> = vec![vec![Int::zero(); dim]];
    for body in bodies {
        let mut next = BTreeSet::new();
        for a in &acc {
            for b in *body {
                next.insert(linalg::add(a, b));
            }
        }
        acc = next.into_iter().collect();
    }
    acc
}

fn dilate_points(points: &[Vec<Int>], k: u64) -> Vec<Vec<Int>> {
    if k == 0 {
        return vec![vec![Int::zero(); points[0].len()]];
    }
    let k = Int::from(k);
    points.iter().map(|p| linalg::scale(p, &k)).collect()
}

/// All two-body mixed volumes `V(A^s, B^(m-s))` for `s = 0..=m` at once,
/// from the volumes of `λA + B` at `λ = 0..=m`: that volume is a degree-`m`
/// polynomial in `λ` whose `λ^s` coefficient is `C(m,s) V(A^s, B^(m-s))`.
pub(crate) fn mixed_volume_pattern(
    a: &LatticePolytope,
    b: &LatticePolytope,
    m: usize,
) -> Result<Vec<Rat>, GeometryError> {
    if m == 0 {
        return Ok(vec![Rat::one()]);
    }
    let Some(coords) = common_frame_coords(&[a, b], m)? else {
        return Ok(vec![Rat::zero(); m + 1]);
    };
    let samples: Vec<Rat> = (0..=m as u64)
        .map(|lambda| {
            let scaled = dilate_points(&coords[0], lambda);
            let pts = minkowski_points(&[&scaled, &coords[1]]);
            volume_of_points(pts, m)
        })
        .collect();
    let coeffs = interpolate_polynomial(&samples);
    Ok((0..=m)
        .map(|s| &coeffs[s] / Rat::from(binomial(m, s)))
        .collect())
}

/// Coefficients of the degree-`n` polynomial through `(i, samples[i])`.
fn interpolate_polynomial(samples: &[Rat]) -> Vec<Rat> {
    let n = samples.len();
    let a: Vec<Vec<Rat>> = (0..n)
        .map(|i| {
            let x = Rat::from(Int::from(i as u64));
            let mut pow = Rat::one();
            (0..n)
                .map(|_| {
                    let v = pow.clone();
                    pow = &pow * &x;
                    v
                })
                .collect()
        })
        .collect();
    linalg::solve_exact(&a, samples).expect("Vandermonde system is regular")
}

/// Minkowski mixed volume of `bodies.len()` polytopes, normalized to the
/// saturated direction lattice of their Minkowski sum. Symmetric and
/// multilinear; with all bodies equal it reduces to the lattice volume.
pub fn mixed_volume(bodies: &[&LatticePolytope]) -> Result<Rat, GeometryError> {
    let m = bodies.len();
    if m == 0 {
        return Ok(Rat::one());
    }
    check_same_ambient(bodies)?;

    // Group equal bodies after translation normalization.
    let normalized: Vec<Vec<Vec<Int>>> = bodies
        .iter()
        .map(|b| {
            let base = &b.vertices()[0];
            b.vertices().iter().map(|v| sub(v, base)).collect()
        })
        .collect();
    let mut groups: Vec<(Vec<Vec<Int>>, usize, usize)> = Vec::new();
    for (i, nb) in normalized.iter().enumerate() {
        match groups.iter_mut().find(|(g, _, _)| g == nb) {
            Some((_, _, count)) => *count += 1,
            None => groups.push((nb.clone(), i, 1)),
        }
    }

    match groups.len() {
        1 => {
            let spanned = bodies[0].affine_dim();
            if spanned > m {
                Err(GeometryError::TooManyDimensions {
                    spanned,
                    requested: m,
                })
            } else if spanned < m {
                Ok(Rat::zero())
            } else {
                Ok(bodies[0].lattice_volume())
            }
        }
        2 => {
            let a = bodies[groups[0].1];
            let b = bodies[groups[1].1];
            let pattern = mixed_volume_pattern(a, b, m)?;
            Ok(pattern[groups[0].2].clone())
        }
        _ => mixed_volume_grid(bodies, &groups, m),
    }
}

/// General case with three or more distinct bodies: interpolate the
/// homogeneous degree-`m` volume polynomial of `sum λ_i D_i` on the grid
/// `{β >= 0 : |β| = m}` (a unisolvent set) and read off the multilinear
/// coefficient.
fn mixed_volume_grid(
    bodies: &[&LatticePolytope],
    groups: &[(Vec<Vec<Int>>, usize, usize)],
    m: usize,
) -> Result<Rat, GeometryError> {
    let reps: Vec<&LatticePolytope> = groups.iter().map(|&(_, i, _)| bodies[i]).collect();
    let Some(coords) = common_frame_coords(&reps, m)? else {
        return Ok(Rat::zero());
    };
    let d = groups.len();
    let exponents = compositions(m, d);
    let mut matrix = Vec::with_capacity(exponents.len());
    let mut rhs = Vec::with_capacity(exponents.len());
    let m_fact = factorial(m);
    for beta in &exponents {
        let parts: Vec<Vec<Vec<Int>>> = (0..d)
            .map(|i| dilate_points(&coords[i], beta[i] as u64))
            .collect();
        let part_refs: Vec<&[Vec<Int>]> = parts.iter().map(|p| p.as_slice()).collect();
        rhs.push(volume_of_points(minkowski_points(&part_refs), m));
        // Vol(sum β_i D_i) = sum_{|α|=m} m!/α! V(D^α) β^α.
        let row: Vec<Rat> = exponents
            .iter()
            .map(|alpha| {
                let mut alpha_fact = Int::one();
                let mut power = Int::one();
                for i in 0..d {
                    alpha_fact *= factorial(alpha[i]);
                    power *= Int::from(beta[i] as u64).pow(alpha[i] as u32);
                }
                Rat::new(&m_fact / alpha_fact * power, Int::one())
            })
            .collect();
        matrix.push(row);
    }
    let solution =
        linalg::solve_exact(&matrix, &rhs).expect("simplex-grid interpolation is unisolvent");
    let target: Vec<usize> = groups.iter().map(|&(_, _, count)| count).collect();
    let idx = exponents
        .iter()
        .position(|alpha| alpha == &target)
        .expect("multiplicity vector lies on the grid");
    Ok(solution[idx].clone())
}

fn compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    fn go(total: usize, parts: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if parts == 1 {
            let mut v = prefix.clone();
            v.push(total);
            out.push(v);
            return;
        }
        for first in 0..=total {
            prefix.push(first);
            go(total - first, parts - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(total, parts, &mut Vec::new(), &mut out);
    out
}

/// Inclusion-exclusion evaluation of the same mixed volume:
/// `m! V(K_1..K_m) = sum over non-empty S of (-1)^(m-|S|) Vol(sum_{i in S} K_i)`.
pub fn mixed_volume_oracle(bodies: &[&LatticePolytope]) -> Result<Rat, GeometryError> {
    let m = bodies.len();
    if m == 0 {
        return Ok(Rat::one());
    }
    check_same_ambient(bodies)?;
    let Some(coords) = common_frame_coords(bodies, m)? else {
        return Ok(Rat::zero());
    };
    let mut acc = Rat::zero();
    for mask in 1u32..(1 << m) {
        let subset: Vec<&[Vec<Int>]> = (0..m)
            .filter(|i| mask & (1 << i) != 0)
            .map(|i| coords[i].as_slice())
            .collect();
        let vol = volume_of_points(minkowski_points(&subset), m);
        if (m - subset.len()) % 2 == 0 {
            acc += vol;
        } else {
            acc -= vol;
        }
    }
    Ok(acc / Rat::from(factorial(m)))
}

fn check_same_ambient(bodies: &[&LatticePolytope]) -> Result<(), GeometryError> {
    let d0 = bodies[0].ambient_dim();
    for b in bodies.iter().skip(1) {
        if b.ambient_dim() != d0 {
            return Err(GeometryError::DimensionMismatch {
                left: d0,
                right: b.ambient_dim(),
            });
        }
    }
    Ok(())
}
