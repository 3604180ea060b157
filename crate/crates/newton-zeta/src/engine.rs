//! The zeta-function pipelines.
//!
//! Four routes produce a [`ZetaPair`]:
//!
//! - [`zeta_newton_pair`]: from a pair of Newton diagrams, through the
//!   essential covectors of every coordinate subset and the alternating
//!   product over subset sizes;
//! - [`zeta_power_denominator`]: the reduced evaluation for germs `P/z0^d`,
//!   walking the compact facets of the restricted diagrams that contain the
//!   distinguished axis;
//! - [`zeta_acampo`]: from resolution strata `(k, l, χ)`;
//! - [`zeta_partial_resolution`]: from local zeta data on a prestratification.
//!
//! Every multiplicity assembled anywhere is checked to be a non-negative
//! integer before it is used; a failure aborts the pipeline loudly instead
//! of rounding.

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::linalg::{dot, factorial, Int, Rat};
use crate::newton::{
    positive_facet_normals, CoordinateSubset, EssentialCovector, NewtonDiagram, NewtonPair,
};
use crate::polytope::{GeometryError, LatticePolytope};
use crate::zeta::{ZetaError, ZetaFactorization};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EngineError {
    #[error(
        "non-integral exponent {value} for covector {covector:?}: (l-1)! V_a must be an integer"
    )]
    NonIntegralExponent { covector: Vec<Int>, value: Rat },
    #[error("negative exponent {value} for covector {covector:?}")]
    NegativeExponent { covector: Vec<Int>, value: Rat },
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error(transparent)]
    Zeta(#[from] ZetaError),
    #[error("power-denominator routes disagree: direct {direct}, newton-pair {newton}")]
    RouteMismatch { direct: String, newton: String },
}

/// Which critical value the monodromy loops around.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Zero,
    Infinity,
}

/// The zeta-functions of the 0- and infinity-monodromy, factored.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZetaPair {
    pub zeta0: ZetaFactorization,
    #[serde(rename = "zetaInf")]
    pub zeta_inf: ZetaFactorization,
}

impl ZetaPair {
    pub fn trivial() -> Self {
        ZetaPair {
            zeta0: ZetaFactorization::one(),
            zeta_inf: ZetaFactorization::one(),
        }
    }

    pub fn get(&self, side: Side) -> &ZetaFactorization {
        match side {
            Side::Zero => &self.zeta0,
            Side::Infinity => &self.zeta_inf,
        }
    }

    /// Exchange the two sides (the zeta-functions of `1/f`).
    pub fn swapped(&self) -> ZetaPair {
        ZetaPair {
            zeta0: self.zeta_inf.clone(),
            zeta_inf: self.zeta0.clone(),
        }
    }

    fn mul(&self, other: &ZetaPair) -> ZetaPair {
        ZetaPair {
            zeta0: self.zeta0.mul(&other.zeta0),
            zeta_inf: self.zeta_inf.mul(&other.zeta_inf),
        }
    }

    fn pow(&self, k: i64) -> ZetaPair {
        ZetaPair {
            zeta0: self.zeta0.pow(k),
            zeta_inf: self.zeta_inf.pow(k),
        }
    }
}

/// A resolution stratum: the lifted numerator and denominator have local
/// multiplicities `k` and `l`, and the stratum has Euler characteristic `chi`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResolutionStratum {
    pub k: u64,
    pub l: u64,
    pub chi: i64,
}

/// A prestratification stratum carrying the local zeta-functions of the
/// lifted germ (constant along the stratum) and its Euler characteristic.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocalZetaStratum {
    pub zeta0: ZetaFactorization,
    #[serde(rename = "zetaInf")]
    pub zeta_inf: ZetaFactorization,
    pub chi: i64,
}

/// Wire format for stratum input files (both stratum routes).
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct StrataFile<T> {
    pub strata: Vec<T>,
}

/// Per-subset audit data from the Newton-pair pipeline.
#[derive(Debug, Clone)]
pub struct SubsetReport {
    pub subset: CoordinateSubset,
    /// False when a restriction was absent and the subset contributed 1.
    pub present: bool,
    pub covectors: Vec<EssentialCovector>,
}

/// Per-subset audit data from the power-denominator pipeline.
#[derive(Debug, Clone)]
pub struct FaceReport {
    pub subset: CoordinateSubset,
    pub present: bool,
    pub faces: Vec<FaceRow>,
}

/// One compact face in a power-denominator table.
#[derive(Debug, Clone)]
pub struct FaceRow {
    /// Ambient-length primitive inner normal.
    pub covector: Vec<Int>,
    /// Value of the pairing on the face.
    pub m: Int,
    /// `d` times the covector's coordinate on the distinguished axis.
    pub d_a0: Int,
    pub face: LatticePolytope,
    /// The zeta multiplicity `(l-1)! vol(face)`.
    pub weight: Int,
}

/// `(l-1)! * v` as a checked non-negative integer — the integrality gate
/// every assembled multiplicity passes through.
pub fn integral_weight(covector: &[Int], l: usize, v: &Rat) -> Result<Int, EngineError> {
    let w = Rat::from(factorial(l - 1)) * v;
    if !w.is_integer() {
        return Err(EngineError::NonIntegralExponent {
            covector: covector.to_vec(),
            value: w,
        });
    }
    if w.is_negative() {
        return Err(EngineError::NegativeExponent {
            covector: covector.to_vec(),
            value: w,
        });
    }
    Ok(w.to_integer())
}

fn subset_pair(
    pair: &NewtonPair,
    subset: &CoordinateSubset,
) -> Result<(ZetaPair, SubsetReport), EngineError> {
    let l = subset.len();
    let present =
        pair.gamma1().restrict(subset).is_some() && pair.gamma2().restrict(subset).is_some();
    if !present {
        // Subsets meeting at most one diagram contribute the trivial factor.
        return Ok((
            ZetaPair::trivial(),
            SubsetReport {
                subset: subset.clone(),
                present: false,
                covectors: Vec::new(),
            },
        ));
    }
    let covectors = crate::newton::essential_covectors(pair, subset)?;
    let mut zeta0 = ZetaFactorization::one();
    let mut zeta_inf = ZetaFactorization::one();
    for c in &covectors {
        let weight = integral_weight(&c.covector, l, &c.v_a)?;
        let diff = &c.m1 - &c.m2;
        if diff.is_zero() {
            continue; // contributes to neither side
        }
        let factor = ZetaFactorization::cyclotomic_factor_big(&diff.abs(), &weight)?;
        if diff.is_positive() {
            zeta0 = zeta0.mul(&factor);
        } else {
            zeta_inf = zeta_inf.mul(&factor);
        }
    }
    Ok((
        ZetaPair { zeta0, zeta_inf },
        SubsetReport {
            subset: subset.clone(),
            present: true,
            covectors,
        },
    ))
}

/// `ζ_I` for one coordinate subset and one side.
pub fn zeta_subset(
    pair: &NewtonPair,
    subset: &CoordinateSubset,
    side: Side,
) -> Result<ZetaFactorization, EngineError> {
    let (pair_value, _) = subset_pair(pair, subset)?;
    Ok(pair_value.get(side).clone())
}

/// `ζ_l = prod over subsets of size l of ζ_I`.
pub fn zeta_level(
    pair: &NewtonPair,
    l: usize,
    side: Side,
) -> Result<ZetaFactorization, EngineError> {
    let mut acc = ZetaFactorization::one();
    for subset in CoordinateSubset::all_of_size(pair.ambient_dim(), l) {
        acc = acc.mul(&zeta_subset(pair, &subset, side)?);
    }
    Ok(acc)
}

/// The Newton-pair zeta-functions: alternating product of the level
/// products, `ζ = prod_l (ζ_l)^((-1)^(l-1))`, both sides at once.
pub fn zeta_newton_pair(pair: &NewtonPair) -> Result<ZetaPair, EngineError> {
    Ok(newton_pair_report(pair)?.0)
}

/// Same, keeping the per-subset covector tables for audit output.
pub fn newton_pair_report(pair: &NewtonPair) -> Result<(ZetaPair, Vec<SubsetReport>), EngineError> {
    let n1 = pair.ambient_dim();
    let mut result = ZetaPair::trivial();
    let mut reports = Vec::new();
    for l in 1..=n1 {
        let mut level = ZetaPair::trivial();
        for subset in CoordinateSubset::all_of_size(n1, l) {
            let (value, report) = subset_pair(pair, &subset)?;
            level = level.mul(&value);
            reports.push(report);
        }
        let sign = if (l - 1) % 2 == 0 { 1 } else { -1 };
        result = result.mul(&level.pow(sign));
    }
    Ok((result, reports))
}

/// The reduced evaluation for `f = P / z_axis^d`.
///
/// For every subset `I` of the other coordinates, the subsets `J = I + axis`
/// are walked: each `(|J|-1)`-dimensional compact face of the restricted
/// diagram contributes `(1 - t^|m - d a0|)` with multiplicity
/// `(|J|-1)! vol(face)`, on the side given by the sign of `m - d a0`. The
/// result equals [`zeta_newton_pair`] against the one-point denominator
/// diagram `{d e_axis}`.
pub fn zeta_power_denominator(
    gamma: &NewtonDiagram,
    d: u64,
    axis: usize,
) -> Result<ZetaPair, EngineError> {
    Ok(power_denominator_report(gamma, d, axis)?.0)
}

/// Same, keeping the per-subset face tables.
pub fn power_denominator_report(
    gamma: &NewtonDiagram,
    d: u64,
    axis: usize,
) -> Result<(ZetaPair, Vec<FaceReport>), EngineError> {
    let n1 = gamma.ambient_dim();
    assert!(axis < n1, "axis index out of range");
    assert!(d >= 1, "denominator degree must be positive");
    let others: Vec<usize> = (0..n1).filter(|&i| i != axis).collect();
    let d_int = Int::from(d);

    let mut result = ZetaPair::trivial();
    let mut reports = Vec::new();
    for l in 1..=n1 {
        use itertools::Itertools;
        let mut level = ZetaPair::trivial();
        for extra in others.iter().copied().combinations(l - 1) {
            let mut indices = extra.clone();
            indices.push(axis);
            let subset = CoordinateSubset::new(n1, indices).expect("valid subset");
            let Some(restricted) = gamma.restrict(&subset) else {
                reports.push(FaceReport {
                    subset,
                    present: false,
                    faces: Vec::new(),
                });
                continue;
            };
            // Position of the distinguished axis inside the subset coords.
            let axis_slot = subset
                .indices()
                .iter()
                .position(|&i| i == axis)
                .expect("axis is a member of the subset");
            let points = restricted.support().points();
            let mut faces = Vec::new();
            for a in positive_facet_normals(points, l) {
                let m_s = points
                    .iter()
                    .map(|p| dot(&a, p))
                    .min()
                    .expect("non-empty support");
                let face_pts: Vec<Vec<Int>> = points
                    .iter()
                    .filter(|p| dot(&a, p) == m_s)
                    .cloned()
                    .collect();
                let face = LatticePolytope::new(l, face_pts)?;
                let volume = face.lattice_volume();
                let a0 = &a[axis_slot] * &d_int;
                let weight = integral_weight(&subset.embed(&a), l, &volume)?;
                let diff = &m_s - &a0;
                if !diff.is_zero() {
                    let factor = ZetaFactorization::cyclotomic_factor_big(&diff.abs(), &weight)?;
                    if diff.is_positive() {
                        level.zeta0 = level.zeta0.mul(&factor);
                    } else {
                        level.zeta_inf = level.zeta_inf.mul(&factor);
                    }
                }
                faces.push(FaceRow {
                    covector: subset.embed(&a),
                    m: m_s,
                    d_a0: a0,
                    face: embed_face(&face, &subset),
                    weight,
                });
            }
            reports.push(FaceReport {
                subset,
                present: true,
                faces,
            });
        }
        let sign = if (l - 1) % 2 == 0 { 1 } else { -1 };
        result = result.mul(&level.pow(sign));
    }
    Ok((result, reports))
}

fn embed_face(face: &LatticePolytope, subset: &CoordinateSubset) -> LatticePolytope {
    LatticePolytope::new(
        subset.ambient_dim(),
        face.vertices().iter().map(|v| subset.embed(v)),
    )
    .expect("embedding preserves vertices")
}

/// The one-point diagram `{d e_axis}` of the denominator `z_axis^d`.
pub fn power_denominator_diagram(n1: usize, d: u64, axis: usize) -> NewtonDiagram {
    let mut point = vec![Int::zero(); n1];
    point[axis] = Int::from(d);
    NewtonDiagram::new(crate::parse::GermSupport::new(n1, [point]).expect("single positive point"))
}

/// Run the reduced route and the Newton-pair route and insist they agree.
pub fn zeta_power_denominator_checked(
    gamma: &NewtonDiagram,
    d: u64,
    axis: usize,
) -> Result<ZetaPair, EngineError> {
    let direct = zeta_power_denominator(gamma, d, axis)?;
    let pair = NewtonPair::new(
        gamma.clone(),
        power_denominator_diagram(gamma.ambient_dim(), d, axis),
    )?;
    let via_pair = zeta_newton_pair(&pair)?;
    if direct != via_pair {
        return Err(EngineError::RouteMismatch {
            direct: format!("zeta0 = {}, zetaInf = {}", direct.zeta0, direct.zeta_inf),
            newton: format!(
                "zeta0 = {}, zetaInf = {}",
                via_pair.zeta0, via_pair.zeta_inf
            ),
        });
    }
    Ok(direct)
}

/// A'Campo's product over resolution strata: strata with `k > l` feed the
/// zero side as `(1 - t^(k-l))^chi`, strata with `k < l` the infinity side,
/// and `k = l` drops out.
pub fn zeta_acampo(strata: &[ResolutionStratum], side: Side) -> ZetaFactorization {
    let mut acc = ZetaFactorization::one();
    for s in strata {
        let (hi, lo) = match side {
            Side::Zero => (s.k, s.l),
            Side::Infinity => (s.l, s.k),
        };
        if hi > lo {
            let factor = ZetaFactorization::cyclotomic_factor(hi - lo, s.chi)
                .expect("k != l implies a positive order");
            acc = acc.mul(&factor);
        }
    }
    acc
}

pub fn zeta_acampo_pair(strata: &[ResolutionStratum]) -> ZetaPair {
    ZetaPair {
        zeta0: zeta_acampo(strata, Side::Zero),
        zeta_inf: zeta_acampo(strata, Side::Infinity),
    }
}

/// The partial-resolution product: each stratum contributes its local
/// zeta-function raised to its Euler characteristic.
pub fn zeta_partial_resolution(strata: &[LocalZetaStratum]) -> ZetaPair {
    let mut acc = ZetaPair::trivial();
    for s in strata {
        acc.zeta0 = acc.zeta0.mul(&s.zeta0.pow(s.chi));
        acc.zeta_inf = acc.zeta_inf.mul(&s.zeta_inf.pow(s.chi));
    }
    acc
}
