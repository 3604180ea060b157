//! Arithmetic of factored products `prod_m (1 - t^m)^{e_m}`.
//!
//! Every pipeline in this crate emits its zeta-function in this factored
//! form, with integer multiplicities of either sign. The representation is
//! canonical (zero multiplicities are never stored), so equality of values
//! is equality of maps. Series expansion is derived from the factors and is
//! never the source of truth.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::linalg::Int;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ZetaError {
    #[error("cyclotomic factor order must be at least 1")]
    ZeroOrder,
    #[error("factor order {0} does not fit the machine representation")]
    OrderOverflow(Int),
    #[error("multiplicity {0} does not fit the machine representation")]
    MultiplicityOverflow(Int),
}

/// A finite product `prod (1 - t^m)^{e_m}` with `m >= 1` and `e_m != 0`.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(try_from = "ZetaJson", into = "ZetaJson")]
pub struct ZetaFactorization {
    factors: BTreeMap<u64, i64>,
}

impl ZetaFactorization {
    /// The constant 1 (the empty product).
    pub fn one() -> Self {
        ZetaFactorization::default()
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    /// The single factor `(1 - t^m)^e`; `e = 0` gives 1.
    pub fn cyclotomic_factor(m: u64, e: i64) -> Result<Self, ZetaError> {
        if m == 0 {
            return Err(ZetaError::ZeroOrder);
        }
        let mut factors = BTreeMap::new();
        if e != 0 {
            factors.insert(m, e);
        }
        Ok(ZetaFactorization { factors })
    }

    /// Same, with arbitrary-precision inputs from the geometry layer.
    /// Orders or multiplicities beyond the machine range are reported, not
    /// silently wrapped.
    pub fn cyclotomic_factor_big(m: &Int, e: &Int) -> Result<Self, ZetaError> {
        let m_small: u64 = m
            .try_into()
            .map_err(|_| ZetaError::OrderOverflow(m.clone()))?;
        let e_small: i64 = e
            .try_into()
            .map_err(|_| ZetaError::MultiplicityOverflow(e.clone()))?;
        Self::cyclotomic_factor(m_small, e_small)
    }

    /// Product: multiplicities add, canonical form restored.
    pub fn mul(&self, other: &Self) -> Self {
        let mut factors = self.factors.clone();
        for (&m, &e) in &other.factors {
            let entry = factors.entry(m).or_insert(0);
            *entry = entry.checked_add(e).expect("zeta multiplicity overflow");
            if *entry == 0 {
                factors.remove(&m);
            }
        }
        ZetaFactorization { factors }
    }

    /// Integer power, negative allowed.
    pub fn pow(&self, k: i64) -> Self {
        if k == 0 {
            return Self::one();
        }
        let factors = self
            .factors
            .iter()
            .map(|(&m, &e)| (m, e.checked_mul(k).expect("zeta multiplicity overflow")))
            .collect();
        ZetaFactorization { factors }
    }

    /// Ascending iteration over `(m, e)` pairs.
    pub fn factors(&self) -> impl Iterator<Item = (u64, i64)> + '_ {
        self.factors.iter().map(|(&m, &e)| (m, e))
    }

    /// Taylor coefficients at `t = 0` up to `order` inclusive. The result is
    /// integral because each `(1 - t^m)^{±1}` has an integer series.
    pub fn expand_series(&self, order: usize) -> Vec<Int> {
        let mut coeffs = vec![Int::zero(); order + 1];
        coeffs[0] = Int::one();
        for (&m, &e) in &self.factors {
            let m = m as usize;
            if m > order {
                continue;
            }
            for _ in 0..e.unsigned_abs() {
                if e > 0 {
                    // Multiply by (1 - t^m).
                    for i in (m..=order).rev() {
                        let d = coeffs[i - m].clone();
                        coeffs[i] -= d;
                    }
                } else {
                    // Multiply by the geometric series of t^m.
                    for i in m..=order {
                        let d = coeffs[i - m].clone();
                        coeffs[i] += d;
                    }
                }
            }
        }
        coeffs
    }
}

impl fmt::Display for ZetaFactorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        for (&m, &e) in &self.factors {
            if m == 1 {
                write!(f, "(1-t)")?;
            } else {
                write!(f, "(1-t^{m})")?;
            }
            if e != 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct FactorJson {
    m: u64,
    e: i64,
}

#[derive(Serialize, Deserialize)]
struct ZetaJson {
    factors: Vec<FactorJson>,
}

impl From<ZetaFactorization> for ZetaJson {
    fn from(z: ZetaFactorization) -> Self {
        ZetaJson {
            factors: z
                .factors
                .into_iter()
                .map(|(m, e)| FactorJson { m, e })
                .collect(),
        }
    }
}

impl TryFrom<ZetaJson> for ZetaFactorization {
    type Error = String;

    fn try_from(j: ZetaJson) -> Result<Self, String> {
        let mut factors = BTreeMap::new();
        for f in j.factors {
            if f.m == 0 {
                return Err("factor order `m` must be at least 1".into());
            }
            let entry = factors.entry(f.m).or_insert(0i64);
            *entry = entry
                .checked_add(f.e)
                .ok_or_else(|| "factor multiplicity overflow".to_string())?;
            if *entry == 0 {
                factors.remove(&f.m);
            }
        }
        Ok(ZetaFactorization { factors })
    }
}
