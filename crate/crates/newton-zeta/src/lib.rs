//! Monodromy zeta-functions of meromorphic germs from Newton diagrams.
//!
//! A germ of a meromorphic function `f = P/Q` on `(C^{n+1}, 0)` carries
//! monodromy transformations around the critical values `0` and `infinity`,
//! and each has a zeta-function. When `(P, Q)` is non-degenerate with
//! respect to its pair of Newton diagrams, both zeta-functions are
//! determined by the diagrams alone, through an alternating product of
//! cyclotomic factors whose orders come from support minima and whose
//! multiplicities are normalized lattice mixed volumes.
//!
//! This crate evaluates those products with exact arithmetic:
//!
//! - [`parse`]: polynomial text to exponent supports ([`GermSupport`]);
//! - [`polytope`]: exact lattice geometry (hulls, saturated frames,
//!   normalized volumes, Minkowski sums, mixed volumes);
//! - [`newton`]: Newton diagrams, coordinate restrictions, and the finite
//!   sets of essential covectors;
//! - [`zeta`]: the arithmetic of factored products `prod (1 - t^m)^e`;
//! - [`engine`]: the pipelines — the Newton-pair formula, the specialized
//!   `P/z0^d` form, the A'Campo resolution formula, and the
//!   partial-resolution product.
//!
//! Non-degeneracy is an assumption of the Newton-diagram formulas, not
//! something this crate checks; results carry that caveat explicitly.
//!
//! All arithmetic is exact (`BigInt`/`BigRational`, machine integers with
//! checked conversions in the factored output); no floating point appears
//! anywhere. Every operation is a pure function of its inputs with no shared
//! state, so values can be used freely across threads, and products are
//! assembled in a deterministic order so output is bit-stable.
//!
//! ```
//! use newton_zeta::{parse_polynomial, zeta_newton_pair, NewtonPair, VariableMap};
//!
//! let vars = VariableMap::new(["x", "y"]).unwrap();
//! let p = parse_polynomial("x^3 - x*y", &vars).unwrap();
//! let q = parse_polynomial("y", &vars).unwrap();
//! let z = zeta_newton_pair(&NewtonPair::from_supports(p, q).unwrap()).unwrap();
//! assert_eq!(z.zeta0.to_string(), "(1-t)^-1");
//! assert_eq!(z.zeta_inf.to_string(), "1");
//! ```

#![forbid(unsafe_code)]

pub mod engine;
pub mod linalg;
mod lp;
pub mod newton;
pub mod parse;
pub mod polytope;
pub mod zeta;

pub use engine::{
    newton_pair_report, power_denominator_report, zeta_acampo, zeta_acampo_pair, zeta_level,
    zeta_newton_pair, zeta_partial_resolution, zeta_power_denominator,
    zeta_power_denominator_checked, zeta_subset, EngineError, FaceReport, FaceRow,
    LocalZetaStratum, ResolutionStratum, Side, StrataFile, SubsetReport, ZetaPair,
};
pub use newton::{CoordinateSubset, EssentialCovector, NewtonDiagram, NewtonPair};
pub use parse::{parse_polynomial, GermSupport, ParseError, VariableMap};
pub use polytope::{
    convex_hull, mixed_volume, mixed_volume_oracle, primitive_covector, AffineLatticeFrame,
    GeometryError, LatticePolytope,
};
pub use zeta::{ZetaError, ZetaFactorization};
