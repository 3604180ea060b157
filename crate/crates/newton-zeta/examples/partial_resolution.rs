//! Zeta-functions through a partial resolution: a modification that is an
//! isomorphism off {P = 0} ∪ {Q = 0} but need not resolve anything. Each
//! stratum of a prestratification of the exceptional set contributes its
//! local zeta-function raised to its Euler characteristic.
//!
//! The data below comes from blowing up the origin for
//! f = (xyz + x^7 + y^6 + z^5)/(x^4 + y^4 + z^4): the exceptional plane
//! carries three special corner points (local zeta (1-t^{p-d}) etc.), 3d
//! intersection points and four curve strata with trivial local zeta, and
//! the big open 2-stratum whose infinity-side zeta is (1 - t^{d-3}). The
//! product reproduces the Newton-diagram route exactly.
//!
//! Run with: cargo run --example partial_resolution

use newton_zeta::{
    parse_polynomial, zeta_newton_pair, zeta_partial_resolution, LocalZetaStratum, NewtonPair,
    StrataFile, VariableMap,
};

fn main() {
    let fixture = include_str!("../tests/fixtures/partial_t7654.json");
    let file: StrataFile<LocalZetaStratum> = serde_json::from_str(fixture).unwrap();
    println!("{} strata; non-trivial ones:", file.strata.len());
    for s in &file.strata {
        if !s.zeta0.is_one() || !s.zeta_inf.is_one() {
            println!(
                "  chi = {:>3}: zeta0 = {}, zetaInf = {}",
                s.chi, s.zeta0, s.zeta_inf
            );
        }
    }

    let via_strata = zeta_partial_resolution(&file.strata);
    println!();
    println!("zeta0   = {}", via_strata.zeta0);
    println!("zetaInf = {}", via_strata.zeta_inf);

    // Cross-check against the Newton-pair route for the same germ.
    let vars = VariableMap::new(["x", "y", "z"]).unwrap();
    let p = parse_polynomial("x*y*z + x^7 + y^6 + z^5", &vars).unwrap();
    let q = parse_polynomial("x^4 + y^4 + z^4", &vars).unwrap();
    let via_newton = zeta_newton_pair(&NewtonPair::from_supports(p, q).unwrap()).unwrap();
    assert_eq!(via_strata, via_newton);
    println!();
    println!("matches the Newton-diagram route for (xyz + x^7 + y^6 + z^5)/(x^4 + y^4 + z^4)");
}
