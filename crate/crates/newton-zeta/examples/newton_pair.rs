//! End-to-end run of the Newton-pair pipeline on the germ (x^3 - xy)/y.
//!
//! The 0-Milnor fibre of this germ is a twice-punctured disk and the
//! infinity-fibre a punctured disk, with trivial monodromy actions, so the
//! zeta-functions are (1-t)^-1 and 1. The same values fall out of the
//! diagrams alone.
//!
//! Run with: cargo run --example newton_pair

use newton_zeta::{parse_polynomial, zeta_newton_pair, NewtonPair, VariableMap};

fn main() {
    let vars = VariableMap::new(["x", "y"]).unwrap();
    let p = parse_polynomial("x^3 - x*y", &vars).unwrap();
    let q = parse_polynomial("y", &vars).unwrap();
    println!("numerator support   P: {p}");
    println!("denominator support Q: {q}");

    let pair = NewtonPair::from_supports(p, q).unwrap();
    let result = zeta_newton_pair(&pair).unwrap();
    println!();
    println!("zeta0   = {}", result.zeta0);
    println!("zetaInf = {}", result.zeta_inf);

    // A factored value can always be expanded as a power series.
    let coeffs = result.zeta0.expand_series(8);
    let rendered: Vec<String> = coeffs.iter().map(|c| c.to_string()).collect();
    println!();
    println!("series of zeta0 up to t^8: [{}]", rendered.join(", "));

    // Inverting the germ exchanges the two sides.
    let inverted = zeta_newton_pair(&pair.swapped()).unwrap();
    assert_eq!(inverted, result.swapped());
    println!("swap check: zeta-functions of y/(x^3 - xy) are the pair exchanged");
}
