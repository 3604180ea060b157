//! The T_{p,q,r} numerator over a homogeneous denominator:
//!
//!   f = (xyz + x^p + y^q + z^r) / (x^d + y^d + z^d)
//!
//! at (p, q, r, d) = (7, 6, 5, 4), with p > q > r > d and p, q, r pairwise
//! prime. The run prints the level products ζ_l for both sides before the
//! alternating assembly; note that the zero-side products for l = 2 and
//! l = 3 coincide, so the final zeta0 collapses to the l = 1 product.
//!
//! Run with: cargo run --example t_singularity

use newton_zeta::engine::{zeta_level, Side};
use newton_zeta::{parse_polynomial, zeta_newton_pair, NewtonPair, VariableMap};

fn main() {
    let (p, q, r, d) = (7u32, 6u32, 5u32, 4u32);
    let vars = VariableMap::new(["x", "y", "z"]).unwrap();
    let num = format!("x*y*z + x^{p} + y^{q} + z^{r}");
    let den = format!("x^{d} + y^{d} + z^{d}");
    println!("f = ({num}) / ({den})");

    let supports = (
        parse_polynomial(&num, &vars).unwrap(),
        parse_polynomial(&den, &vars).unwrap(),
    );
    let pair = NewtonPair::from_supports(supports.0, supports.1).unwrap();

    println!();
    for l in 1..=3 {
        let zero = zeta_level(&pair, l, Side::Zero).unwrap();
        let inf = zeta_level(&pair, l, Side::Infinity).unwrap();
        println!("level {l}: zeta_l^0 = {zero}");
        println!("         zeta_l^inf = {inf}");
    }

    let result = zeta_newton_pair(&pair).unwrap();
    println!();
    println!(
        "zeta0   = {}  (the level-2 and level-3 products cancel)",
        result.zeta0
    );
    println!("zetaInf = {}  (exponent d^2 = {})", result.zeta_inf, d * d);
}
