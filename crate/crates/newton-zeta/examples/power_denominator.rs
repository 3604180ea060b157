//! Germs of the form P / z0^d, the shape that appears when a polynomial is
//! examined at a point of the hyperplane at infinity.
//!
//! For a one-point denominator diagram the general formula reduces to a walk
//! over the compact faces of the restricted diagrams of P that contain the
//! distinguished axis. The reduced walk and the general pipeline must agree
//! exactly; `zeta_power_denominator_checked` runs both and insists on it.
//!
//! Run with: cargo run --example power_denominator

use newton_zeta::engine::zeta_power_denominator_checked;
use newton_zeta::{parse_polynomial, NewtonDiagram, VariableMap};

fn main() {
    let vars = VariableMap::new(["x0", "x1"]).unwrap();
    let p = parse_polynomial("x0^2 + x1^3", &vars).unwrap();
    let gamma = NewtonDiagram::new(p);

    println!("P = x0^2 + x1^3, distinguished axis x0");
    println!();
    for d in [1, 2, 3, 6, 9] {
        let z = zeta_power_denominator_checked(&gamma, d, 0).unwrap();
        println!("d = {d}: zeta0 = {}, zetaInf = {}", z.zeta0, z.zeta_inf);
    }

    // The pure power P = z0^d over z0^d: every face value equals d times the
    // axis coordinate of its normal, so every factor is filtered out.
    let pure = parse_polynomial("x0^4", &vars).unwrap();
    let z = zeta_power_denominator_checked(&NewtonDiagram::new(pure), 4, 0).unwrap();
    println!();
    println!("x0^4 / x0^4: zeta0 = {}, zetaInf = {}", z.zeta0, z.zeta_inf);
}
