//! Audit walk over the essential covectors of a Newton pair: for every
//! coordinate subset I, the primitive covectors a with
//! dim(Δ(a,Γ1) + Δ(a,Γ2)) = |I| - 1, their support minima m1, m2, and the
//! multiplicity (|I|-1)! V_a they contribute. A covector lands on the zero
//! side when m1 > m2, on the infinity side when m1 < m2, and nowhere when
//! they tie.
//!
//! Run with: cargo run --example covector_tables

use newton_zeta::engine::{integral_weight, newton_pair_report};
use newton_zeta::{parse_polynomial, NewtonPair, VariableMap};

fn main() {
    let vars = VariableMap::new(["x", "y", "z"]).unwrap();
    let p = parse_polynomial("x*y*z + x^7 + y^6 + z^5", &vars).unwrap();
    let q = parse_polynomial("x^4 + y^4 + z^4", &vars).unwrap();
    let pair = NewtonPair::from_supports(p, q).unwrap();

    let (result, reports) = newton_pair_report(&pair).unwrap();
    for report in &reports {
        let names: Vec<&str> = report
            .subset
            .indices()
            .iter()
            .map(|&i| vars.names()[i].as_str())
            .collect();
        print!("I = {{{}}}: ", names.join(","));
        if !report.present {
            println!("a restriction is absent, contributes 1");
            continue;
        }
        if report.covectors.is_empty() {
            println!("no essential covectors");
            continue;
        }
        println!();
        for c in &report.covectors {
            let weight = integral_weight(&c.covector, report.subset.len(), &c.v_a).unwrap();
            let entries: Vec<String> = report
                .subset
                .indices()
                .iter()
                .map(|&i| c.covector[i].to_string())
                .collect();
            let side = match c.m1.cmp(&c.m2) {
                std::cmp::Ordering::Greater => "zero",
                std::cmp::Ordering::Less => "infinity",
                std::cmp::Ordering::Equal => "neither",
            };
            println!(
                "  a = ({})  m1 = {}  m2 = {}  weight = {}  side = {}",
                entries.join(","),
                c.m1,
                c.m2,
                weight,
                side
            );
        }
    }
    println!();
    println!("zeta0   = {}", result.zeta0);
    println!("zetaInf = {}", result.zeta_inf);
}
