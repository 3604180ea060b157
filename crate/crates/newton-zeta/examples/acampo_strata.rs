//! The A'Campo-style product from resolution data.
//!
//! Given a resolution of P/Q, classify the points of the exceptional divisor
//! by the local multiplicities (k, l) of the lifted numerator and
//! denominator. Strata with k > l feed the zero side as (1 - t^(k-l))^chi,
//! strata with k < l the infinity side, and k = l drops out entirely.
//!
//! Run with: cargo run --example acampo_strata

use newton_zeta::{zeta_acampo, zeta_acampo_pair, ResolutionStratum, Side};

fn main() {
    let strata = [
        ResolutionStratum { k: 2, l: 1, chi: 3 },
        ResolutionStratum {
            k: 1,
            l: 4,
            chi: -2,
        },
        ResolutionStratum { k: 3, l: 3, chi: 7 },
    ];
    println!("strata (k, l, chi):");
    for s in &strata {
        println!("  ({}, {}, {})", s.k, s.l, s.chi);
    }

    let pair = zeta_acampo_pair(&strata);
    println!();
    println!("zeta0   = {}", pair.zeta0);
    println!("zetaInf = {}", pair.zeta_inf);

    // The k = l stratum contributes to neither side.
    let without_diagonal = [strata[0], strata[1]];
    assert_eq!(
        zeta_acampo(&without_diagonal, Side::Zero),
        zeta_acampo(&strata, Side::Zero)
    );
    assert_eq!(
        zeta_acampo(&without_diagonal, Side::Infinity),
        zeta_acampo(&strata, Side::Infinity)
    );
    println!("the (3, 3, 7) stratum drops out of both sides");
}
