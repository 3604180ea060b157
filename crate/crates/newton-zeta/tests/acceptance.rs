//! End-to-end acceptance suite. One test per criterion; each prints a
//! `criterion N (...): pass` line on success. All comparisons are exact
//! factored equality — no tolerances, no floating point.

mod common;

use std::time::Instant;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use newton_zeta::engine::{
    integral_weight, newton_pair_report, power_denominator_diagram, zeta_level, zeta_newton_pair,
    zeta_partial_resolution, zeta_power_denominator, Side,
};
use newton_zeta::newton::{essential_covectors, CoordinateSubset};
use newton_zeta::polytope::{mixed_volume, mixed_volume_oracle};
use newton_zeta::{
    parse_polynomial, LocalZetaStratum, NewtonDiagram, NewtonPair, StrataFile, VariableMap,
    ZetaFactorization,
};

fn zf(pairs: &[(u64, i64)]) -> ZetaFactorization {
    pairs.iter().fold(ZetaFactorization::one(), |acc, &(m, e)| {
        acc.mul(&ZetaFactorization::cyclotomic_factor(m, e).unwrap())
    })
}

fn example_1_pair() -> NewtonPair {
    let vars = VariableMap::new(["x", "y"]).unwrap();
    let p = parse_polynomial("x^3 - x*y", &vars).unwrap();
    let q = parse_polynomial("y", &vars).unwrap();
    NewtonPair::from_supports(p, q).unwrap()
}

fn example_2_pair() -> NewtonPair {
    let vars = VariableMap::new(["x", "y", "z"]).unwrap();
    let p = parse_polynomial("x*y*z + x^7 + y^6 + z^5", &vars).unwrap();
    let q = parse_polynomial("x^4 + y^4 + z^4", &vars).unwrap();
    NewtonPair::from_supports(p, q).unwrap()
}

/// The criterion-4 corpus: seeded random diagrams with ambient dim <= 4,
/// <= 10 support points, exponents <= 12, and degrees d <= 6.
fn route_corpus() -> Vec<(NewtonDiagram, u64)> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x4e5a_0001);
    (0..100)
        .map(|_| {
            let dim = rng.gen_range(1..=4);
            let gamma = common::random_diagram(&mut rng, dim, 10, 12);
            let d = rng.gen_range(1..=6);
            (gamma, d)
        })
        .collect()
}

#[test]
fn criterion_1_example_1_golden() {
    let start = Instant::now();
    let result = zeta_newton_pair(&example_1_pair()).unwrap();
    assert_eq!(result.zeta0, zf(&[(1, -1)]), "zeta0 must be (1-t)^-1");
    assert!(result.zeta_inf.is_one(), "zetaInf must be 1");
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 1.0, "took {elapsed:?}, budget 1 s");
    println!("criterion 1 (example 1 golden): pass");
}

#[test]
fn criterion_2_example_2_golden_with_intermediates() {
    let start = Instant::now();
    let pair = example_2_pair();
    let level1 = zeta_level(&pair, 1, Side::Zero).unwrap();
    assert_eq!(level1, zf(&[(3, 1), (2, 1), (1, 1)]));
    let level2 = zeta_level(&pair, 2, Side::Zero).unwrap();
    assert_eq!(
        level2,
        zf(&[(10, 1), (15, 1), (18, 1), (1, 8), (2, 4)]),
        "level-2 zero-side product"
    );
    let level3 = zeta_level(&pair, 3, Side::Zero).unwrap();
    assert_eq!(level3, level2, "levels 2 and 3 display the same product");
    let result = zeta_newton_pair(&pair).unwrap();
    assert_eq!(result.zeta0, zf(&[(3, 1), (2, 1), (1, 1)]));
    assert_eq!(result.zeta_inf, zf(&[(1, 16)]));
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 5.0, "took {elapsed:?}, budget 5 s");
    println!("criterion 2 (example 2 golden at (7,6,5,4)): pass");
}

#[test]
fn criterion_3_partial_resolution_matches_newton_route() {
    let fixture = concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/tests/fixtures/partial_t7654.json"
    );
    let text = std::fs::read_to_string(fixture).unwrap();
    let file: StrataFile<LocalZetaStratum> = serde_json::from_str(&text).unwrap();
    assert_eq!(file.strata.len(), 20, "3 + 12 + 4 + 1 strata");
    let via_strata = zeta_partial_resolution(&file.strata);
    let via_newton = zeta_newton_pair(&example_2_pair()).unwrap();
    assert_eq!(via_strata, via_newton);
    println!("criterion 3 (partial-resolution route): pass");
}

#[test]
fn criterion_4_route_equivalence() {
    let corpus = route_corpus();
    assert!(corpus.len() >= 100);
    for (gamma, d) in &corpus {
        let direct = zeta_power_denominator(gamma, *d, 0).unwrap();
        let pair = NewtonPair::new(
            gamma.clone(),
            power_denominator_diagram(gamma.ambient_dim(), *d, 0),
        )
        .unwrap();
        let via_pair = zeta_newton_pair(&pair).unwrap();
        assert_eq!(
            direct,
            via_pair,
            "route mismatch for support {} with d = {d}",
            gamma.support()
        );
    }
    println!(
        "criterion 4 (route equivalence on {} diagrams): pass",
        corpus.len()
    );
}

#[test]
fn criterion_5_mixed_volume_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x4e5a_0002);
    let mut checked = 0;
    while checked < 200 {
        let dim = rng.gen_range(1..=3);
        let bodies: Vec<_> = (0..dim)
            .map(|_| common::random_polytope(&mut rng, dim, 6, 6))
            .collect();
        let refs: Vec<_> = bodies.iter().collect();
        let value = mixed_volume(&refs).unwrap();
        let oracle = mixed_volume_oracle(&refs).unwrap();
        assert_eq!(
            value, oracle,
            "interpolation vs inclusion-exclusion: {refs:?}"
        );

        // Symmetry: any permutation gives the same value.
        let mut shuffled = refs.clone();
        shuffled.shuffle(&mut rng);
        assert_eq!(mixed_volume(&shuffled).unwrap(), value);

        // V(D, .., D) is the lattice volume in the tuple dimension.
        let diag: Vec<_> = std::iter::repeat_n(&bodies[0], dim).collect();
        assert_eq!(
            mixed_volume(&diag).unwrap(),
            bodies[0].volume_in_dim(dim).unwrap()
        );

        // Integer-dilation linearity in the first argument.
        let k = rng.gen_range(0..=4u64);
        let dilated = bodies[0].dilate(k);
        let mut with_dilated = refs.clone();
        with_dilated[0] = &dilated;
        assert_eq!(
            mixed_volume(&with_dilated).unwrap(),
            value * newton_zeta::linalg::Rat::from(newton_zeta::linalg::Int::from(k)),
        );

        checked += 1;
    }
    println!("criterion 5 (mixed-volume oracle on {checked} tuples): pass");
}

#[test]
fn criterion_6_integrality_of_exponents() {
    let mut pairs: Vec<NewtonPair> = route_corpus()
        .into_iter()
        .map(|(gamma, d)| {
            let n1 = gamma.ambient_dim();
            NewtonPair::new(gamma, power_denominator_diagram(n1, d, 0)).unwrap()
        })
        .collect();
    // Pairs of two general diagrams exercise the mixed-volume sums in V_a
    // much harder than a one-point denominator does.
    let mut rng = ChaCha8Rng::seed_from_u64(0x4e5a_0006);
    for _ in 0..40 {
        let dim = rng.gen_range(2..=3);
        pairs.push(
            NewtonPair::new(
                common::random_diagram(&mut rng, dim, 8, 10),
                common::random_diagram(&mut rng, dim, 8, 10),
            )
            .unwrap(),
        );
    }
    let mut weights = 0usize;
    for pair in &pairs {
        let n1 = pair.ambient_dim();
        for l in 1..=n1 {
            for subset in CoordinateSubset::all_of_size(n1, l) {
                for c in essential_covectors(pair, &subset).unwrap() {
                    let w = integral_weight(&c.covector, l, &c.v_a)
                        .expect("every (l-1)! V_a must be a non-negative integer");
                    assert!(w >= newton_zeta::linalg::Int::from(0));
                    weights += 1;
                }
            }
        }
        // The assembled factorizations exist (no fractional multiplicity).
        newton_pair_report(pair).unwrap();
    }
    println!("criterion 6 (integrality of {weights} exponents): pass");
}

#[test]
fn criterion_7_swap_symmetry() {
    let corpus = route_corpus();
    for (gamma, d) in corpus.iter().take(60) {
        let pair = NewtonPair::new(
            gamma.clone(),
            power_denominator_diagram(gamma.ambient_dim(), *d, 0),
        )
        .unwrap();
        let direct = zeta_newton_pair(&pair).unwrap();
        let swapped = zeta_newton_pair(&pair.swapped()).unwrap();
        assert_eq!(swapped, direct.swapped());
    }
    // Pairs of two general diagrams as well.
    let mut rng = ChaCha8Rng::seed_from_u64(0x4e5a_0003);
    for _ in 0..40 {
        let dim = rng.gen_range(1..=3);
        let pair = NewtonPair::new(
            common::random_diagram(&mut rng, dim, 6, 9),
            common::random_diagram(&mut rng, dim, 6, 9),
        )
        .unwrap();
        let direct = zeta_newton_pair(&pair).unwrap();
        let swapped = zeta_newton_pair(&pair.swapped()).unwrap();
        assert_eq!(swapped, direct.swapped());
    }
    println!("criterion 7 (swap symmetry): pass");
}

#[test]
fn criterion_8_essential_covector_completeness() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x4e5a_0004);
    let mut instances: Vec<NewtonPair> = vec![example_1_pair()];
    // Example 2 restricted to <= 5 points per support fits the small regime.
    instances.push(example_2_pair());
    for _ in 0..48 {
        let dim = rng.gen_range(1..=3);
        instances.push(
            NewtonPair::new(
                common::random_diagram(&mut rng, dim, 5, 8),
                common::random_diagram(&mut rng, dim, 5, 8),
            )
            .unwrap(),
        );
    }
    for pair in &instances {
        let n1 = pair.ambient_dim();
        for l in 1..=n1 {
            for subset in CoordinateSubset::all_of_size(n1, l) {
                let production = essential_covectors(pair, &subset).unwrap();
                let oracle = common::brute_force_essential_covectors(pair, &subset);
                assert_eq!(
                    production.len(),
                    oracle.len(),
                    "covector count differs on {} / {} subset {:?}",
                    pair.gamma1().support(),
                    pair.gamma2().support(),
                    subset.indices()
                );
                for (p, o) in production.iter().zip(&oracle) {
                    assert_eq!(p.covector, o.covector);
                    assert_eq!(p.m1, o.m1);
                    assert_eq!(p.m2, o.m2);
                    assert_eq!(p.v_a, o.v_a);
                }
            }
        }
    }
    println!(
        "criterion 8 (essential-covector completeness on {} instances): pass",
        instances.len()
    );
}
