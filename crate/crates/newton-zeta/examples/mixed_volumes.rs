//! Tour of the exact lattice geometry underneath the zeta formulas:
//! convex hulls, saturated affine frames, normalized volumes, Minkowski
//! sums, and mixed volumes with their inclusion-exclusion oracle.
//!
//! Run with: cargo run --example mixed_volumes

use newton_zeta::linalg::vec_int;
use newton_zeta::{mixed_volume, mixed_volume_oracle, primitive_covector, LatticePolytope};

fn main() {
    // Hulls drop duplicate and non-vertex points.
    let square =
        LatticePolytope::from_ints(2, &[&[0, 0], &[1, 0], &[0, 1], &[1, 1], &[1, 0]]).unwrap();
    println!("unit square has {} vertices", square.vertices().len());

    // Volumes are normalized to the saturated lattice of the affine hull:
    // the segment (0,0)-(2,2) has two lattice steps, not euclidean 2*sqrt(2).
    let diag = LatticePolytope::from_ints(2, &[&[0, 0], &[2, 2]]).unwrap();
    let frame = diag.frame();
    println!(
        "segment (0,0)-(2,2): saturated basis {:?}, lattice length {}",
        frame.basis,
        diag.lattice_volume()
    );

    // The face of a dilated simplex measured two-dimensionally.
    let face = LatticePolytope::from_ints(3, &[&[4, 0, 0], &[0, 4, 0], &[0, 0, 4]]).unwrap();
    println!(
        "triangle with vertices 4e_i: normalized area {}",
        face.volume_in_dim(2).unwrap()
    );

    // Minkowski sums and mixed volumes.
    let ex = LatticePolytope::from_ints(2, &[&[0, 0], &[1, 0]]).unwrap();
    let ey = LatticePolytope::from_ints(2, &[&[0, 0], &[0, 1]]).unwrap();
    let sum = ex.minkowski_sum(&ey).unwrap();
    println!("e_x + e_y = square with {} vertices", sum.vertices().len());

    let v = mixed_volume(&[&ex, &ey]).unwrap();
    let oracle = mixed_volume_oracle(&[&ex, &ey]).unwrap();
    println!("V(e_x, e_y) = {v} (oracle: {oracle})");

    // Mixed volumes vanish whenever one body is a point.
    let pt = LatticePolytope::from_ints(2, &[&[5, 7]]).unwrap();
    println!(
        "V(point, square) = {}",
        mixed_volume(&[&pt, &square]).unwrap()
    );

    // Primitive covectors: directions divided by the gcd of the entries.
    println!(
        "primitive of (2,4) = {:?}",
        primitive_covector(&vec_int(&[2, 4])).unwrap()
    );
}
