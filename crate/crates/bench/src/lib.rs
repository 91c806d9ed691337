//! Fixed inputs shared by the solver benchmarks in `benches/`.

use lhc::construct::{cyclic_hypercube, nonlayerable_array, pebody_array, prefix, unused_array};
use lhc::sample::{random_hypercuboid, Seed};
use lhc::{Budget, ConstraintArray, Hypercuboid, SetArray};

/// `U_H` of the depth-`k` prefix of the cyclic cube of order `n`.
pub fn cyclic_residual(n: usize, k: usize) -> SetArray {
    unused_array(&prefix(&cyclic_hypercube(3, n).expect("cyclic cube"), k).expect("prefix"))
}

/// A seeded random cuboid of dimension 3.
pub fn random_cuboid(n: usize, k: usize, seed: u64) -> Hypercuboid {
    random_hypercuboid(3, n, k, Seed(seed), Budget::UNLIMITED)
        .expect("valid shape")
        .into_witness()
        .expect("unlimited growth succeeds")
}

pub fn nonlayerable(n: usize) -> SetArray {
    nonlayerable_array(n).expect("odd order >= 5")
}

pub fn unavoidable(a: usize, b: usize, c: usize) -> ConstraintArray {
    pebody_array(a, b, c).expect("not all equal")
}
