#![allow(dead_code)]

use std::collections::BTreeSet;

use lhc::{ConstraintArray, Hypercuboid, SymbolSet};
use num_rational::Ratio;
use rand::{Rng, SeedableRng};
use rand_xoshiro::SplitMix64;

/// Direct evaluation of the delta-regularity definition: every pair of
/// depth-line coordinates differing in exactly one place, sets as `BTreeSet`s.
pub fn brute_delta(h: &Hypercuboid) -> Ratio<i64> {
    let (d, n, k) = (h.d(), h.n(), h.k());
    let base: Vec<Vec<usize>> = (0..n.pow((d - 1) as u32))
        .map(|mut i| {
            let mut c = vec![0; d - 1];
            for a in (0..d - 1).rev() {
                c[a] = i % n;
                i /= n;
            }
            c
        })
        .collect();
    let unused: Vec<BTreeSet<usize>> = base
        .iter()
        .map(|x| {
            let used: BTreeSet<usize> = (0..k)
                .map(|j| {
                    let mut c = x.clone();
                    c.push(j);
                    h.get(&c).unwrap() as usize
                })
                .collect();
            (0..n).filter(|s| !used.contains(s)).collect()
        })
        .collect();
    let scale = Ratio::new(n as i64, ((n - k) * (n - k)) as i64);
    let mut best = Ratio::from_integer(0);
    for i in 0..base.len() {
        for j in 0..base.len() {
            let diff = base[i].iter().zip(&base[j]).filter(|(a, b)| a != b).count();
            if diff != 1 {
                continue;
            }
            let inter = unused[i].intersection(&unused[j]).count() as i64;
            let v = scale * inter - Ratio::from_integer(1);
            let v = if v < Ratio::from_integer(0) { -v } else { v };
            if v > best {
                best = v;
            }
        }
    }
    best
}

/// Random `d = 2` constraint array; each symbol kept with probability `p`.
pub fn random_constraints(n: usize, p: f64, seed: u64) -> ConstraintArray {
    let mut rng = SplitMix64::seed_from_u64(seed);
    let cells = (0..n * n)
        .map(|_| (0..n).filter(|_| rng.gen_bool(p)).collect::<SymbolSet>())
        .collect();
    ConstraintArray::new(2, n, cells).unwrap()
}

/// Row-major Latin square as a 2-dimensional layer.
pub fn square_layer(h: &Hypercuboid) -> lhc::Layer {
    lhc::Layer::new(2, h.n(), h.cells().to_vec()).unwrap()
}

/// Does any Latin square in `squares` fit inside `c` cellwise?
pub fn any_square_fits(squares: &[Vec<u8>], c: &ConstraintArray) -> bool {
    squares
        .iter()
        .any(|sq| sq.iter().zip(c.cells()).all(|(&s, set)| set.contains(s as usize)))
}
