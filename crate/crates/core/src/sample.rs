//! Seeded random Latin squares, hypercuboids and realisable set arrays.
//!
//! All generators draw from SplitMix64 (`rand_xoshiro`), so a seed gives the
//! same output on every platform. Only the `d = 2` square sampler comes from a
//! walk that is connected over all Latin squares; hypercuboids with `d >= 3`
//! are grown layer by layer with randomized search and are **not** uniform.

use std::ops::ControlFlow;

use rand::{Rng, SeedableRng};
use rand_xoshiro::SplitMix64;

use crate::construct::{cyclic_hypercube, stack_unchecked, unused_array};
use crate::error::{Error, Result};
use crate::model::{Hypercuboid, PartialAssignment, SetArray, Shape};
use crate::outcome::{Budget, Meter, SolveOutcome, Verdict};
use crate::solve::{for_each_layer, Completion, ValueOrder};
use crate::validate::{validate_hypercuboid, validate_set_array};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Seed(pub u64);

impl Seed {
    pub fn rng(self) -> SplitMix64 {
        SplitMix64::seed_from_u64(self.0)
    }

    /// The `i`-th seed of a batch starting at `self`.
    pub fn offset(self, i: u64) -> Seed {
        Seed(self.0.wrapping_add(i))
    }
}

/// Proper squares visited by the walk: `2 n^3`.
pub fn walk_length(n: usize) -> usize {
    2 * n * n * n
}

/// Incidence cube of a (possibly improper) square: `cube[r][c][s]` in {-1, 0, 1}.
struct Incidence {
    n: usize,
    cube: Vec<i8>,
}

impl Incidence {
    fn at(&self, r: usize, c: usize, s: usize) -> i8 {
        self.cube[(r * self.n + c) * self.n + s]
    }

    fn add(&mut self, r: usize, c: usize, s: usize, v: i8) {
        self.cube[(r * self.n + c) * self.n + s] += v;
    }

    fn ones_in_column(&self, c: usize, s: usize) -> Vec<usize> {
        (0..self.n).filter(|&r| self.at(r, c, s) == 1).collect()
    }

    fn ones_in_row(&self, r: usize, s: usize) -> Vec<usize> {
        (0..self.n).filter(|&c| self.at(r, c, s) == 1).collect()
    }

    fn ones_in_cell(&self, r: usize, c: usize) -> Vec<usize> {
        (0..self.n).filter(|&s| self.at(r, c, s) == 1).collect()
    }

    /// The +-1 move around `(r,c,s)` and `(r2,c2,s2)`. Returns the new improper
    /// cell, if the move created one.
    fn pivot(&mut self, (r, c, s): (usize, usize, usize), (r2, c2, s2): (usize, usize, usize)) -> Option<(usize, usize, usize)> {
        self.add(r, c, s, 1);
        self.add(r, c2, s2, 1);
        self.add(r2, c, s2, 1);
        self.add(r2, c2, s, 1);
        self.add(r, c, s2, -1);
        self.add(r, c2, s, -1);
        self.add(r2, c, s, -1);
        self.add(r2, c2, s2, -1);
        (self.at(r2, c2, s2) == -1).then_some((r2, c2, s2))
    }
}

fn pick(rng: &mut SplitMix64, xs: &[usize]) -> usize {
    xs[rng.gen_range(0..xs.len() as u32) as usize]
}

/// A random order-`n` Latin square from the Jacobson-Matthews walk started at
/// the cyclic square, after [`walk_length`] proper squares.
///
/// Returned as a `d = 2` hypercuboid with rows on the first axis.
pub fn random_latin_square(n: usize, seed: Seed) -> Result<Hypercuboid> {
    let start = cyclic_hypercube(2, n)?;
    if n <= 1 {
        return Ok(start);
    }
    let mut rng = seed.rng();
    let mut inc = Incidence { n, cube: vec![0; n * n * n] };
    for (i, &s) in start.cells().iter().enumerate() {
        inc.add(i / n, i % n, s as usize, 1);
    }
    let mut improper: Option<(usize, usize, usize)> = None;
    let mut proper_visits = 0;
    let n32 = n as u32;
    while proper_visits < walk_length(n) {
        improper = match improper {
            None => {
                let (r, c, s) = loop {
                    let t = (
                        rng.gen_range(0..n32) as usize,
                        rng.gen_range(0..n32) as usize,
                        rng.gen_range(0..n32) as usize,
                    );
                    if inc.at(t.0, t.1, t.2) == 0 {
                        break t;
                    }
                };
                let r2 = inc.ones_in_column(c, s)[0];
                let c2 = inc.ones_in_row(r, s)[0];
                let s2 = inc.ones_in_cell(r, c)[0];
                inc.pivot((r, c, s), (r2, c2, s2))
            }
            Some((r, c, s)) => {
                let r2 = pick(&mut rng, &inc.ones_in_column(c, s));
                let c2 = pick(&mut rng, &inc.ones_in_row(r, s));
                let s2 = pick(&mut rng, &inc.ones_in_cell(r, c));
                inc.pivot((r, c, s), (r2, c2, s2))
            }
        };
        if improper.is_none() {
            proper_visits += 1;
        }
    }
    let cells = (0..n * n)
        .map(|i| inc.ones_in_cell(i / n, i % n)[0] as u8)
        .collect();
    let sq = Hypercuboid::new(Shape { d: 2, n, k: n }, cells)?;
    assert!(validate_hypercuboid(&sq).is_ok(), "walk left the set of Latin squares");
    Ok(sq)
}

/// A random full Latin hypercube of dimension `d >= 2`, composed from random
/// Latin squares: `C(x, z) = M[C'(x)][z]` where `C'` is one dimension lower.
///
/// Each composition step draws its square with seed offset by the step. This
/// reaches depth `n - 1` prefixes instantly where layer growth almost never does,
/// but covers only a thin family of hypercubes.
pub fn random_composed_hypercube(d: usize, n: usize, seed: Seed) -> Result<Hypercuboid> {
    if d < 2 {
        return Err(Error::Shape(format!("composition needs d >= 2, got {d}")));
    }
    let mut cube = random_latin_square(n, seed)?;
    for step in 3..=d {
        let m = random_latin_square(n, Seed(seed.0.wrapping_add((step as u64).wrapping_mul(GOLDEN))))?;
        let cells = cube
            .cells()
            .iter()
            .flat_map(|&a| (0..n).map(move |z| (a as usize, z)))
            .map(|(a, z)| m.cells()[a * n + z])
            .collect();
        cube = Hypercuboid::new(Shape { d: step, n, k: n }, cells)?;
    }
    assert!(validate_hypercuboid(&cube).is_ok());
    Ok(cube)
}

const GOLDEN: u64 = 0x9e37_79b9_7f4a_7c15;

/// Node cap of the first growth attempt; each restart doubles it.
const FIRST_RESTART_NODES: u64 = 4096;

fn grow(
    h: &Hypercuboid,
    k: usize,
    seed: u64,
    meter: &mut Meter,
    out: &mut Option<Hypercuboid>,
) -> Result<Completion> {
    if h.k() == k {
        *out = Some(h.clone());
        return Ok(Completion::Stopped);
    }
    let mut rng = SplitMix64::seed_from_u64(seed);
    let mut attempt = 0u64;
    let mut failure = None;
    let done = for_each_layer(
        &unused_array(h),
        &PartialAssignment::new(),
        meter,
        ValueOrder::Random(&mut rng),
        &mut |l, meter| {
            attempt += 1;
            let child = seed.wrapping_mul(GOLDEN).wrapping_add(attempt.wrapping_mul(GOLDEN) ^ h.k() as u64);
            match grow(&stack_unchecked(h, l), k, child, meter, out) {
                Ok(Completion::Exhausted) => ControlFlow::Continue(()),
                Ok(_) => ControlFlow::Break(()),
                Err(e) => {
                    failure = Some(e);
                    ControlFlow::Break(())
                }
            }
        },
    )?;
    if let Some(e) = failure {
        return Err(e);
    }
    Ok(match done {
        Completion::Stopped if out.is_some() => Completion::Stopped,
        Completion::Stopped => Completion::OutOfBudget,
        other => other,
    })
}

/// A random member of the depth-`k` hypercuboids of dimension `d` and order `n`,
/// grown one randomized layer at a time with backtracking over layers. A stalled
/// attempt is restarted from a derived seed with twice the node cap.
///
/// The distribution is not uniform.
pub fn random_hypercuboid(d: usize, n: usize, k: usize, seed: Seed, budget: Budget) -> Result<SolveOutcome<Hypercuboid>> {
    let empty = Hypercuboid::empty(d, n)?;
    if k > n {
        return Err(Error::Range(format!("depth {k} exceeds order {n}")));
    }
    let mut meter = Meter::new(budget);
    let mut verdict = Verdict::Unknown;
    for attempt in 0u32.. {
        let remaining = meter.remaining();
        let cap = FIRST_RESTART_NODES.saturating_mul(1 << attempt.min(40));
        let cap = remaining.max_nodes.map_or(cap, |m| m.min(cap));
        let mut run = Meter::new(Budget { max_nodes: Some(cap), max_time: remaining.max_time });
        let mut out = None;
        let start = seed.0.wrapping_add((attempt as u64).wrapping_mul(GOLDEN));
        let done = grow(&empty, k, start, &mut run, &mut out)?;
        meter.charge(run.nodes());
        match (done, out) {
            (Completion::Stopped, Some(h)) => {
                assert!(validate_hypercuboid(&h).is_ok());
                verdict = Verdict::Feasible(h);
                break;
            }
            (Completion::Exhausted, _) => {
                verdict = Verdict::Infeasible;
                break;
            }
            _ if meter.exhausted() || run.exhausted() && run.nodes() < cap => break,
            _ => {}
        }
    }
    Ok(meter.finish(verdict))
}

/// `U_H` of a random depth-`(n - k)` hypercuboid of dimension `d + 1`; realisable by construction.
pub fn random_realisable_array(d: usize, n: usize, k: usize, seed: Seed, budget: Budget) -> Result<SolveOutcome<SetArray>> {
    if k > n {
        return Err(Error::Range(format!("cardinality {k} exceeds order {n}")));
    }
    let out = random_hypercuboid(d + 1, n, n - k, seed, budget)?;
    let out = out.map(|h| unused_array(&h));
    if let Some(a) = out.witness() {
        assert!(validate_set_array(a).is_ok());
    }
    Ok(out)
}
