//! Searches for noncompletable / nonextendible hypercuboids at small orders.
//!
//! Exhaustive mode fixes the first layer up to isotopy (stored representatives
//! for `d = 3`, `n <= 5`; every first layer otherwise) and enumerates the
//! remaining layers by backtracking, testing each depth-`k` cuboid. Isotopies
//! permute rows, columns and symbols of every layer at once, so they preserve
//! both extendibility and completability.

use std::ops::ControlFlow;
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::sync::{Arc, Mutex};

use crate::construct::{stack_unchecked, unused_array};
use crate::error::{Error, Result};
use crate::model::{Hypercuboid, Layer, PartialAssignment, SetArray};
use crate::outcome::{Budget, Meter, Pool, SolveOutcome, Stats, Verdict};
use crate::sample::{random_hypercuboid, Seed};
use crate::solve::engine::{Completion, ValueOrder};
use crate::solve::layer::for_each_layer;
use crate::solve::reps::isotopy_representatives;
use crate::solve::{is_completable, is_extendible};
use crate::validate::validate_hypercuboid;

/// Which property the witness must lack.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Kind {
    /// `NC`: no completion to a Latin hypercube.
    Noncompletable,
    /// `NE`: no extra layer.
    Nonextendible,
}

impl Kind {
    pub fn label(self) -> &'static str {
        match self {
            Kind::Noncompletable => "NC",
            Kind::Nonextendible => "NE",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Exhaustive,
    /// Random growth from consecutive seeds; never proves nonexistence.
    Random { seed: u64 },
}

/// How a search verdict was reached.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Basis {
    /// Decided without search by a general fact.
    Shortcut(&'static str),
    Exhaustive { cuboids: u64 },
    Random { samples: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchReport {
    pub outcome: SolveOutcome<Hypercuboid>,
    pub basis: Basis,
}

/// Execution options shared by the searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchOptions {
    pub mode: Mode,
    pub budget: Budget,
    /// Worker threads; 1 keeps the canonical order and bit-reproducible statistics.
    pub threads: usize,
    /// Settle depths 1, n-1 and `d <= 2` without search. Turning this off forces
    /// an exhaustive check of those cases too.
    pub shortcuts: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { mode: Mode::Exhaustive, budget: Budget::UNLIMITED, threads: 1, shortcuts: true }
    }
}

pub fn search_noncompletable(d: usize, n: usize, k: usize, opts: &SearchOptions) -> Result<SearchReport> {
    search(Kind::Noncompletable, d, n, k, opts)
}

pub fn search_nonextendible(d: usize, n: usize, k: usize, opts: &SearchOptions) -> Result<SearchReport> {
    search(Kind::Nonextendible, d, n, k, opts)
}

fn shortcut(d: usize, n: usize, k: usize) -> Option<&'static str> {
    if d <= 2 {
        return Some("every Latin rectangle completes by bipartite matching");
    }
    if k == 1 {
        return Some("a single layer develops cyclically to a Latin hypercube");
    }
    if k + 1 == n {
        return Some("depth n-1 is always completable: each depth line misses one symbol");
    }
    None
}

/// Tests the property a witness must lack: `Infeasible` marks a witness.
fn lacks(kind: Kind, h: &Hypercuboid, budget: Budget) -> Result<SolveOutcome<()>> {
    Ok(match kind {
        Kind::Noncompletable => is_completable(h, budget)?.map(|_| ()),
        Kind::Nonextendible => is_extendible(h, budget)?.map(|_| ()),
    })
}

pub fn search(kind: Kind, d: usize, n: usize, k: usize, opts: &SearchOptions) -> Result<SearchReport> {
    if k == 0 || k >= n {
        return Err(Error::Range(format!("search needs 1 <= k < n, got k = {k}, n = {n}")));
    }
    Hypercuboid::empty(d, n)?;
    if let Some(reason) = shortcut(d, n, k).filter(|_| opts.shortcuts) {
        return Ok(SearchReport {
            outcome: SolveOutcome { verdict: Verdict::Infeasible, stats: Stats::default() },
            basis: Basis::Shortcut(reason),
        });
    }
    let report = match opts.mode {
        Mode::Exhaustive if opts.threads > 1 => exhaustive_parallel(kind, d, n, k, opts)?,
        Mode::Exhaustive => exhaustive(kind, d, n, k, opts.budget)?,
        Mode::Random { seed } => random(kind, d, n, k, Seed(seed), opts.budget)?,
    };
    if let Some(h) = report.outcome.witness() {
        assert!(validate_hypercuboid(h).is_ok() && h.k() == k, "search witness is malformed");
        let again = lacks(kind, h, Budget::UNLIMITED)?;
        assert!(again.is_infeasible(), "search witness failed re-verification");
    }
    Ok(report)
}

/// First layers to try: isotopy representatives when stored, otherwise all.
fn first_layers(d: usize, n: usize, meter: &mut Meter) -> Result<Option<Vec<Layer>>> {
    if d == 3 {
        if let Some(reps) = isotopy_representatives(n) {
            return Ok(Some(reps));
        }
    }
    let mut all = Vec::new();
    let full = SetArray::full(d - 1, n)?;
    let done = for_each_layer(&full, &PartialAssignment::new(), meter, ValueOrder::Ascending, &mut |l, _| {
        all.push(l.clone());
        ControlFlow::Continue(())
    })?;
    Ok((done == Completion::Exhausted).then_some(all))
}

struct Walk {
    kind: Kind,
    k: usize,
    cuboids: u64,
    undecided: bool,
    witness: Option<Hypercuboid>,
}

impl Walk {
    /// Enumerates extensions of `h` to depth `k` and tests each one.
    fn descend(&mut self, h: &Hypercuboid, meter: &mut Meter) -> Result<Completion> {
        if h.k() == self.k {
            self.cuboids += 1;
            let test = lacks(self.kind, h, meter.remaining())?;
            meter.charge(test.stats.nodes);
            match test.verdict {
                Verdict::Infeasible => {
                    self.witness = Some(h.clone());
                    return Ok(Completion::Stopped);
                }
                Verdict::Unknown => self.undecided = true,
                Verdict::Feasible(()) => {}
            }
            return Ok(if meter.exhausted() { Completion::OutOfBudget } else { Completion::Exhausted });
        }
        let mut failure = None;
        let mut inner = Completion::Exhausted;
        let done = for_each_layer(
            &unused_array(h),
            &PartialAssignment::new(),
            meter,
            ValueOrder::Ascending,
            &mut |l, meter| match self.descend(&stack_unchecked(h, l), meter) {
                Ok(Completion::Exhausted) => ControlFlow::Continue(()),
                Ok(c) => {
                    inner = c;
                    ControlFlow::Break(())
                }
                Err(e) => {
                    failure = Some(e);
                    ControlFlow::Break(())
                }
            },
        )?;
        if let Some(e) = failure {
            return Err(e);
        }
        Ok(if done == Completion::Stopped { inner } else { done })
    }

    fn finish(self, meter: &Meter, completion: Completion) -> SearchReport {
        let verdict = match (self.witness, completion) {
            (Some(h), _) => Verdict::Feasible(h),
            (None, Completion::Exhausted) if !self.undecided => Verdict::Infeasible,
            _ => Verdict::Unknown,
        };
        SearchReport { outcome: meter.finish(verdict), basis: Basis::Exhaustive { cuboids: self.cuboids } }
    }
}

fn exhaustive(kind: Kind, d: usize, n: usize, k: usize, budget: Budget) -> Result<SearchReport> {
    let mut meter = Meter::new(budget);
    let mut walk = Walk { kind, k, cuboids: 0, undecided: false, witness: None };
    let Some(firsts) = first_layers(d, n, &mut meter)? else {
        return Ok(walk.finish(&meter, Completion::OutOfBudget));
    };
    let empty = Hypercuboid::empty(d, n)?;
    let mut completion = Completion::Exhausted;
    for l in &firsts {
        completion = walk.descend(&stack_unchecked(&empty, l), &mut meter)?;
        if completion != Completion::Exhausted {
            break;
        }
    }
    Ok(walk.finish(&meter, completion))
}

/// Same verdicts as [`exhaustive`]; subtrees below depth two run on a thread
/// pool, so the witness found and the node counts may differ between runs.
fn exhaustive_parallel(kind: Kind, d: usize, n: usize, k: usize, opts: &SearchOptions) -> Result<SearchReport> {
    use rayon::prelude::*;

    let mut meter = Meter::new(opts.budget);
    let Some(firsts) = first_layers(d, n, &mut meter)? else {
        let walk = Walk { kind, k, cuboids: 0, undecided: false, witness: None };
        return Ok(walk.finish(&meter, Completion::OutOfBudget));
    };
    let empty = Hypercuboid::empty(d, n)?;
    let mut tasks = Vec::new();
    for l in &firsts {
        let h1 = stack_unchecked(&empty, l);
        if k == 1 {
            tasks.push(h1);
            continue;
        }
        let done = for_each_layer(&unused_array(&h1), &PartialAssignment::new(), &mut meter, ValueOrder::Ascending, &mut |l2, _| {
            tasks.push(stack_unchecked(&h1, l2));
            ControlFlow::Continue(())
        })?;
        if done != Completion::Exhausted {
            let walk = Walk { kind, k, cuboids: 0, undecided: false, witness: None };
            return Ok(walk.finish(&meter, Completion::OutOfBudget));
        }
    }
    let pool = Pool::new();
    let cuboids = AtomicU64::new(0);
    let undecided = AtomicBool::new(false);
    let out_of_budget = AtomicBool::new(false);
    let failure = Mutex::new(None);
    let remaining = meter.remaining();
    let threads = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.threads)
        .build()
        .map_err(|e| Error::Range(e.to_string()))?;
    let witness = threads.install(|| {
        tasks.par_iter().find_map_any(|h| {
            if pool.stopped() {
                return None;
            }
            let mut local = Meter::shared(remaining, Arc::clone(&pool));
            let mut walk = Walk { kind, k, cuboids: 0, undecided: false, witness: None };
            let res = walk.descend(h, &mut local);
            cuboids.fetch_add(walk.cuboids, Ordering::Relaxed);
            if walk.undecided {
                undecided.store(true, Ordering::Relaxed);
            }
            match res {
                Ok(Completion::OutOfBudget) => {
                    out_of_budget.store(true, Ordering::Relaxed);
                    None
                }
                Ok(_) => walk.witness.inspect(|_| pool.stop()),
                Err(e) => {
                    *failure.lock().unwrap() = Some(e);
                    pool.stop();
                    None
                }
            }
        })
    });
    if let Some(e) = failure.into_inner().unwrap() {
        return Err(e);
    }
    let stats = Stats { nodes: meter.nodes() + pool.nodes(), elapsed: meter.stats().elapsed };
    let verdict = match witness {
        Some(h) => Verdict::Feasible(h),
        None if !undecided.load(Ordering::Relaxed) && !out_of_budget.load(Ordering::Relaxed) => Verdict::Infeasible,
        None => Verdict::Unknown,
    };
    Ok(SearchReport {
        outcome: SolveOutcome { verdict, stats },
        basis: Basis::Exhaustive { cuboids: cuboids.into_inner() },
    })
}

fn random(kind: Kind, d: usize, n: usize, k: usize, seed: Seed, budget: Budget) -> Result<SearchReport> {
    if budget.max_nodes.is_none() && budget.max_time.is_none() {
        return Err(Error::Range("random search needs a node or time budget".into()));
    }
    let mut meter = Meter::new(budget);
    let mut samples = 0u64;
    let mut witness = None;
    while !meter.exhausted() {
        let grown = random_hypercuboid(d, n, k, seed.offset(samples), meter.remaining())?;
        meter.charge(grown.stats.nodes);
        samples += 1;
        let Some(h) = grown.into_witness() else { continue };
        let test = lacks(kind, &h, meter.remaining())?;
        meter.charge(test.stats.nodes);
        if test.is_infeasible() {
            witness = Some(h);
            break;
        }
    }
    let verdict = witness.map_or(Verdict::Unknown, Verdict::Feasible);
    Ok(SearchReport { outcome: meter.finish(verdict), basis: Basis::Random { samples } })
}

/// Result of scanning depths `1..=kmax`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Threshold {
    /// Smallest depth with a witness.
    Found { k: usize, witness: Hypercuboid },
    /// No witness at any depth up to `kmax`.
    AllGood(usize),
    /// The budget ran out; depths up to `last_decided` have no witness.
    Unknown { last_decided: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThresholdReport {
    pub result: Threshold,
    /// Per-depth verdict name and basis, in order.
    pub steps: Vec<(usize, &'static str, Basis)>,
    pub stats: Stats,
}

/// Smallest `k <= kmax` admitting a noncompletable (or nonextendible) hypercuboid,
/// by exhaustive search at each depth in turn.
pub fn compute_threshold(kind: Kind, d: usize, n: usize, kmax: usize, opts: &SearchOptions) -> Result<ThresholdReport> {
    if kmax == 0 || kmax >= n {
        return Err(Error::Range(format!("threshold needs 1 <= kmax < n, got kmax = {kmax}, n = {n}")));
    }
    let mut meter = Meter::new(opts.budget);
    let mut steps = Vec::new();
    for k in 1..=kmax {
        let step_opts = SearchOptions { mode: Mode::Exhaustive, budget: meter.remaining(), ..*opts };
        let report = search(kind, d, n, k, &step_opts)?;
        meter.charge(report.outcome.stats.nodes);
        steps.push((k, report.outcome.verdict.name(), report.basis));
        let result = match report.outcome.verdict {
            Verdict::Feasible(witness) => Threshold::Found { k, witness },
            Verdict::Infeasible => continue,
            Verdict::Unknown => Threshold::Unknown { last_decided: k - 1 },
        };
        return Ok(ThresholdReport { result, steps, stats: meter.stats() });
    }
    Ok(ThresholdReport { result: Threshold::AllGood(kmax), steps, stats: meter.stats() })
}

