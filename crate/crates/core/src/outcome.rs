use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::sync::Arc;
use std::time::{Duration, Instant};

/// Search limits. An exhausted budget yields [`Verdict::Unknown`], never `Infeasible`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Budget {
    pub max_nodes: Option<u64>,
    pub max_time: Option<Duration>,
}

impl Budget {
    pub const UNLIMITED: Budget = Budget { max_nodes: None, max_time: None };

    pub fn nodes(max: u64) -> Self {
        Budget { max_nodes: Some(max), max_time: None }
    }

    pub fn time(max: Duration) -> Self {
        Budget { max_nodes: None, max_time: Some(max) }
    }

    /// The budget left after `used` nodes and `elapsed` time.
    pub fn remaining(&self, used: u64, elapsed: Duration) -> Budget {
        Budget {
            max_nodes: self.max_nodes.map(|m| m.saturating_sub(used)),
            max_time: self.max_time.map(|t| t.saturating_sub(elapsed)),
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Stats {
    /// Search nodes (tentative assignments) explored.
    pub nodes: u64,
    pub elapsed: Duration,
}

impl Stats {
    pub fn absorb(&mut self, other: Stats) {
        self.nodes += other.nodes;
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict<W> {
    Feasible(W),
    /// Proved by an exhausted complete search.
    Infeasible,
    /// The budget stopped the search.
    Unknown,
}

impl<W> Verdict<W> {
    pub fn map<V>(self, f: impl FnOnce(W) -> V) -> Verdict<V> {
        match self {
            Verdict::Feasible(w) => Verdict::Feasible(f(w)),
            Verdict::Infeasible => Verdict::Infeasible,
            Verdict::Unknown => Verdict::Unknown,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Verdict::Feasible(_) => "feasible",
            Verdict::Infeasible => "infeasible",
            Verdict::Unknown => "unknown",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveOutcome<W> {
    pub verdict: Verdict<W>,
    pub stats: Stats,
}

impl<W> SolveOutcome<W> {
    pub fn is_feasible(&self) -> bool {
        matches!(self.verdict, Verdict::Feasible(_))
    }

    pub fn is_infeasible(&self) -> bool {
        matches!(self.verdict, Verdict::Infeasible)
    }

    pub fn is_unknown(&self) -> bool {
        matches!(self.verdict, Verdict::Unknown)
    }

    pub fn witness(&self) -> Option<&W> {
        match &self.verdict {
            Verdict::Feasible(w) => Some(w),
            _ => None,
        }
    }

    pub fn into_witness(self) -> Option<W> {
        match self.verdict {
            Verdict::Feasible(w) => Some(w),
            _ => None,
        }
    }

    pub fn map<V>(self, f: impl FnOnce(W) -> V) -> SolveOutcome<V> {
        SolveOutcome { verdict: self.verdict.map(f), stats: self.stats }
    }
}

/// Node and time accounting against a [`Budget`].
///
/// Meters created with [`Meter::shared`] also draw from a pool common to
/// several workers, so a parallel search respects one overall node limit.
#[derive(Debug)]
pub struct Meter {
    budget: Budget,
    start: Instant,
    nodes: u64,
    exhausted: bool,
    pool: Option<Arc<Pool>>,
}

#[derive(Debug, Default)]
pub struct Pool {
    nodes: AtomicU64,
    stop: AtomicBool,
}

impl Pool {
    pub fn new() -> Arc<Self> {
        Arc::new(Pool::default())
    }

    pub fn nodes(&self) -> u64 {
        self.nodes.load(Ordering::Relaxed)
    }

    pub fn stop(&self) {
        self.stop.store(true, Ordering::Relaxed);
    }

    pub fn stopped(&self) -> bool {
        self.stop.load(Ordering::Relaxed)
    }
}

const FLUSH: u64 = 256;

impl Meter {
    pub fn new(budget: Budget) -> Self {
        Meter { budget, start: Instant::now(), nodes: 0, exhausted: false, pool: None }
    }

    pub fn shared(budget: Budget, pool: Arc<Pool>) -> Self {
        Meter { pool: Some(pool), ..Meter::new(budget) }
    }

    /// Counts one node; returns false once the budget is exhausted.
    #[inline]
    pub fn tick(&mut self) -> bool {
        if self.exhausted {
            return false;
        }
        self.nodes += 1;
        if let Some(pool) = &self.pool {
            if self.nodes.is_multiple_of(FLUSH) {
                let total = pool.nodes.fetch_add(FLUSH, Ordering::Relaxed) + FLUSH;
                if pool.stopped() || self.budget.max_nodes.is_some_and(|m| total > m) {
                    self.exhausted = true;
                }
            }
        } else if self.budget.max_nodes.is_some_and(|m| self.nodes > m) {
            self.exhausted = true;
        }
        if self.nodes.is_multiple_of(1024) {
            if let Some(t) = self.budget.max_time {
                if self.start.elapsed() > t {
                    self.exhausted = true;
                }
            }
        }
        !self.exhausted
    }

    pub fn exhausted(&self) -> bool {
        self.exhausted
    }

    pub fn nodes(&self) -> u64 {
        self.nodes
    }

    pub fn budget(&self) -> Budget {
        self.budget
    }

    /// Budget left for a nested search.
    pub fn remaining(&self) -> Budget {
        let used = match &self.pool {
            Some(p) => p.nodes() + self.nodes % FLUSH,
            None => self.nodes,
        };
        self.budget.remaining(used, self.start.elapsed())
    }

    /// Charges nodes spent by a nested search.
    pub fn charge(&mut self, nodes: u64) {
        let before = self.nodes;
        self.nodes += nodes;
        if let Some(pool) = &self.pool {
            let flushed = self.nodes / FLUSH - before / FLUSH;
            if flushed > 0 {
                pool.nodes.fetch_add(flushed * FLUSH, Ordering::Relaxed);
            }
        }
        if self.budget.max_nodes.is_some_and(|m| self.total() > m)
            || self.budget.max_time.is_some_and(|t| self.start.elapsed() > t)
        {
            self.exhausted = true;
        }
    }

    fn total(&self) -> u64 {
        match &self.pool {
            Some(p) => p.nodes(),
            None => self.nodes,
        }
    }

    pub fn mark_exhausted(&mut self) {
        self.exhausted = true;
    }

    pub fn stats(&self) -> Stats {
        Stats { nodes: self.nodes, elapsed: self.start.elapsed() }
    }

    pub fn finish<W>(&self, verdict: Verdict<W>) -> SolveOutcome<W> {
        SolveOutcome { verdict, stats: self.stats() }
    }
}
