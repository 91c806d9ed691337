//! Backtracking search for layers: one symbol per cell, all-different on every
//! axis-parallel line.
//!
//! Forward checking removes an assigned symbol from the other cells of its
//! lines; every line must also keep each unplaced symbol available somewhere
//! (a line of length n must be a permutation). Variables are chosen by minimum
//! remaining values with lowest-index tie-break, values ascending unless a
//! random order is requested.

use std::ops::ControlFlow;

use rand::seq::SliceRandom;
use rand_xoshiro::SplitMix64;

use crate::grid::Grid;
use crate::outcome::Meter;

const UNASSIGNED: u8 = u8::MAX;

/// How a search ended.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Completion {
    /// Every solution was visited.
    Exhausted,
    /// The visitor asked to stop.
    Stopped,
    /// The meter ran out.
    OutOfBudget,
}

pub enum ValueOrder<'r> {
    Ascending,
    Random(&'r mut SplitMix64),
}

pub(crate) struct Engine {
    d: usize,
    full: u64,
    line_cells: Vec<Vec<u32>>,
    /// `cell * d + axis` -> line id
    cell_lines: Vec<u32>,
    domain: Vec<u64>,
    value: Vec<u8>,
    trail: Vec<(u32, u64)>,
    stamp: Vec<u32>,
    epoch: u32,
}

impl Engine {
    pub(crate) fn new(d: usize, n: usize, domains: &[u64]) -> Self {
        let grid = Grid::cube(d, n);
        let lines = grid.lines();
        let mut cell_lines = vec![0u32; grid.len() * d];
        let mut line_cells = Vec::with_capacity(lines.len());
        for (id, line) in lines.iter().enumerate() {
            let cells: Vec<u32> = line.cells().map(|c| c as u32).collect();
            for &c in &cells {
                cell_lines[c as usize * d + line.axis] = id as u32;
            }
            line_cells.push(cells);
        }
        let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        Engine {
            d,
            full,
            stamp: vec![0; line_cells.len()],
            line_cells,
            cell_lines,
            domain: domains.to_vec(),
            value: vec![UNASSIGNED; grid.len()],
            trail: Vec::new(),
            epoch: 0,
        }
    }

    fn lines_of(&self, cell: usize) -> &[u32] {
        &self.cell_lines[cell * self.d..(cell + 1) * self.d]
    }

    fn covered(&self, line: usize) -> bool {
        let mut seen = 0u64;
        for &c in &self.line_cells[line] {
            seen |= self.domain[c as usize];
        }
        seen == self.full
    }

    /// Checks that every line can still hold every symbol and no cell is empty.
    pub(crate) fn consistent(&self) -> bool {
        self.domain.iter().all(|&m| m != 0) && (0..self.line_cells.len()).all(|l| self.covered(l))
    }

    fn remove(&mut self, cell: usize, bits: u64) -> bool {
        let old = self.domain[cell];
        let hit = old & bits;
        if hit != 0 {
            self.trail.push((cell as u32, hit));
            self.domain[cell] = old & !bits;
        }
        self.domain[cell] != 0
    }

    /// Assigns `s` to `cell` and propagates. On `false` the caller must undo to its mark.
    pub(crate) fn assign(&mut self, cell: usize, s: usize) -> bool {
        let bit = 1u64 << s;
        let mark = self.trail.len();
        self.value[cell] = s as u8;
        if !self.remove(cell, !bit) {
            return false;
        }
        for a in 0..self.d {
            let line = self.cell_lines[cell * self.d + a] as usize;
            for t in 0..self.line_cells[line].len() {
                let other = self.line_cells[line][t] as usize;
                if other != cell && !self.remove(other, bit) {
                    return false;
                }
            }
        }
        // coverage on every line touching a changed cell
        self.epoch = self.epoch.wrapping_add(1);
        if self.epoch == 0 {
            self.stamp.iter_mut().for_each(|s| *s = 0);
            self.epoch = 1;
        }
        for i in mark..=self.trail.len() {
            let changed = if i == self.trail.len() { cell } else { self.trail[i].0 as usize };
            for a in 0..self.d {
                let line = self.lines_of(changed)[a] as usize;
                if self.stamp[line] != self.epoch {
                    self.stamp[line] = self.epoch;
                    if !self.covered(line) {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub(crate) fn mark(&self) -> usize {
        self.trail.len()
    }

    pub(crate) fn undo(&mut self, cell: usize, mark: usize) {
        while self.trail.len() > mark {
            let (c, bits) = self.trail.pop().unwrap();
            self.domain[c as usize] |= bits;
        }
        self.value[cell] = UNASSIGNED;
    }

    fn choose(&self) -> Option<usize> {
        let mut best = None;
        let mut best_size = u32::MAX;
        for (c, (&v, &m)) in self.value.iter().zip(&self.domain).enumerate() {
            if v == UNASSIGNED {
                let size = m.count_ones();
                if size < best_size {
                    best_size = size;
                    best = Some(c);
                    if size <= 1 {
                        break;
                    }
                }
            }
        }
        best
    }

    /// Depth-first enumeration of all completions of the current state.
    pub(crate) fn run(
        &mut self,
        meter: &mut Meter,
        order: &mut ValueOrder<'_>,
        visit: &mut dyn FnMut(&[u8], &mut Meter) -> ControlFlow<()>,
    ) -> Completion {
        let Some(cell) = self.choose() else {
            return match visit(&self.value, meter) {
                ControlFlow::Continue(()) => Completion::Exhausted,
                ControlFlow::Break(()) => Completion::Stopped,
            };
        };
        let dom = self.domain[cell];
        let mut symbols: Vec<usize> = Vec::with_capacity(dom.count_ones() as usize);
        let mut bits = dom;
        while bits != 0 {
            symbols.push(bits.trailing_zeros() as usize);
            bits &= bits - 1;
        }
        if let ValueOrder::Random(rng) = order {
            symbols.shuffle(*rng);
        }
        for s in symbols {
            if !meter.tick() {
                return Completion::OutOfBudget;
            }
            let mark = self.mark();
            if self.assign(cell, s) {
                let r = self.run(meter, order, visit);
                if r != Completion::Exhausted {
                    self.undo(cell, mark);
                    return r;
                }
            }
            self.undo(cell, mark);
        }
        Completion::Exhausted
    }
}
