//! Slow, independent oracles for tests: plain enumeration of Latin squares,
//! brute-force isotopy classification and a naive layer search. Nothing here
//! shares code with the solvers.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::grid::OneBased;
use crate::model::{CellSets, Hypercuboid, Layer, PartialAssignment, Shape};
use crate::outcome::{Budget, Meter, SolveOutcome, Verdict};

/// Largest order the oracles accept.
pub const ORACLE_MAX_ORDER: usize = 5;

/// Streams every Latin square of order `n` exactly once, lexicographically by
/// row-major cells. Squares are `d = 2` hypercuboids with rows on the first axis.
pub fn enumerate_latin_squares(n: usize) -> Result<LatinSquares> {
    if n == 0 || n > ORACLE_MAX_ORDER {
        return Err(Error::Range(format!("enumeration supports 1 <= n <= {ORACLE_MAX_ORDER}, got {n}")));
    }
    Ok(LatinSquares {
        n,
        cells: vec![-1; n * n],
        row: vec![0; n],
        col: vec![0; n],
        started: false,
        done: false,
    })
}

pub struct LatinSquares {
    n: usize,
    cells: Vec<i8>,
    row: Vec<u32>,
    col: Vec<u32>,
    started: bool,
    done: bool,
}

impl Iterator for LatinSquares {
    type Item = Hypercuboid;

    fn next(&mut self) -> Option<Hypercuboid> {
        if self.done {
            return None;
        }
        let n = self.n;
        let total = n * n;
        let mut pos = if self.started { total - 1 } else { 0 };
        self.started = true;
        loop {
            let (r, c) = (pos / n, pos % n);
            if self.cells[pos] >= 0 {
                let bit = 1u32 << self.cells[pos];
                self.row[r] &= !bit;
                self.col[c] &= !bit;
            }
            let mut v = (self.cells[pos] + 1) as usize;
            while v < n && ((self.row[r] | self.col[c]) >> v) & 1 == 1 {
                v += 1;
            }
            if v < n {
                self.cells[pos] = v as i8;
                self.row[r] |= 1 << v;
                self.col[c] |= 1 << v;
                pos += 1;
                if pos == total {
                    let cells = self.cells.iter().map(|&x| x as u8).collect();
                    return Some(Hypercuboid::new(Shape { d: 2, n, k: n }, cells).unwrap());
                }
            } else {
                self.cells[pos] = -1;
                if pos == 0 {
                    self.done = true;
                    return None;
                }
                pos -= 1;
            }
        }
    }
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                rec(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// `S'[rows[i]][cols[j]] = syms[S[i][j]]` for a row-major square.
pub fn apply_isotopy(square: &[u8], n: usize, rows: &[usize], cols: &[usize], syms: &[usize]) -> Vec<u8> {
    let mut out = vec![0u8; n * n];
    for i in 0..n {
        for j in 0..n {
            out[rows[i] * n + cols[j]] = syms[square[i * n + j] as usize] as u8;
        }
    }
    out
}

pub fn is_reduced(square: &[u8], n: usize) -> bool {
    (0..n).all(|j| square[j] as usize == j) && (0..n).all(|i| square[i * n] as usize == i)
}

/// Lexicographically least square isotopic to `square` (row-major).
///
/// The least square of a class is reduced, and every reduced square of the
/// class arises from some column permutation plus a choice of first row, after
/// which the symbol relabelling and row order are forced.
pub fn isotopy_canonical(square: &[u8], n: usize) -> Vec<u8> {
    let mut best: Option<Vec<u8>> = None;
    let mut cand = vec![0u8; n * n];
    for sigma in permutations(n) {
        for first in 0..n {
            let mut relabel = vec![0u8; n];
            for j in 0..n {
                relabel[square[first * n + sigma[j]] as usize] = j as u8;
            }
            for i in 0..n {
                let lead = relabel[square[i * n + sigma[0]] as usize] as usize;
                for j in 0..n {
                    cand[lead * n + j] = relabel[square[i * n + sigma[j]] as usize];
                }
            }
            if best.as_ref().is_none_or(|b| cand < *b) {
                best = Some(cand.clone());
            }
        }
    }
    best.expect("n >= 1")
}

/// One lexicographically least representative per isotopy class of order-`n`
/// Latin squares, in ascending order. Classes are found from the reduced squares,
/// since every class contains one.
pub fn isotopy_classes(n: usize) -> Result<Vec<Hypercuboid>> {
    let mut reps = BTreeSet::new();
    for sq in enumerate_latin_squares(n)? {
        if is_reduced(sq.cells(), n) {
            reps.insert(isotopy_canonical(sq.cells(), n));
        }
    }
    Ok(reps
        .into_iter()
        .map(|cells| Hypercuboid::new(Shape { d: 2, n, k: n }, cells).unwrap())
        .collect())
}

/// Depth-first layer search in canonical cell order with ascending values and
/// no pruning beyond "no repeat with an already placed cell on a shared line".
pub fn naive_find_layer<A: CellSets + ?Sized>(a: &A, forced: &PartialAssignment) -> Result<SolveOutcome<Layer>> {
    let (d, n) = (a.d(), a.n());
    let grid = a.grid();
    let cells = grid.len();
    let mut allowed: Vec<Vec<u8>> = a
        .sets()
        .iter()
        .map(|s| s.iter().map(|x| x as u8).collect())
        .collect();
    for (coords, s) in forced.iter() {
        let i = grid
            .try_index(coords)
            .ok_or_else(|| Error::Shape(format!("forced coordinate {} out of range", OneBased(coords))))?;
        if !allowed[i].contains(&s) {
            return Err(Error::ForcedConflict {
                coords: coords.to_vec(),
                symbol: s as usize,
            });
        }
        allowed[i] = vec![s];
    }
    // earlier cells sharing a line: coordinates differ in exactly one place
    let coords: Vec<Vec<usize>> = (0..cells).map(|i| grid.coords(i)).collect();
    let earlier: Vec<Vec<usize>> = (0..cells)
        .map(|i| {
            (0..i)
                .filter(|&j| coords[i].iter().zip(&coords[j]).filter(|(x, y)| x != y).count() == 1)
                .collect()
        })
        .collect();
    let mut meter = Meter::new(Budget::UNLIMITED);
    let mut value = vec![0u8; cells];

    fn rec(
        pos: usize,
        allowed: &[Vec<u8>],
        earlier: &[Vec<usize>],
        value: &mut [u8],
        meter: &mut Meter,
    ) -> bool {
        if pos == value.len() {
            return true;
        }
        for &s in &allowed[pos] {
            meter.tick();
            if earlier[pos].iter().all(|&j| value[j] != s) {
                value[pos] = s;
                if rec(pos + 1, allowed, earlier, value, meter) {
                    return true;
                }
            }
        }
        false
    }

    let verdict = if rec(0, &allowed, &earlier, &mut value, &mut meter) {
        Verdict::Feasible(Layer::new(d, n, value)?)
    } else {
        Verdict::Infeasible
    };
    Ok(meter.finish(verdict))
}
