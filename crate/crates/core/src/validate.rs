//! Validators for the Latin line condition and the `(n^d,k)` balance condition.

use std::fmt;

use crate::error::{Error, Result};
use crate::grid::{Grid, LineRef};
use crate::model::{CellSets, Hypercuboid, Layer, SetArray};
use crate::symbol_set::SymbolSet;

/// First violation found by a validator. Coordinates and symbols are zero-based;
/// `Display` renders them one-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    SymbolOutOfRange { coords: Vec<usize>, symbol: usize },
    /// `symbol` occurs more than once on the line through `line` along `axis`.
    RepeatedSymbol { axis: usize, line: Vec<usize>, symbol: usize },
    Cardinality { coords: Vec<usize>, expected: usize, found: usize },
    Imbalance { axis: usize, line: Vec<usize>, symbol: usize, expected: usize, found: usize },
    NotInSet { coords: Vec<usize>, symbol: usize },
}

pub type Validity = std::result::Result<(), Violation>;

struct LineDisplay<'a>(usize, &'a [usize]);

impl fmt::Display for LineDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (a, c) in self.1.iter().enumerate() {
            if a > 0 {
                write!(f, ",")?;
            }
            if a == self.0 {
                write!(f, "*")?;
            } else {
                write!(f, "{}", c + 1)?;
            }
        }
        write!(f, ")")
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use crate::grid::OneBased;
        match self {
            Violation::SymbolOutOfRange { coords, symbol } => {
                write!(f, "cell {} holds out-of-range symbol {}", OneBased(coords), symbol + 1)
            }
            Violation::RepeatedSymbol { axis, line, symbol } => write!(
                f,
                "line {} along axis {} repeats symbol {}",
                LineDisplay(*axis, line),
                axis + 1,
                symbol + 1
            ),
            Violation::Cardinality { coords, expected, found } => write!(
                f,
                "cell {} has {} symbols, expected {}",
                OneBased(coords),
                found,
                expected
            ),
            Violation::Imbalance { axis, line, symbol, expected, found } => write!(
                f,
                "line {} along axis {} contains symbol {} {} times, expected {}",
                LineDisplay(*axis, line),
                axis + 1,
                symbol + 1,
                found,
                expected
            ),
            Violation::NotInSet { coords, symbol } => {
                write!(f, "cell {} holds {} which is not in its set", OneBased(coords), symbol + 1)
            }
        }
    }
}

/// Checks symbol range and that no symbol repeats along any line.
fn check_symbol_lines(grid: &Grid, n: usize, cells: &[u8]) -> Validity {
    for (i, &s) in cells.iter().enumerate() {
        if s as usize >= n {
            return Err(Violation::SymbolOutOfRange { coords: grid.coords(i), symbol: s as usize });
        }
    }
    for line in grid.lines() {
        let mut seen = SymbolSet::EMPTY;
        for c in line.cells() {
            let s = cells[c] as usize;
            if seen.contains(s) {
                return Err(repeat(grid, &line, s));
            }
            seen.insert(s);
        }
    }
    Ok(())
}

fn repeat(grid: &Grid, line: &LineRef, symbol: usize) -> Violation {
    Violation::RepeatedSymbol { axis: line.axis, line: grid.coords(line.start), symbol }
}

/// True iff every axis-parallel line of `h` is repeat-free and all symbols lie in `[n]`.
pub fn validate_hypercuboid(h: &Hypercuboid) -> Validity {
    check_symbol_lines(&h.grid(), h.n(), h.cells())
}

/// Every axis-parallel line must be a permutation of `[n]`.
pub fn validate_layer(l: &Layer) -> Validity {
    // lines have length n, so repeat-free and in range means permutation
    check_symbol_lines(&l.grid(), l.n(), l.cells())
}

/// Cardinality `k` everywhere and each symbol exactly `k` times on every line.
pub fn validate_set_array(a: &SetArray) -> Validity {
    let grid = a.grid();
    let k = a.k();
    for (i, s) in a.cells().iter().enumerate() {
        if s.len() != k {
            return Err(Violation::Cardinality { coords: grid.coords(i), expected: k, found: s.len() });
        }
    }
    let n = a.n();
    let mut counts = vec![0usize; n];
    for line in grid.lines() {
        counts.iter_mut().for_each(|c| *c = 0);
        for c in line.cells() {
            for s in a.cells()[c] {
                counts[s] += 1;
            }
        }
        if let Some(s) = counts.iter().position(|&c| c != k) {
            return Err(Violation::Imbalance {
                axis: line.axis,
                line: grid.coords(line.start),
                symbol: s,
                expected: k,
                found: counts[s],
            });
        }
    }
    Ok(())
}

/// `Ok(Ok(()))` iff `l` is a valid layer with `l[c]` in `a[c]` for every cell.
pub fn is_layer_of<A: CellSets + ?Sized>(l: &Layer, a: &A) -> Result<Validity> {
    if l.d() != a.d() || l.n() != a.n() {
        return Err(Error::Shape(format!(
            "layer is {}-dimensional of order {}, array is {}-dimensional of order {}",
            l.d(),
            l.n(),
            a.d(),
            a.n()
        )));
    }
    if let Err(v) = validate_layer(l) {
        return Ok(Err(v));
    }
    let grid = l.grid();
    for (i, (&x, set)) in l.cells().iter().zip(a.sets()).enumerate() {
        if !set.contains(x as usize) {
            return Ok(Err(Violation::NotInSet { coords: grid.coords(i), symbol: x as usize }));
        }
    }
    Ok(Ok(()))
}

/// True iff `outer` agrees with `inner` on every cell of `inner`.
pub fn is_extension_of(outer: &Hypercuboid, inner: &Hypercuboid) -> Result<bool> {
    if outer.d() != inner.d() || outer.n() != inner.n() {
        return Err(Error::Shape("hypercuboids differ in dimension or order".into()));
    }
    if outer.k() < inner.k() {
        return Ok(false);
    }
    let lines = inner.shape().depth_lines();
    Ok((0..lines).all(|l| outer.depth_line(l)[..inner.k()] == *inner.depth_line(l)))
}
