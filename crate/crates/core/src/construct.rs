//! Explicit constructions: cyclic hypercubes and developments, unused-symbol
//! arrays and complements, the block-diagonal unavoidable array, the odd-order
//! nonlayerable array and the dimension lift.

use crate::error::{Error, Result};
use crate::grid::Grid;
use crate::model::{CellSets, ConstraintArray, Hypercuboid, Layer, SetArray, Shape};
use crate::symbol_set::SymbolSet;
use crate::validate::is_layer_of;

/// `H[i_1, ..., i_d] = i_1 + ... + i_d (mod n)` on zero-based coordinates.
pub fn cyclic_hypercube(d: usize, n: usize) -> Result<Hypercuboid> {
    let shape = Shape::new(d, n, n)?;
    let grid = shape.grid();
    let cells = (0..grid.len())
        .map(|i| (grid.coords(i).iter().sum::<usize>() % n) as u8)
        .collect();
    Hypercuboid::new(shape, cells)
}

/// The first `k` layers of `h`.
pub fn prefix(h: &Hypercuboid, k: usize) -> Result<Hypercuboid> {
    if k > h.k() {
        return Err(Error::Range(format!("prefix depth {k} exceeds depth {}", h.k())));
    }
    let shape = Shape { k, ..h.shape() };
    let cells = (0..shape.depth_lines())
        .flat_map(|l| h.depth_line(l)[..k].iter().copied())
        .collect();
    Hypercuboid::new(shape, cells)
}

/// `U_H`: for each depth line, the symbols of `[n]` not yet used on it.
pub fn unused_array(h: &Hypercuboid) -> SetArray {
    let n = h.n();
    let cells = (0..h.shape().depth_lines())
        .map(|l| {
            let used: SymbolSet = h.depth_line(l).iter().map(|&s| s as usize).collect();
            used.complement(n)
        })
        .collect();
    SetArray::new(h.d() - 1, n, n - h.k(), cells).expect("unused array has the base extent")
}

/// Cellwise complement; maps `(n^d,k)`-arrays to `(n^d,n-k)`-arrays.
pub fn complement(a: &SetArray) -> SetArray {
    let n = a.n();
    let cells = a.cells().iter().map(|s| s.complement(n)).collect();
    SetArray::new(a.d(), n, n - a.k(), cells).expect("complement keeps the extent")
}

/// The `n x n` array with blocks `A = {1..a}`, `B`, `C` on the diagonal and
/// empty cells elsewhere, `n = a + b + c`.
pub fn pebody_array(a: usize, b: usize, c: usize) -> Result<ConstraintArray> {
    if a == 0 || b == 0 || c == 0 {
        return Err(Error::Range("block sizes must be positive".into()));
    }
    if a == b && b == c {
        return Err(Error::AllEqual(a));
    }
    let n = a + b + c;
    let block = |i: usize| {
        if i < a {
            0..a
        } else if i < a + b {
            a..a + b
        } else {
            a + b..n
        }
    };
    let mut cells = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let (bi, bj) = (block(i), block(j));
            cells.push(if bi == bj { bi.collect() } else { SymbolSet::EMPTY });
        }
    }
    ConstraintArray::new(2, n, cells)
}

/// The nonlayerable `(n^2, (n-1)/2)`-array for odd `n >= 5`.
///
/// With `m = (n-1)/2`, `S = {1..m}`, `T = {m+1..n}` and the cyclic array
/// `b[i][j] = i + j - 3 (mod m+1)`, whose residue `r` stands for symbol `m+1+r`.
/// Cells follow the case chain below in order, first match wins, with `S`
/// as the fallback. No layer can place `n` at cell `(1,1)`.
pub fn nonlayerable_array(n: usize) -> Result<SetArray> {
    if n < 5 || n.is_multiple_of(2) {
        return Err(Error::Range(format!("nonlayerable_array needs odd n >= 5, got {n}")));
    }
    let m = (n - 1) / 2;
    // one-based symbols throughout, converted at the end
    let set = |xs: &[usize]| -> SymbolSet { xs.iter().map(|&x| x - 1).collect() };
    let s_set: Vec<usize> = (1..=m).collect();
    let t_set: Vec<usize> = (m + 1..=n).collect();
    let sym_s = set(&s_set);
    let sym_t = set(&t_set);
    let one = |x: usize| SymbolSet::singleton(x - 1);
    let b = |i: usize, j: usize| -> usize {
        let r = (i + j + 2 * (m + 1) - 3) % (m + 1);
        m + 1 + r
    };
    let s_plus_n_minus = |x: usize| sym_s.union(one(n)).difference(one(x));
    let t_plus_minus = |x: usize, bij: usize| sym_t.union(one(x)).difference(one(n)).difference(one(bij));
    let t_minus = |bij: usize| sym_t.difference(one(bij));
    let in_t_trimmed = |i: usize| i > m && i != m + 1 && i != n - 1;

    let mut cells = Vec::with_capacity(n * n);
    for i in 1..=n {
        for j in 1..=n {
            let cell = if i == 1 && j <= m {
                s_plus_n_minus(1)
            } else if (2..=m).contains(&i) && j == 1 {
                s_plus_n_minus(2)
            } else if (2..=m).contains(&i) && (2..=m).contains(&j) {
                sym_s
            } else if i == 1 && j >= m + 2 {
                t_plus_minus(1, b(1, j - m))
            } else if (2..=m).contains(&i) && j == m + 1 {
                t_plus_minus(2, b(i, 1))
            } else if (i, j) == (1, m + 1) || ((2..=m).contains(&i) && j > m + 1) {
                t_minus(b(i, j - m))
            } else if i + j == n && j <= m {
                t_plus_minus(1, b(i - m, j))
            } else if in_t_trimmed(i) && j == 1 {
                t_plus_minus(2, b(i - m, j))
            } else if (i, j) == (m + 1, 1) || ((2..=m).contains(&j) && m < i && i + j != n) {
                t_minus(b(i - m, j))
            } else if m < i && i + 1 == j {
                s_plus_n_minus(1)
            } else if in_t_trimmed(i) && j == m + 1 {
                s_plus_n_minus(2)
            } else if m < i && i == j {
                t_minus(b(m + 1, j - m))
            } else {
                sym_s
            };
            cells.push(cell);
        }
    }
    SetArray::new(2, n, m, cells)
}

/// Lifts `h` to dimension `d2` by prepending `d2 - d` cyclic coordinates:
/// `I[i_1..i_d2] = i_1 + ... + i_{d2-d} + H[rest] (mod n)` with the leading
/// coordinates counted one-based, so the slice at leading coordinates all `n` is `h`.
pub fn lift(h: &Hypercuboid, d2: usize) -> Result<Hypercuboid> {
    let d = h.d();
    if d2 < d {
        return Err(Error::Range(format!("cannot lift dimension {d} down to {d2}")));
    }
    let n = h.n();
    let extra = d2 - d;
    let shape = Shape::new(d2, n, h.k())?;
    let grid = shape.grid();
    let tail = h.cells().len();
    let cells = (0..grid.len())
        .map(|i| {
            let lead = i / tail.max(1);
            let rest = i % tail.max(1);
            let lead_grid = Grid::cube(extra, n);
            let shift: usize = lead_grid.coords(lead).iter().map(|c| c + 1).sum();
            ((shift + h.cells()[rest] as usize) % n) as u8
        })
        .collect();
    Hypercuboid::new(shape, cells)
}

/// The `(d+1)`-dimensional hypercube whose `j`-th layer is `l` shifted by `j` in symbol space.
pub fn cyclic_development(l: &Layer) -> Hypercuboid {
    let n = l.n();
    let shape = Shape { d: l.d() + 1, n, k: n };
    let cells = l
        .cells()
        .iter()
        .flat_map(|&s| (0..n).map(move |j| ((s as usize + j) % n) as u8))
        .collect();
    Hypercuboid::new(shape, cells).expect("development has the full extent")
}

/// Adds `l` as layer `k + 1` of `h`; `l` must be a layer of `U_H`.
pub fn stack(h: &Hypercuboid, l: &Layer) -> Result<Hypercuboid> {
    if h.k() == h.n() {
        return Err(Error::AlreadyFull);
    }
    is_layer_of(l, &unused_array(h))?.map_err(Error::NotALayer)?;
    Ok(stack_unchecked(h, l))
}

pub(crate) fn stack_unchecked(h: &Hypercuboid, l: &Layer) -> Hypercuboid {
    let k = h.k();
    let shape = Shape { k: k + 1, ..h.shape() };
    let mut cells = Vec::with_capacity(shape.cell_count());
    for line in 0..h.shape().depth_lines() {
        cells.extend_from_slice(h.depth_line(line));
        cells.push(l.cells()[line]);
    }
    Hypercuboid::new(shape, cells).expect("stacked extent")
}

/// Stacks `layers` of a common `(n^d, ..)` array as a `(d+1)`-dimensional hypercuboid.
pub fn stack_layers(d: usize, n: usize, layers: &[Layer]) -> Result<Hypercuboid> {
    let mut h = Hypercuboid::empty(d + 1, n)?;
    for l in layers {
        h = stack(&h, l)?;
    }
    Ok(h)
}
