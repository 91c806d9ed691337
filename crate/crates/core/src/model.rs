//! Domain types: hypercuboids, set arrays, constraint arrays, layers and partial assignments.
//!
//! Symbols are stored zero-based (`0..n`); the one-based `[n]` view lives at the
//! serialization boundary and in `Display` output.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::grid::{Grid, OneBased};
use crate::symbol_set::{SymbolSet, MAX_ORDER};

/// `d` axes: the first `d - 1` of extent `n`, the last of extent `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Shape {
    pub d: usize,
    pub n: usize,
    pub k: usize,
}

impl Shape {
    pub fn new(d: usize, n: usize, k: usize) -> Result<Self> {
        if d == 0 {
            return Err(Error::Shape("dimension must be at least 1".into()));
        }
        if n == 0 || n > MAX_ORDER {
            return Err(Error::Shape(format!("order must be in 1..={MAX_ORDER}, got {n}")));
        }
        if k > n {
            return Err(Error::Shape(format!("depth {k} exceeds order {n}")));
        }
        Ok(Shape { d, n, k })
    }

    pub fn grid(&self) -> Grid {
        let mut dims = vec![self.n; self.d - 1];
        dims.push(self.k);
        Grid::new(dims)
    }

    /// Number of depth lines, `n^(d-1)`.
    pub fn depth_lines(&self) -> usize {
        self.n.pow((self.d - 1) as u32)
    }

    pub fn cell_count(&self) -> usize {
        self.depth_lines() * self.k
    }
}

fn check_order(n: usize) -> Result<()> {
    if n == 0 || n > MAX_ORDER {
        return Err(Error::Shape(format!("order must be in 1..={MAX_ORDER}, got {n}")));
    }
    Ok(())
}

fn check_len(what: &str, expected: usize, got: usize) -> Result<()> {
    if expected != got {
        return Err(Error::Shape(format!("{what} needs {expected} cells, got {got}")));
    }
    Ok(())
}

/// A Latin hypercuboid candidate of shape `n x ... x n x k`.
///
/// Construction only checks the extent; use [`crate::validate_hypercuboid`]
/// for the Latin line condition.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Hypercuboid {
    shape: Shape,
    cells: Vec<u8>,
}

impl Hypercuboid {
    pub fn new(shape: Shape, cells: Vec<u8>) -> Result<Self> {
        check_len("hypercuboid", shape.cell_count(), cells.len())?;
        Ok(Hypercuboid { shape, cells })
    }

    /// The depth-0 hypercuboid.
    pub fn empty(d: usize, n: usize) -> Result<Self> {
        Ok(Hypercuboid { shape: Shape::new(d, n, 0)?, cells: Vec::new() })
    }

    pub fn shape(&self) -> Shape {
        self.shape
    }

    pub fn d(&self) -> usize {
        self.shape.d
    }

    pub fn n(&self) -> usize {
        self.shape.n
    }

    pub fn k(&self) -> usize {
        self.shape.k
    }

    pub fn grid(&self) -> Grid {
        self.shape.grid()
    }

    pub fn cells(&self) -> &[u8] {
        &self.cells
    }

    pub fn into_cells(self) -> Vec<u8> {
        self.cells
    }

    pub fn get(&self, coords: &[usize]) -> Option<u8> {
        self.grid().try_index(coords).map(|i| self.cells[i])
    }

    /// Symbols along the depth line at `line` (linear index into the `n^(d-1)` base).
    pub fn depth_line(&self, line: usize) -> &[u8] {
        let k = self.shape.k;
        &self.cells[line * k..(line + 1) * k]
    }

    /// The depth-`j` slice as a `(d-1)`-dimensional symbol array.
    pub fn layer(&self, j: usize) -> Layer {
        let k = self.shape.k;
        let cells = (0..self.shape.depth_lines()).map(|l| self.cells[l * k + j]).collect();
        Layer { d: self.shape.d - 1, n: self.shape.n, cells }
    }
}

/// Common view over arrays of symbol sets (`SetArray`, `ConstraintArray`).
pub trait CellSets {
    fn d(&self) -> usize;
    fn n(&self) -> usize;
    fn sets(&self) -> &[SymbolSet];

    fn grid(&self) -> Grid {
        Grid::cube(self.d(), self.n())
    }
}

fn check_sets(n: usize, cells: &[SymbolSet]) -> Result<()> {
    let full = SymbolSet::full(n);
    if let Some(i) = cells.iter().position(|s| !s.is_subset(full)) {
        return Err(Error::Range(format!("cell {i} has symbols outside [1,{n}]")));
    }
    Ok(())
}

/// A `d`-dimensional array of `k`-subsets of `[n]`; an `(n^d,k)`-array when valid.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SetArray {
    d: usize,
    n: usize,
    k: usize,
    cells: Vec<SymbolSet>,
}

impl SetArray {
    pub fn new(d: usize, n: usize, k: usize, cells: Vec<SymbolSet>) -> Result<Self> {
        check_order(n)?;
        if k > n {
            return Err(Error::Shape(format!("cardinality {k} exceeds order {n}")));
        }
        check_len("set array", n.pow(d as u32), cells.len())?;
        check_sets(n, &cells)?;
        Ok(SetArray { d, n, k, cells })
    }

    /// Every cell equal to `[n]`.
    pub fn full(d: usize, n: usize) -> Result<Self> {
        check_order(n)?;
        Ok(SetArray { d, n, k: n, cells: vec![SymbolSet::full(n); n.pow(d as u32)] })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn cells(&self) -> &[SymbolSet] {
        &self.cells
    }

    pub fn get(&self, coords: &[usize]) -> Option<SymbolSet> {
        self.grid().try_index(coords).map(|i| self.cells[i])
    }

    pub fn to_constraints(&self) -> ConstraintArray {
        ConstraintArray { d: self.d, n: self.n, cells: self.cells.clone() }
    }

    /// Removes the symbols of `layer` cellwise, yielding the residual `(n^d, k-1)`
    /// array. `layer` must be a layer of `self`.
    pub fn without_layer(&self, layer: &Layer) -> SetArray {
        let cells = self
            .cells
            .iter()
            .zip(&layer.cells)
            .map(|(s, &x)| {
                let mut s = *s;
                s.remove(x as usize);
                s
            })
            .collect();
        SetArray { d: self.d, n: self.n, k: self.k.saturating_sub(1), cells }
    }
}

impl CellSets for SetArray {
    fn d(&self) -> usize {
        self.d
    }
    fn n(&self) -> usize {
        self.n
    }
    fn sets(&self) -> &[SymbolSet] {
        &self.cells
    }
}

/// A `d`-dimensional array of arbitrary subsets of `[n]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ConstraintArray {
    d: usize,
    n: usize,
    cells: Vec<SymbolSet>,
}

impl ConstraintArray {
    pub fn new(d: usize, n: usize, cells: Vec<SymbolSet>) -> Result<Self> {
        check_order(n)?;
        check_len("constraint array", n.pow(d as u32), cells.len())?;
        check_sets(n, &cells)?;
        Ok(ConstraintArray { d, n, cells })
    }

    pub fn filled(d: usize, n: usize, set: SymbolSet) -> Result<Self> {
        check_order(n)?;
        Self::new(d, n, vec![set; n.pow(d as u32)])
    }

    pub fn cells(&self) -> &[SymbolSet] {
        &self.cells
    }

    pub fn get(&self, coords: &[usize]) -> Option<SymbolSet> {
        self.grid().try_index(coords).map(|i| self.cells[i])
    }

    /// Cellwise complement relative to `[n]`.
    pub fn complement(&self) -> ConstraintArray {
        let cells = self.cells.iter().map(|s| s.complement(self.n)).collect();
        ConstraintArray { d: self.d, n: self.n, cells }
    }
}

impl CellSets for ConstraintArray {
    fn d(&self) -> usize {
        self.d
    }
    fn n(&self) -> usize {
        self.n
    }
    fn sets(&self) -> &[SymbolSet] {
        &self.cells
    }
}

/// One representative per cell of a `d`-dimensional `n x ... x n` array.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Layer {
    d: usize,
    n: usize,
    cells: Vec<u8>,
}

impl Layer {
    pub fn new(d: usize, n: usize, cells: Vec<u8>) -> Result<Self> {
        check_order(n)?;
        check_len("layer", n.pow(d as u32), cells.len())?;
        Ok(Layer { d, n, cells })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn cells(&self) -> &[u8] {
        &self.cells
    }

    pub fn grid(&self) -> Grid {
        Grid::cube(self.d, self.n)
    }

    pub fn get(&self, coords: &[usize]) -> Option<u8> {
        self.grid().try_index(coords).map(|i| self.cells[i])
    }

    /// The same symbols viewed as a depth-1 hypercuboid of dimension `d + 1`.
    pub fn to_hypercuboid(&self) -> Hypercuboid {
        Hypercuboid {
            shape: Shape { d: self.d + 1, n: self.n, k: 1 },
            cells: self.cells.clone(),
        }
    }
}

/// Sparse forced cells for layer search, keyed by zero-based coordinates.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PartialAssignment {
    entries: BTreeMap<Vec<usize>, u8>,
}

impl PartialAssignment {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds a zero-based entry; a coordinate may only be assigned once.
    pub fn insert(&mut self, coords: Vec<usize>, symbol: u8) -> Result<()> {
        if self.entries.contains_key(&coords) {
            return Err(Error::Range(format!("cell {} assigned twice", OneBased(&coords))));
        }
        self.entries.insert(coords, symbol);
        Ok(())
    }

    pub fn with(mut self, coords: Vec<usize>, symbol: u8) -> Result<Self> {
        self.insert(coords, symbol)?;
        Ok(self)
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&[usize], u8)> {
        self.entries.iter().map(|(c, &s)| (c.as_slice(), s))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shape_bounds() {
        assert!(Shape::new(0, 3, 1).is_err());
        assert!(Shape::new(2, 0, 0).is_err());
        assert!(Shape::new(2, 3, 4).is_err());
        assert!(Shape::new(3, 3, 0).is_ok());
    }

    #[test]
    fn extent_mismatch_is_a_shape_error() {
        let s = Shape::new(3, 3, 2).unwrap();
        assert!(matches!(Hypercuboid::new(s, vec![0; 17]), Err(Error::Shape(_))));
        assert!(matches!(Layer::new(2, 3, vec![0; 8]), Err(Error::Shape(_))));
        assert!(matches!(
            SetArray::new(2, 2, 1, vec![SymbolSet::EMPTY; 3]),
            Err(Error::Shape(_))
        ));
    }

    #[test]
    fn depth_lines_are_contiguous() {
        let s = Shape::new(2, 3, 2).unwrap();
        let h = Hypercuboid::new(s, vec![0, 1, 1, 2, 2, 0]).unwrap();
        assert_eq!(h.depth_line(1), &[1, 2]);
        assert_eq!(h.layer(1).cells(), &[1, 2, 0]);
        assert_eq!(h.get(&[2, 0]), Some(2));
    }

    #[test]
    fn partial_assignment_rejects_duplicates() {
        let mut p = PartialAssignment::new();
        p.insert(vec![0, 0], 4).unwrap();
        assert!(p.insert(vec![0, 0], 3).is_err());
    }

    #[test]
    fn set_array_rejects_out_of_range_members() {
        let bad = vec![SymbolSet::singleton(3); 3];
        assert!(matches!(SetArray::new(1, 3, 1, bad), Err(Error::Range(_))));
    }
}
