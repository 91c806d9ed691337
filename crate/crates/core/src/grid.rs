//! Row-major indexing over `n x n x ... x m` boxes (last index fastest).

use std::fmt;

/// Extents of a multidimensional array stored in canonical linear order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Grid {
    dims: Vec<usize>,
    strides: Vec<usize>,
    len: usize,
}

/// An axis-parallel line: the cells obtained by varying `axis` from `start`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LineRef {
    pub axis: usize,
    pub start: usize,
    pub stride: usize,
    pub len: usize,
}

impl LineRef {
    pub fn cells(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).map(move |t| self.start + t * self.stride)
    }
}

impl Grid {
    pub fn new(dims: Vec<usize>) -> Self {
        let mut strides = vec![1; dims.len()];
        for a in (0..dims.len().saturating_sub(1)).rev() {
            strides[a] = strides[a + 1] * dims[a + 1];
        }
        let len = dims.iter().product();
        Grid { dims, strides, len }
    }

    /// `n` along each of `d` axes.
    pub fn cube(d: usize, n: usize) -> Self {
        Grid::new(vec![n; d])
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn rank(&self) -> usize {
        self.dims.len()
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn stride(&self, axis: usize) -> usize {
        self.strides[axis]
    }

    pub fn index(&self, coords: &[usize]) -> usize {
        debug_assert_eq!(coords.len(), self.dims.len());
        coords
            .iter()
            .zip(&self.strides)
            .map(|(c, s)| c * s)
            .sum()
    }

    /// Checked variant of [`Grid::index`].
    pub fn try_index(&self, coords: &[usize]) -> Option<usize> {
        if coords.len() != self.dims.len() || coords.iter().zip(&self.dims).any(|(c, d)| c >= d) {
            return None;
        }
        Some(self.index(coords))
    }

    pub fn coords(&self, mut index: usize) -> Vec<usize> {
        self.strides
            .iter()
            .map(|&s| {
                let c = index / s;
                index %= s;
                c
            })
            .collect()
    }

    pub fn coord(&self, index: usize, axis: usize) -> usize {
        (index / self.strides[axis]) % self.dims[axis]
    }

    /// The line through `cell` along `axis`.
    pub fn line_through(&self, cell: usize, axis: usize) -> LineRef {
        let start = cell - self.coord(cell, axis) * self.strides[axis];
        LineRef {
            axis,
            start,
            stride: self.strides[axis],
            len: self.dims[axis],
        }
    }

    /// Every axis-parallel line, grouped by axis, each group in canonical order of its start cell.
    pub fn lines(&self) -> Vec<LineRef> {
        let mut out = Vec::new();
        if self.len == 0 {
            return out;
        }
        for axis in 0..self.dims.len() {
            for start in 0..self.len {
                if self.coord(start, axis) == 0 {
                    out.push(LineRef {
                        axis,
                        start,
                        stride: self.strides[axis],
                        len: self.dims[axis],
                    });
                }
            }
        }
        out
    }
}

/// Displays zero-based coordinates as one-based, e.g. `(1,3,2)`.
pub struct OneBased<'a>(pub &'a [usize]);

impl fmt::Display for OneBased<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", c + 1)?;
        }
        write!(f, ")")
    }
}
