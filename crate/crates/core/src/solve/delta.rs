use num_rational::Ratio;

use crate::construct::unused_array;
use crate::error::{Error, Result};
use crate::model::{CellSets, Hypercuboid};

/// The least `delta` for which `h` is delta-regular, with a pair attaining it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeltaReport {
    pub delta: Ratio<i64>,
    /// Lexicographically first pair of depth-line coordinates (zero-based,
    /// differing in exactly one place) attaining `delta`; `None` when there is no such pair.
    pub pair: Option<(Vec<usize>, Vec<usize>)>,
    /// `|U_H(x) ∩ U_H(y)|` at `pair`.
    pub intersection: usize,
}

/// `max | n / (n-k)^2 * |U(x) ∩ U(y)| - 1 |` over depth-line coordinates `x, y`
/// that agree in all but one coordinate, in exact rational arithmetic.
pub fn delta_regularity(h: &Hypercuboid) -> Result<DeltaReport> {
    let (n, k) = (h.n(), h.k());
    if k == n {
        return Err(Error::DegenerateDepth);
    }
    let u = unused_array(h);
    let grid = u.grid();
    let denom = ((n - k) * (n - k)) as i64;
    // |n x - D| is maximal at an extreme x; track the first pair in (x, y) order
    let mut best: Option<(i64, usize, usize, usize)> = None;
    for line in grid.lines() {
        let cells: Vec<usize> = line.cells().collect();
        for (a, &x) in cells.iter().enumerate() {
            for &y in &cells[a + 1..] {
                let inter = u.cells()[x].intersection(u.cells()[y]).len();
                let dev = (n as i64 * inter as i64 - denom).abs();
                let better = match best {
                    None => true,
                    Some((bd, bx, by, _)) => dev > bd || (dev == bd && (x, y) < (bx, by)),
                };
                if better {
                    best = Some((dev, x, y, inter));
                }
            }
        }
    }
    Ok(match best {
        None => DeltaReport { delta: Ratio::from_integer(0), pair: None, intersection: 0 },
        Some((dev, x, y, inter)) => DeltaReport {
            delta: Ratio::new(dev, denom),
            pair: Some((grid.coords(x), grid.coords(y))),
            intersection: inter,
        },
    })
}
