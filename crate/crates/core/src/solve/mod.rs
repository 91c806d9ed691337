//! Complete decision procedures over layers.
//!
//! Every `Infeasible` verdict comes from an exhausted search; a budget that
//! runs out yields `Unknown`.

mod decompose;
mod delta;
pub mod engine;
mod layer;
mod rectangle;
mod reps;
mod search;

pub use decompose::decompose;
pub use delta::{delta_regularity, DeltaReport};
pub use engine::{Completion, ValueOrder};
pub use layer::{count_layers, find_layer, for_each_layer};
pub use rectangle::{complete_rectangle, distinct_representatives};
pub use reps::isotopy_representatives;
pub use search::{
    compute_threshold, search, search_noncompletable, search_nonextendible, Basis, Kind, Mode,
    SearchOptions, SearchReport, Threshold, ThresholdReport,
};

use crate::construct::{stack, stack_unchecked, unused_array};
use crate::error::{Error, Result};
use crate::model::{CellSets, ConstraintArray, Hypercuboid, Layer, PartialAssignment, SetArray};
use crate::outcome::{Budget, SolveOutcome, Verdict};
use crate::validate::{is_extension_of, validate_hypercuboid};

/// A layer of `U_H`, i.e. a new last layer for `h`.
pub fn is_extendible(h: &Hypercuboid, budget: Budget) -> Result<SolveOutcome<Layer>> {
    if h.k() == h.n() {
        return Err(Error::AlreadyFull);
    }
    let out = find_layer(&unused_array(h), &PartialAssignment::new(), budget)?;
    if let Some(l) = out.witness() {
        let ext = stack(h, l)?;
        assert!(validate_hypercuboid(&ext).is_ok() && is_extension_of(&ext, h)?);
    }
    Ok(out)
}

/// A decomposition of `U_H` into `n - k` layers, i.e. a completion of `h`.
pub fn is_completable(h: &Hypercuboid, budget: Budget) -> Result<SolveOutcome<Vec<Layer>>> {
    let out = decompose(&unused_array(h), budget)?;
    if let Some(layers) = out.witness() {
        let full = complete_with(h, layers);
        assert!(
            full.k() == full.n() && validate_hypercuboid(&full).is_ok() && is_extension_of(&full, h)?,
            "completion certificate failed validation"
        );
    }
    Ok(out)
}

/// Stacks decomposition layers of `U_H` onto `h`.
pub fn complete_with(h: &Hypercuboid, layers: &[Layer]) -> Hypercuboid {
    layers.iter().fold(h.clone(), |acc, l| stack_unchecked(&acc, l))
}

/// A Latin square `L` with `L[i,j]` outside `M[i,j]` for every cell.
pub fn avoidable(m: &ConstraintArray, budget: Budget) -> Result<SolveOutcome<Layer>> {
    if m.d() != 2 {
        return Err(Error::Shape(format!("avoidability is defined for d = 2, got d = {}", m.d())));
    }
    let out = find_layer(&m.complement(), &PartialAssignment::new(), budget)?;
    if let Verdict::Feasible(l) = &out.verdict {
        assert!(l.cells().iter().zip(m.cells()).all(|(&s, set)| !set.contains(s as usize)));
    }
    Ok(out)
}

/// First cell (canonical order) where `m` and `a` intersect.
pub fn intersects(m: &ConstraintArray, a: &SetArray) -> Result<Option<Vec<usize>>> {
    if m.d() != a.d() || m.n() != a.n() {
        return Err(Error::Shape("arrays differ in dimension or order".into()));
    }
    let grid = m.grid();
    Ok(m
        .cells()
        .iter()
        .zip(a.cells())
        .position(|(x, y)| !x.intersection(*y).is_empty())
        .map(|i| grid.coords(i)))
}
