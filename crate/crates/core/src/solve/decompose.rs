use std::ops::ControlFlow;

use crate::error::{Error, Result};
use crate::model::{CellSets, Layer, PartialAssignment, SetArray};
use crate::outcome::{Budget, Meter, SolveOutcome, Verdict};
use crate::solve::engine::{Completion, ValueOrder};
use crate::solve::layer::for_each_layer;
use crate::symbol_set::SymbolSet;
use crate::validate::{validate_layer, validate_set_array};

/// Node allowance for each (cell, symbol) support probe at the root and below it.
const ROOT_PROBE_NODES: u64 = 50_000;
const INNER_PROBE_NODES: u64 = 64;

/// Partitions every cell of `a` among `k` layers.
///
/// Layers are unordered, so each level forces the next layer to take the
/// smallest remaining symbol of the first cell. Levels with three or more
/// layers left first probe every (cell, symbol) pair: a symbol that no layer
/// can carry at that cell rules out any decomposition.
pub fn decompose(a: &SetArray, budget: Budget) -> Result<SolveOutcome<Vec<Layer>>> {
    validate_set_array(a).map_err(Error::Validation)?;
    let mut meter = Meter::new(budget);
    let mut layers = Vec::with_capacity(a.k());
    let done = level(a, &mut layers, &mut meter, true)?;
    let verdict = match done {
        Completion::Stopped => {
            check_partition(a, &layers);
            Verdict::Feasible(layers)
        }
        Completion::Exhausted => Verdict::Infeasible,
        Completion::OutOfBudget => Verdict::Unknown,
    };
    Ok(meter.finish(verdict))
}

fn check_partition(a: &SetArray, layers: &[Layer]) {
    assert_eq!(layers.len(), a.k(), "decomposition has the wrong number of layers");
    for (i, set) in a.cells().iter().enumerate() {
        let mut got = SymbolSet::EMPTY;
        for l in layers {
            let s = l.cells()[i] as usize;
            assert!(!got.contains(s), "layers overlap at cell {i}");
            got.insert(s);
        }
        assert_eq!(got, *set, "layers do not partition cell {i}");
    }
    for l in layers {
        assert!(validate_layer(l).is_ok(), "decomposition contains an invalid layer");
    }
}

/// Some (line, symbol) count exceeding the residual depth rules the level out.
fn over_count(a: &SetArray) -> bool {
    let grid = a.grid();
    let mut counts = vec![0usize; a.n()];
    for line in grid.lines() {
        counts.iter_mut().for_each(|c| *c = 0);
        for c in line.cells() {
            for s in a.cells()[c] {
                counts[s] += 1;
                if counts[s] > a.k() {
                    return true;
                }
            }
        }
    }
    false
}

/// True when some (cell, symbol) pair provably lies in no layer.
fn unsupported(a: &SetArray, meter: &mut Meter, per_probe: u64) -> Result<bool> {
    let grid = a.grid();
    for (cell, set) in a.cells().iter().enumerate() {
        for s in *set {
            let forced = PartialAssignment::new().with(grid.coords(cell), s as u8)?;
            let remaining = meter.remaining();
            let cap = remaining.max_nodes.map_or(per_probe, |m| m.min(per_probe));
            let mut probe = Meter::new(Budget { max_nodes: Some(cap), max_time: remaining.max_time });
            let done = for_each_layer(a, &forced, &mut probe, ValueOrder::Ascending, &mut |_, _| {
                ControlFlow::Break(())
            })?;
            meter.charge(probe.nodes());
            if done == Completion::Exhausted {
                return Ok(true);
            }
            if meter.exhausted() {
                return Ok(false);
            }
        }
    }
    Ok(false)
}

fn level(a: &SetArray, layers: &mut Vec<Layer>, meter: &mut Meter, root: bool) -> Result<Completion> {
    match a.k() {
        0 => return Ok(Completion::Stopped),
        1 => {
            let cells = a.cells().iter().map(|s| s.first().expect("cardinality 1") as u8).collect();
            let l = Layer::new(a.d(), a.n(), cells)?;
            if validate_layer(&l).is_ok() {
                layers.push(l);
                return Ok(Completion::Stopped);
            }
            return Ok(Completion::Exhausted);
        }
        _ => {}
    }
    if over_count(a) {
        return Ok(Completion::Exhausted);
    }
    if a.k() >= 3 {
        let per_probe = if root { ROOT_PROBE_NODES } else { INNER_PROBE_NODES };
        if unsupported(a, meter, per_probe)? {
            return Ok(Completion::Exhausted);
        }
        if meter.exhausted() {
            return Ok(Completion::OutOfBudget);
        }
    }
    let first = a.cells()[0].first().expect("nonempty cell");
    let forced = PartialAssignment::new().with(vec![0; a.d()], first as u8)?;
    let mut inner: Result<Completion> = Ok(Completion::Exhausted);
    let done = for_each_layer(a, &forced, meter, ValueOrder::Ascending, &mut |l, meter| {
        layers.push(l.clone());
        match level(&a.without_layer(l), layers, meter, false) {
            Ok(Completion::Exhausted) => {
                layers.pop();
                ControlFlow::Continue(())
            }
            other => {
                inner = other;
                ControlFlow::Break(())
            }
        }
    })?;
    match done {
        Completion::Stopped => inner,
        other => Ok(other),
    }
}
