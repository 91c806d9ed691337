use std::ops::ControlFlow;

use crate::error::{Error, Result};
use crate::grid::OneBased;
use crate::model::{CellSets, Layer, PartialAssignment};
use crate::outcome::{Budget, Meter, SolveOutcome, Verdict};
use crate::solve::engine::{Completion, Engine, ValueOrder};
use crate::validate::is_layer_of;

fn check_forced<A: CellSets + ?Sized>(a: &A, forced: &PartialAssignment) -> Result<Vec<(usize, usize)>> {
    let grid = a.grid();
    let mut out = Vec::with_capacity(forced.len());
    for (coords, s) in forced.iter() {
        let cell = grid.try_index(coords).ok_or_else(|| {
            Error::Shape(format!("forced coordinate {} outside the {}-dimensional array", OneBased(coords), a.d()))
        })?;
        if !a.sets()[cell].contains(s as usize) {
            return Err(Error::ForcedConflict {
                coords: coords.to_vec(),
                symbol: s as usize,
            });
        }
        out.push((cell, s as usize));
    }
    Ok(out)
}

/// Visits every layer of `a` that agrees with `forced`, in search order.
///
/// The visitor receives the meter so it may run nested searches against the
/// same budget.
pub fn for_each_layer<A: CellSets + ?Sized>(
    a: &A,
    forced: &PartialAssignment,
    meter: &mut Meter,
    mut order: ValueOrder<'_>,
    visit: &mut dyn FnMut(&Layer, &mut Meter) -> ControlFlow<()>,
) -> Result<Completion> {
    let forced = check_forced(a, forced)?;
    let (d, n) = (a.d(), a.n());
    let domains: Vec<u64> = a.sets().iter().map(|s| s.bits()).collect();
    let mut engine = Engine::new(d, n, &domains);
    if !engine.consistent() {
        return Ok(Completion::Exhausted);
    }
    for (cell, s) in forced {
        if !engine.assign(cell, s) {
            return Ok(Completion::Exhausted);
        }
    }
    let mut wrap = |cells: &[u8], meter: &mut Meter| {
        let layer = Layer::new(d, n, cells.to_vec()).expect("engine keeps the array extent");
        visit(&layer, meter)
    };
    Ok(engine.run(meter, &mut order, &mut wrap))
}

pub(crate) fn first_layer<A: CellSets + ?Sized>(
    a: &A,
    forced: &PartialAssignment,
    meter: &mut Meter,
    order: ValueOrder<'_>,
) -> Result<Verdict<Layer>> {
    let mut found = None;
    let done = for_each_layer(a, forced, meter, order, &mut |l, _| {
        found = Some(l.clone());
        ControlFlow::Break(())
    })?;
    Ok(match done {
        Completion::Stopped => {
            let l = found.expect("stopped on a layer");
            assert_eq!(is_layer_of(&l, a)?, Ok(()), "layer search returned an invalid layer");
            for (coords, s) in forced.iter() {
                assert_eq!(l.get(coords), Some(s), "layer ignores a forced cell");
            }
            Verdict::Feasible(l)
        }
        Completion::Exhausted => Verdict::Infeasible,
        Completion::OutOfBudget => Verdict::Unknown,
    })
}

/// Finds a layer of `a` (one representative per cell, no repeat on any line)
/// agreeing with `forced`.
///
/// For `d = 2` this is list edge colouring of `K_{n,n}` from the cell lists.
pub fn find_layer<A: CellSets + ?Sized>(
    a: &A,
    forced: &PartialAssignment,
    budget: Budget,
) -> Result<SolveOutcome<Layer>> {
    let mut meter = Meter::new(budget);
    let verdict = first_layer(a, forced, &mut meter, ValueOrder::Ascending)?;
    Ok(meter.finish(verdict))
}

/// Counts all layers of `a` agreeing with `forced`; `None` if the budget ran out.
pub fn count_layers<A: CellSets + ?Sized>(
    a: &A,
    forced: &PartialAssignment,
    budget: Budget,
) -> Result<Option<u64>> {
    let mut meter = Meter::new(budget);
    let mut count = 0u64;
    let done = for_each_layer(a, forced, &mut meter, ValueOrder::Ascending, &mut |_, _| {
        count += 1;
        ControlFlow::Continue(())
    })?;
    Ok((done == Completion::Exhausted).then_some(count))
}
