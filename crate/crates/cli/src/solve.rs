use std::process::ExitCode;

use lhc::construct::{stack, stack_layers};
use lhc::format::{Document, Object};
use lhc::solve::{avoidable, complete_rectangle, complete_with, decompose, find_layer, is_completable, is_extendible};
use lhc::{
    is_extension_of, is_layer_of, validate_hypercuboid, validate_layer, CellSets, Hypercuboid, SolveOutcome, Verdict,
};

use crate::args::{SolveArgs, SolveKind};
use crate::io::{budget, emit, expect_kind, parse_forced, read_document, report_stats, verdict_code, Failure, Outcome};

fn checked(ok: bool, what: &str) -> Result<(), Failure> {
    // the library already asserts its witnesses; this guards the file boundary
    if ok {
        Ok(())
    } else {
        Err(Failure::data(format!("internal error: {what} failed re-validation; nothing written")))
    }
}

fn valid_input(h: &Hypercuboid) -> Result<(), Failure> {
    validate_hypercuboid(h).map_err(|v| Failure::data(format!("input is not a Latin hypercuboid: {v}")))
}

/// Reports the outcome and writes the witness, if any, built by `witness`.
fn finish<W>(
    args: &SolveArgs,
    outcome: SolveOutcome<W>,
    witness: impl FnOnce(W) -> Result<Object, Failure>,
) -> Outcome {
    report_stats(&outcome.stats);
    let code = verdict_code(&outcome.verdict);
    let nodes = outcome.stats.nodes;
    match outcome.verdict {
        Verdict::Feasible(w) => {
            let doc = Document::new(witness(w)?)
                .with_meta("generator", format!("solve {:?}", args.kind).to_lowercase())
                .with_meta("nodes", nodes);
            emit(&doc, args.out.output.as_deref())?;
        }
        Verdict::Infeasible => println!("infeasible"),
        Verdict::Unknown => println!("unknown: budget exhausted"),
    }
    Ok(ExitCode::from(code))
}

pub fn run(args: &SolveArgs) -> Outcome {
    let budget = budget(&args.budget)?;
    if !args.forced.is_empty() && args.kind != SolveKind::Layer {
        return Err(Failure::usage("--forced applies to `solve layer` only"));
    }
    let doc = read_document(&args.input)?;
    match args.kind {
        SolveKind::Layer => {
            let forced = parse_forced(&args.forced)?;
            match expect_kind(doc, &["setarray", "constraintarray"])? {
                Object::SetArray(a) => {
                    let out = find_layer(&a, &forced, budget)?;
                    finish(args, out, |l| {
                        checked(is_layer_of(&l, &a)?.is_ok(), "layer")?;
                        Ok(Object::Layer(l))
                    })
                }
                Object::ConstraintArray(c) => {
                    let out = find_layer(&c, &forced, budget)?;
                    finish(args, out, |l| {
                        checked(is_layer_of(&l, &c)?.is_ok(), "layer")?;
                        Ok(Object::Layer(l))
                    })
                }
                _ => unreachable!(),
            }
        }
        SolveKind::Decompose => {
            let Object::SetArray(a) = expect_kind(doc, &["setarray"])? else { unreachable!() };
            let out = decompose(&a, budget)?;
            finish(args, out, |layers| {
                for l in &layers {
                    checked(is_layer_of(l, &a)?.is_ok(), "decomposition layer")?;
                }
                let stacked = stack_layers(a.d(), a.n(), &layers)?;
                checked(validate_hypercuboid(&stacked).is_ok(), "decomposition")?;
                Ok(Object::Hypercuboid(stacked))
            })
        }
        SolveKind::Extend => {
            let Object::Hypercuboid(h) = expect_kind(doc, &["hypercuboid"])? else { unreachable!() };
            valid_input(&h)?;
            let out = is_extendible(&h, budget)?;
            finish(args, out, |l| {
                let grown = stack(&h, &l)?;
                checked(validate_hypercuboid(&grown).is_ok() && is_extension_of(&grown, &h)?, "extension")?;
                Ok(Object::Hypercuboid(grown))
            })
        }
        SolveKind::Complete => {
            let Object::Hypercuboid(h) = expect_kind(doc, &["hypercuboid"])? else { unreachable!() };
            valid_input(&h)?;
            let out = is_completable(&h, budget)?;
            finish(args, out, |layers| {
                let full = complete_with(&h, &layers);
                checked(
                    full.k() == full.n() && validate_hypercuboid(&full).is_ok() && is_extension_of(&full, &h)?,
                    "completion",
                )?;
                Ok(Object::Hypercuboid(full))
            })
        }
        SolveKind::Avoid => {
            let m = match expect_kind(doc, &["constraintarray", "setarray"])? {
                Object::ConstraintArray(m) => m,
                Object::SetArray(a) => a.to_constraints(),
                _ => unreachable!(),
            };
            let out = avoidable(&m, budget)?;
            finish(args, out, |l| {
                let disjoint = l.cells().iter().zip(m.cells()).all(|(&s, set)| !set.contains(s as usize));
                checked(validate_layer(&l).is_ok() && disjoint, "avoiding square")?;
                Ok(Object::Layer(l))
            })
        }
        SolveKind::Rectangle => {
            let Object::Hypercuboid(r) = expect_kind(doc, &["hypercuboid"])? else { unreachable!() };
            let square = complete_rectangle(&r)?;
            checked(validate_hypercuboid(&square).is_ok() && is_extension_of(&square, &r)?, "completed square")?;
            let out = SolveOutcome { verdict: Verdict::Feasible(square), stats: Default::default() };
            finish(args, out, |sq| Ok(Object::Hypercuboid(sq)))
        }
    }
}
