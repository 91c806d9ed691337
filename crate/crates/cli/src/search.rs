use std::process::ExitCode;

use lhc::format::{Document, Object};
use lhc::solve::{compute_threshold, search, Basis, Kind, Mode, SearchOptions, Threshold};
use lhc::{Hypercuboid, Verdict};
use serde_json::json;

use crate::args::{ModeArg, PropertyArg, SearchArgs, SearchKind};
use crate::io::{budget, emit, report_stats, verdict_code, Failure, Outcome, NO, UNKNOWN};

fn describe_basis(basis: &Basis) -> String {
    match basis {
        Basis::Shortcut(reason) => format!("shortcut: {reason}"),
        Basis::Exhaustive { cuboids } => format!("exhaustive, {cuboids} cuboids"),
        Basis::Random { samples } => format!("random, {samples} samples"),
    }
}

fn basis_meta(basis: &Basis) -> serde_json::Value {
    match basis {
        Basis::Shortcut(reason) => json!({ "shortcut": reason }),
        Basis::Exhaustive { cuboids } => json!({ "exhaustive_cuboids": cuboids }),
        Basis::Random { samples } => json!({ "random_samples": samples }),
    }
}

fn options(args: &SearchArgs) -> Result<SearchOptions, Failure> {
    let budget = budget(&args.budget)?;
    let mode = match args.mode {
        ModeArg::Exhaustive => Mode::Exhaustive,
        ModeArg::Random if budget.max_nodes.is_none() && budget.max_time.is_none() => {
            return Err(Failure::usage("--mode random needs --budget-nodes or --budget-secs"));
        }
        ModeArg::Random => Mode::Random { seed: args.seed },
    };
    let threads = match args.parallel {
        Some(0) => return Err(Failure::usage("--parallel needs at least one thread")),
        Some(t) => t,
        None => 1,
    };
    Ok(SearchOptions { mode, budget, threads, shortcuts: !args.no_shortcuts })
}

fn write_witness(args: &SearchArgs, kind: Kind, h: Hypercuboid, basis: &Basis, nodes: u64) -> Result<(), Failure> {
    let mut doc = Document::new(Object::Hypercuboid(h))
        .with_meta("generator", "search")
        .with_meta("property", kind.label())
        .with_meta("basis", basis_meta(basis))
        .with_meta("nodes", nodes);
    if let Mode::Random { seed } = options(args)?.mode {
        doc = doc.with_meta("seed", seed);
    }
    emit(&doc, args.out.output.as_deref())
}

pub fn run(args: &SearchArgs) -> Outcome {
    let opts = options(args)?;
    let (d, n) = (args.d, args.n);
    match args.kind {
        SearchKind::Noncompletable | SearchKind::Nonextendible => {
            let kind = if args.kind == SearchKind::Noncompletable { Kind::Noncompletable } else { Kind::Nonextendible };
            let k = args.k.ok_or_else(|| Failure::usage("this search requires --k"))?;
            let report = search(kind, d, n, k, &opts)?;
            report_stats(&report.outcome.stats);
            let verdict = report.outcome.verdict.name();
            println!("{} d={d} n={n} k={k}: {verdict} ({})", kind.label(), describe_basis(&report.basis));
            let code = verdict_code(&report.outcome.verdict);
            if let Verdict::Feasible(h) = report.outcome.verdict {
                write_witness(args, kind, h, &report.basis, report.outcome.stats.nodes)?;
            }
            Ok(ExitCode::from(code))
        }
        SearchKind::Threshold => {
            let kind = match args.property {
                Some(PropertyArg::Nc) => Kind::Noncompletable,
                Some(PropertyArg::Ne) => Kind::Nonextendible,
                None => return Err(Failure::usage("search threshold requires --kind NC|NE")),
            };
            if opts.mode != Mode::Exhaustive {
                return Err(Failure::usage("search threshold is exhaustive only"));
            }
            let kmax = args.kmax.ok_or_else(|| Failure::usage("search threshold requires --kmax"))?;
            let report = compute_threshold(kind, d, n, kmax, &opts)?;
            report_stats(&report.stats);
            for (k, verdict, basis) in &report.steps {
                println!("k={k}: {verdict} ({})", describe_basis(basis));
            }
            match report.result {
                Threshold::Found { k, witness } => {
                    println!("{}({d},{n}) = {k}", kind.label());
                    let basis = report.steps.last().map(|s| s.2).expect("a found depth has a step");
                    write_witness(args, kind, witness, &basis, report.stats.nodes)?;
                    Ok(ExitCode::SUCCESS)
                }
                Threshold::AllGood(kmax) => {
                    println!("no witness for k <= {kmax}: {}({d},{n}) > {kmax}", kind.label());
                    Ok(ExitCode::from(NO))
                }
                Threshold::Unknown { last_decided } => {
                    println!("unknown: budget exhausted after deciding k <= {last_decided}");
                    Ok(ExitCode::from(UNKNOWN))
                }
            }
        }
    }
}
