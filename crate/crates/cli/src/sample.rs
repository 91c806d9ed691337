use std::fs;
use std::process::ExitCode;

use lhc::format::{Document, Object};
use lhc::sample::{random_hypercuboid, random_latin_square, random_realisable_array, Seed};
use lhc::{validate_hypercuboid, validate_set_array, SolveOutcome, Stats, Verdict};

use crate::args::{SampleArgs, SampleKind};
use crate::io::{budget, describe, report_stats, write_document, Failure, Outcome, UNKNOWN};

fn draw(args: &SampleArgs, seed: Seed) -> Result<SolveOutcome<Object>, Failure> {
    let budget = budget(&args.budget)?;
    let k = || args.k.ok_or_else(|| Failure::usage("sampling cuboids and arrays requires --k"));
    Ok(match args.kind {
        SampleKind::Square => {
            let sq = random_latin_square(args.n, seed)?;
            SolveOutcome { verdict: Verdict::Feasible(Object::Hypercuboid(sq)), stats: Stats::default() }
        }
        SampleKind::Cuboid => random_hypercuboid(args.d, args.n, k()?, seed, budget)?.map(Object::Hypercuboid),
        SampleKind::Array => random_realisable_array(args.d, args.n, k()?, seed, budget)?.map(Object::SetArray),
    })
}

fn kind_name(kind: SampleKind) -> &'static str {
    match kind {
        SampleKind::Square => "square",
        SampleKind::Cuboid => "cuboid",
        SampleKind::Array => "array",
    }
}

fn valid(object: &Object) -> bool {
    match object {
        Object::Hypercuboid(h) => validate_hypercuboid(h).is_ok(),
        Object::SetArray(a) => validate_set_array(a).is_ok(),
        _ => false,
    }
}

pub fn run(args: &SampleArgs) -> Outcome {
    if args.count == 0 {
        return Err(Failure::usage("--count must be at least 1"));
    }
    let dir = match (&args.out.output, args.count) {
        (Some(p), c) if c > 1 => {
            fs::create_dir_all(p).map_err(|e| Failure::data(format!("{}: {e}", p.display())))?;
            Some(p.clone())
        }
        _ => None,
    };
    let mut total = Stats::default();
    let mut unknown = 0;
    for i in 0..args.count {
        let seed = Seed(args.seed).offset(i);
        let out = draw(args, seed)?;
        total.absorb(out.stats);
        let object = match out.verdict {
            Verdict::Feasible(o) => o,
            Verdict::Infeasible => return Err(Failure::data("no such object exists")),
            Verdict::Unknown => {
                eprintln!("seed {}: unknown, budget exhausted", seed.0);
                unknown += 1;
                continue;
            }
        };
        if !valid(&object) {
            return Err(Failure::data(format!("internal error: sample for seed {} failed validation", seed.0)));
        }
        let name = format!("{}-{}", kind_name(args.kind), seed.0);
        let doc = Document::new(object)
            .with_meta("generator", format!("sample {}", kind_name(args.kind)))
            .with_meta("seed", seed.0);
        match (&dir, &args.out.output) {
            (Some(dir), _) => {
                let path = dir.join(format!("{name}.json"));
                write_document(&doc, Some(&path))?;
                println!("{} written to {}", describe(&doc.object), path.display());
            }
            (None, Some(path)) => {
                write_document(&doc, Some(path))?;
                println!("{} written to {}", describe(&doc.object), path.display());
            }
            (None, None) => write_document(&doc, None)?,
        }
    }
    report_stats(&total);
    Ok(if unknown > 0 { ExitCode::from(UNKNOWN) } else { ExitCode::SUCCESS })
}
