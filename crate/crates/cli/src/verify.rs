use std::process::ExitCode;

use lhc::format::{render_text, Object};
use lhc::solve::find_layer;
use lhc::verify::{enumerate_latin_squares, isotopy_classes, naive_find_layer};
use lhc::Budget;

use crate::args::{OracleKind, VerifyArgs};
use crate::io::{expect_kind, parse_forced, read_document, Failure, Outcome, NO};

pub fn run(args: &VerifyArgs) -> Outcome {
    if !args.slow {
        return Err(Failure::usage("verify runs slow oracles; pass --slow to confirm"));
    }
    let order = || args.n.ok_or_else(|| Failure::usage("this oracle requires --n"));
    match args.kind {
        OracleKind::Enumerate => {
            let n = order()?;
            println!("latin squares of order {n}: {}", enumerate_latin_squares(n)?.count());
            Ok(ExitCode::SUCCESS)
        }
        OracleKind::Isotopy => {
            let n = order()?;
            let reps = isotopy_classes(n)?;
            println!("isotopy classes of order {n}: {}", reps.len());
            for (i, sq) in reps.into_iter().enumerate() {
                println!("\nclass {}:", i + 1);
                print!("{}", render_text(&Object::Hypercuboid(sq))?);
            }
            Ok(ExitCode::SUCCESS)
        }
        OracleKind::Layer => {
            let path = args.input.as_deref().ok_or_else(|| Failure::usage("verify layer requires an input file"))?;
            let forced = parse_forced(&args.forced)?;
            let (fast, slow) = match expect_kind(read_document(path)?, &["setarray", "constraintarray"])? {
                Object::SetArray(a) => (find_layer(&a, &forced, Budget::UNLIMITED)?, naive_find_layer(&a, &forced)?),
                Object::ConstraintArray(c) => {
                    (find_layer(&c, &forced, Budget::UNLIMITED)?, naive_find_layer(&c, &forced)?)
                }
                _ => unreachable!(),
            };
            let (f, s) = (fast.verdict.name(), slow.verdict.name());
            println!("solver: {f}\nnaive: {s}");
            if f == s {
                println!("agree");
                Ok(ExitCode::SUCCESS)
            } else {
                println!("DISAGREE");
                Ok(ExitCode::from(NO))
            }
        }
    }
}
