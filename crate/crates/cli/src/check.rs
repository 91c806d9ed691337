use std::process::ExitCode;

use lhc::format::Object;
use lhc::solve::delta_regularity;
use lhc::{is_layer_of, validate_hypercuboid, validate_layer, validate_set_array, OneBased, Validity};

use crate::args::{CheckArgs, CheckKind};
use crate::io::{describe, expect_kind, read_document, Outcome, NO};

fn verdict(object: &Object, validity: Validity) -> ExitCode {
    match validity {
        Ok(()) => {
            println!("valid {}", describe(object));
            ExitCode::SUCCESS
        }
        Err(v) => {
            println!("invalid {}: {v}", describe(object));
            ExitCode::from(NO)
        }
    }
}

pub fn run(args: &CheckArgs) -> Outcome {
    let doc = read_document(&args.input)?;
    match args.kind {
        CheckKind::Hypercuboid => {
            let object = expect_kind(doc, &["hypercuboid"])?;
            let Object::Hypercuboid(h) = &object else { unreachable!() };
            Ok(verdict(&object, validate_hypercuboid(h)))
        }
        CheckKind::Array => {
            let object = expect_kind(doc, &["setarray", "constraintarray"])?;
            let validity = match &object {
                Object::SetArray(a) => validate_set_array(a),
                // a constraint array has no balance condition beyond parsing
                _ => Ok(()),
            };
            Ok(verdict(&object, validity))
        }
        CheckKind::Layer => {
            let object = expect_kind(doc, &["layer"])?;
            let Object::Layer(l) = &object else { unreachable!() };
            let mut validity = validate_layer(l);
            if let (Ok(()), Some(path)) = (&validity, &args.of) {
                validity = match expect_kind(read_document(path)?, &["setarray", "constraintarray"])? {
                    Object::SetArray(a) => is_layer_of(l, &a)?,
                    Object::ConstraintArray(c) => is_layer_of(l, &c)?,
                    _ => unreachable!(),
                };
            }
            Ok(verdict(&object, validity))
        }
        CheckKind::Delta => {
            let Object::Hypercuboid(h) = expect_kind(doc, &["hypercuboid"])? else { unreachable!() };
            validate_hypercuboid(&h).map_err(|v| crate::io::Failure::data(format!("not a hypercuboid: {v}")))?;
            let report = delta_regularity(&h)?;
            println!("delta: {}", report.delta);
            match &report.pair {
                Some((x, y)) => {
                    println!("pair: {} {}", OneBased(x), OneBased(y));
                    println!("intersection: {}", report.intersection);
                }
                None => println!("pair: none"),
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}
