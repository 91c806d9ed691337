use std::process::ExitCode;

use lhc::construct::{complement, cyclic_development, cyclic_hypercube, lift, nonlayerable_array, pebody_array, prefix, unused_array};
use lhc::format::{Document, Object};

use crate::args::{ConstructArgs, ConstructKind};
use crate::io::{emit, expect_kind, read_document, Failure, Outcome};

fn need(value: Option<usize>, flag: &str, kind: &str) -> Result<usize, Failure> {
    value.ok_or_else(|| Failure::usage(format!("construct {kind} requires {flag}")))
}

fn base(args: &ConstructArgs) -> Result<Object, Failure> {
    Ok(match args.kind {
        ConstructKind::Cyclic => {
            Object::Hypercuboid(cyclic_hypercube(need(args.d, "--d", "cyclic")?, need(args.n, "--n", "cyclic")?)?)
        }
        ConstructKind::Pebody => Object::ConstraintArray(pebody_array(
            need(args.a, "--a", "pebody")?,
            need(args.b, "--b", "pebody")?,
            need(args.c, "--c", "pebody")?,
        )?),
        ConstructKind::Nonlayerable => Object::SetArray(nonlayerable_array(need(args.n, "--n", "nonlayerable")?)?),
        ConstructKind::Lift => {
            let path = args.input.as_deref().ok_or_else(|| Failure::usage("construct lift requires --input"))?;
            let d2 = need(args.d, "--d", "lift")?;
            let Object::Hypercuboid(h) = expect_kind(read_document(path)?, &["hypercuboid"])? else { unreachable!() };
            Object::Hypercuboid(lift(&h, d2)?)
        }
        ConstructKind::Develop => {
            let path = args.input.as_deref().ok_or_else(|| Failure::usage("construct develop requires --input"))?;
            let Object::Layer(l) = expect_kind(read_document(path)?, &["layer"])? else { unreachable!() };
            lhc::validate_layer(&l).map_err(|v| Failure::data(format!("input is not a layer: {v}")))?;
            Object::Hypercuboid(cyclic_development(&l))
        }
    })
}

fn transform(object: Object, args: &ConstructArgs) -> Result<Object, Failure> {
    let mut object = object;
    if let Some(k) = args.prefix {
        let Object::Hypercuboid(h) = &object else {
            return Err(Failure::usage("--prefix applies to hypercuboid results only"));
        };
        object = Object::Hypercuboid(prefix(h, k)?);
    }
    if args.unused {
        let Object::Hypercuboid(h) = &object else {
            return Err(Failure::usage("--unused applies to hypercuboid results only"));
        };
        object = Object::SetArray(unused_array(h));
    }
    if args.complement {
        object = match object {
            Object::SetArray(a) => Object::SetArray(complement(&a)),
            Object::ConstraintArray(c) => Object::ConstraintArray(c.complement()),
            _ => return Err(Failure::usage("--complement applies to array results only")),
        };
    }
    Ok(object)
}

fn generator(args: &ConstructArgs) -> String {
    let mut parts = vec![format!("construct {:?}", args.kind).to_lowercase()];
    for (flag, v) in [("d", args.d), ("n", args.n), ("a", args.a), ("b", args.b), ("c", args.c), ("prefix", args.prefix)] {
        if let Some(v) = v {
            parts.push(format!("--{flag} {v}"));
        }
    }
    if args.unused {
        parts.push("--unused".into());
    }
    if args.complement {
        parts.push("--complement".into());
    }
    parts.join(" ")
}

pub fn run(args: &ConstructArgs) -> Outcome {
    let object = transform(base(args)?, args)?;
    let doc = Document::new(object).with_meta("generator", generator(args));
    emit(&doc, args.out.output.as_deref())?;
    Ok(ExitCode::SUCCESS)
}
