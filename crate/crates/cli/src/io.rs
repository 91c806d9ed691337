use std::fmt;
use std::fs;
use std::io::Write;
use std::path::Path;
use std::process::ExitCode;
use std::time::Duration;

use lhc::format::{from_json, to_json, Document, Object};
use lhc::{Budget, Error, PartialAssignment, Stats, Verdict};

use crate::args::BudgetArgs;

pub const OK: u8 = 0;
pub const NO: u8 = 1;
pub const UNKNOWN: u8 = 2;
pub const USAGE: u8 = 64;
pub const DATA: u8 = 65;

/// A command that ends with a message on standard error and a nonzero code.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    pub fn usage(message: impl Into<String>) -> Self {
        Failure { code: USAGE, message: message.into() }
    }

    pub fn data(message: impl Into<String>) -> Self {
        Failure { code: DATA, message: message.into() }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::ForcedConflict { .. } => NO,
            _ => DATA,
        };
        Failure { code, message: e.to_string() }
    }
}

pub type Outcome = Result<ExitCode, Failure>;

pub fn read_document(path: &Path) -> Result<Document, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::data(format!("{}: {e}", path.display())))?;
    from_json(&text).map_err(|e| Failure::data(format!("{}: {e}", path.display())))
}

pub fn expect_kind(doc: Document, wanted: &[&str]) -> Result<Object, Failure> {
    if wanted.contains(&doc.object.kind()) {
        Ok(doc.object)
    } else {
        Err(Failure::data(format!("expected {}, found {}", wanted.join(" or "), doc.object.kind())))
    }
}

/// Writes `doc` to `path`, or to standard output when `path` is `None`.
pub fn write_document(doc: &Document, path: Option<&Path>) -> Result<(), Failure> {
    let text = to_json(doc);
    match path {
        Some(p) => fs::write(p, text).map_err(|e| Failure::data(format!("{}: {e}", p.display()))),
        None => std::io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| Failure::data(format!("stdout: {e}"))),
    }
}

/// Shape summary of an object, e.g. `setarray d=2 n=5 k=2`.
pub fn describe(object: &Object) -> String {
    match object {
        Object::Hypercuboid(h) => format!("hypercuboid d={} n={} k={}", h.d(), h.n(), h.k()),
        Object::SetArray(a) => {
            use lhc::CellSets;
            format!("setarray d={} n={} k={}", a.d(), a.n(), a.k())
        }
        Object::ConstraintArray(c) => {
            use lhc::CellSets;
            format!("constraintarray d={} n={}", c.d(), c.n())
        }
        Object::Layer(l) => format!("layer d={} n={}", l.d(), l.n()),
    }
}

/// Writes `doc` and reports where it went: on standard output when writing a
/// file, on standard error when the JSON itself goes to standard output.
pub fn emit(doc: &Document, path: Option<&Path>) -> Result<(), Failure> {
    write_document(doc, path)?;
    match path {
        Some(p) => println!("{} written to {}", describe(&doc.object), p.display()),
        None => eprintln!("{}", describe(&doc.object)),
    }
    Ok(())
}

pub fn budget(args: &BudgetArgs) -> Result<Budget, Failure> {
    let max_time = match args.budget_secs {
        None => None,
        Some(s) if s.is_finite() && s >= 0.0 => Some(Duration::from_secs_f64(s)),
        Some(s) => return Err(Failure::usage(format!("--budget-secs must be a nonnegative number, got {s}"))),
    };
    Ok(Budget { max_nodes: args.budget_nodes, max_time })
}

pub fn report_stats(stats: &Stats) {
    eprintln!("nodes: {}", stats.nodes);
    eprintln!("elapsed: {:.3}s", stats.elapsed.as_secs_f64());
}

pub fn verdict_code<W>(v: &Verdict<W>) -> u8 {
    match v {
        Verdict::Feasible(_) => OK,
        Verdict::Infeasible => NO,
        Verdict::Unknown => UNKNOWN,
    }
}

/// Parses one-based `"(i,j,...)=s"` entries into a zero-based assignment.
pub fn parse_forced(entries: &[String]) -> Result<PartialAssignment, Failure> {
    let mut forced = PartialAssignment::new();
    for entry in entries {
        let bad = || Failure::usage(format!("--forced expects \"(i,j,...)=s\" with one-based values, got {entry:?}"));
        let (cell, symbol) = entry.split_once('=').ok_or_else(bad)?;
        let cell = cell.trim().strip_prefix('(').and_then(|c| c.strip_suffix(')')).ok_or_else(bad)?;
        let coords = cell
            .split(',')
            .map(|c| c.trim().parse::<usize>().ok().filter(|&x| x >= 1).map(|x| x - 1))
            .collect::<Option<Vec<_>>>()
            .ok_or_else(bad)?;
        let symbol = symbol.trim().parse::<u8>().ok().filter(|&s| s >= 1).ok_or_else(bad)?;
        forced.insert(coords, symbol - 1).map_err(|e| Failure::usage(e.to_string()))?;
    }
    Ok(forced)
}
