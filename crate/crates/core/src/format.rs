//! JSON interchange format and the text grid rendering.
//!
//! ```json
//! {"kind":"hypercuboid","d":3,"n":5,"k":2,"cells":[1,2,...],"meta":{"seed":7}}
//! ```
//!
//! `cells` is a flat list in canonical order (last index fastest) of one-based
//! symbols, or of ascending one-based symbol lists for `setarray` and
//! `constraintarray`. `k` is present exactly for `hypercuboid` and `setarray`.
//! Parsing is strict: unknown fields, out-of-range symbols, wrong cell counts
//! and unsorted or repeated set entries are rejected.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use crate::error::{Error, Result};
use crate::grid::Grid;
use crate::model::{CellSets, ConstraintArray, Hypercuboid, Layer, SetArray, Shape};
use crate::symbol_set::{SymbolSet, MAX_ORDER};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Object {
    Hypercuboid(Hypercuboid),
    SetArray(SetArray),
    ConstraintArray(ConstraintArray),
    Layer(Layer),
}

impl Object {
    pub fn kind(&self) -> &'static str {
        match self {
            Object::Hypercuboid(_) => "hypercuboid",
            Object::SetArray(_) => "setarray",
            Object::ConstraintArray(_) => "constraintarray",
            Object::Layer(_) => "layer",
        }
    }
}

/// An object plus free-form metadata (seed, generator, version, ...).
#[derive(Debug, Clone, PartialEq)]
pub struct Document {
    pub object: Object,
    pub meta: Map<String, Value>,
}

impl Document {
    pub fn new(object: Object) -> Self {
        Document { object, meta: Map::new() }
    }

    pub fn with_meta(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.meta.insert(key.to_string(), value.into());
        self
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Raw {
    kind: String,
    d: usize,
    n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    k: Option<usize>,
    cells: Vec<Value>,
    #[serde(default)]
    meta: Map<String, Value>,
}

fn symbols_out(cells: &[u8]) -> Vec<Value> {
    cells.iter().map(|&s| Value::from(s as u64 + 1)).collect()
}

fn sets_out(cells: &[SymbolSet]) -> Vec<Value> {
    cells
        .iter()
        .map(|s| Value::Array(s.iter().map(|x| Value::from(x as u64 + 1)).collect()))
        .collect()
}

/// Serializes as one line of JSON followed by a newline.
pub fn to_json(doc: &Document) -> String {
    let raw = match &doc.object {
        Object::Hypercuboid(h) => Raw {
            kind: "hypercuboid".into(),
            d: h.d(),
            n: h.n(),
            k: Some(h.k()),
            cells: symbols_out(h.cells()),
            meta: doc.meta.clone(),
        },
        Object::SetArray(a) => Raw {
            kind: "setarray".into(),
            d: a.d(),
            n: a.n(),
            k: Some(a.k()),
            cells: sets_out(a.cells()),
            meta: doc.meta.clone(),
        },
        Object::ConstraintArray(c) => Raw {
            kind: "constraintarray".into(),
            d: c.d(),
            n: c.n(),
            k: None,
            cells: sets_out(c.cells()),
            meta: doc.meta.clone(),
        },
        Object::Layer(l) => Raw {
            kind: "layer".into(),
            d: l.d(),
            n: l.n(),
            k: None,
            cells: symbols_out(l.cells()),
            meta: doc.meta.clone(),
        },
    };
    let mut s = serde_json::to_string(&raw).expect("plain data serializes");
    s.push('\n');
    s
}

fn perr(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

fn symbol_in(v: &Value, n: usize, at: usize) -> Result<usize> {
    let x = v.as_u64().ok_or_else(|| perr(format!("cell {at}: expected a positive integer")))?;
    if x == 0 || x as usize > n {
        return Err(perr(format!("cell {at}: symbol {x} outside [1,{n}]")));
    }
    Ok(x as usize - 1)
}

fn symbols_in(cells: &[Value], n: usize) -> Result<Vec<u8>> {
    cells.iter().enumerate().map(|(i, v)| symbol_in(v, n, i).map(|s| s as u8)).collect()
}

fn sets_in(cells: &[Value], n: usize) -> Result<Vec<SymbolSet>> {
    cells
        .iter()
        .enumerate()
        .map(|(i, v)| {
            let list = v.as_array().ok_or_else(|| perr(format!("cell {i}: expected a list")))?;
            let mut set = SymbolSet::EMPTY;
            let mut prev = None;
            for x in list {
                let s = symbol_in(x, n, i)?;
                if prev.is_some_and(|p| s <= p) {
                    return Err(perr(format!("cell {i}: set entries must be strictly ascending")));
                }
                prev = Some(s);
                set.insert(s);
            }
            Ok(set)
        })
        .collect()
}

fn expected_cells(d: usize, n: usize) -> Result<usize> {
    n.checked_pow(d as u32).ok_or_else(|| perr("array too large"))
}

/// Parses a strict JSON document.
pub fn from_json(text: &str) -> Result<Document> {
    let text = text.strip_prefix('\u{feff}').map_or(Ok(text), |_| Err(perr("byte order mark not allowed")))?;
    let raw: Raw = serde_json::from_str(text).map_err(|e| perr(e.to_string()))?;
    let n = raw.n;
    if n == 0 || n > MAX_ORDER {
        return Err(perr(format!("order must be in 1..={MAX_ORDER}")));
    }
    let wrap = |e: Error| match e {
        Error::Parse(_) => e,
        other => perr(other.to_string()),
    };
    let check_count = |expected: usize| {
        if raw.cells.len() != expected {
            Err(perr(format!("expected {expected} cells, got {}", raw.cells.len())))
        } else {
            Ok(())
        }
    };
    let object = match raw.kind.as_str() {
        "hypercuboid" => {
            let k = raw.k.ok_or_else(|| perr("hypercuboid needs k"))?;
            let shape = Shape::new(raw.d, n, k).map_err(wrap)?;
            check_count(shape.cell_count())?;
            Object::Hypercuboid(Hypercuboid::new(shape, symbols_in(&raw.cells, n)?).map_err(wrap)?)
        }
        "setarray" => {
            let k = raw.k.ok_or_else(|| perr("setarray needs k"))?;
            check_count(expected_cells(raw.d, n)?)?;
            Object::SetArray(SetArray::new(raw.d, n, k, sets_in(&raw.cells, n)?).map_err(wrap)?)
        }
        "constraintarray" => {
            if raw.k.is_some() {
                return Err(perr("constraintarray takes no k"));
            }
            check_count(expected_cells(raw.d, n)?)?;
            Object::ConstraintArray(ConstraintArray::new(raw.d, n, sets_in(&raw.cells, n)?).map_err(wrap)?)
        }
        "layer" => {
            if raw.k.is_some() {
                return Err(perr("layer takes no k"));
            }
            check_count(expected_cells(raw.d, n)?)?;
            Object::Layer(Layer::new(raw.d, n, symbols_in(&raw.cells, n)?).map_err(wrap)?)
        }
        other => return Err(perr(format!("unknown kind {other:?}"))),
    };
    Ok(Document { object, meta: raw.meta })
}

fn render_blocks<T>(grid: &Grid, cells: &[T], cell: impl Fn(&T) -> String, out: &mut String) {
    let dims = grid.dims();
    let (blocks, rows, cols) = match dims.len() {
        0 => (1, 1, 1),
        1 => (1, 1, dims[0]),
        2 => (1, dims[0], dims[1]),
        _ => (dims[0], dims[1], dims[2]),
    };
    for b in 0..blocks {
        if b > 0 {
            out.push('\n');
        }
        for r in 0..rows {
            let row: Vec<String> = (0..cols).map(|c| cell(&cells[(b * rows + r) * cols + c])).collect();
            let _ = writeln!(out, "{}", row.join(" "));
        }
    }
}

/// Text grid for display (dimension at most 3): one block per layer, rows of
/// space-separated symbols; sets as `{1,3}`.
pub fn render_text(object: &Object) -> Result<String> {
    let mut out = String::new();
    match object {
        Object::Hypercuboid(h) => {
            if h.d() > 3 {
                return Err(Error::Range("text rendering supports d <= 3".into()));
            }
            if h.d() == 3 {
                for j in 0..h.k() {
                    if j > 0 {
                        out.push('\n');
                    }
                    let l = h.layer(j);
                    render_blocks(&l.grid(), l.cells(), |s| (s + 1).to_string(), &mut out);
                }
            } else {
                // one row per layer
                for j in 0..h.k() {
                    let l = h.layer(j);
                    let row: Vec<String> = l.cells().iter().map(|s| (s + 1).to_string()).collect();
                    let _ = writeln!(out, "{}", row.join(" "));
                }
            }
        }
        Object::Layer(l) => {
            if l.d() > 3 {
                return Err(Error::Range("text rendering supports d <= 3".into()));
            }
            render_blocks(&l.grid(), l.cells(), |s| (s + 1).to_string(), &mut out);
        }
        Object::SetArray(a) => {
            if a.d() > 3 {
                return Err(Error::Range("text rendering supports d <= 3".into()));
            }
            render_blocks(&a.grid(), a.cells(), |s| s.to_string(), &mut out);
        }
        Object::ConstraintArray(c) => {
            if c.d() > 3 {
                return Err(Error::Range("text rendering supports d <= 3".into()));
            }
            render_blocks(&c.grid(), c.cells(), |s| s.to_string(), &mut out);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{cyclic_hypercube, nonlayerable_array, pebody_array};

    #[test]
    fn hypercuboid_json_shape() {
        let h = cyclic_hypercube(2, 2).unwrap();
        let doc = Document::new(Object::Hypercuboid(h)).with_meta("seed", 3);
        assert_eq!(
            to_json(&doc),
            "{\"kind\":\"hypercuboid\",\"d\":2,\"n\":2,\"k\":2,\"cells\":[1,2,2,1],\"meta\":{\"seed\":3}}\n"
        );
    }

    #[test]
    fn strict_rejections() {
        let bad = [
            r#"{"kind":"layer","d":1,"n":3,"cells":[1,2,4],"meta":{}}"#,
            r#"{"kind":"layer","d":1,"n":3,"cells":[1,2],"meta":{}}"#,
            r#"{"kind":"layer","d":1,"n":3,"k":1,"cells":[1,2,3]}"#,
            r#"{"kind":"setarray","d":1,"n":3,"k":2,"cells":[[2,1],[1,3],[2,3]]}"#,
            r#"{"kind":"setarray","d":1,"n":3,"k":2,"cells":[[1,1],[1,3],[2,3]]}"#,
            r#"{"kind":"hypercuboid","d":1,"n":3,"cells":[1]}"#,
            r#"{"kind":"cube","d":1,"n":3,"cells":[1]}"#,
            r#"{"kind":"layer","d":1,"n":3,"cells":[1,2,3],"extra":0}"#,
            "\u{feff}{\"kind\":\"layer\",\"d\":1,\"n\":1,\"cells\":[1]}",
        ];
        for text in bad {
            assert!(matches!(from_json(text), Err(Error::Parse(_))), "accepted {text}");
        }
        assert!(from_json(r#"{"kind":"layer","d":1,"n":3,"cells":[3,1,2]}"#).is_ok());
    }

    #[test]
    fn every_kind_round_trips() {
        let objects = [
            Object::Hypercuboid(cyclic_hypercube(3, 4).unwrap()),
            Object::SetArray(nonlayerable_array(5).unwrap()),
            Object::ConstraintArray(pebody_array(1, 1, 2).unwrap()),
            Object::Layer(cyclic_hypercube(3, 3).unwrap().layer(1)),
        ];
        for o in objects {
            let doc = Document::new(o).with_meta("generator", "test");
            assert_eq!(from_json(&to_json(&doc)).unwrap(), doc);
        }
    }

    #[test]
    fn text_grid() {
        let h = cyclic_hypercube(2, 3).unwrap();
        assert_eq!(render_text(&Object::Hypercuboid(h)).unwrap(), "1 2 3\n2 3 1\n3 1 2\n");
        let m = pebody_array(1, 1, 2).unwrap();
        let t = render_text(&Object::ConstraintArray(m)).unwrap();
        assert_eq!(t.lines().next().unwrap(), "{1} {} {} {}");
    }
}
