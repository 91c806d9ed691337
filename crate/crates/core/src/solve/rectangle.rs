use crate::construct::{stack_unchecked, unused_array};
use crate::error::{Error, Result};
use crate::model::{Hypercuboid, Layer};
use crate::symbol_set::SymbolSet;
use crate::validate::validate_hypercuboid;

/// Perfect matching of `sets[i]` to distinct symbols (an SDR) by augmenting paths.
pub fn distinct_representatives(sets: &[SymbolSet], n: usize) -> Option<Vec<usize>> {
    let mut owner: Vec<Option<usize>> = vec![None; n];
    for start in 0..sets.len() {
        let mut seen = SymbolSet::EMPTY;
        if !augment(start, sets, &mut owner, &mut seen) {
            return None;
        }
    }
    let mut rep = vec![usize::MAX; sets.len()];
    for (s, o) in owner.iter().enumerate() {
        if let Some(i) = o {
            rep[*i] = s;
        }
    }
    Some(rep)
}

fn augment(i: usize, sets: &[SymbolSet], owner: &mut [Option<usize>], seen: &mut SymbolSet) -> bool {
    for s in sets[i] {
        if seen.contains(s) {
            continue;
        }
        seen.insert(s);
        match owner[s] {
            None => {
                owner[s] = Some(i);
                return true;
            }
            Some(j) => {
                if augment(j, sets, owner, seen) {
                    owner[s] = Some(i);
                    return true;
                }
            }
        }
    }
    false
}

/// Completes a Latin rectangle (a `d = 2` hypercuboid, depth axis as rows) to a
/// Latin square, one SDR of the columns' unused symbols per new row.
pub fn complete_rectangle(r: &Hypercuboid) -> Result<Hypercuboid> {
    if r.d() != 2 {
        return Err(Error::Shape(format!("rectangle must be 2-dimensional, got d = {}", r.d())));
    }
    validate_hypercuboid(r).map_err(Error::Validation)?;
    let n = r.n();
    let mut h = r.clone();
    while h.k() < n {
        let u = unused_array(&h);
        let rep = distinct_representatives(u.cells(), n)
            .expect("the unused sets of a Latin rectangle always have distinct representatives");
        let row = Layer::new(1, n, rep.into_iter().map(|s| s as u8).collect())?;
        h = stack_unchecked(&h, &row);
    }
    assert!(validate_hypercuboid(&h).is_ok(), "rectangle completion produced an invalid square");
    Ok(h)
}
