mod common;

use lhc::construct::{complement, pebody_array, unused_array};
use lhc::solve::{find_layer, isotopy_representatives};
use lhc::verify::{
    apply_isotopy, enumerate_latin_squares, isotopy_canonical, isotopy_classes, naive_find_layer,
    permutations,
};
use lhc::{Budget, CellSets, ConstraintArray, PartialAssignment, SymbolSet};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_xoshiro::SplitMix64;

use common::{any_square_fits, random_constraints};

#[test]
fn order_four_enumeration_matches_reduced_count() {
    let all: Vec<_> = enumerate_latin_squares(4).unwrap().collect();
    let reduced = all
        .iter()
        .filter(|h| lhc::verify::is_reduced(h.cells(), 4))
        .count();
    assert_eq!(reduced, 4);
    // n! (n-1)! times the reduced count
    assert_eq!(all.len(), 24 * 6 * reduced);
    assert_eq!(all.len(), 576);
    let three = enumerate_latin_squares(3).unwrap().count();
    assert_eq!(three, 12);
}

#[test]
fn order_five_enumeration_matches_reduced_count() {
    let mut total = 0;
    let mut reduced = 0;
    for sq in enumerate_latin_squares(5).unwrap() {
        total += 1;
        if lhc::verify::is_reduced(sq.cells(), 5) {
            reduced += 1;
        }
    }
    assert_eq!(reduced, 56);
    assert_eq!(total, 120 * 24 * 56);
}

#[test]
fn stored_representatives_match_the_classifier() {
    // frozen class counts for orders 1..=5
    let counts = [1, 1, 1, 2, 2];
    for n in 1..=5 {
        let classes = isotopy_classes(n).unwrap();
        assert_eq!(classes.len(), counts[n - 1], "order {n}");
        let stored = isotopy_representatives(n).unwrap();
        let stored: Vec<Vec<u8>> = stored.iter().map(|l| l.cells().to_vec()).collect();
        let computed: Vec<Vec<u8>> = classes.iter().map(|h| h.cells().to_vec()).collect();
        assert_eq!(stored, computed, "order {n}");
        for rep in &classes {
            assert!(lhc::validate_hypercuboid(rep).is_ok());
        }
    }
    assert!(isotopy_representatives(6).is_none());
}

#[test]
fn representatives_are_minimal_under_every_isotopy_up_to_order_four() {
    for n in 1..=4 {
        let perms = permutations(n);
        for rep in isotopy_classes(n).unwrap() {
            for r in &perms {
                for c in &perms {
                    for s in &perms {
                        assert!(apply_isotopy(rep.cells(), n, r, c, s).as_slice() >= rep.cells());
                    }
                }
            }
        }
    }
}

#[test]
fn representatives_are_minimal_under_sampled_isotopies_at_order_five() {
    let mut rng = SplitMix64::seed_from_u64(5);
    let mut p: Vec<usize> = (0..5).collect();
    for rep in isotopy_classes(5).unwrap() {
        for _ in 0..3000 {
            p.shuffle(&mut rng);
            let r = p.clone();
            p.shuffle(&mut rng);
            let c = p.clone();
            p.shuffle(&mut rng);
            let moved = apply_isotopy(rep.cells(), 5, &r, &c, &p);
            assert!(moved.as_slice() >= rep.cells());
            assert_eq!(isotopy_canonical(&moved, 5), rep.cells());
        }
    }
}

#[test]
fn every_order_four_square_reaches_a_stored_class() {
    let reps: Vec<Vec<u8>> = isotopy_classes(4).unwrap().into_iter().map(|h| h.into_cells()).collect();
    for sq in enumerate_latin_squares(4).unwrap() {
        assert!(reps.contains(&isotopy_canonical(sq.cells(), 4)));
    }
}

fn corpus() -> Vec<ConstraintArray> {
    let mut out = Vec::new();
    for n in 1..=4 {
        out.push(ConstraintArray::filled(2, n, SymbolSet::EMPTY).unwrap());
        out.push(ConstraintArray::filled(2, n, SymbolSet::full(n)).unwrap());
    }
    for (a, b, c) in [(1, 1, 2), (1, 2, 1), (2, 1, 1)] {
        let m = pebody_array(a, b, c).unwrap();
        out.push(m.complement());
        out.push(m);
    }
    for seed in 0..520u64 {
        let n = 2 + (seed % 3) as usize;
        let p = [0.45, 0.6, 0.75, 0.9][(seed / 3 % 4) as usize];
        out.push(random_constraints(n, p, seed));
    }
    out
}

#[test]
fn find_layer_agrees_with_naive_search_and_enumeration() {
    let squares: Vec<Vec<Vec<u8>>> = (1..=4)
        .map(|n| enumerate_latin_squares(n).unwrap().map(|h| h.into_cells()).collect())
        .collect();
    let corpus = corpus();
    assert!(corpus.len() >= 500);
    let mut feasible = 0;
    for c in &corpus {
        let fast = find_layer(c, &PartialAssignment::new(), Budget::UNLIMITED).unwrap();
        let slow = naive_find_layer(c, &PartialAssignment::new()).unwrap();
        assert!(!fast.is_unknown());
        assert_eq!(fast.is_feasible(), slow.is_feasible());
        assert_eq!(fast.is_feasible(), any_square_fits(&squares[c.n() - 1], c));
        if let Some(l) = fast.witness() {
            assert_eq!(lhc::is_layer_of(l, c).unwrap(), Ok(()));
            feasible += 1;
        }
    }
    // the corpus exercises both verdicts
    assert!(feasible > 50 && feasible < corpus.len() - 50, "feasible = {feasible}");
}

#[test]
fn naive_search_mirrors_find_layer_examples() {
    let all = ConstraintArray::filled(2, 3, SymbolSet::full(3)).unwrap();
    assert!(naive_find_layer(&all, &PartialAssignment::new()).unwrap().is_feasible());

    let a = lhc::construct::nonlayerable_array(5).unwrap();
    let forced = PartialAssignment::new().with(vec![0, 0], 4).unwrap();
    assert!(naive_find_layer(&a, &forced).unwrap().is_infeasible());

    let m = pebody_array(1, 1, 2).unwrap();
    assert!(naive_find_layer(&m.complement(), &PartialAssignment::new()).unwrap().is_infeasible());
}

#[test]
fn no_order_four_square_avoids_the_block_array() {
    let m = pebody_array(1, 1, 2).unwrap();
    for sq in enumerate_latin_squares(4).unwrap() {
        assert!(sq.cells().iter().zip(m.cells()).any(|(&s, set)| set.contains(s as usize)));
    }
}

#[test]
fn complements_of_unused_arrays_are_used_arrays() {
    for sq in enumerate_latin_squares(3).unwrap() {
        let h = lhc::Hypercuboid::new(lhc::Shape::new(3, 3, 1).unwrap(), sq.cells().to_vec()).unwrap();
        let used = complement(&unused_array(&h));
        assert_eq!(used.k(), 1);
        for (i, s) in used.sets().iter().enumerate() {
            assert_eq!(s.iter().collect::<Vec<_>>(), vec![sq.cells()[i] as usize]);
        }
    }
}
