mod common;

use lhc::construct::{
    complement, cyclic_hypercube, nonlayerable_array, pebody_array, prefix, stack, stack_layers, unused_array,
};
use lhc::sample::{random_composed_hypercube, random_hypercuboid, random_latin_square, random_realisable_array, Seed};
use lhc::solve::{
    avoidable, complete_rectangle, complete_with, decompose, delta_regularity, find_layer, intersects,
    is_completable, is_extendible,
};
use lhc::{
    is_extension_of, is_layer_of, validate_hypercuboid, Budget, ConstraintArray, Error, Hypercuboid, Layer,
    PartialAssignment, SetArray, Shape, SymbolSet,
};
use num_rational::Ratio;

use common::brute_delta;

const FREE: Budget = Budget::UNLIMITED;

fn none() -> PartialAssignment {
    PartialAssignment::new()
}

#[test]
fn find_layer_on_unconstrained_order_three() {
    let c = ConstraintArray::filled(2, 3, SymbolSet::full(3)).unwrap();
    let out = find_layer(&c, &none(), FREE).unwrap();
    assert_eq!(is_layer_of(out.witness().unwrap(), &c).unwrap(), Ok(()));
}

#[test]
fn find_layer_singleton_sdr() {
    // rectangle rows (1,2,3),(2,3,1): depth lines are the columns
    let h = Hypercuboid::new(Shape::new(2, 3, 2).unwrap(), vec![0, 1, 1, 2, 2, 0]).unwrap();
    let u = unused_array(&h);
    assert_eq!(format!("{:?}", u.cells()), "[{3}, {1}, {2}]");
    let out = find_layer(&u, &none(), FREE).unwrap();
    assert_eq!(out.witness().unwrap().cells(), &[2, 0, 1]);
}

#[test]
fn forced_cell_in_nonlayerable_array_is_infeasible() {
    let a = nonlayerable_array(5).unwrap();
    let forced = none().with(vec![0, 0], 4).unwrap();
    assert!(find_layer(&a, &forced, FREE).unwrap().is_infeasible());
}

#[test]
fn forced_symbol_outside_cell_is_a_conflict() {
    let a = nonlayerable_array(5).unwrap();
    let forced = none().with(vec![0, 0], 0).unwrap();
    assert!(matches!(
        find_layer(&a, &forced, FREE),
        Err(Error::ForcedConflict { symbol: 0, .. })
    ));
}

#[test]
fn block_array_complement_has_no_layer() {
    let m = pebody_array(1, 1, 2).unwrap();
    assert!(find_layer(&m.complement(), &none(), FREE).unwrap().is_infeasible());
}

#[test]
fn budget_exhaustion_is_unknown_not_infeasible() {
    let m = pebody_array(1, 2, 2).unwrap();
    let out = avoidable(&m, Budget::nodes(10)).unwrap();
    assert!(out.is_unknown());
    assert!(avoidable(&m, FREE).unwrap().is_infeasible());
}

#[test]
fn decompose_examples() {
    let empty = SetArray::new(2, 3, 0, vec![SymbolSet::EMPTY; 9]).unwrap();
    assert_eq!(decompose(&empty, FREE).unwrap().witness().unwrap().len(), 0);

    let u = unused_array(&prefix(&cyclic_hypercube(3, 5).unwrap(), 2).unwrap());
    let out = decompose(&u, FREE).unwrap();
    let layers = out.witness().unwrap();
    assert_eq!(layers.len(), 3);
    let stacked = stack_layers(2, 5, layers).unwrap();
    assert!(validate_hypercuboid(&stacked).is_ok());

    assert!(decompose(&nonlayerable_array(5).unwrap(), FREE).unwrap().is_infeasible());
}

#[test]
fn decompose_rejects_unbalanced_input() {
    let mut cells = vec![SymbolSet::full(3); 9];
    cells[0] = SymbolSet::singleton(0);
    let a = SetArray::new(2, 3, 3, cells).unwrap();
    assert!(matches!(decompose(&a, FREE), Err(Error::Validation(_))));
}

#[test]
fn stacking_a_decomposition_completes_the_cuboid() {
    let h = prefix(&cyclic_hypercube(3, 5).unwrap(), 2).unwrap();
    let out = is_completable(&h, FREE).unwrap();
    let full = out.witness().unwrap().iter().fold(h.clone(), |acc, l| stack(&acc, l).unwrap());
    assert_eq!(full.k(), 5);
    assert!(validate_hypercuboid(&full).is_ok());
    assert_eq!(full, complete_with(&h, out.witness().unwrap()));
}

#[test]
fn depth_n_minus_one_is_always_extendible() {
    for seed in 0..20 {
        let h = random_hypercuboid(3, 5, 4, Seed(seed), FREE).unwrap().into_witness().unwrap();
        let out = is_extendible(&h, FREE).unwrap();
        assert!(out.is_feasible());
        assert!(validate_hypercuboid(&stack(&h, out.witness().unwrap()).unwrap()).is_ok());
    }
    let full = cyclic_hypercube(3, 4).unwrap();
    assert!(matches!(is_extendible(&full, FREE), Err(Error::AlreadyFull)));
}

#[test]
fn depth_one_cuboids_are_completable() {
    for seed in 0..10 {
        let sq = random_latin_square(5, Seed(seed)).unwrap();
        let h = Hypercuboid::new(Shape::new(3, 5, 1).unwrap(), sq.into_cells()).unwrap();
        assert!(is_completable(&h, FREE).unwrap().is_feasible());
    }
}

#[test]
fn every_order_three_cuboid_is_completable() {
    let squares: Vec<_> = lhc::verify::enumerate_latin_squares(3).unwrap().collect();
    for first in &squares {
        let h1 = Hypercuboid::new(Shape::new(3, 3, 1).unwrap(), first.cells().to_vec()).unwrap();
        assert!(is_completable(&h1, FREE).unwrap().is_feasible());
        for second in &squares {
            let l = Layer::new(2, 3, second.cells().to_vec()).unwrap();
            if let Ok(h2) = stack(&h1, &l) {
                assert!(is_completable(&h2, FREE).unwrap().is_feasible());
            }
        }
    }
}

#[test]
fn completable_implies_extendible() {
    for seed in 0..30 {
        let k = 1 + (seed % 3) as usize;
        let h = random_hypercuboid(3, 5, k, Seed(seed), FREE).unwrap().into_witness().unwrap();
        let c = is_completable(&h, FREE).unwrap();
        let e = is_extendible(&h, FREE).unwrap();
        if c.is_feasible() {
            assert!(e.is_feasible());
            let first = &c.witness().unwrap()[0];
            assert!(is_extension_of(&stack(&h, first).unwrap(), &h).unwrap());
        }
    }
}

#[test]
fn layers_of_a_refined_array_are_layers_of_the_original() {
    for seed in 0..20 {
        let a = random_realisable_array(2, 4, 2, Seed(seed), FREE).unwrap().into_witness().unwrap();
        let mut cells = a.cells().to_vec();
        let s = cells[0].first().unwrap();
        cells[0].remove(s);
        let refined = ConstraintArray::new(2, 4, cells).unwrap();
        if let Some(l) = find_layer(&refined, &none(), FREE).unwrap().witness() {
            assert_eq!(is_layer_of(l, &a.to_constraints()).unwrap(), Ok(()));
        }
        let wide = ConstraintArray::new(2, 4, a.cells().to_vec()).unwrap();
        if find_layer(&wide, &none(), FREE).unwrap().is_infeasible() {
            assert!(find_layer(&refined, &none(), FREE).unwrap().is_infeasible());
        }
    }
}

#[test]
fn rectangle_examples() {
    for n in 1..=9 {
        let row = Hypercuboid::new(Shape::new(2, n, 1).unwrap(), (0..n as u8).collect()).unwrap();
        let sq = complete_rectangle(&row).unwrap();
        assert!(validate_hypercuboid(&sq).is_ok() && is_extension_of(&sq, &row).unwrap());
    }
    for seed in 0..200 {
        let r = random_hypercuboid(2, 7, 3, Seed(seed), FREE).unwrap().into_witness().unwrap();
        let sq = complete_rectangle(&r).unwrap();
        assert_eq!(sq.k(), 7);
        assert!(validate_hypercuboid(&sq).is_ok() && is_extension_of(&sq, &r).unwrap());
    }
    let bad = Hypercuboid::new(Shape::new(3, 2, 1).unwrap(), vec![0, 1, 1, 0]).unwrap();
    assert!(matches!(complete_rectangle(&bad), Err(Error::Shape(_))));
}

#[test]
fn avoidability_examples() {
    let blank = ConstraintArray::filled(2, 4, SymbolSet::EMPTY).unwrap();
    assert!(avoidable(&blank, FREE).unwrap().is_feasible());
    assert!(avoidable(&pebody_array(1, 1, 2).unwrap(), FREE).unwrap().is_infeasible());
    assert!(avoidable(&pebody_array(1, 2, 2).unwrap(), FREE).unwrap().is_infeasible());
}

#[test]
fn intersects_examples() {
    let m = pebody_array(1, 1, 2).unwrap();
    let blank = ConstraintArray::filled(2, 4, SymbolSet::EMPTY).unwrap();
    let u = unused_array(&prefix(&cyclic_hypercube(3, 4).unwrap(), 1).unwrap());
    assert_eq!(intersects(&blank, &u).unwrap(), None);
    for k in 1..=3 {
        let h = prefix(&cyclic_hypercube(3, 4).unwrap(), k).unwrap();
        assert!(intersects(&m, &unused_array(&h)).unwrap().is_some());
    }
    // an array built inside the complement of M never meets M
    let free_cells: Vec<SymbolSet> = m.cells().iter().map(|s| s.complement(4)).collect();
    let disjoint = ConstraintArray::new(2, 4, free_cells).unwrap();
    let padded = SetArray::new(2, 4, 0, vec![SymbolSet::EMPTY; 16]).unwrap();
    assert_eq!(intersects(&m, &padded).unwrap(), None);
    assert!(disjoint.cells().iter().zip(m.cells()).all(|(a, b)| a.intersection(*b).is_empty()));
    let wrong = SetArray::full(2, 5).unwrap();
    assert!(intersects(&m, &wrong).is_err());
}

#[test]
fn delta_examples() {
    for seed in 0..10 {
        let n = 3 + seed as usize % 5;
        let h = prefix(&random_composed_hypercube(3, n, Seed(seed)).unwrap(), n - 1).unwrap();
        let r = delta_regularity(&h).unwrap();
        assert_eq!(r.delta, Ratio::from_integer(1));
        assert_eq!(r.intersection, 0);
    }
    let h = prefix(&cyclic_hypercube(3, 5).unwrap(), 2).unwrap();
    let r = delta_regularity(&h).unwrap();
    assert_eq!(r.delta, brute_delta(&h));
    let (x, y) = r.pair.clone().unwrap();
    assert_eq!(x.iter().zip(&y).filter(|(a, b)| a != b).count(), 1);
    // recomputing at the argmax pair reproduces delta
    let u = unused_array(&h);
    let inter = u.get(&x).unwrap().intersection(u.get(&y).unwrap()).len() as i64;
    let v = Ratio::new(5 * inter, 9) - 1;
    assert_eq!(if v < Ratio::from_integer(0) { -v } else { v }, r.delta);
    assert!(matches!(delta_regularity(&cyclic_hypercube(3, 4).unwrap()), Err(Error::DegenerateDepth)));
}

#[test]
fn delta_on_random_cuboids_matches_definition() {
    for seed in 0..40 {
        let n = 3 + (seed % 5) as usize;
        let k = (seed as usize / 5) % n;
        let h = if k + 1 == n {
            prefix(&random_composed_hypercube(3, n, Seed(seed)).unwrap(), k).unwrap()
        } else {
            random_hypercuboid(3, n, k, Seed(seed), FREE).unwrap().into_witness().unwrap()
        };
        assert_eq!(delta_regularity(&h).unwrap().delta, brute_delta(&h), "n={n} k={k}");
    }
}

#[test]
fn complement_of_unused_is_used() {
    let h = prefix(&cyclic_hypercube(3, 5).unwrap(), 2).unwrap();
    let used = complement(&unused_array(&h));
    for line in 0..25 {
        let expect: SymbolSet = h.depth_line(line).iter().map(|&s| s as usize).collect();
        assert_eq!(used.cells()[line], expect);
    }
}
