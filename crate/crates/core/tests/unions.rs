use idealarith::factorcore::{Factorizer, PlaneMonoid};
use idealarith::powermonoid::{FiniteSet, ReducedPowerMonoid};

// products of two elements of [1,5]^2 stay inside [1,10]^2
#[test]
fn plane_unions_add() {
    let m = PlaneMonoid::new(10);
    let mut fz = Factorizer::new(&m);
    let small = PlaneMonoid::window(5);
    let big = PlaneMonoid::window(10);
    for k in 2..=4 {
        for l in 2..=4 {
            let uk = fz.union_of_lengths(k, &small, "[1,5]^2").unwrap();
            let ul = fz.union_of_lengths(l, &small, "[1,5]^2").unwrap();
            let ukl = fz.union_of_lengths(k + l, &big, "[1,10]^2").unwrap();
            for a in &uk.lengths {
                for b in &ul.lengths {
                    assert!(ukl.contains(a + b), "{a}+{b} missing from U_{}", k + l);
                }
            }
        }
    }
}

#[test]
fn plane_unions_are_symmetric_and_grow_from_two() {
    let m = PlaneMonoid::new(8);
    let mut fz = Factorizer::new(&m);
    let w = PlaneMonoid::window(8);
    let u2 = fz.union_of_lengths(2, &w, "[1,8]^2").unwrap();
    let n = (2..).take_while(|x| u2.contains(*x)).last().unwrap();
    assert_eq!(n, 8);
    for k in 2..=n {
        let uk = fz.union_of_lengths(k, &w, "[1,8]^2").unwrap();
        assert!((2..=n - k + 2).all(|x| uk.contains(x)), "U_{k}");
        for l in 2..=n {
            let ul = fz.union_of_lengths(l, &w, "[1,8]^2").unwrap();
            assert_eq!(uk.contains(l), ul.contains(k));
        }
    }
}

#[test]
fn reduced_power_unions_add() {
    let m = ReducedPowerMonoid::new(12);
    let mut fz = Factorizer::new(&m);
    let small: Vec<FiniteSet> = FiniteSet::all_up_to(5, true)
        .into_iter()
        .filter(|s| s.max() > 0)
        .collect();
    let big: Vec<FiniteSet> = FiniteSet::all_up_to(10, true)
        .into_iter()
        .filter(|s| s.max() > 0)
        .collect();
    let sets_small = fz.length_sets_over(&small).unwrap();
    let sets_big = fz.length_sets_over(&big).unwrap();
    let union = |k: usize, sets: &std::collections::BTreeMap<FiniteSet, _>| {
        idealarith::factorcore::union_from_sets(k, sets.values(), "window")
    };
    for (k, l) in [(2, 2), (2, 3), (3, 3)] {
        let uk = union(k, &sets_small);
        let ul = union(l, &sets_small);
        let ukl = union(k + l, &sets_big);
        for a in &uk.lengths {
            for b in &ul.lengths {
                assert!(ukl.contains(a + b));
            }
        }
    }
}
