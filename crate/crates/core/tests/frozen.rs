//! Values computed once by the brute-force oracles and frozen here as
//! regression anchors. Each records the window it was computed in.

use idealarith::factorcore::{elasticity_gap_scan, Factorizer, LengthSet, PlaneMonoid, Rho};
use idealarith::idealmonoid::{certify_atom, staircase_lengths, IdealFamily, Verdict};
use idealarith::zerosum::{realize_length_set_over_z, GroupSpec, RealizeWindow, ZeroSumMonoid};
use idealarith::Caps;

fn interval(a: usize, b: usize) -> LengthSet {
    LengthSet::interval(a, b)
}

#[test]
fn plane_gap_in_the_eight_box() {
    let m = PlaneMonoid::new(8);
    let mut fz = Factorizer::new(&m);
    let scan = elasticity_gap_scan(&mut fz, &PlaneMonoid::window(8)).unwrap();
    assert_eq!(scan.window_size, 64);
    assert_eq!(scan.min_rho, Some(Rho::new(3, 2)));
    assert_eq!(scan.witness, Some((3, 3)));
}

fn zero_sum_scan(group: &str, max_len: usize) -> (usize, usize, Rho, Rho) {
    let g: GroupSpec = group.parse().unwrap();
    let m = ZeroSumMonoid::new(g.clone(), g.nonzero_elements().unwrap(), max_len);
    let mut fz = Factorizer::new(&m);
    let w = m.window(max_len);
    let atoms = fz.atoms_up_to(&w).unwrap().len();
    let min = elasticity_gap_scan(&mut fz, &w).unwrap().min_rho.unwrap();
    let max = fz
        .length_sets_over(&w)
        .unwrap()
        .values()
        .map(LengthSet::rho)
        .max()
        .unwrap();
    (w.len(), atoms, min, max)
}

#[test]
fn zero_sum_windows() {
    assert_eq!(zero_sum_scan("C3", 8).2, Rho::new(4, 3));
    assert_eq!(
        zero_sum_scan("C3", 10),
        (21, 3, Rho::new(5, 4), Rho::new(3, 2))
    );
    assert_eq!(
        zero_sum_scan("C4", 10),
        (72, 6, Rho::new(5, 4), Rho::new(2, 1))
    );
    assert_eq!(
        zero_sum_scan("C2xC2", 10),
        (75, 4, Rho::new(5, 4), Rho::new(3, 2))
    );
    assert_eq!(
        zero_sum_scan("C5", 10),
        (200, 14, Rho::new(4, 3), Rho::new(5, 2))
    );
}

#[test]
fn monomial_lengths_of_families() {
    use IdealFamily::*;
    for k in 2..=5 {
        let s = A(k).staircase().unwrap().unwrap();
        assert_eq!(staircase_lengths(&s, 20).unwrap(), interval(2, k as usize));
    }
    for f in [B(3), C(4), C(5), C(6)] {
        let s = f.staircase().unwrap().unwrap();
        assert_eq!(
            staircase_lengths(&s, 20).unwrap(),
            LengthSet::singleton(1),
            "{f}"
        );
    }
}

#[test]
fn realizations_over_the_integers() {
    let cases = [
        ("{2,4}", "[(-3)^1, (-1)^3, (1)^3, (3)^1]"),
        ("{3,5}", "[(-3)^1, (-1)^4, (1)^4, (3)^1]"),
        ("{2,5}", "[(-3)^2, (-2)^3, (2)^3, (3)^2]"),
        ("{2,3,5}", "[(-4)^2, (-3)^2, (-2)^1, (2)^1, (3)^2, (4)^2]"),
    ];
    for (target, seq) in cases {
        let t: idealarith::powermonoid::FiniteSet = target.parse().unwrap();
        let l = LengthSet::new(t.elements().iter().map(|&x| x as usize)).unwrap();
        let found = realize_length_set_over_z(&l, RealizeWindow::default())
            .unwrap()
            .unwrap();
        assert_eq!(found.to_string(), seq);
    }
}

#[test]
fn certifier_pattern_counts() {
    use IdealFamily::*;
    let caps = Caps::default();
    // (d, e, patterns, refuted) per split
    type Splits = &'static [(usize, usize, usize, usize)];
    let cases: [(IdealFamily, Verdict, Splits); 5] = [
        (
            B(5),
            Verdict::Certified,
            &[(1, 4, 93, 93), (2, 3, 105, 105)],
        ),
        (
            C(6),
            Verdict::Certified,
            &[(1, 5, 189, 189), (2, 4, 217, 217), (3, 3, 120, 120)],
        ),
        (CPrime, Verdict::Certified, &[(1, 2, 21, 21)]),
        (A(5), Verdict::Witness, &[(1, 4, 93, 83), (2, 3, 105, 91)]),
        (C(4), Verdict::Witness, &[(1, 3, 45, 45), (2, 2, 28, 27)]),
    ];
    for (f, verdict, splits) in cases {
        let c = certify_atom(&f.expand(2).unwrap(), &caps).unwrap();
        assert_eq!(c.verdict, verdict, "{f}");
        let got: Vec<_> = c
            .splits
            .iter()
            .map(|s| (s.d as usize, s.e as usize, s.patterns, s.refuted))
            .collect();
        assert_eq!(got, splits, "{f}");
    }
}
