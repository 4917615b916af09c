//! The factorization engine checked against brute-force oracles written
//! independently of the crate's own search code.

use std::collections::{BTreeMap, BTreeSet};

use idealarith::factorcore::{Factorizer, LengthSet, PlaneMonoid};
use idealarith::powermonoid::{FiniteSet, ReducedPowerMonoid};
use idealarith::zerosum::{partition_lengths, GroupSpec, ZeroSumMonoid, ZeroSumSequence};

fn set_of(v: &BTreeSet<usize>) -> LengthSet {
    LengthSet::new(v.iter().copied()).unwrap()
}

/// Lengths in N^2 ∪ {0} by dynamic programming over atoms, which are the
/// pairs with a coordinate equal to 1.
fn plane_table(n: u32) -> BTreeMap<(u32, u32), BTreeSet<usize>> {
    let mut t: BTreeMap<(u32, u32), BTreeSet<usize>> = BTreeMap::new();
    for x in 1..=n {
        for y in 1..=n {
            let mut ls = BTreeSet::new();
            if x == 1 || y == 1 {
                ls.insert(1);
            }
            for ax in 1..x {
                for ay in 1..y {
                    if ax == 1 || ay == 1 {
                        for l in &t[&(x - ax, y - ay)] {
                            ls.insert(l + 1);
                        }
                    }
                }
            }
            t.insert((x, y), ls);
        }
    }
    t
}

#[test]
fn plane_matches_dynamic_programming() {
    let table = plane_table(9);
    let m = PlaneMonoid::new(9);
    let mut fz = Factorizer::new(&m);
    for (a, ls) in &table {
        assert_eq!(fz.length_set(a).unwrap(), set_of(ls), "{a:?}");
    }
}

type Set = BTreeSet<u32>;

fn subsets_with_zero(max: u32) -> Vec<BTreeSet<u32>> {
    (0u32..1 << max)
        .map(|mask| {
            std::iter::once(0)
                .chain((1..=max).filter(|i| mask >> (i - 1) & 1 == 1))
                .collect()
        })
        .collect()
}

fn sum(a: &BTreeSet<u32>, b: &BTreeSet<u32>) -> BTreeSet<u32> {
    a.iter()
        .flat_map(|x| b.iter().map(move |y| x + y))
        .collect()
}

#[test]
fn reduced_power_monoid_matches_exhaustive_products() {
    let max = 7;
    let universe = subsets_with_zero(max);
    let unit: BTreeSet<u32> = [0].into();
    // every way to write each set as a sum of two non-units, found by trying all pairs
    let mut splits: BTreeMap<Set, Vec<(Set, Set)>> = BTreeMap::new();
    for a in universe.iter().filter(|a| **a != unit) {
        for b in universe.iter().filter(|b| **b != unit) {
            let s = sum(a, b);
            if s.last().is_some_and(|&m| m <= max) {
                splits.entry(s).or_default().push((a.clone(), b.clone()));
            }
        }
    }
    let mut by_size = universe.clone();
    by_size.sort_by_key(|s| s.last().copied());
    let mut lengths: BTreeMap<BTreeSet<u32>, BTreeSet<usize>> = BTreeMap::new();
    for a in by_size.iter().filter(|a| **a != unit) {
        let mut ls = BTreeSet::new();
        match splits.get(a) {
            None => {
                ls.insert(1);
            }
            Some(pairs) => {
                for (b, c) in pairs {
                    for x in &lengths[b] {
                        for y in &lengths[c] {
                            ls.insert(x + y);
                        }
                    }
                }
            }
        }
        lengths.insert(a.clone(), ls);
    }
    let m = ReducedPowerMonoid::new(max);
    let mut fz = Factorizer::new(&m);
    for (a, ls) in &lengths {
        let fs = FiniteSet::new(a.iter().copied()).unwrap();
        assert_eq!(fz.length_set(&fs).unwrap(), set_of(ls), "{fs}");
    }
}

/// Lengths of a zero-sum sequence given as an explicit list of group
/// elements: peel off every minimal zero-sum subsequence containing the
/// first remaining term.
fn zero_sum_lengths(terms: &[Vec<i64>], orders: &[i64]) -> BTreeSet<usize> {
    let is_zero = |idx: &[usize]| {
        (0..orders.len()).all(|c| {
            idx.iter()
                .map(|&i| terms[i][c])
                .sum::<i64>()
                .rem_euclid(orders[c])
                == 0
        })
    };
    fn go(
        rest: u32,
        terms: &[Vec<i64>],
        is_zero: &dyn Fn(&[usize]) -> bool,
        memo: &mut BTreeMap<u32, BTreeSet<usize>>,
    ) -> BTreeSet<usize> {
        if rest == 0 {
            return [0].into();
        }
        if let Some(v) = memo.get(&rest) {
            return v.clone();
        }
        let first = rest.trailing_zeros();
        let others = rest & !(1 << first);
        let mut out = BTreeSet::new();
        let mut sub = others;
        loop {
            let block = sub | 1 << first;
            let idx: Vec<usize> = (0..terms.len()).filter(|i| block >> i & 1 == 1).collect();
            // minimal: no proper nonempty zero-sum subset
            let minimal = is_zero(&idx) && {
                let mut inner = (block - 1) & block;
                let mut ok = true;
                while inner != 0 {
                    let j: Vec<usize> = (0..terms.len()).filter(|i| inner >> i & 1 == 1).collect();
                    if is_zero(&j) {
                        ok = false;
                        break;
                    }
                    inner = (inner - 1) & block;
                }
                ok
            };
            if minimal {
                for l in go(rest & !block, terms, is_zero, memo) {
                    out.insert(l + 1);
                }
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & others;
        }
        memo.insert(rest, out.clone());
        out
    }
    let mut memo = BTreeMap::new();
    go((1u32 << terms.len()) - 1, terms, &is_zero, &mut memo)
}

fn check_group(orders: Vec<u32>, max_len: usize) {
    let group = GroupSpec::new(orders.clone()).unwrap();
    let support = group.nonzero_elements().unwrap();
    let m = ZeroSumMonoid::new(group.clone(), support.clone(), max_len);
    let mut fz = Factorizer::new(&m);
    let ords: Vec<i64> = orders.iter().map(|&o| o as i64).collect();
    let window = m.window(max_len);
    assert!(!window.is_empty());
    for a in &window {
        let terms: Vec<Vec<i64>> = support
            .iter()
            .zip(a)
            .flat_map(|(g, &k)| std::iter::repeat_n(g.clone(), k as usize))
            .collect();
        let brute = zero_sum_lengths(&terms, &ords);
        assert_eq!(fz.length_set(a).unwrap(), set_of(&brute), "{a:?}");
        let seq = ZeroSumSequence::new(
            group.clone(),
            support.iter().cloned().zip(a.iter().copied()),
        )
        .unwrap();
        assert_eq!(partition_lengths(&seq), brute, "{a:?}");
    }
}

#[test]
fn cyclic_three_matches_subset_peeling() {
    check_group(vec![3], 9);
}

#[test]
fn klein_four_matches_subset_peeling() {
    check_group(vec![2, 2], 8);
}

#[test]
fn cyclic_four_matches_subset_peeling() {
    check_group(vec![4], 8);
}
