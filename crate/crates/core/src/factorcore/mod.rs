//! Factorization arithmetic over any reduced monoid presented by a divisor
//! oracle: atoms, factorizations, sets of lengths, unions of sets of lengths,
//! elasticities and progression structure.
//!
//! The engine assumes the monoid is commutative, reduced and
//! unit-cancellative. None of that is checked for user oracles; the built-in
//! exemplars satisfy it.

pub mod aap;
pub mod elasticity;
pub mod exemplars;
pub mod lengths;

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt::Debug;
use std::hash::Hash;

use serde::Serialize;

pub use aap::{recognize_aap, AapReport, Progression};
pub use elasticity::{elasticity_gap_scan, full_elasticity_construct, ElasticPlan, GapScan};
pub use exemplars::{FreeAbelian, PlaneMonoid};
pub use lengths::{delta_and_rho, rho_string, LengthSet, Rho};

use crate::{Error, Result};

/// A reduced monoid described by its proper factorizations into two factors.
pub trait MonoidOracle: Sync {
    type Element: Clone + Eq + Hash + Ord + Debug + Send + Sync;

    fn is_identity(&self, a: &Self::Element) -> bool;

    /// All `(b, c)` with `b * c = a` and neither factor the identity. Listing
    /// only one of `(b, c)` and `(c, b)` is enough. Fails when `a` lies outside
    /// the oracle's search bound.
    fn divisor_pairs(&self, a: &Self::Element) -> Result<Vec<(Self::Element, Self::Element)>>;

    fn combine(&self, a: &Self::Element, b: &Self::Element) -> Self::Element;
}

type Split<E> = (E, E);

/// A factorization as a sorted multiset of atoms.
pub type Factorization<E> = Vec<E>;

/// Memoizing factorization engine over one oracle.
///
/// Memo tables live in the engine, so separate engines can run on separate
/// threads. Results do not depend on the order in which an oracle lists its
/// divisor pairs.
pub struct Factorizer<'o, O: MonoidOracle> {
    oracle: &'o O,
    pairs: HashMap<O::Element, Vec<Split<O::Element>>>,
    lengths: HashMap<O::Element, LengthSet>,
    factorizations: HashMap<O::Element, Vec<Factorization<O::Element>>>,
    budget: usize,
    visited: usize,
}

impl<'o, O: MonoidOracle> Factorizer<'o, O> {
    pub fn new(oracle: &'o O) -> Self {
        Self::with_budget(oracle, crate::Caps::default().search_budget)
    }

    pub fn with_budget(oracle: &'o O, budget: usize) -> Self {
        Factorizer {
            oracle,
            pairs: HashMap::new(),
            lengths: HashMap::new(),
            factorizations: HashMap::new(),
            budget,
            visited: 0,
        }
    }

    pub fn oracle(&self) -> &O {
        self.oracle
    }

    fn tick(&mut self) -> Result<()> {
        self.visited += 1;
        if self.visited > self.budget {
            return Err(Error::BoundExceeded(format!(
                "factorization search visited more than {} elements",
                self.budget
            )));
        }
        Ok(())
    }

    /// Divisor pairs with each unordered pair listed once as `(min, max)`,
    /// sorted.
    fn pairs_of(&mut self, a: &O::Element) -> Result<Vec<(O::Element, O::Element)>> {
        if let Some(p) = self.pairs.get(a) {
            return Ok(p.clone());
        }
        let raw = self.oracle.divisor_pairs(a)?;
        let set: BTreeSet<(O::Element, O::Element)> = raw
            .into_iter()
            .map(|(b, c)| if b <= c { (b, c) } else { (c, b) })
            .collect();
        let v: Vec<_> = set.into_iter().collect();
        self.pairs.insert(a.clone(), v.clone());
        Ok(v)
    }

    pub fn is_atom(&mut self, a: &O::Element) -> Result<bool> {
        if self.oracle.is_identity(a) {
            return Ok(false);
        }
        Ok(self.pairs_of(a)?.is_empty())
    }

    /// The non-identity elements of `universe` without a proper factorization.
    pub fn atoms_up_to(&mut self, universe: &[O::Element]) -> Result<Vec<O::Element>> {
        let mut out = Vec::new();
        for a in universe {
            if self.is_atom(a)? {
                out.push(a.clone());
            }
        }
        Ok(out)
    }

    /// The set of lengths of `a`; `{0}` for the identity.
    pub fn length_set(&mut self, a: &O::Element) -> Result<LengthSet> {
        if self.oracle.is_identity(a) {
            return Ok(LengthSet::singleton(0));
        }
        if let Some(l) = self.lengths.get(a) {
            return Ok(l.clone());
        }
        self.tick()?;
        let pairs = self.pairs_of(a)?;
        let l = if pairs.is_empty() {
            LengthSet::singleton(1)
        } else {
            let mut acc: BTreeSet<usize> = BTreeSet::new();
            for (b, c) in &pairs {
                let lb = self.length_set(b)?;
                let lc = self.length_set(c)?;
                acc.extend(lb.sumset(&lc).as_slice());
            }
            LengthSet::new(acc)?
        };
        self.lengths.insert(a.clone(), l.clone());
        Ok(l)
    }

    /// All factorizations of `a` as sorted atom multisets, sorted. Fails when
    /// more than `limit` distinct factorizations appear at any step.
    pub fn factorizations(
        &mut self,
        a: &O::Element,
        limit: usize,
    ) -> Result<Vec<Factorization<O::Element>>> {
        if self.oracle.is_identity(a) {
            return Ok(vec![Vec::new()]);
        }
        if let Some(f) = self.factorizations.get(a) {
            return Ok(f.clone());
        }
        self.tick()?;
        let pairs = self.pairs_of(a)?;
        let out = if pairs.is_empty() {
            vec![vec![a.clone()]]
        } else {
            let mut acc: BTreeSet<Factorization<O::Element>> = BTreeSet::new();
            for (b, c) in &pairs {
                let fb = self.factorizations(b, limit)?;
                let fc = self.factorizations(c, limit)?;
                for x in &fb {
                    for y in &fc {
                        let mut z: Vec<O::Element> = x.iter().chain(y).cloned().collect();
                        z.sort();
                        acc.insert(z);
                        if acc.len() > limit {
                            return Err(Error::BoundExceeded(format!(
                                "more than {limit} factorizations"
                            )));
                        }
                    }
                }
            }
            acc.into_iter().collect()
        };
        self.factorizations.insert(a.clone(), out.clone());
        Ok(out)
    }

    /// Multiplies the parts of `z` back together and compares with `a`.
    pub fn multiplies_to(&self, z: &[O::Element], a: &O::Element) -> bool {
        match z.split_first() {
            None => self.oracle.is_identity(a),
            Some((first, rest)) => {
                let prod = rest
                    .iter()
                    .fold(first.clone(), |acc, x| self.oracle.combine(&acc, x));
                &prod == a
            }
        }
    }

    /// Sets of lengths of every element of a window, keyed by element.
    pub fn length_sets_over(
        &mut self,
        universe: &[O::Element],
    ) -> Result<BTreeMap<O::Element, LengthSet>> {
        let mut out = BTreeMap::new();
        for a in universe {
            out.insert(a.clone(), self.length_set(a)?);
        }
        Ok(out)
    }

    /// Window approximation of the union of sets of lengths containing `k`.
    pub fn union_of_lengths(
        &mut self,
        k: usize,
        universe: &[O::Element],
        window: &str,
    ) -> Result<UnionOfLengths> {
        let sets = self.length_sets_over(universe)?;
        Ok(union_from_sets(k, sets.values(), window))
    }
}

/// A union of sets of lengths, relative to a finite search window.
///
/// Only a lower approximation of the true union: elements outside the window
/// can contribute further lengths.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UnionOfLengths {
    pub k: usize,
    pub window: String,
    pub lengths: BTreeSet<usize>,
    /// Set when the window was empty, so the union says nothing.
    pub empty_window: bool,
}

impl UnionOfLengths {
    pub fn contains(&self, n: usize) -> bool {
        self.lengths.contains(&n)
    }
}

pub fn union_from_sets<'a>(
    k: usize,
    sets: impl IntoIterator<Item = &'a LengthSet>,
    window: &str,
) -> UnionOfLengths {
    let mut lengths = BTreeSet::new();
    let mut seen = false;
    for l in sets {
        seen = true;
        if l.contains(k) {
            lengths.extend(l.as_slice());
        }
    }
    UnionOfLengths {
        k,
        window: window.to_string(),
        lengths,
        empty_window: !seen,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn plane_monoid_lengths() {
        let m = PlaneMonoid::new(16);
        let mut f = Factorizer::new(&m);
        assert_eq!(
            f.length_set(&(3, 3)).unwrap(),
            LengthSet::new([2, 3]).unwrap()
        );
        assert_eq!(f.length_set(&(1, 5)).unwrap(), LengthSet::singleton(1));
        assert_eq!(f.length_set(&(0, 0)).unwrap(), LengthSet::singleton(0));
        for m_ in 2..=10u32 {
            let l = f.length_set(&(m_, m_)).unwrap();
            assert_eq!((l.min(), l.max()), (2, m_ as usize));
        }
    }

    #[test]
    fn plane_monoid_atoms() {
        let m = PlaneMonoid::new(16);
        let mut f = Factorizer::new(&m);
        let universe: Vec<_> = (1..=4).flat_map(|x| (1..=4).map(move |y| (x, y))).collect();
        let atoms = f.atoms_up_to(&universe).unwrap();
        assert!(atoms.iter().all(|&(x, y)| x.min(y) == 1));
        assert_eq!(atoms.len(), 7);
    }

    #[test]
    fn factorizations_round_trip() {
        let m = PlaneMonoid::new(16);
        let mut f = Factorizer::new(&m);
        let zs = f.factorizations(&(4, 5), 10_000).unwrap();
        let lens: BTreeSet<usize> = zs.iter().map(Vec::len).collect();
        assert_eq!(
            lens.into_iter().collect::<Vec<_>>(),
            f.length_set(&(4, 5)).unwrap().as_slice()
        );
        assert!(zs.iter().all(|z| f.multiplies_to(z, &(4, 5))));
    }

    #[test]
    fn factorization_limit_is_reported() {
        let m = PlaneMonoid::new(16);
        let mut f = Factorizer::new(&m);
        assert!(matches!(
            f.factorizations(&(8, 8), 3),
            Err(Error::BoundExceeded(_))
        ));
    }

    #[test]
    fn search_budget_is_reported() {
        let m = PlaneMonoid::new(16);
        let mut f = Factorizer::with_budget(&m, 5);
        assert!(matches!(
            f.length_set(&(8, 8)),
            Err(Error::BoundExceeded(_))
        ));
    }

    #[test]
    fn union_of_lengths_in_window() {
        let m = PlaneMonoid::new(16);
        let mut f = Factorizer::new(&m);
        let window = PlaneMonoid::window(6);
        let u = f.union_of_lengths(2, &window, "[1,6]^2").unwrap();
        assert!((2..=6).all(|n| u.contains(n)));
        assert!(!u.empty_window);
        let empty = f.union_of_lengths(2, &[], "empty").unwrap();
        assert!(empty.empty_window && empty.lengths.is_empty());
    }
}
