//! The power monoid of `N0`: finite nonempty subsets under set addition, and
//! its reduced submonoid of sets containing 0.
//!
//! `{1}` is a prime of the full monoid and every set splits uniquely as
//! `min A + (A - min A)`. The map `A ↦ <X1^(max A - a) X2^a : a in A>` embeds
//! the monoid into the monomial ideals of `K[X1, X2]`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::factorcore::MonoidOracle;
use crate::idealmonoid::Staircase;
use crate::{Error, Result};

/// A finite nonempty subset of `N0`, sorted strictly increasing.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FiniteSet(Vec<u32>);

impl FiniteSet {
    pub fn new(elements: impl IntoIterator<Item = u32>) -> Result<Self> {
        let set: BTreeSet<u32> = elements.into_iter().collect();
        if set.is_empty() {
            return Err(Error::InvalidArgument(
                "sets in the power monoid are nonempty".into(),
            ));
        }
        Ok(FiniteSet(set.into_iter().collect()))
    }

    pub fn zero() -> Self {
        FiniteSet(vec![0])
    }

    pub fn singleton(k: u32) -> Self {
        FiniteSet(vec![k])
    }

    /// `[lo, hi]`.
    pub fn interval(lo: u32, hi: u32) -> Self {
        FiniteSet((lo..=hi).collect())
    }

    pub fn elements(&self) -> &[u32] {
        &self.0
    }

    pub fn min(&self) -> u32 {
        self.0[0]
    }

    pub fn max(&self) -> u32 {
        *self.0.last().unwrap()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, x: u32) -> bool {
        self.0.binary_search(&x).is_ok()
    }

    pub fn is_reduced(&self) -> bool {
        self.0[0] == 0
    }

    pub fn shift(&self, by: u32) -> FiniteSet {
        FiniteSet(self.0.iter().map(|x| x + by).collect())
    }

    /// Every nonempty subset of `[0, max]`; with `reduced`, only those
    /// containing 0.
    pub fn all_up_to(max: u32, reduced: bool) -> Vec<FiniteSet> {
        let n = max + 1;
        (1u64..(1 << n))
            .map(|mask| FiniteSet((0..n).filter(|i| mask >> i & 1 == 1).collect()))
            .filter(|s| !reduced || s.is_reduced())
            .collect()
    }
}

/// `A + B = {a + b}`.
pub fn sumset(a: &FiniteSet, b: &FiniteSet) -> FiniteSet {
    let mut out = BTreeSet::new();
    for x in &a.0 {
        for y in &b.0 {
            out.insert(x + y);
        }
    }
    FiniteSet(out.into_iter().collect())
}

/// `A = k·{1} + A0` with `k = min A` and `A0 = A - min A`.
pub fn prime_decompose(a: &FiniteSet) -> (u32, FiniteSet) {
    let k = a.min();
    (k, FiniteSet(a.0.iter().map(|x| x - k).collect()))
}

/// The monomial ideal `<X1^(max A - a) X2^a : a in A>`.
pub fn to_monomial_ideal(a: &FiniteSet) -> Staircase {
    let top = a.max();
    Staircase::new(a.0.iter().map(|&x| (top - x, x))).unwrap()
}

/// Exhaustive check of `A ↦ I_A` on all sets with maximum at most `max`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IsoReport {
    pub max: u32,
    pub sets: usize,
    pub pairs: usize,
    /// Pairs with `I_(A+B) != I_A I_B`.
    pub homomorphism_failures: usize,
    pub injective: bool,
    /// Every image contains a pure power of `X2`.
    pub pure_x2_power: bool,
    /// Pairs with `A + B = A` and `B != {0}`.
    pub unit_cancellativity_failures: usize,
}

impl IsoReport {
    pub fn passed(&self) -> bool {
        self.homomorphism_failures == 0
            && self.injective
            && self.pure_x2_power
            && self.unit_cancellativity_failures == 0
    }
}

pub fn iso_check(max: u32) -> IsoReport {
    let sets = FiniteSet::all_up_to(max, false);
    let images: Vec<Staircase> = sets.iter().map(to_monomial_ideal).collect();
    let mut homomorphism_failures = 0;
    let mut unit_cancellativity_failures = 0;
    for (a, ia) in sets.iter().zip(&images) {
        for (b, ib) in sets.iter().zip(&images) {
            let s = sumset(a, b);
            if to_monomial_ideal(&s) != ia.product(ib) {
                homomorphism_failures += 1;
            }
            if s == *a && b.0 != [0] {
                unit_cancellativity_failures += 1;
            }
        }
    }
    let distinct: BTreeSet<&Staircase> = images.iter().collect();
    IsoReport {
        max,
        sets: sets.len(),
        pairs: sets.len() * sets.len(),
        homomorphism_failures,
        injective: distinct.len() == images.len(),
        pure_x2_power: sets
            .iter()
            .zip(&images)
            .all(|(a, i)| i.contains_monomial(0, a.max())),
        unit_cancellativity_failures,
    }
}

impl FromStr for FiniteSet {
    type Err = Error;

    /// Parses `{m1,m2,...}`; the braces are optional.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let inner = t
            .strip_prefix('{')
            .and_then(|r| r.strip_suffix('}'))
            .unwrap_or(t);
        let elements = inner
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::Parse(format!("bad set element {p:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        FiniteSet::new(elements)
    }
}

impl fmt::Display for FiniteSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

impl fmt::Debug for FiniteSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for FiniteSet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

fn check_cap(a: &FiniteSet, cap: u32) -> Result<()> {
    if a.max() > cap {
        return Err(Error::CapExceeded {
            what: "power monoid element",
            value: a.max() as usize,
            cap: cap as usize,
        });
    }
    Ok(())
}

/// Subsets of `pool` containing 0 and `top`, with `top` the largest element.
fn subsets_with_ends(pool: &[u32], top: u32) -> Vec<FiniteSet> {
    let inner: Vec<u32> = pool.iter().copied().filter(|&x| x > 0 && x < top).collect();
    if !pool.contains(&0) || !pool.contains(&top) {
        return Vec::new();
    }
    (0u64..(1 << inner.len()))
        .map(|mask| {
            let mut v = vec![0];
            v.extend(
                inner
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &x)| x),
            );
            if top > 0 {
                v.push(top);
            }
            FiniteSet(v)
        })
        .collect()
}

/// All `(B, C)` with `B + C = A` in the reduced monoid, trivial factors
/// included. `B` runs over subsets of `A` containing 0; `C` then lies in
/// `{c in A : c + B ⊆ A}` and has maximum `max A - max B`.
fn reduced_splits(a: &FiniteSet) -> Vec<(FiniteSet, FiniteSet)> {
    let mut out = Vec::new();
    for top_b in a.0.iter().copied() {
        for b in subsets_with_ends(&a.0, top_b) {
            let pool: Vec<u32> =
                a.0.iter()
                    .copied()
                    .filter(|&c| b.0.iter().all(|&x| a.contains(x + c)))
                    .collect();
            for c in subsets_with_ends(&pool, a.max() - top_b) {
                if sumset(&b, &c) == *a {
                    out.push((b.clone(), c));
                }
            }
        }
    }
    out
}

/// The reduced power monoid: finite subsets of `N0` containing 0.
#[derive(Debug, Clone, Copy)]
pub struct ReducedPowerMonoid {
    pub max_element: u32,
}

impl ReducedPowerMonoid {
    pub fn new(max_element: u32) -> Self {
        ReducedPowerMonoid { max_element }
    }
}

impl MonoidOracle for ReducedPowerMonoid {
    type Element = FiniteSet;

    fn is_identity(&self, a: &FiniteSet) -> bool {
        a.0 == [0]
    }

    fn divisor_pairs(&self, a: &FiniteSet) -> Result<Vec<(FiniteSet, FiniteSet)>> {
        if !a.is_reduced() {
            return Err(Error::InvalidArgument(format!("{a} does not contain 0")));
        }
        check_cap(a, self.max_element)?;
        Ok(reduced_splits(a)
            .into_iter()
            .filter(|(b, c)| !self.is_identity(b) && !self.is_identity(c))
            .collect())
    }

    fn combine(&self, a: &FiniteSet, b: &FiniteSet) -> FiniteSet {
        sumset(a, b)
    }
}

/// The full power monoid of `N0`.
#[derive(Debug, Clone, Copy)]
pub struct PowerMonoid {
    pub max_element: u32,
}

impl PowerMonoid {
    pub fn new(max_element: u32) -> Self {
        PowerMonoid { max_element }
    }
}

impl MonoidOracle for PowerMonoid {
    type Element = FiniteSet;

    fn is_identity(&self, a: &FiniteSet) -> bool {
        a.0 == [0]
    }

    fn divisor_pairs(&self, a: &FiniteSet) -> Result<Vec<(FiniteSet, FiniteSet)>> {
        check_cap(a, self.max_element)?;
        let (k, a0) = prime_decompose(a);
        let mut out = Vec::new();
        for (b0, c0) in reduced_splits(&a0) {
            for i in 0..=k {
                let b = b0.shift(i);
                let c = c0.shift(k - i);
                if !self.is_identity(&b) && !self.is_identity(&c) {
                    out.push((b, c));
                }
            }
        }
        Ok(out)
    }

    fn combine(&self, a: &FiniteSet, b: &FiniteSet) -> FiniteSet {
        sumset(a, b)
    }
}
