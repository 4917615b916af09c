//! Monomial ideals in `X1, X2` as staircases of minimal generators, and the
//! monoid they form under ideal multiplication.

use std::collections::HashMap;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::factorcore::{Factorizer, LengthSet, MonoidOracle};
use crate::polyarith::{Ideal, Monomial, Polynomial};
use crate::{Error, Result};

/// A nonzero monomial ideal of `K[X1, X2]`, stored as its minimal generators
/// `(r, s)` for `X1^r X2^s`, sorted by decreasing `r` (hence increasing `s`).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Staircase(Vec<(u32, u32)>);

impl Staircase {
    /// Minimalizes an arbitrary nonempty generating set.
    pub fn new(gens: impl IntoIterator<Item = (u32, u32)>) -> Result<Self> {
        let mut pts: Vec<(u32, u32)> = gens.into_iter().collect();
        if pts.is_empty() {
            return Err(Error::InvalidArgument(
                "a staircase needs a generator".into(),
            ));
        }
        pts.sort_unstable();
        let mut min: Vec<(u32, u32)> = Vec::new();
        for p in pts {
            if min.last().is_none_or(|q| p.1 < q.1) {
                min.push(p);
            }
        }
        min.reverse();
        Ok(Staircase(min))
    }

    pub fn unit() -> Self {
        Staircase(vec![(0, 0)])
    }

    pub fn generators(&self) -> &[(u32, u32)] {
        &self.0
    }

    pub fn is_unit(&self) -> bool {
        self.0 == [(0, 0)]
    }

    pub fn contains_monomial(&self, r: u32, s: u32) -> bool {
        self.0.iter().any(|&(a, b)| a <= r && b <= s)
    }

    /// Whether `other ⊆ self`.
    pub fn contains(&self, other: &Staircase) -> bool {
        other.0.iter().all(|&(r, s)| self.contains_monomial(r, s))
    }

    pub fn product(&self, other: &Staircase) -> Staircase {
        let sums = self
            .0
            .iter()
            .flat_map(|&(a, b)| other.0.iter().map(move |&(c, d)| (a + c, b + d)));
        Staircase::new(sums).unwrap()
    }

    /// Largest `X1` exponent among the minimal generators.
    pub fn max_r(&self) -> u32 {
        self.0[0].0
    }

    /// Largest `X2` exponent among the minimal generators.
    pub fn max_s(&self) -> u32 {
        self.0.last().unwrap().1
    }

    pub fn mdeg(&self) -> u32 {
        self.0.iter().map(|&(r, s)| r + s).min().unwrap()
    }

    pub fn max_degree(&self) -> u32 {
        self.0.iter().map(|&(r, s)| r + s).max().unwrap()
    }

    /// Contains a pure power of each variable.
    pub fn is_primary(&self) -> bool {
        self.0[0].1 == 0 && self.0.last().unwrap().0 == 0
    }

    pub fn to_ideal(&self, nvars: usize) -> Ideal {
        Ideal::new(
            self.0
                .iter()
                .map(|&(r, s)| Polynomial::monomial(Monomial::bivariate(nvars, r, s)))
                .collect(),
        )
        .unwrap()
    }

    /// Reads back a monomial ideal in `X1, X2`.
    pub fn from_ideal(ideal: &Ideal) -> Result<Self> {
        if !ideal.is_monomial() || !ideal.is_bivariate() {
            return Err(Error::Precondition(
                "only monomial ideals in X1, X2 are staircases".into(),
            ));
        }
        Staircase::new(ideal.generators().iter().map(|g| {
            let m = g.leading_monomial().unwrap();
            (m.exponent(0), m.exponent(1))
        }))
    }

    /// The staircases `J ⊇ self` whose minimal generators lie in
    /// `[0, max_r] x [0, max_s]`, excluding the unit ideal. Every divisor of
    /// `self` in the staircase monoid is one of these.
    pub fn containing_in_box(&self, budget: usize) -> Result<Vec<Staircase>> {
        let rmax = self.max_r();
        let smax = self.max_s();
        // threshold of self: least s with X1^r X2^s in self, None for never
        let limit: Vec<Option<u32>> = (0..=rmax)
            .map(|r| {
                self.0
                    .iter()
                    .filter(|&&(a, _)| a <= r)
                    .map(|&(_, b)| b)
                    .min()
            })
            .collect();
        let mut out = Vec::new();
        let mut f: Vec<Option<u32>> = vec![None; rmax as usize + 1];
        fn rec(
            r: usize,
            f: &mut Vec<Option<u32>>,
            limit: &[Option<u32>],
            smax: u32,
            out: &mut Vec<Staircase>,
            budget: usize,
        ) -> Result<()> {
            let top = r + 1 == f.len();
            let mut choices: Vec<Option<u32>> = Vec::new();
            // f is non-increasing in r, with None standing for infinity
            let floor = if top { Some(0) } else { f[r + 1] };
            if let Some(lo) = floor {
                let hi = limit[r].unwrap_or(smax).min(smax);
                choices.extend((lo..=hi).map(Some));
            }
            if limit[r].is_none() {
                choices.push(None);
            }
            for c in choices {
                f[r] = c;
                if r == 0 {
                    if f[0] == Some(0) {
                        continue;
                    }
                    let gens: Vec<(u32, u32)> = (0..f.len())
                        .filter_map(|k| match (f[k], k.checked_sub(1).map(|j| f[j])) {
                            (Some(s), None) => Some((k as u32, s)),
                            (Some(s), Some(prev)) if prev.is_none_or(|p| p > s) => {
                                Some((k as u32, s))
                            }
                            _ => None,
                        })
                        .collect();
                    out.push(Staircase::new(gens)?);
                    if out.len() > budget {
                        return Err(Error::BoundExceeded(format!(
                            "more than {budget} candidate staircase divisors"
                        )));
                    }
                } else {
                    rec(r - 1, f, limit, smax, out, budget)?;
                }
            }
            f[r] = None;
            Ok(())
        }
        rec(rmax as usize, &mut f, &limit, smax, &mut out, budget)?;
        out.sort();
        Ok(out)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!(self.0.iter().map(|&(r, s)| [r, s]).collect::<Vec<_>>())
    }
}

impl fmt::Display for Staircase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unit() {
            return write!(f, "<1>");
        }
        let gens: Vec<String> = self
            .0
            .iter()
            .map(|&(r, s)| Monomial::bivariate(2, r, s).format_with(&["X".into(), "Y".into()]))
            .collect();
        write!(f, "<{}>", gens.join(", "))
    }
}

impl fmt::Debug for Staircase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for Staircase {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

/// The monoid of nonzero monomial ideals of `K[X1, X2]`.
///
/// Divisor pairs `(J, K)` of `I` are found among staircases between `I` and
/// the unit ideal inside the generator box of `I`: writing `JK = I`, the
/// generator of `JK` with least `X2` exponent is the sum of those of `J` and
/// `K`, so the largest `X1` exponents add up, and likewise for `X2`.
#[derive(Debug, Clone, Copy)]
pub struct StaircaseMonoid {
    pub max_degree: u32,
    pub budget: usize,
}

impl StaircaseMonoid {
    pub fn new(max_degree: u32) -> Self {
        StaircaseMonoid {
            max_degree,
            budget: 200_000,
        }
    }
}

impl MonoidOracle for StaircaseMonoid {
    type Element = Staircase;

    fn is_identity(&self, a: &Staircase) -> bool {
        a.is_unit()
    }

    fn divisor_pairs(&self, a: &Staircase) -> Result<Vec<(Staircase, Staircase)>> {
        if a.max_degree() > self.max_degree {
            return Err(Error::CapExceeded {
                what: "staircase generator degree",
                value: a.max_degree() as usize,
                cap: self.max_degree as usize,
            });
        }
        let candidates = a.containing_in_box(self.budget)?;
        let mut by_shape: HashMap<(u32, u32, u32), Vec<&Staircase>> = HashMap::new();
        for c in &candidates {
            by_shape
                .entry((c.max_r(), c.max_s(), c.mdeg()))
                .or_default()
                .push(c);
        }
        let mut out = Vec::new();
        for j in &candidates {
            if j == a {
                continue;
            }
            let (Some(r), Some(s), Some(m)) = (
                a.max_r().checked_sub(j.max_r()),
                a.max_s().checked_sub(j.max_s()),
                a.mdeg().checked_sub(j.mdeg()),
            ) else {
                continue;
            };
            for k in by_shape.get(&(r, s, m)).into_iter().flatten() {
                if j <= *k && *k != a && &j.product(k) == a {
                    out.push((j.clone(), (*k).clone()));
                }
            }
        }
        Ok(out)
    }

    fn combine(&self, a: &Staircase, b: &Staircase) -> Staircase {
        a.product(b)
    }
}

/// Set of lengths of `ideal` in the staircase monoid. This monoid is not
/// divisor-closed in the monoid of all ideals, so these lengths can differ
/// from lengths over all ideals.
pub fn staircase_lengths(ideal: &Staircase, max_degree: u32) -> Result<LengthSet> {
    let m = StaircaseMonoid::new(max_degree);
    Factorizer::new(&m).length_set(ideal)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn power_of_max(k: u32) -> Staircase {
        Staircase::new((0..=k).map(|i| (k - i, i))).unwrap()
    }

    #[test]
    fn minimalization_and_order() {
        let s = Staircase::new([(0, 3), (2, 0), (1, 1), (2, 2), (1, 4)]).unwrap();
        assert_eq!(s.generators(), &[(2, 0), (1, 1), (0, 3)]);
        assert!(s.is_primary());
        assert_eq!(s.mdeg(), 2);
    }

    #[test]
    fn products() {
        let m = power_of_max(1);
        assert_eq!(m.product(&m), power_of_max(2));
        assert_eq!(m.product(&Staircase::unit()), m);
    }

    #[test]
    fn box_enumeration_contains_divisors() {
        let a2 = power_of_max(2);
        let c = a2.containing_in_box(1000).unwrap();
        // <X,Y>, <X,Y^2>, <X^2,Y> and <X,Y>^2 itself
        assert!(c.contains(&power_of_max(1)));
        assert!(c.contains(&a2));
        assert!(c.iter().all(|j| j.contains(&a2) && !j.is_unit()));
        assert_eq!(c.len(), 4);
    }

    #[test]
    fn lengths_in_staircase_monoid() {
        assert_eq!(
            staircase_lengths(&power_of_max(2), 20).unwrap(),
            LengthSet::singleton(2)
        );
        assert_eq!(
            staircase_lengths(&power_of_max(1), 20).unwrap(),
            LengthSet::singleton(1)
        );
        let l3 = staircase_lengths(&power_of_max(3), 20).unwrap();
        assert!(l3.contains(2) && l3.contains(3));
    }

    #[test]
    fn non_primary_staircase() {
        let s = Staircase::new([(2, 1)]).unwrap();
        assert!(!s.is_primary());
        assert_eq!(staircase_lengths(&s, 20).unwrap(), LengthSet::singleton(3));
    }
}
