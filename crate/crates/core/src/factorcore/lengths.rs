use std::collections::BTreeSet;
use std::fmt;

use num_rational::Ratio;
use serde::{Serialize, Serializer};

use crate::{Error, Result};

/// Exact elasticity value `max L / min L`.
pub type Rho = Ratio<u64>;

/// A nonempty finite set of factorization lengths, strictly increasing.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LengthSet(Vec<usize>);

impl LengthSet {
    pub fn new(lengths: impl IntoIterator<Item = usize>) -> Result<Self> {
        let set: BTreeSet<usize> = lengths.into_iter().collect();
        if set.is_empty() {
            return Err(Error::InvalidArgument(
                "a set of lengths is nonempty".into(),
            ));
        }
        Ok(LengthSet(set.into_iter().collect()))
    }

    pub fn singleton(k: usize) -> Self {
        LengthSet(vec![k])
    }

    /// The interval `[lo, hi]`.
    pub fn interval(lo: usize, hi: usize) -> Self {
        assert!(lo <= hi, "empty interval");
        LengthSet((lo..=hi).collect())
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn min(&self) -> usize {
        self.0[0]
    }

    pub fn max(&self) -> usize {
        *self.0.last().unwrap()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, k: usize) -> bool {
        self.0.binary_search(&k).is_ok()
    }

    pub fn is_interval(&self) -> bool {
        self.max() - self.min() + 1 == self.len()
    }

    /// `{a + b : a in self, b in other}`.
    pub fn sumset(&self, other: &LengthSet) -> LengthSet {
        let mut out = BTreeSet::new();
        for a in &self.0 {
            for b in &other.0 {
                out.insert(a + b);
            }
        }
        LengthSet(out.into_iter().collect())
    }

    pub fn union(&self, other: &LengthSet) -> LengthSet {
        let mut out: BTreeSet<usize> = self.0.iter().copied().collect();
        out.extend(other.0.iter().copied());
        LengthSet(out.into_iter().collect())
    }

    pub fn shift(&self, by: usize) -> LengthSet {
        LengthSet(self.0.iter().map(|k| k + by).collect())
    }

    /// Successive differences.
    pub fn delta(&self) -> BTreeSet<usize> {
        self.0.windows(2).map(|w| w[1] - w[0]).collect()
    }

    /// `max / min`, with `rho({0}) = 1`.
    pub fn rho(&self) -> Rho {
        if self.min() == 0 {
            // only {0} can contain 0 as the set of lengths of the identity
            return Rho::from_integer(1);
        }
        Rho::new(self.max() as u64, self.min() as u64)
    }
}

/// Distance set and elasticity of `l`.
pub fn delta_and_rho(l: &LengthSet) -> (BTreeSet<usize>, Rho) {
    (l.delta(), l.rho())
}

pub fn rho_string(r: &Rho) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for LengthSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|k| k.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

impl fmt::Debug for LengthSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for LengthSet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}
