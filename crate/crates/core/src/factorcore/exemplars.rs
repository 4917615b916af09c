//! Small monoids with known arithmetic, used as reference points.

use super::MonoidOracle;
use crate::{Error, Result};

/// `(N^2 ∪ {(0,0)}, +)`: pairs of positive integers plus the identity.
///
/// Atoms are the pairs with a coordinate equal to 1. The set of lengths of
/// `(m, m)` runs from 2 to `m`. Coordinates above `bound` are refused.
#[derive(Debug, Clone, Copy)]
pub struct PlaneMonoid {
    bound: u32,
}

impl PlaneMonoid {
    pub fn new(bound: u32) -> Self {
        PlaneMonoid { bound }
    }

    /// All non-identity elements of `[1, n]^2`.
    pub fn window(n: u32) -> Vec<(u32, u32)> {
        (1..=n).flat_map(|x| (1..=n).map(move |y| (x, y))).collect()
    }
}

impl MonoidOracle for PlaneMonoid {
    type Element = (u32, u32);

    fn is_identity(&self, a: &(u32, u32)) -> bool {
        *a == (0, 0)
    }

    fn divisor_pairs(&self, a: &(u32, u32)) -> Result<Vec<((u32, u32), (u32, u32))>> {
        let (x, y) = *a;
        if (x == 0) != (y == 0) {
            return Err(Error::InvalidArgument(format!(
                "({x},{y}) is not in N^2 ∪ {{0}}"
            )));
        }
        if x.max(y) > self.bound {
            return Err(Error::BoundExceeded(format!(
                "({x},{y}) outside the plane window bound {}",
                self.bound
            )));
        }
        let mut out = Vec::new();
        for x1 in 1..x {
            for y1 in 1..y {
                out.push(((x1, y1), (x - x1, y - y1)));
            }
        }
        Ok(out)
    }

    fn combine(&self, a: &(u32, u32), b: &(u32, u32)) -> (u32, u32) {
        (a.0 + b.0, a.1 + b.1)
    }
}

/// The free abelian monoid `N0^n`, which is factorial.
#[derive(Debug, Clone, Copy)]
pub struct FreeAbelian {
    rank: usize,
    bound: u32,
}

impl FreeAbelian {
    pub fn new(rank: usize, bound: u32) -> Self {
        FreeAbelian { rank, bound }
    }

    /// All non-identity exponent vectors with entries at most `n`.
    pub fn window(&self, n: u32) -> Vec<Vec<u32>> {
        let mut out = vec![Vec::new()];
        for _ in 0..self.rank {
            out = out
                .into_iter()
                .flat_map(|v| {
                    (0..=n).map(move |e| {
                        let mut w = v.clone();
                        w.push(e);
                        w
                    })
                })
                .collect();
        }
        out.retain(|v| v.iter().any(|&e| e > 0));
        out
    }
}

impl MonoidOracle for FreeAbelian {
    type Element = Vec<u32>;

    fn is_identity(&self, a: &Vec<u32>) -> bool {
        a.iter().all(|&e| e == 0)
    }

    fn divisor_pairs(&self, a: &Vec<u32>) -> Result<Vec<(Vec<u32>, Vec<u32>)>> {
        if a.len() != self.rank {
            return Err(Error::InvalidArgument(format!(
                "expected an exponent vector of length {}",
                self.rank
            )));
        }
        if a.iter().any(|&e| e > self.bound) {
            return Err(Error::BoundExceeded(format!(
                "{a:?} outside exponent bound {}",
                self.bound
            )));
        }
        let mut divisors = vec![Vec::new()];
        for &e in a {
            divisors = divisors
                .into_iter()
                .flat_map(|v| {
                    (0..=e).map(move |x| {
                        let mut w = v.clone();
                        w.push(x);
                        w
                    })
                })
                .collect();
        }
        Ok(divisors
            .into_iter()
            .filter(|b| !self.is_identity(b) && b != a)
            .map(|b| {
                let c = a.iter().zip(&b).map(|(x, y)| x - y).collect();
                (b, c)
            })
            .collect())
    }

    fn combine(&self, a: &Vec<u32>, b: &Vec<u32>) -> Vec<u32> {
        a.iter().zip(b).map(|(x, y)| x + y).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::factorcore::{Factorizer, LengthSet};

    #[test]
    fn free_abelian_is_half_factorial() {
        let m = FreeAbelian::new(2, 8);
        let mut f = Factorizer::new(&m);
        assert_eq!(f.length_set(&vec![3, 2]).unwrap(), LengthSet::singleton(5));
        assert_eq!(f.factorizations(&vec![3, 2], 10).unwrap().len(), 1);
        assert_eq!(m.window(2).len(), 8);
    }

    #[test]
    fn plane_rejects_half_zero() {
        let m = PlaneMonoid::new(8);
        assert!(m.divisor_pairs(&(0, 3)).is_err());
        assert!(matches!(
            m.divisor_pairs(&(9, 1)),
            Err(Error::BoundExceeded(_))
        ));
    }
}
