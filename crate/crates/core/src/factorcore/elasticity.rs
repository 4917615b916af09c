//! Elasticity constructions and window scans.

use serde::Serialize;

use super::lengths::{LengthSet, Rho};
use super::{Factorizer, MonoidOracle};
use crate::{Error, Result};

/// Arithmetic of the shifted-interval construction for a target elasticity
/// `q = r/s`: if `u` is a prime and `L(a) = [2, r-s+2]`, then
/// `L(u^(s-2) a) = [s, r]`, whose elasticity is `q`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ElasticPlan {
    pub r: u64,
    pub s: u64,
    /// `r - s + 2`, the required maximum length of the witness.
    pub witness_max: usize,
    /// `s - 2`, the power of the prime factor.
    pub shift: usize,
}

impl ElasticPlan {
    /// Plans for `q > 1`. In lowest terms `q = r/s`; when `s = 1` the fraction
    /// is written as `2r/2` so that the witness still has minimum length 2.
    pub fn new(q: Rho) -> Result<Self> {
        if q <= Rho::from_integer(1) {
            return Err(Error::Precondition(format!(
                "target elasticity must exceed 1, got {}",
                super::rho_string(&q)
            )));
        }
        let (mut r, mut s) = (*q.numer(), *q.denom());
        if s == 1 {
            r *= 2;
            s = 2;
        }
        debug_assert!(r > s && s >= 2);
        Ok(ElasticPlan {
            r,
            s,
            witness_max: (r - s + 2) as usize,
            shift: (s - 2) as usize,
        })
    }

    pub fn target(&self) -> Rho {
        Rho::new(self.r, self.s)
    }

    /// Checks `min L = 2` and `max L = r - s + 2` for the witness.
    pub fn check_witness(&self, l: &LengthSet) -> Result<()> {
        if l.min() != 2 || l.max() != self.witness_max {
            return Err(Error::Precondition(format!(
                "witness lengths {l} need min 2 and max {}",
                self.witness_max
            )));
        }
        Ok(())
    }

    /// `(s - 2) + L(witness)`.
    pub fn predicted(&self, witness: &LengthSet) -> LengthSet {
        witness.shift(self.shift)
    }
}

/// Output of [`full_elasticity_construct`].
#[derive(Debug, Clone, Serialize)]
pub struct ElasticConstruction<E> {
    pub plan: ElasticPlan,
    pub element: E,
    pub witness_lengths: LengthSet,
    pub predicted: LengthSet,
    /// Lengths of the constructed element computed by the engine.
    pub computed: LengthSet,
}

impl<E> ElasticConstruction<E> {
    pub fn verified(&self) -> bool {
        self.predicted == self.computed && self.computed.rho() == self.plan.target()
    }
}

/// Builds `b = u^(s-2) * witness` with `rho(L(b)) = q` and checks the
/// prediction against the engine.
pub fn full_elasticity_construct<O: MonoidOracle>(
    fz: &mut Factorizer<'_, O>,
    q: Rho,
    prime: &O::Element,
    witness: &O::Element,
) -> Result<ElasticConstruction<O::Element>> {
    let plan = ElasticPlan::new(q)?;
    let witness_lengths = fz.length_set(witness)?;
    plan.check_witness(&witness_lengths)?;
    let mut element = witness.clone();
    for _ in 0..plan.shift {
        element = fz.oracle().combine(&element, prime);
    }
    let predicted = plan.predicted(&witness_lengths);
    let computed = fz.length_set(&element)?;
    Ok(ElasticConstruction {
        plan,
        element,
        witness_lengths,
        predicted,
        computed,
    })
}

/// Smallest elasticity above 1 among the sets of lengths in a window.
#[derive(Debug, Clone)]
pub struct GapScan<E> {
    pub window_size: usize,
    pub min_rho: Option<Rho>,
    pub witness: Option<E>,
    pub witness_lengths: Option<LengthSet>,
}

impl<E> GapScan<E> {
    pub fn half_factorial_in_window(&self) -> bool {
        self.min_rho.is_none()
    }
}

pub fn elasticity_gap_scan<O: MonoidOracle>(
    fz: &mut Factorizer<'_, O>,
    universe: &[O::Element],
) -> Result<GapScan<O::Element>> {
    let mut best: Option<(Rho, O::Element, LengthSet)> = None;
    for a in universe {
        let l = fz.length_set(a)?;
        let rho = l.rho();
        if rho > Rho::from_integer(1) {
            let better = match &best {
                None => true,
                Some((b, e, _)) => (rho, a) < (*b, e),
            };
            if better {
                best = Some((rho, a.clone(), l));
            }
        }
    }
    Ok(match best {
        Some((rho, e, l)) => GapScan {
            window_size: universe.len(),
            min_rho: Some(rho),
            witness: Some(e),
            witness_lengths: Some(l),
        },
        None => GapScan {
            window_size: universe.len(),
            min_rho: None,
            witness: None,
            witness_lengths: None,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::factorcore::{FreeAbelian, PlaneMonoid};

    #[test]
    fn plans_match_shifted_intervals() {
        let p = ElasticPlan::new(Rho::new(7, 4)).unwrap();
        assert_eq!((p.shift, p.witness_max), (2, 5));
        assert_eq!(
            p.predicted(&LengthSet::interval(2, 5)),
            LengthSet::interval(4, 7)
        );

        let p = ElasticPlan::new(Rho::new(3, 2)).unwrap();
        assert_eq!(
            p.predicted(&LengthSet::interval(2, 3)),
            LengthSet::interval(2, 3)
        );

        let p = ElasticPlan::new(Rho::new(5, 3)).unwrap();
        assert_eq!(
            p.predicted(&LengthSet::interval(2, 4)),
            LengthSet::interval(3, 5)
        );

        let p = ElasticPlan::new(Rho::from_integer(2)).unwrap();
        assert_eq!((p.r, p.s), (4, 2));
        assert!(ElasticPlan::new(Rho::from_integer(1)).is_err());
    }

    #[test]
    fn witness_precondition_is_checked() {
        let p = ElasticPlan::new(Rho::new(7, 4)).unwrap();
        assert!(p.check_witness(&LengthSet::interval(2, 4)).is_err());
        assert!(p.check_witness(&LengthSet::interval(3, 5)).is_err());
    }

    #[test]
    fn free_abelian_has_no_gap() {
        let m = FreeAbelian::new(2, 6);
        let mut f = Factorizer::new(&m);
        let scan = elasticity_gap_scan(&mut f, &m.window(4)).unwrap();
        assert!(scan.half_factorial_in_window());
    }

    #[test]
    fn plane_gap_is_above_one() {
        let m = PlaneMonoid::new(8);
        let mut f = Factorizer::new(&m);
        let scan = elasticity_gap_scan(&mut f, &PlaneMonoid::window(8)).unwrap();
        assert!(scan.min_rho.unwrap() > Rho::from_integer(1));
    }
}
