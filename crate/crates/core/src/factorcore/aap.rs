//! Recognition of almost arithmetic (multi)progressions.
//!
//! `L` is an AAMP with difference `d`, period `D` (`{0, d} ⊆ D ⊆ [0, d]`) and
//! bound `M` when
//!
//! ```text
//! L = y + (L' ∪ L* ∪ L'') ⊆ y + D + dZ
//! ```
//!
//! with `L*` nonempty, `min L* = 0`, `L* = (D + dZ) ∩ [0, max L*]`,
//! `L' ⊆ [-M, -1]` and `L'' ⊆ max L* + [1, M]`. An AAP is an AAMP with
//! period `{0, d}`.
//!
//! For fixed `(M, d, y, max L*)` the smallest workable period is forced: its
//! residues are those of `L - y` modulo `d`. Adding residues can only add
//! required elements to `L*`. So the search runs over `(M, d, y, max L*)` and
//! never enumerates periods.

use std::collections::BTreeSet;

use serde::Serialize;

/// One decomposition `L = y + (L' ∪ L* ∪ L'')`. The parts are stored
/// relative to `y`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Progression {
    pub difference: i64,
    pub period: Vec<i64>,
    pub bound: i64,
    pub y: i64,
    pub lower: Vec<i64>,
    pub central: Vec<i64>,
    pub upper: Vec<i64>,
}

impl Progression {
    pub fn reconstruct(&self) -> Vec<i64> {
        let mut out: Vec<i64> = self
            .lower
            .iter()
            .chain(&self.central)
            .chain(&self.upper)
            .map(|x| x + self.y)
            .collect();
        out.sort_unstable();
        out
    }

    fn in_progression(&self, z: i64) -> bool {
        let r = z.rem_euclid(self.difference);
        self.period
            .iter()
            .any(|p| p.rem_euclid(self.difference) == r)
    }

    /// Re-checks every clause of the definition against `l`.
    pub fn validates(&self, l: &[i64]) -> bool {
        let d = self.difference;
        if d < 1 || self.bound < 0 {
            return false;
        }
        let period_ok = self.period.first() == Some(&0)
            && self.period.last() == Some(&d)
            && self.period.windows(2).all(|w| w[0] < w[1]);
        let Some(&top) = self.central.last() else {
            return false;
        };
        let central_ok = self.central[0] == 0
            && self.central
                == (0..=top)
                    .filter(|&z| self.in_progression(z))
                    .collect::<Vec<_>>();
        let lower_ok = self.lower.iter().all(|&z| (-self.bound..=-1).contains(&z));
        let upper_ok = self
            .upper
            .iter()
            .all(|&z| (top + 1..=top + self.bound).contains(&z));
        let contained = l.iter().all(|&x| self.in_progression(x - self.y));
        let mut sorted = l.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        period_ok && central_ok && lower_ok && upper_ok && contained && self.reconstruct() == sorted
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AapReport {
    pub input: Vec<i64>,
    pub max_bound: i64,
    /// Decomposition with period `{0, d}` minimizing `(M, d)`.
    pub aap: Option<Progression>,
    /// Decomposition minimizing `(M, d, |D|, D)`.
    pub aamp: Option<Progression>,
}

impl AapReport {
    pub fn is_aap(&self) -> bool {
        self.aap.is_some()
    }

    pub fn is_aamp(&self) -> bool {
        self.aamp.is_some()
    }
}

fn best_for(l: &[i64], d: i64, m: i64, aap_only: bool) -> Option<Progression> {
    let lo = l[0];
    let hi = *l.last().unwrap();
    let mut best: Option<(usize, Vec<i64>, Progression)> = None;
    for &y in l.iter().take_while(|&&y| y - lo <= m) {
        let residues: BTreeSet<i64> = l.iter().map(|x| (x - y).rem_euclid(d)).collect();
        if aap_only && residues.len() > 1 {
            continue;
        }
        let mut period: Vec<i64> = residues.iter().copied().collect();
        period.push(d);
        if period.len() > 1 && period[period.len() - 2] == d {
            period.pop();
        }
        let required: Vec<i64> = (0..=hi - y)
            .filter(|z| residues.contains(&z.rem_euclid(d)))
            .collect();
        for &top_abs in l.iter().rev().take_while(|&&t| hi - t <= m) {
            if top_abs < y {
                break;
            }
            let top = top_abs - y;
            let central: Vec<i64> = l
                .iter()
                .filter(|&&x| x >= y && x <= top_abs)
                .map(|x| x - y)
                .collect();
            let expected: Vec<i64> = required.iter().copied().take_while(|&z| z <= top).collect();
            if central != expected {
                continue;
            }
            let p = Progression {
                difference: d,
                period: period.clone(),
                bound: m,
                y,
                lower: l.iter().filter(|&&x| x < y).map(|x| x - y).collect(),
                central,
                upper: l.iter().filter(|&&x| x > top_abs).map(|x| x - y).collect(),
            };
            let key = (period.len(), period.clone());
            if best
                .as_ref()
                .is_none_or(|(n, per, _)| (key.0, &key.1) < (*n, per))
            {
                best = Some((key.0, key.1, p));
            }
            break;
        }
    }
    best.map(|(_, _, p)| p)
}

fn search(l: &[i64], max_bound: i64, aap_only: bool) -> Option<Progression> {
    let span = (l.last().unwrap() - l[0]).max(1);
    for m in 0..=max_bound {
        for d in 1..=span {
            if let Some(p) = best_for(l, d, m, aap_only) {
                return Some(p);
            }
        }
    }
    None
}

/// Finds the minimal AAP and AAMP decompositions of `l` with bound at most
/// `max_bound`. `l` must be nonempty.
pub fn recognize_aap(l: &[i64], max_bound: i64) -> AapReport {
    let mut sorted = l.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    assert!(!sorted.is_empty(), "recognize_aap needs a nonempty set");
    AapReport {
        aap: search(&sorted, max_bound, true),
        aamp: search(&sorted, max_bound, false),
        input: sorted,
        max_bound,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn interval_is_aap_with_difference_one() {
        let l: Vec<i64> = (2..=10).collect();
        let r = recognize_aap(&l, 5);
        let p = r.aap.unwrap();
        assert_eq!((p.difference, p.bound), (1, 0));
        assert!(p.validates(&l));
    }

    #[test]
    fn progression_is_aap_with_difference_two() {
        let l = [2, 4, 6, 8];
        let p = recognize_aap(&l, 5).aap.unwrap();
        assert_eq!((p.difference, p.bound), (2, 0));
        assert_eq!(p.reconstruct(), l);
    }

    #[test]
    fn fringes_need_positive_bound() {
        // 1 is a lower fringe of the progression 5, 7, 9, ...
        let l = [1, 5, 7, 9, 11];
        let r = recognize_aap(&l, 6);
        let p = r.aap.unwrap();
        assert!(p.validates(&l));
        assert_eq!((p.difference, p.bound, p.y), (2, 4, 5));
        assert!(!recognize_aap(&l, 3).is_aap());
    }

    #[test]
    fn multiprogression_uses_forced_period() {
        let l = [0, 1, 3, 4, 6, 7, 9];
        let r = recognize_aap(&l, 0);
        let p = r.aamp.unwrap();
        assert_eq!((p.difference, p.period.clone()), (3, vec![0, 1, 3]));
        assert!(p.validates(&l));
        assert!(!r.aap.is_some_and(|a| a.bound == 0 && a.difference == 3));
    }

    #[test]
    fn fringes_must_share_the_residue_classes() {
        // 2 and 10 are odd distances from the progression 3, 5, 7, 9, so no
        // difference-2 decomposition exists; the best one is d = 7, M = 0
        let l = [2, 3, 5, 7, 9, 10];
        let r = recognize_aap(&l, 3);
        assert!(!r.is_aap());
        let p = r.aamp.unwrap();
        assert_eq!((p.difference, p.bound, p.y), (7, 0, 2));
        assert_eq!(p.period, vec![0, 1, 3, 5, 7]);
        assert!(p.validates(&l));
    }

    #[test]
    fn singleton() {
        let r = recognize_aap(&[4], 0);
        assert!(r.is_aap() && r.is_aamp());
        assert!(r.aap.unwrap().validates(&[4]));
    }
}
