//! Monoids of zero-sum sequences over finitely generated abelian groups
//! `C_n1 x ... x C_nr x Z^s`.
//!
//! A sequence is a multiplicity vector over a fixed finite support. Atoms
//! are the minimal zero-sum sequences.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::factorcore::{Factorizer, LengthSet, MonoidOracle};
use crate::{Error, Result};

/// Component orders of a finitely generated abelian group; 0 stands for `Z`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct GroupSpec {
    pub orders: Vec<u32>,
}

impl GroupSpec {
    pub fn new(orders: Vec<u32>) -> Result<Self> {
        if orders.is_empty() || orders.contains(&1) {
            return Err(Error::InvalidArgument(format!(
                "component orders must be 0 (for Z) or at least 2, got {orders:?}"
            )));
        }
        Ok(GroupSpec { orders })
    }

    pub fn cyclic(n: u32) -> Self {
        GroupSpec { orders: vec![n] }
    }

    pub fn integers() -> Self {
        GroupSpec { orders: vec![0] }
    }

    pub fn rank(&self) -> usize {
        self.orders.len()
    }

    pub fn is_finite(&self) -> bool {
        !self.orders.contains(&0)
    }

    pub fn normalize(&self, g: &[i64]) -> Vec<i64> {
        g.iter()
            .zip(&self.orders)
            .map(|(&x, &n)| if n == 0 { x } else { x.rem_euclid(n as i64) })
            .collect()
    }

    pub fn is_zero(&self, g: &[i64]) -> bool {
        self.normalize(g).iter().all(|&x| x == 0)
    }

    /// All nonzero elements of a finite group, in lexicographic order.
    pub fn nonzero_elements(&self) -> Result<Vec<Vec<i64>>> {
        if !self.is_finite() {
            return Err(Error::InvalidArgument("the group is infinite".into()));
        }
        let mut out: Vec<Vec<i64>> = vec![Vec::new()];
        for &n in &self.orders {
            out = out
                .into_iter()
                .flat_map(|v| {
                    (0..n as i64).map(move |x| {
                        let mut w = v.clone();
                        w.push(x);
                        w
                    })
                })
                .collect();
        }
        out.retain(|g| g.iter().any(|&x| x != 0));
        Ok(out)
    }
}

impl FromStr for GroupSpec {
    type Err = Error;

    /// Parses `C2xC3xZ`-style specifications.
    fn from_str(s: &str) -> Result<Self> {
        let orders = s
            .split(['x', 'X', '*'])
            .map(|part| {
                let p = part.trim();
                if p == "Z" {
                    Ok(0)
                } else {
                    p.strip_prefix('C')
                        .and_then(|n| n.parse::<u32>().ok())
                        .filter(|&n| n >= 2)
                        .ok_or_else(|| Error::Parse(format!("bad group component {p:?} in {s:?}")))
                }
            })
            .collect::<Result<Vec<_>>>()?;
        GroupSpec::new(orders)
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .orders
            .iter()
            .map(|&n| {
                if n == 0 {
                    "Z".to_string()
                } else {
                    format!("C{n}")
                }
            })
            .collect();
        write!(f, "{}", parts.join("x"))
    }
}

/// A sequence over a group, as multiplicities over a sorted support.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ZeroSumSequence {
    pub group: GroupSpec,
    pub support: Vec<Vec<i64>>,
    pub multiplicities: Vec<u32>,
}

impl ZeroSumSequence {
    /// Builds a sequence from `(element, multiplicity)` pairs; repeated
    /// elements are merged and elements are reduced modulo the group.
    pub fn new(group: GroupSpec, items: impl IntoIterator<Item = (Vec<i64>, u32)>) -> Result<Self> {
        let mut merged: std::collections::BTreeMap<Vec<i64>, u32> = Default::default();
        for (g, k) in items {
            if g.len() != group.rank() {
                return Err(Error::InvalidArgument(format!(
                    "element {g:?} does not match group {group}"
                )));
            }
            if k > 0 {
                *merged.entry(group.normalize(&g)).or_default() += k;
            }
        }
        Ok(ZeroSumSequence {
            group,
            support: merged.keys().cloned().collect(),
            multiplicities: merged.values().copied().collect(),
        })
    }

    /// Parses `[(1,0,2)^3, (0,1,-1)^2]`; for rank-one groups the parentheses
    /// may be dropped, as in `[1^3, 2^3]`.
    pub fn parse(group: GroupSpec, s: &str) -> Result<Self> {
        let t = s.trim();
        let inner = t
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("sequence literal must be [...], got {s:?}")))?;
        let mut items = Vec::new();
        let mut rest = inner.trim();
        while !rest.is_empty() {
            let (elem, after) = if let Some(r) = rest.strip_prefix('(') {
                let close = r
                    .find(')')
                    .ok_or_else(|| Error::Parse(format!("unclosed tuple in {s:?}")))?;
                (r[..close].to_string(), &r[close + 1..])
            } else {
                let end = rest.find(['^', ',']).unwrap_or(rest.len());
                (rest[..end].to_string(), &rest[end..])
            };
            let g = elem
                .split(',')
                .map(|x| {
                    x.trim()
                        .parse::<i64>()
                        .map_err(|_| Error::Parse(format!("bad group element {elem:?}")))
                })
                .collect::<Result<Vec<_>>>()?;
            let mut after = after.trim_start();
            let mut mult = 1;
            if let Some(r) = after.strip_prefix('^') {
                let r = r.trim_start();
                let end = r.find(|c: char| !c.is_ascii_digit()).unwrap_or(r.len());
                mult = r[..end]
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad multiplicity in {s:?}")))?;
                after = r[end..].trim_start();
            }
            items.push((g, mult));
            rest = after.strip_prefix(',').unwrap_or(after).trim_start();
            if !after.is_empty() && !after.starts_with(',') {
                return Err(Error::Parse(format!("unexpected {after:?} in {s:?}")));
            }
        }
        ZeroSumSequence::new(group, items)
    }

    pub fn len(&self) -> usize {
        self.multiplicities.iter().map(|&k| k as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn sum(&self) -> Vec<i64> {
        sigma(&self.group, &self.support, &self.multiplicities)
    }

    pub fn is_zero_sum(&self) -> bool {
        self.group.is_zero(&self.sum())
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "group": self.group.to_string(),
            "terms": self.support.iter().zip(&self.multiplicities)
                .map(|(g, k)| serde_json::json!({"element": g, "multiplicity": k}))
                .collect::<Vec<_>>(),
        })
    }
}

impl fmt::Display for ZeroSumSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .support
            .iter()
            .zip(&self.multiplicities)
            .map(|(g, k)| {
                let e: Vec<String> = g.iter().map(|x| x.to_string()).collect();
                format!("({})^{k}", e.join(","))
            })
            .collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

fn sigma(group: &GroupSpec, support: &[Vec<i64>], mult: &[u32]) -> Vec<i64> {
    let mut s = vec![0i64; group.rank()];
    for (g, &k) in support.iter().zip(mult) {
        for (acc, x) in s.iter_mut().zip(g) {
            *acc += x * k as i64;
        }
    }
    group.normalize(&s)
}

/// The monoid `B(G0)` for a finite support `G0`, with multiplicity vectors as
/// elements.
#[derive(Debug, Clone)]
pub struct ZeroSumMonoid {
    pub group: GroupSpec,
    pub support: Vec<Vec<i64>>,
    pub max_len: usize,
}

impl ZeroSumMonoid {
    pub fn new(group: GroupSpec, support: Vec<Vec<i64>>, max_len: usize) -> Self {
        ZeroSumMonoid {
            group,
            support,
            max_len,
        }
    }

    pub fn sum(&self, a: &[u32]) -> Vec<i64> {
        sigma(&self.group, &self.support, a)
    }

    /// All zero-sum multiplicity vectors with total length in `[1, n]`.
    pub fn window(&self, n: usize) -> Vec<Vec<u32>> {
        let mut out = Vec::new();
        let mut cur = vec![0u32; self.support.len()];
        fn rec(
            m: &ZeroSumMonoid,
            i: usize,
            left: usize,
            cur: &mut Vec<u32>,
            out: &mut Vec<Vec<u32>>,
        ) {
            if i == cur.len() {
                if cur.iter().any(|&k| k > 0) && m.group.is_zero(&m.sum(cur)) {
                    out.push(cur.clone());
                }
                return;
            }
            for k in 0..=left {
                cur[i] = k as u32;
                rec(m, i + 1, left - k, cur, out);
            }
            cur[i] = 0;
        }
        rec(self, 0, n, &mut cur, &mut out);
        out
    }
}

/// Proper nonempty zero-sum sub-multisets of `a`, each as `(b, a - b)`.
fn zero_sum_splits(m: &ZeroSumMonoid, a: &[u32]) -> Vec<(Vec<u32>, Vec<u32>)> {
    let mut out = Vec::new();
    let mut b = vec![0u32; a.len()];
    fn rec(
        m: &ZeroSumMonoid,
        a: &[u32],
        i: usize,
        b: &mut Vec<u32>,
        out: &mut Vec<(Vec<u32>, Vec<u32>)>,
    ) {
        if i == a.len() {
            let nonempty = b.iter().any(|&k| k > 0);
            let proper = b.as_slice() != a;
            if nonempty && proper && m.group.is_zero(&m.sum(b)) {
                let c = a.iter().zip(b.iter()).map(|(x, y)| x - y).collect();
                out.push((b.clone(), c));
            }
            return;
        }
        for k in 0..=a[i] {
            b[i] = k;
            rec(m, a, i + 1, b, out);
        }
        b[i] = 0;
    }
    rec(m, a, 0, &mut b, &mut out);
    out
}

impl MonoidOracle for ZeroSumMonoid {
    type Element = Vec<u32>;

    fn is_identity(&self, a: &Vec<u32>) -> bool {
        a.iter().all(|&k| k == 0)
    }

    fn divisor_pairs(&self, a: &Vec<u32>) -> Result<Vec<(Vec<u32>, Vec<u32>)>> {
        if a.len() != self.support.len() {
            return Err(Error::InvalidArgument(
                "multiplicity vector does not match support".into(),
            ));
        }
        let len: usize = a.iter().map(|&k| k as usize).sum();
        if len > self.max_len {
            return Err(Error::CapExceeded {
                what: "sequence length",
                value: len,
                cap: self.max_len,
            });
        }
        if !self.group.is_zero(&self.sum(a)) {
            return Err(Error::InvalidArgument(format!(
                "{a:?} is not a zero-sum sequence"
            )));
        }
        Ok(zero_sum_splits(self, a))
    }

    fn combine(&self, a: &Vec<u32>, b: &Vec<u32>) -> Vec<u32> {
        a.iter().zip(b).map(|(x, y)| x + y).collect()
    }
}

/// True iff `s` is zero-sum, nonempty, and has no proper nonempty zero-sum
/// subsequence.
pub fn minimal_zero_sum(s: &ZeroSumSequence) -> bool {
    if s.is_empty() || !s.is_zero_sum() {
        return false;
    }
    let m = ZeroSumMonoid::new(s.group.clone(), s.support.clone(), usize::MAX);
    zero_sum_splits(&m, &s.multiplicities).is_empty()
}

/// The set of lengths of a zero-sum sequence.
pub fn lengths_over_group(s: &ZeroSumSequence, max_len: usize) -> Result<LengthSet> {
    if !s.is_zero_sum() {
        return Err(Error::Precondition(format!(
            "{s} is not a zero-sum sequence"
        )));
    }
    let m = ZeroSumMonoid::new(s.group.clone(), s.support.clone(), max_len);
    Factorizer::new(&m).length_set(&s.multiplicities)
}

/// Lengths by direct enumeration of partitions into minimal zero-sum blocks,
/// always splitting off a block that contains the first remaining term.
/// Independent of the factorization engine; used to double-check results.
pub fn partition_lengths(s: &ZeroSumSequence) -> BTreeSet<usize> {
    let m = ZeroSumMonoid::new(s.group.clone(), s.support.clone(), usize::MAX);
    let mut out = BTreeSet::new();
    fn rec(m: &ZeroSumMonoid, rest: &[u32], depth: usize, out: &mut BTreeSet<usize>) {
        let Some(first) = rest.iter().position(|&k| k > 0) else {
            out.insert(depth);
            return;
        };
        let mut block = vec![0u32; rest.len()];
        block[first] = 1;
        fn blocks(
            m: &ZeroSumMonoid,
            rest: &[u32],
            i: usize,
            block: &mut Vec<u32>,
            found: &mut Vec<Vec<u32>>,
        ) {
            if i == rest.len() {
                if m.group.is_zero(&m.sum(block)) {
                    let minimal = zero_sum_splits(m, block).is_empty();
                    if minimal {
                        found.push(block.clone());
                    }
                }
                return;
            }
            let lo = block[i];
            for k in lo..=rest[i] {
                block[i] = k;
                blocks(m, rest, i + 1, block, found);
            }
            block[i] = lo;
        }
        let mut found = Vec::new();
        blocks(m, rest, 0, &mut block, &mut found);
        for b in found {
            let next: Vec<u32> = rest.iter().zip(&b).map(|(x, y)| x - y).collect();
            rec(m, &next, depth + 1, out);
        }
    }
    if s.is_zero_sum() {
        rec(&m, &s.multiplicities, 0, &mut out);
    }
    out
}

/// Search window for [`realize_length_set_over_z`].
#[derive(Debug, Clone, Copy, Serialize)]
pub struct RealizeWindow {
    /// Support is `[-support_radius, support_radius] \ {0}`.
    pub support_radius: i64,
    pub max_multiplicity: u32,
    pub max_len: usize,
    pub budget: usize,
}

impl Default for RealizeWindow {
    fn default() -> Self {
        RealizeWindow {
            support_radius: 5,
            max_multiplicity: 6,
            max_len: 16,
            budget: 2_000_000,
        }
    }
}

/// Looks for a zero-sum sequence over `Z` whose set of lengths is exactly
/// `target`, by increasing sequence length inside `window`. Any hit is
/// re-checked by [`partition_lengths`] before it is returned. `Ok(None)`
/// means the window was exhausted.
pub fn realize_length_set_over_z(
    target: &LengthSet,
    window: RealizeWindow,
) -> Result<Option<ZeroSumSequence>> {
    if target.min() < 2 {
        return Err(Error::Precondition(format!(
            "target {target} must lie in N>=2"
        )));
    }
    let group = GroupSpec::integers();
    let r = window.support_radius;
    let support: Vec<Vec<i64>> = (-r..=r).filter(|&x| x != 0).map(|x| vec![x]).collect();
    let monoid = ZeroSumMonoid::new(group.clone(), support.clone(), window.max_len);
    let mut visited = 0usize;
    // every atom over Z has at least two terms
    for n in 2 * target.max()..=window.max_len {
        let mut cur = vec![0u32; support.len()];
        let mut hit = None;
        search(
            &monoid,
            &window,
            target,
            0,
            n,
            0,
            &mut cur,
            &mut visited,
            &mut hit,
        )?;
        if let Some(mult) = hit {
            let seq = ZeroSumSequence::new(group.clone(), support.iter().cloned().zip(mult))?;
            let check: Vec<usize> = partition_lengths(&seq).into_iter().collect();
            if check != target.as_slice() {
                return Err(Error::VerificationFailed(format!(
                    "{seq} has lengths {check:?}, not {target}"
                )));
            }
            return Ok(Some(seq));
        }
    }
    Ok(None)
}

#[allow(clippy::too_many_arguments)]
fn search(
    m: &ZeroSumMonoid,
    w: &RealizeWindow,
    target: &LengthSet,
    i: usize,
    left: usize,
    partial: i64,
    cur: &mut Vec<u32>,
    visited: &mut usize,
    hit: &mut Option<Vec<u32>>,
) -> Result<()> {
    if hit.is_some() {
        return Ok(());
    }
    *visited += 1;
    if *visited > w.budget {
        return Err(Error::BoundExceeded(format!(
            "realization search exceeded {} nodes",
            w.budget
        )));
    }
    if i == cur.len() {
        if left == 0 && partial == 0 {
            let mut f = Factorizer::new(m);
            if f.length_set(cur)? == *target {
                *hit = Some(cur.clone());
            }
        }
        return Ok(());
    }
    if partial.abs() > left as i64 * w.support_radius {
        return Ok(());
    }
    let g = m.support[i][0];
    for k in 0..=(left as u32).min(w.max_multiplicity) {
        cur[i] = k;
        search(
            m,
            w,
            target,
            i + 1,
            left - k as usize,
            partial + g * k as i64,
            cur,
            visited,
            hit,
        )?;
        if hit.is_some() {
            return Ok(());
        }
    }
    cur[i] = 0;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c3(s: &str) -> ZeroSumSequence {
        ZeroSumSequence::parse(GroupSpec::cyclic(3), s).unwrap()
    }

    #[test]
    fn parses_groups() {
        let g: GroupSpec = "C2xC3xZ".parse().unwrap();
        assert_eq!(g.orders, vec![2, 3, 0]);
        assert_eq!(g.to_string(), "C2xC3xZ");
        assert!("C1".parse::<GroupSpec>().is_err());
        assert!("D4".parse::<GroupSpec>().is_err());
    }

    #[test]
    fn parses_sequences() {
        let g: GroupSpec = "C2xC3xZ".parse().unwrap();
        let s = ZeroSumSequence::parse(g, "[(1,0,2)^3, (0,1,-1)^2]").unwrap();
        assert_eq!(s.len(), 5);
        assert_eq!(s.sum(), vec![1, 2, 4]);
        let t = c3("[1^3, 2^3]");
        assert_eq!(t.multiplicities, vec![3, 3]);
        assert!(t.is_zero_sum());
        assert!(ZeroSumSequence::parse(GroupSpec::cyclic(3), "[1^3 2]").is_err());
    }

    #[test]
    fn minimality() {
        assert!(minimal_zero_sum(&c3("[1^3]")));
        assert!(minimal_zero_sum(&c3("[1, 2]")));
        assert!(!minimal_zero_sum(&c3("[1^3, 2^3]")));
        let k = ZeroSumSequence::parse("C2xC2".parse().unwrap(), "[(1,0), (0,1), (1,1)]").unwrap();
        assert!(minimal_zero_sum(&k));
    }

    #[test]
    fn lengths() {
        assert_eq!(
            lengths_over_group(&c3("[1^3, 2^3]"), 16).unwrap(),
            LengthSet::new([2, 3]).unwrap()
        );
        assert_eq!(
            lengths_over_group(&c3("[1^3]"), 16).unwrap(),
            LengthSet::singleton(1)
        );
        let c2 = ZeroSumSequence::parse(GroupSpec::cyclic(2), "[1^8]").unwrap();
        assert_eq!(
            lengths_over_group(&c2, 16).unwrap(),
            LengthSet::singleton(4)
        );
        assert!(lengths_over_group(&c3("[1^2]"), 16).is_err());
    }

    #[test]
    fn partition_oracle_agrees() {
        let s = c3("[1^6, 2^3]");
        let engine = lengths_over_group(&s, 16).unwrap();
        let brute: Vec<usize> = partition_lengths(&s).into_iter().collect();
        assert_eq!(engine.as_slice(), brute.as_slice());
    }

    #[test]
    fn realizes_small_sets_over_z() {
        let two = realize_length_set_over_z(&LengthSet::singleton(2), RealizeWindow::default())
            .unwrap()
            .unwrap();
        assert_eq!(
            partition_lengths(&two).into_iter().collect::<Vec<_>>(),
            vec![2]
        );
        assert!(
            realize_length_set_over_z(&LengthSet::singleton(1), RealizeWindow::default()).is_err()
        );
    }
}
