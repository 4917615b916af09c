//! Atom certification for `<X1, X2>`-primary ideals of `K[X1, X2]`.
//!
//! If `I = JK` with `J, K` proper, primariness forces `mdeg J = d >= 1` and
//! `mdeg K = e >= 1` with `d + e = m = mdeg I`, and the lowest-degree pieces
//! satisfy `I_K[m] = J_K[d] * K_K[e]`. Each candidate pair of pieces has a
//! reduced echelon shape (its set of pivot positions); the certifier walks
//! every shape and either refutes it or finds a rational instance whose
//! generated ideals multiply back to `I`.
//!
//! A form of degree `d` is a coefficient vector indexed by the `X2` exponent
//! `j` of `X1^(d-j) X2^j`. Pivots are the smallest nonzero index of a row,
//! matching the lex order with `X1 > X2`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::Value;

use crate::polyarith::groebner::is_unit_basis;
use crate::polyarith::{
    normal_form, reduced_groebner, GbBudget, Ideal, Monomial, Polynomial, Rational,
};
use crate::{Caps, Error, Result};

const SAMPLES: [i64; 6] = [1, -1, 2, 3, 0, -2];
const POINT_BUDGET: usize = 400;
const MINOR_BUDGET: usize = 512;
const CHUNK: usize = 32;

fn system_budget() -> GbBudget {
    GbBudget {
        max_pairs: 20_000,
        max_basis: 400,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Certified,
    Witness,
    Inconclusive,
}

/// How a shape was ruled out.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Refutation {
    /// Pivot sums are not pivots of `I_K[m]`, or there are too few products.
    InitialMonomials,
    /// The containment system has reduced basis `{1}`.
    Elimination,
    /// A bipartite matching bound shows the products never span `I_K[m]`.
    Rank,
    /// Every maximal minor vanishes on the containment variety.
    MinorElimination,
}

/// Pivot positions of the two graded pieces.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Pattern {
    pub d: u32,
    pub e: u32,
    pub left: Vec<u32>,
    pub right: Vec<u32>,
}

impl Pattern {
    fn free_positions(pivots: &[u32], degree: u32) -> Vec<(usize, u32)> {
        pivots
            .iter()
            .enumerate()
            .flat_map(|(row, &p)| {
                (p + 1..=degree)
                    .filter(|j| !pivots.contains(j))
                    .map(move |j| (row, j))
            })
            .collect()
    }

    pub fn unknowns(&self) -> usize {
        Self::free_positions(&self.left, self.d).len()
            + Self::free_positions(&self.right, self.e).len()
    }

    fn sort_key(&self) -> (usize, u32, Vec<u32>, Vec<u32>) {
        (
            self.unknowns(),
            self.d,
            self.left.clone(),
            self.right.clone(),
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Unresolved {
    pub pattern: Pattern,
    pub reason: String,
}

/// Refutation record for one split `d + e = m`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SplitRecord {
    pub d: u32,
    pub e: u32,
    pub patterns: usize,
    pub refuted: usize,
    pub by_method: BTreeMap<Refutation, usize>,
    pub unresolved: Vec<Unresolved>,
    /// Set when the split was not examined (caps, or a witness was found first).
    pub skipped: Option<String>,
}

impl SplitRecord {
    pub fn fully_refuted(&self) -> bool {
        self.skipped.is_none() && self.unresolved.is_empty() && self.refuted == self.patterns
    }
}

/// A factorization of the input into two proper ideals.
#[derive(Debug, Clone, Serialize)]
pub struct WitnessRecord {
    pub pattern: Pattern,
    pub left: String,
    pub right: String,
    pub left_generators: Value,
    pub right_generators: Value,
    pub product_gb_hash: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct AtomCertificate {
    pub input: String,
    pub input_generators: Value,
    pub input_gb_hash: String,
    pub mdeg: u32,
    /// Exponents of the pure powers of `X1` and `X2` found in the ideal.
    pub primary_evidence: (u32, u32),
    pub verdict: Verdict,
    pub splits: Vec<SplitRecord>,
    pub witness: Option<WitnessRecord>,
    /// Refutations hold over algebraically closed fields of characteristic 0.
    pub char0_only: bool,
    /// Only factors whose generators involve `X1, X2` alone are considered.
    pub two_variable_restriction: bool,
}

impl AtomCertificate {
    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("certificate serializes")
    }
}

enum Outcome {
    Refuted(Refutation),
    Lifted(Box<WitnessRecord>),
    Unresolved(String),
}

/// The lowest-degree piece of the input in coordinates.
struct Target {
    m: u32,
    /// Pivot positions.
    pivots: Vec<u32>,
    /// `rows[i][s]` is the coefficient at `s` of the row with pivot `pivots[i]`.
    rows: Vec<Vec<Rational>>,
}

impl Target {
    fn of(ideal: &Ideal, m: u32) -> Result<Target> {
        let nvars = ideal.nvars();
        let piece = ideal.graded_piece(m)?;
        let mut pivots = Vec::new();
        let mut rows = Vec::new();
        for row in piece.rows() {
            let coeffs: Vec<Rational> = (0..=m)
                .map(|j| row.coeff(&Monomial::bivariate(nvars, m - j, j)))
                .collect();
            pivots.push(coeffs.iter().position(|c| !c.is_zero()).unwrap() as u32);
            rows.push(coeffs);
        }
        Ok(Target { m, pivots, rows })
    }
}

fn subsets(n: u32) -> Vec<Vec<u32>> {
    (1u64..1 << n)
        .map(|mask| (0..n).filter(|i| mask >> i & 1 == 1).collect())
        .collect()
}

/// Decides whether `I` is an atom. See the module docs for the method.
pub fn certify_atom(ideal: &Ideal, caps: &Caps) -> Result<AtomCertificate> {
    if !ideal.is_bivariate() {
        return Err(Error::Precondition(
            "atom certification needs generators in X1, X2 only".into(),
        ));
    }
    let evidence = ideal.maximal_primary_evidence()?.ok_or_else(|| {
        Error::Precondition(format!("{ideal} contains no pure powers of both variables"))
    })?;
    let m = ideal
        .mdeg()
        .finite()
        .ok_or_else(|| Error::Precondition("zero ideal".into()))?;
    if m == 0 {
        return Err(Error::Precondition("the unit ideal is not an atom".into()));
    }
    let target = Target::of(ideal, m)?;

    let mut splits = Vec::new();
    let mut candidates: Vec<Pattern> = Vec::new();
    for d in 1..=m / 2 {
        let e = m - d;
        let mut patterns = 0usize;
        let mut split = SplitRecord {
            d,
            e,
            patterns: 0,
            refuted: 0,
            by_method: BTreeMap::new(),
            unresolved: Vec::new(),
            skipped: None,
        };
        if d as usize > caps.max_split_side {
            split.skipped = Some(format!("split side {d} above cap {}", caps.max_split_side));
            splits.push(split);
            continue;
        }
        let total = ((1u128 << (d + 1)) - 1).saturating_mul((1u128 << (e + 1)) - 1);
        if total > caps.pattern_budget as u128 {
            let total = usize::try_from(total).unwrap_or(usize::MAX);
            split.patterns = total;
            split.skipped = Some(format!(
                "{total} patterns above budget {}",
                caps.pattern_budget
            ));
            splits.push(split);
            continue;
        }
        let rights = subsets(e + 1);
        let mut filtered = 0usize;
        for p in &subsets(d + 1) {
            for q in &rights {
                // for d == e the roles of the two factors are interchangeable
                if d == e && p > q {
                    continue;
                }
                patterns += 1;
                if pivot_filter(p, q, &target.pivots) {
                    candidates.push(Pattern {
                        d,
                        e,
                        left: p.clone(),
                        right: q.clone(),
                    });
                } else {
                    filtered += 1;
                }
            }
        }
        split.patterns = patterns;
        split.refuted = filtered;
        if filtered > 0 {
            split
                .by_method
                .insert(Refutation::InitialMonomials, filtered);
        }
        splits.push(split);
    }
    candidates.sort_by_key(Pattern::sort_key);

    let mut witness = None;
    for chunk in candidates.chunks(CHUNK) {
        let outcomes: Vec<Result<Outcome>> = chunk
            .par_iter()
            .map(|p| examine(ideal, &target, p))
            .collect();
        for (pattern, outcome) in chunk.iter().zip(outcomes) {
            let split = splits.iter_mut().find(|s| s.d == pattern.d).unwrap();
            match outcome? {
                Outcome::Refuted(how) => {
                    split.refuted += 1;
                    *split.by_method.entry(how).or_insert(0) += 1;
                }
                Outcome::Lifted(w) => {
                    if witness.is_none() {
                        witness = Some(*w);
                    }
                }
                Outcome::Unresolved(reason) => split.unresolved.push(Unresolved {
                    pattern: pattern.clone(),
                    reason,
                }),
            }
        }
        if witness.is_some() {
            break;
        }
    }
    for s in &mut splits {
        s.unresolved.sort_by(|a, b| a.pattern.cmp(&b.pattern));
        if witness.is_some() && s.skipped.is_none() && s.refuted + s.unresolved.len() < s.patterns {
            s.skipped = Some("not exhausted: a factorization was found".into());
        }
    }
    let verdict = if witness.is_some() {
        Verdict::Witness
    } else if splits.iter().all(SplitRecord::fully_refuted) {
        Verdict::Certified
    } else {
        Verdict::Inconclusive
    };
    Ok(AtomCertificate {
        input: ideal.to_string(),
        input_generators: ideal.generators_json(),
        input_gb_hash: ideal.gb_hash()?,
        mdeg: m,
        primary_evidence: evidence,
        verdict,
        splits,
        witness,
        char0_only: true,
        two_variable_restriction: true,
    })
}

/// Necessary conditions on pivots: products of rows have pivot `p + q`, which
/// must be a pivot of the target; the smallest target pivot must be the sum
/// of the smallest pivots; and the products must be numerous enough.
fn pivot_filter(p: &[u32], q: &[u32], target: &[u32]) -> bool {
    p.iter()
        .all(|a| q.iter().all(|b| target.contains(&(a + b))))
        && p[0] + q[0] == target[0]
        && p.len() * q.len() >= target.len()
}

/// A graded piece with symbolic entries: `rows[i][j]` is a polynomial in the
/// unknowns.
fn symbolic_rows(pivots: &[u32], degree: u32, nunk: usize, offset: usize) -> Vec<Vec<Polynomial>> {
    let free = Pattern::free_positions(pivots, degree);
    let mut rows: Vec<Vec<Polynomial>> = pivots
        .iter()
        .map(|&p| {
            (0..=degree)
                .map(|j| {
                    if j == p {
                        Polynomial::one(nunk)
                    } else {
                        Polynomial::zero(nunk)
                    }
                })
                .collect()
        })
        .collect();
    for (k, (row, j)) in free.into_iter().enumerate() {
        rows[row][j as usize] = Polynomial::var(nunk, offset + k);
    }
    rows
}

fn convolve(a: &[Polynomial], b: &[Polynomial], nunk: usize) -> Vec<Polynomial> {
    let mut out = vec![Polynomial::zero(nunk); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (k, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + k] = &out[i + k] + &(x * y);
            }
        }
    }
    out
}

struct System {
    nunk: usize,
    left: Vec<Vec<Polynomial>>,
    right: Vec<Vec<Polynomial>>,
    /// Containment equations.
    equations: Vec<Polynomial>,
    /// Rows are products, columns the target pivots.
    matrix: Vec<Vec<Polynomial>>,
}

fn build_system(target: &Target, pattern: &Pattern) -> System {
    let nl = Pattern::free_positions(&pattern.left, pattern.d).len();
    let nr = Pattern::free_positions(&pattern.right, pattern.e).len();
    let nunk = (nl + nr).max(1);
    let left = symbolic_rows(&pattern.left, pattern.d, nunk, 0);
    let right = symbolic_rows(&pattern.right, pattern.e, nunk, nl);
    let mut equations = Vec::new();
    let mut matrix = Vec::new();
    for v in &left {
        for w in &right {
            let f = convolve(v, w, nunk);
            for s in 0..=target.m {
                if target.pivots.contains(&s) {
                    continue;
                }
                let mut eq = f[s as usize].clone();
                for (t, row) in target.pivots.iter().zip(&target.rows) {
                    let c = &row[s as usize];
                    if !c.is_zero() {
                        eq = &eq - &f[*t as usize].scale(c);
                    }
                }
                if !eq.is_zero() {
                    equations.push(eq);
                }
            }
            matrix.push(
                target
                    .pivots
                    .iter()
                    .map(|&t| f[t as usize].clone())
                    .collect(),
            );
        }
    }
    System {
        nunk,
        left,
        right,
        equations,
        matrix,
    }
}

fn examine(ideal: &Ideal, target: &Target, pattern: &Pattern) -> Result<Outcome> {
    let sys = build_system(target, pattern);
    let gb = match reduced_groebner(&sys.equations, system_budget()) {
        Ok(gb) => Some(gb),
        Err(Error::BoundExceeded(_)) => None,
        Err(e) => return Err(e),
    };
    if gb.as_deref().is_some_and(is_unit_basis) {
        return Ok(Outcome::Refuted(Refutation::Elimination));
    }
    let reduced: Vec<Vec<Polynomial>> = sys
        .matrix
        .iter()
        .map(|row| {
            row.iter()
                .map(|x| match &gb {
                    Some(g) => normal_form(x, g),
                    None => x.clone(),
                })
                .collect()
        })
        .collect();
    if structural_rank(&reduced) < target.pivots.len() {
        return Ok(Outcome::Refuted(Refutation::Rank));
    }
    let mut budget = POINT_BUDGET;
    let full_rank = |pt: &[Rational]| {
        let numeric: Vec<Vec<Rational>> = sys
            .matrix
            .iter()
            .map(|row| row.iter().map(|x| x.evaluate(pt)).collect())
            .collect();
        rank(numeric) == target.pivots.len()
    };
    let start = gb.clone().unwrap_or_else(|| sys.equations.clone());
    if let Some(point) = search_point(start, vec![None; sys.nunk], &full_rank, &mut budget)? {
        return match lift(ideal, &sys, pattern, &point)? {
            Some(w) => Ok(Outcome::Lifted(Box::new(w))),
            None => Ok(Outcome::Unresolved(
                "graded pieces factor, but the generated ideals do not multiply back".into(),
            )),
        };
    }
    if let Some(g) = &gb {
        if minors_vanish(g, &reduced, target.pivots.len(), sys.nunk)? {
            return Ok(Outcome::Refuted(Refutation::MinorElimination));
        }
    }
    Ok(Outcome::Unresolved(
        "containment variety nonempty; no rational point of full rank found".into(),
    ))
}

/// Size of a maximum matching between rows and columns through nonzero
/// entries; an upper bound on the rank at every point.
fn structural_rank(matrix: &[Vec<Polynomial>]) -> usize {
    let cols = matrix.first().map_or(0, Vec::len);
    let mut owner: Vec<Option<usize>> = vec![None; cols];
    fn augment(
        r: usize,
        matrix: &[Vec<Polynomial>],
        seen: &mut [bool],
        owner: &mut [Option<usize>],
    ) -> bool {
        for c in 0..owner.len() {
            if matrix[r][c].is_zero() || seen[c] {
                continue;
            }
            seen[c] = true;
            if owner[c].is_none_or(|o| augment(o, matrix, seen, owner)) {
                owner[c] = Some(r);
                return true;
            }
        }
        false
    }
    (0..matrix.len())
        .filter(|&r| augment(r, matrix, &mut vec![false; cols], &mut owner))
        .count()
}

fn rank(mut rows: Vec<Vec<Rational>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let pivot = rows[r][c].clone();
        for i in r + 1..rows.len() {
            if rows[i][c].is_zero() {
                continue;
            }
            let f = &rows[i][c] / &pivot;
            let (top, bottom) = rows.split_at_mut(i);
            for (x, y) in bottom[0][c..cols].iter_mut().zip(&top[r][c..cols]) {
                *x -= y * &f;
            }
        }
        r += 1;
    }
    r
}

/// Backtracking search for a rational zero of `equations` accepted by
/// `accept`. Variables forced by a univariate basis element branch over its
/// rational roots; free ones over a few small samples.
fn search_point(
    equations: Vec<Polynomial>,
    assigned: Vec<Option<Rational>>,
    accept: &dyn Fn(&[Rational]) -> bool,
    budget: &mut usize,
) -> Result<Option<Vec<Rational>>> {
    if *budget == 0 {
        return Ok(None);
    }
    *budget -= 1;
    let gb = match reduced_groebner(&equations, system_budget()) {
        Ok(gb) => gb,
        Err(Error::BoundExceeded(_)) => return Ok(None),
        Err(e) => return Err(e),
    };
    if is_unit_basis(&gb) {
        return Ok(None);
    }
    let Some(free) = assigned.iter().position(Option::is_none) else {
        let point: Vec<Rational> = assigned.into_iter().map(Option::unwrap).collect();
        return Ok(accept(&point).then_some(point));
    };
    let forced = gb.iter().find_map(|g| match g.support_vars()[..] {
        [v] => Some((v, rational_roots(&g.univariate_coeffs(v)))),
        _ => None,
    });
    let (var, values) = forced.unwrap_or_else(|| {
        (
            free,
            SAMPLES
                .iter()
                .map(|&s| Rational::from_integer(s.into()))
                .collect(),
        )
    });
    for value in values {
        let next: Vec<Polynomial> = gb
            .iter()
            .map(|g| g.substitute(var, &value))
            .filter(|g| !g.is_zero())
            .collect();
        let mut a = assigned.clone();
        a[var] = Some(value);
        if let Some(p) = search_point(next, a, accept, budget)? {
            return Ok(Some(p));
        }
        if *budget == 0 {
            break;
        }
    }
    Ok(None)
}

fn divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let n = n.abs().to_u64()?;
    if n > 1_000_000_000_000 {
        return None;
    }
    let mut out = Vec::new();
    let mut i = 1u64;
    while i * i <= n {
        if n % i == 0 {
            out.push(BigInt::from(i));
            out.push(BigInt::from(n / i));
        }
        i += 1;
    }
    Some(out)
}

/// Rational roots of `sum c_i x^i` via the rational root theorem. Gives up
/// (returns the roots found so far) on huge coefficients.
fn rational_roots(coeffs: &[Rational]) -> Vec<Rational> {
    let mut roots = Vec::new();
    let lcm = coeffs.iter().fold(BigInt::one(), |acc, c| {
        num_integer::Integer::lcm(&acc, c.denom())
    });
    let mut ints: Vec<BigInt> = coeffs.iter().map(|c| (c * &lcm).to_integer()).collect();
    while ints.len() > 1 && ints[0].is_zero() {
        ints.remove(0);
        if !roots.contains(&Rational::zero()) {
            roots.push(Rational::zero());
        }
    }
    if ints.len() <= 1 {
        return roots;
    }
    let (Some(ps), Some(qs)) = (divisors(&ints[0]), divisors(ints.last().unwrap())) else {
        return roots;
    };
    let eval = |x: &Rational| {
        ints.iter().rev().fold(Rational::zero(), |acc, c| {
            acc * x + Rational::from_integer(c.clone())
        })
    };
    for p in &ps {
        for q in &qs {
            for cand in [
                Rational::new(p.clone(), q.clone()),
                -Rational::new(p.clone(), q.clone()),
            ] {
                if !roots.contains(&cand) && eval(&cand).is_zero() {
                    roots.push(cand);
                }
            }
        }
    }
    roots.sort();
    roots
}

fn forms(
    rows: &[Vec<Polynomial>],
    degree: u32,
    point: &[Rational],
    nvars: usize,
) -> Vec<Polynomial> {
    rows.iter()
        .map(|row| {
            Polynomial::from_terms(
                nvars,
                row.iter().enumerate().map(|(j, x)| {
                    (
                        Monomial::bivariate(nvars, degree - j as u32, j as u32),
                        x.evaluate(point),
                    )
                }),
            )
        })
        .collect()
}

fn lift(
    ideal: &Ideal,
    sys: &System,
    pattern: &Pattern,
    point: &[Rational],
) -> Result<Option<WitnessRecord>> {
    let nvars = ideal.nvars();
    let j = Ideal::with_caps(forms(&sys.left, pattern.d, point, nvars), *ideal.caps())?;
    let k = Ideal::with_caps(forms(&sys.right, pattern.e, point, nvars), *ideal.caps())?;
    let product = j.product(&k);
    if !product.same_ideal(ideal)? {
        return Ok(None);
    }
    Ok(Some(WitnessRecord {
        pattern: pattern.clone(),
        left: j.to_string(),
        right: k.to_string(),
        left_generators: j.generators_json(),
        right_generators: k.generators_json(),
        product_gb_hash: product.gb_hash()?,
    }))
}

fn det(m: &[Vec<Polynomial>], nunk: usize) -> Polynomial {
    if m.len() == 1 {
        return m[0][0].clone();
    }
    let mut acc = Polynomial::zero(nunk);
    for (c, x) in m[0].iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        let minor: Vec<Vec<Polynomial>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(k, _)| k != c)
                    .map(|(_, y)| y.clone())
                    .collect()
            })
            .collect();
        let term = x * &det(&minor, nunk);
        acc = if c % 2 == 0 {
            &acc + &term
        } else {
            &acc - &term
        };
    }
    acc
}

fn combinations(n: usize, k: usize, limit: usize) -> Option<Vec<Vec<usize>>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..k).collect();
    if k > n {
        return Some(out);
    }
    loop {
        out.push(cur.clone());
        if out.len() > limit {
            return None;
        }
        let Some(i) = (0..k).rev().find(|&i| cur[i] < n - k + i) else {
            return Some(out);
        };
        cur[i] += 1;
        for j in i + 1..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

/// Whether every maximal minor vanishes on the zero set of `gb`, by the
/// Rabinowitsch trick: `gb + <1 - z*mu>` must be the unit ideal.
fn minors_vanish(
    gb: &[Polynomial],
    matrix: &[Vec<Polynomial>],
    k: usize,
    nunk: usize,
) -> Result<bool> {
    let Some(choices) = combinations(matrix.len(), k, MINOR_BUDGET) else {
        return Ok(false);
    };
    let z = Polynomial::var(nunk + 1, nunk);
    for rows in choices {
        let sub: Vec<Vec<Polynomial>> = rows.iter().map(|&r| matrix[r].clone()).collect();
        let mu = normal_form(&det(&sub, nunk), gb);
        if mu.is_zero() {
            continue;
        }
        let mut system: Vec<Polynomial> = gb.iter().map(|g| g.extend_vars(nunk + 1)).collect();
        system.push(&Polynomial::one(nunk + 1) - &(&z * &mu.extend_vars(nunk + 1)));
        match reduced_groebner(&system, system_budget()) {
            Ok(g) if is_unit_basis(&g) => {}
            Ok(_) | Err(Error::BoundExceeded(_)) => return Ok(false),
            Err(e) => return Err(e),
        }
    }
    Ok(true)
}

/// Re-verifies a certificate against `ideal`: a witness is re-multiplied and
/// compared by reduced basis; any other verdict is recomputed and compared
/// record by record.
pub fn recheck_certificate(ideal: &Ideal, cert: &AtomCertificate, caps: &Caps) -> Result<bool> {
    if ideal.gb_hash()? != cert.input_gb_hash {
        return Ok(false);
    }
    match (&cert.verdict, &cert.witness) {
        (Verdict::Witness, Some(w)) => {
            let j = Ideal::from_generators_json(&w.left_generators)?;
            let k = Ideal::from_generators_json(&w.right_generators)?;
            let proper = j.mdeg().finite().is_some_and(|d| d >= 1)
                && k.mdeg().finite().is_some_and(|e| e >= 1);
            let product = j.product(&k);
            Ok(proper && product.gb_hash()? == w.product_gb_hash && product.same_ideal(ideal)?)
        }
        (Verdict::Witness, None) => Ok(false),
        _ => {
            let again = certify_atom(ideal, caps)?;
            Ok(again.verdict == cert.verdict && again.splits == cert.splits)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::idealmonoid::IdealFamily;

    fn cert(f: &str) -> AtomCertificate {
        let fam: IdealFamily = f.parse().unwrap();
        certify_atom(&fam.expand(2).unwrap(), &Caps::default()).unwrap()
    }

    #[test]
    fn small_atoms() {
        assert_eq!(cert("a[1]").verdict, Verdict::Certified);
        assert_eq!(cert("b[2]").verdict, Verdict::Certified);
        assert_eq!(cert("cprime").verdict, Verdict::Certified);
    }

    #[test]
    fn non_atoms_have_witnesses() {
        for f in ["a[2]", "a[3]", "c[4]"] {
            let c = cert(f);
            assert_eq!(c.verdict, Verdict::Witness, "{f}");
            let ideal = f.parse::<IdealFamily>().unwrap().expand(2).unwrap();
            assert!(recheck_certificate(&ideal, &c, &Caps::default()).unwrap());
        }
    }

    #[test]
    fn non_primary_input_rejected() {
        let i = Ideal::parse("<X1^2; X1*X2>").unwrap();
        assert!(matches!(
            certify_atom(&i, &Caps::default()),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn roots() {
        let r = rational_roots(&[
            crate::polyarith::rat(-2),
            crate::polyarith::rat(1),
            crate::polyarith::rat(1),
        ]);
        assert_eq!(r, vec![crate::polyarith::rat(-2), crate::polyarith::rat(1)]);
        assert_eq!(
            rational_roots(&[
                crate::polyarith::rat(1),
                Rational::zero(),
                crate::polyarith::rat(1)
            ]),
            vec![]
        );
    }

    #[test]
    fn matching_bound() {
        let one = Polynomial::one(1);
        let zero = Polynomial::zero(1);
        let m = vec![
            vec![one.clone(), zero.clone()],
            vec![one.clone(), zero.clone()],
        ];
        assert_eq!(structural_rank(&m), 1);
    }
}
