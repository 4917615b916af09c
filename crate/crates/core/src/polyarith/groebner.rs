//! Buchberger's algorithm over the rationals, lexicographic order.
//!
//! Pairs are processed by increasing total degree of their lcm (ties broken by
//! the lex order on the lcm, then by index), which keeps the computation
//! deterministic. The product criterion and Buchberger's chain criterion
//! discard useless pairs. The result is the unique reduced basis: minimal,
//! inter-reduced, monic, sorted by decreasing leading monomial.

use std::collections::BTreeSet;

use num_traits::One;

use super::monomial::Monomial;
use super::polynomial::Polynomial;
use crate::{Error, Result};

/// Work limits for a single Gröbner computation.
#[derive(Debug, Clone, Copy)]
pub struct GbBudget {
    pub max_pairs: usize,
    pub max_basis: usize,
}

impl Default for GbBudget {
    fn default() -> Self {
        GbBudget {
            max_pairs: 200_000,
            max_basis: 2_000,
        }
    }
}

/// Fully reduces `f` by `basis` (remainder of multivariate division).
pub fn normal_form(f: &Polynomial, basis: &[Polynomial]) -> Polynomial {
    let nvars = f.nvars();
    let mut p = f.clone();
    let mut rem = Polynomial::zero(nvars);
    while let Some(lm) = p.leading_monomial().cloned() {
        let lc = p.leading_coeff().unwrap().clone();
        let divisor = basis
            .iter()
            .find(|g| g.leading_monomial().is_some_and(|gm| gm.divides(&lm)));
        match divisor {
            Some(g) => {
                let gm = g.leading_monomial().unwrap();
                let q = gm.quotient_of(&lm);
                let c = &lc / g.leading_coeff().unwrap();
                p.sub_mul_term(g, &q, &c);
            }
            None => {
                rem.add_term(lm.clone(), lc.clone());
                p.add_term(lm, -lc);
            }
        }
    }
    rem
}

fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let fm = f.leading_monomial().unwrap();
    let gm = g.leading_monomial().unwrap();
    let l = fm.lcm(gm);
    let mut s = f.mul_term(&fm.quotient_of(&l), &g.leading_coeff().unwrap().clone());
    s.sub_mul_term(g, &gm.quotient_of(&l), f.leading_coeff().unwrap());
    s
}

type PairKey = (u32, Monomial, usize, usize);

fn pair_key(basis: &[Polynomial], i: usize, j: usize) -> PairKey {
    let l = basis[i]
        .leading_monomial()
        .unwrap()
        .lcm(basis[j].leading_monomial().unwrap());
    (l.degree(), l, i, j)
}

/// Computes the reduced lex Gröbner basis of the ideal generated by `gens`.
///
/// The zero ideal yields an empty basis; the unit ideal yields `[1]`.
pub fn reduced_groebner(gens: &[Polynomial], budget: GbBudget) -> Result<Vec<Polynomial>> {
    let Some(first) = gens.first() else {
        return Ok(Vec::new());
    };
    let nvars = first.nvars();
    let mut basis: Vec<Polynomial> = Vec::new();
    for g in gens {
        let r = normal_form(g, &basis);
        if r.is_zero() {
            continue;
        }
        if r.is_constant() {
            return Ok(vec![Polynomial::one(nvars)]);
        }
        basis.push(r.make_monic());
    }
    if basis.is_empty() {
        return Ok(Vec::new());
    }

    let mut pending: BTreeSet<PairKey> = BTreeSet::new();
    let mut done: BTreeSet<(usize, usize)> = BTreeSet::new();
    for j in 0..basis.len() {
        for i in 0..j {
            pending.insert(pair_key(&basis, i, j));
        }
    }
    let mut processed = 0usize;
    while let Some(key) = pending.pop_first() {
        processed += 1;
        if processed > budget.max_pairs {
            return Err(Error::BoundExceeded(format!(
                "Gröbner pair budget {} exhausted",
                budget.max_pairs
            )));
        }
        let (_, lcm, i, j) = key;
        done.insert((i, j));
        let (fi, fj) = (&basis[i], &basis[j]);
        if fi
            .leading_monomial()
            .unwrap()
            .is_coprime(fj.leading_monomial().unwrap())
        {
            continue;
        }
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k].leading_monomial().unwrap().divides(&lcm)
                && done.contains(&(i.min(k), i.max(k)))
                && done.contains(&(j.min(k), j.max(k)))
        });
        if chain {
            continue;
        }
        let s = s_polynomial(fi, fj);
        let r = normal_form(&s, &basis);
        if r.is_zero() {
            continue;
        }
        if r.is_constant() {
            return Ok(vec![Polynomial::one(nvars)]);
        }
        basis.push(r.make_monic());
        if basis.len() > budget.max_basis {
            return Err(Error::BoundExceeded(format!(
                "Gröbner basis size budget {} exhausted",
                budget.max_basis
            )));
        }
        let n = basis.len() - 1;
        for i in 0..n {
            pending.insert(pair_key(&basis, i, n));
        }
    }
    Ok(reduce_basis(basis))
}

/// Turns any Gröbner basis into the reduced one.
fn reduce_basis(mut basis: Vec<Polynomial>) -> Vec<Polynomial> {
    basis.sort_by(|a, b| a.leading_monomial().cmp(&b.leading_monomial()));
    let mut minimal: Vec<Polynomial> = Vec::new();
    for g in basis {
        let lm = g.leading_monomial().unwrap().clone();
        if minimal
            .iter()
            .any(|h| h.leading_monomial().unwrap().divides(&lm))
        {
            continue;
        }
        minimal.retain(|h| !lm.divides(h.leading_monomial().unwrap()));
        minimal.push(g);
    }
    let mut reduced = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let lm = minimal[i].leading_monomial().unwrap().clone();
        let lc = minimal[i].leading_coeff().unwrap().clone();
        let mut tail = minimal[i].clone();
        tail.add_term(lm.clone(), -lc);
        let others: Vec<Polynomial> = minimal
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != i)
            .map(|(_, p)| p.clone())
            .collect();
        let mut r = normal_form(&tail, &others);
        r.add_term(lm, num_traits::One::one());
        reduced.push(r);
    }
    reduced.sort_by(|a, b| b.leading_monomial().cmp(&a.leading_monomial()));
    reduced
}

pub fn is_unit_basis(gb: &[Polynomial]) -> bool {
    gb.len() == 1 && gb[0].is_constant() && !gb[0].is_zero()
}

/// Checks the Buchberger criterion directly: every S-polynomial reduces to zero.
pub fn is_groebner_basis(basis: &[Polynomial]) -> bool {
    for j in 0..basis.len() {
        for i in 0..j {
            if !normal_form(&s_polynomial(&basis[i], &basis[j]), basis).is_zero() {
                return false;
            }
        }
    }
    true
}

/// True when the basis is reduced: monic, and no term of any element is
/// divisible by the leading monomial of another element.
pub fn is_reduced(basis: &[Polynomial]) -> bool {
    basis.iter().enumerate().all(|(i, g)| {
        g.leading_coeff().is_some_and(|c| c.is_one())
            && basis.iter().enumerate().all(|(k, h)| {
                k == i
                    || g.terms()
                        .all(|(m, _)| !h.leading_monomial().unwrap().divides(m))
            })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyarith::parse::parse_polynomial;

    fn p(s: &str) -> Polynomial {
        parse_polynomial(s, 2).unwrap()
    }

    #[test]
    fn maximal_ideal_basis() {
        let gb = reduced_groebner(&[p("X"), p("Y")], GbBudget::default()).unwrap();
        assert_eq!(gb, vec![p("X"), p("Y")]);
    }

    #[test]
    fn membership_of_y4_in_cprime() {
        let gens = [p("X^3+Y^3"), p("X^2*Y"), p("X*Y^2")];
        let gb = reduced_groebner(&gens, GbBudget::default()).unwrap();
        assert!(normal_form(&p("Y^4"), &gb).is_zero());
        // explicit combination: Y^4 = Y*(X^3+Y^3) - X*(X^2*Y)
        let combo = &(&p("Y") * &gens[0]) - &(&p("X") * &gens[1]);
        assert_eq!(combo, p("Y^4"));
        assert!(!normal_form(&p("Y^3"), &gb).is_zero());
        assert!(is_groebner_basis(&gb));
        assert!(is_reduced(&gb));
    }

    #[test]
    fn inconsistent_system_gives_unit() {
        let gb = reduced_groebner(&[p("X*Y - 1"), p("X")], GbBudget::default()).unwrap();
        assert!(is_unit_basis(&gb));
    }

    #[test]
    fn non_monomial_ideal_reduced_basis() {
        let gb = reduced_groebner(&[p("X^2 - Y"), p("X*Y - 1")], GbBudget::default()).unwrap();
        assert!(is_groebner_basis(&gb));
        assert!(is_reduced(&gb));
        assert!(normal_form(&p("Y^3 - 1"), &gb).is_zero());
    }

    #[test]
    fn budget_is_enforced() {
        let gens = [p("X^3 - Y^2 + X"), p("X*Y^2 - X^2 + 1")];
        let tight = GbBudget {
            max_pairs: 1,
            max_basis: 1,
        };
        assert!(matches!(
            reduced_groebner(&gens, tight),
            Err(Error::BoundExceeded(_))
        ));
    }
}
