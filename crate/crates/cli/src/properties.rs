//! Seeded randomized property suites. Every suite draws from its own ChaCha
//! stream, so a report is a pure function of `(cases, seed)`.

use idealarith::factorcore::{union_from_sets, Factorizer, LengthSet};
use idealarith::polyarith::{
    is_groebner_basis, is_reduced, rat, reduced_groebner, GbBudget, GradedPiece, Ideal, Monomial,
    Polynomial,
};
use idealarith::powermonoid::{sumset, FiniteSet, ReducedPowerMonoid};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::report::Experiment;

fn rng_for(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    r.set_stream(stream);
    r
}

/// A nonzero bivariate polynomial with terms of degree `lo..=hi`.
fn random_poly(rng: &mut ChaCha8Rng, lo: u32, hi: u32) -> Polynomial {
    loop {
        let terms = rng.gen_range(1..=3);
        let mut f = Polynomial::zero(2);
        for _ in 0..terms {
            let d = rng.gen_range(lo..=hi);
            let i = rng.gen_range(0..=d);
            let c = rng.gen_range(-3..=3);
            if c != 0 {
                f.add_term(Monomial::bivariate(2, d - i, i), rat(c));
            }
        }
        if !f.is_zero() {
            return f;
        }
    }
}

fn random_ideal(rng: &mut ChaCha8Rng) -> Ideal {
    let n = rng.gen_range(1..=2);
    let gens = (0..n).map(|_| random_poly(rng, 1, 3)).collect();
    Ideal::new(gens).expect("bivariate generators")
}

fn random_form(rng: &mut ChaCha8Rng, d: u32) -> Polynomial {
    loop {
        let mut f = Polynomial::zero(2);
        for i in 0..=d {
            let c = rng.gen_range(-2..=2);
            if c != 0 {
                f.add_term(Monomial::bivariate(2, d - i, i), rat(c));
            }
        }
        if !f.is_zero() {
            return f;
        }
    }
}

fn random_reduced_set(rng: &mut ChaCha8Rng, max: u32) -> FiniteSet {
    let hi = rng.gen_range(1..=max);
    let inner = (1..hi).filter(|_| rng.gen_bool(0.5));
    FiniteSet::new([0, hi].into_iter().chain(inner)).expect("nonempty")
}

struct Tally {
    cases: usize,
    failed: usize,
    failures: Vec<String>,
}

impl Tally {
    fn new() -> Self {
        Tally {
            cases: 0,
            failed: 0,
            failures: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failed += 1;
            if self.failures.len() < 5 {
                self.failures.push(what());
            }
        }
    }

    fn into_experiment(self, key: &str) -> Experiment {
        Experiment::new(
            format!("property/{key}"),
            self.failed == 0 && self.cases > 0,
            json!({ "cases": self.cases, "failed": self.failed, "first_failures": self.failures }),
        )
        .with("cases", self.cases)
        .with("failed", self.failed)
    }
}

fn run_suite(key: &str, cases: usize, mut case: impl FnMut(&mut Tally)) -> Experiment {
    let mut t = Tally::new();
    for _ in 0..cases {
        case(&mut t);
    }
    t.into_experiment(key)
}

/// mdeg(IJ) = mdeg(I) + mdeg(J).
fn mdeg_additive(cases: usize, seed: u64) -> Experiment {
    let mut rng = rng_for(seed, 1);
    run_suite("mdeg-additive", cases, |t| {
        let (i, j) = (random_ideal(&mut rng), random_ideal(&mut rng));
        let (a, b, ab) = (i.mdeg(), j.mdeg(), i.product(&j).mdeg());
        let ok = matches!((a.finite(), b.finite(), ab.finite()), (Some(x), Some(y), Some(z)) if x + y == z);
        t.check(ok, || format!("{i} * {j}: {a} + {b} vs {ab}"));
    })
}

/// The lowest-degree piece of a product is the product of the lowest pieces.
fn graded_product(cases: usize, seed: u64) -> Experiment {
    let mut rng = rng_for(seed, 2);
    run_suite("graded-product", cases, |t| {
        let (i, j) = (random_ideal(&mut rng), random_ideal(&mut rng));
        let (d, f) = (i.mdeg().finite().unwrap(), j.mdeg().finite().unwrap());
        let ok = (|| -> idealarith::Result<bool> {
            let lhs = i.product(&j).graded_piece(d + f)?;
            let rhs = i.graded_piece(d)?.product(&j.graded_piece(f)?);
            Ok(lhs.is_subspace_of(&rhs) && rhs.is_subspace_of(&lhs))
        })()
        .unwrap_or(false);
        t.check(ok, || format!("{i} * {j} in degree {}", d + f));
    })
}

/// Spans are echelonized, contain their inputs and do not depend on order.
fn echelon(cases: usize, seed: u64) -> Experiment {
    let mut rng = rng_for(seed, 3);
    run_suite("graded-echelon", cases, |t| {
        let d = rng.gen_range(1..=4);
        let n = rng.gen_range(1..=d as usize + 2);
        let mut forms: Vec<Polynomial> = (0..n).map(|_| random_form(&mut rng, d)).collect();
        let a = GradedPiece::span(2, d, forms.clone());
        forms.shuffle(&mut rng);
        let b = GradedPiece::span(2, d, forms.clone());
        let ok = a.is_echelon()
            && a.dim() <= (d as usize + 1).min(n)
            && forms.iter().all(|f| a.contains(f))
            && a.rows() == b.rows()
            && a.is_subspace_of(&GradedPiece::full(2, d));
        t.check(ok, || format!("degree {d}, forms {forms:?}"));
    })
}

/// L(A) + L(B) lies in L(A + B) in the reduced power monoid, and union
/// membership is symmetric inside one window.
fn union_laws(cases: usize, seed: u64) -> Experiment {
    let mut rng = rng_for(seed, 4);
    let m = ReducedPowerMonoid::new(32);
    let mut fz = Factorizer::new(&m);
    let window: Vec<FiniteSet> = FiniteSet::all_up_to(6, true)
        .into_iter()
        .filter(|s| s.max() > 0)
        .collect();
    let sets: Vec<LengthSet> = window
        .iter()
        .map(|s| fz.length_set(s).expect("window"))
        .collect();
    run_suite("union-laws", cases, |t| {
        let (a, b) = (
            random_reduced_set(&mut rng, 5),
            random_reduced_set(&mut rng, 5),
        );
        let ok = (|| -> idealarith::Result<bool> {
            let la = fz.length_set(&a)?;
            let lb = fz.length_set(&b)?;
            let lab = fz.length_set(&sumset(&a, &b))?;
            Ok(la.sumset(&lb).as_slice().iter().all(|&x| lab.contains(x)))
        })()
        .unwrap_or(false);
        let (k, l) = (rng.gen_range(2..=6), rng.gen_range(2..=6));
        let uk = union_from_sets(k, &sets, "reduced power, max 6");
        let ul = union_from_sets(l, &sets, "reduced power, max 6");
        let symmetric = uk.contains(l) == ul.contains(k);
        t.check(ok && symmetric, || format!("A={a}, B={b}, k={k}, l={l}"));
    })
}

/// Redundant generators and reordering leave the reduced basis unchanged.
fn gb_unique(cases: usize, seed: u64) -> Experiment {
    let mut rng = rng_for(seed, 5);
    run_suite("groebner-unique", cases, |t| {
        let gens: Vec<Polynomial> = (0..rng.gen_range(1..=3))
            .map(|_| random_poly(&mut rng, 1, 3))
            .collect();
        let mut extended = gens.clone();
        let i = rng.gen_range(0..gens.len());
        let j = rng.gen_range(0..gens.len());
        let m = Polynomial::monomial(Monomial::bivariate(
            2,
            rng.gen_range(0..=1),
            rng.gen_range(0..=1),
        ));
        let extra = &(&m * &gens[i]) + &gens[j].scale(&rat(rng.gen_range(1..=3)));
        if !extra.is_zero() {
            extended.push(extra);
        }
        extended.shuffle(&mut rng);
        let ok = match (
            reduced_groebner(&gens, GbBudget::default()),
            reduced_groebner(&extended, GbBudget::default()),
        ) {
            (Ok(a), Ok(b)) => a == b && is_reduced(&a) && is_groebner_basis(&a),
            _ => false,
        };
        t.check(ok, || format!("{gens:?}"));
    })
}

pub fn run_all(cases: usize, seed: u64) -> Vec<Experiment> {
    vec![
        mdeg_additive(cases, seed),
        graded_product(cases, seed),
        echelon(cases, seed),
        union_laws(cases, seed),
        gb_unique(cases, seed),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_and_passing() {
        let a = run_all(20, 3);
        let b = run_all(20, 3);
        for (x, y) in a.iter().zip(&b) {
            assert!(x.passed, "{}: {}", x.key, x.detail);
            assert_eq!(x.detail, y.detail);
        }
    }
}
