//! Certified arithmetic in the monoid of all nonzero ideals of `Q[X1, X2]`.
//!
//! That monoid has elements with infinitely many divisors, so lengths are not
//! enumerated. Lower bounds come from explicit factorizations into certified
//! atoms, verified by reduced Gröbner bases. Upper bounds come from minimal
//! degrees: `mdeg` is additive, and every proper factor of an
//! `<X1, X2>`-primary ideal has `mdeg >= 1`.

use std::collections::BTreeMap;

use serde::Serialize;

use super::certify::{certify_atom, AtomCertificate, Verdict};
use super::families::IdealFamily;
use super::identities::{verify_product, IdentityRecord};
use crate::factorcore::{rho_string, ElasticPlan, LengthSet, Rho};
use crate::polyarith::{Ideal, Monomial, Polynomial, Rational};
use crate::{Caps, Error, Result};

/// Memoized atom certificates for the named families.
#[derive(Debug, Clone)]
pub struct AtomStore {
    caps: Caps,
    certs: BTreeMap<IdealFamily, AtomCertificate>,
}

impl AtomStore {
    pub fn new(caps: Caps) -> Self {
        AtomStore {
            caps,
            certs: BTreeMap::new(),
        }
    }

    pub fn caps(&self) -> &Caps {
        &self.caps
    }

    pub fn certificate(&mut self, fam: IdealFamily) -> Result<&AtomCertificate> {
        if !self.certs.contains_key(&fam) {
            let ideal = fam.expand(2)?.set_caps(self.caps);
            let cert = certify_atom(&ideal, &self.caps)?;
            self.certs.insert(fam, cert);
        }
        Ok(&self.certs[&fam])
    }

    /// Fails unless `fam` has a `Certified` verdict.
    pub fn require_atom(&mut self, fam: IdealFamily) -> Result<()> {
        let verdict = self.certificate(fam)?.verdict;
        if verdict != Verdict::Certified {
            return Err(Error::MissingCertificate(format!(
                "{fam} has no atom certificate (verdict {verdict:?})"
            )));
        }
        Ok(())
    }

    pub fn certificates(&self) -> impl Iterator<Item = (&IdealFamily, &AtomCertificate)> {
        self.certs.iter()
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct AtomRef {
    pub family: String,
    pub verdict: Verdict,
    pub gb_hash: String,
}

/// `mdeg` bound on lengths of an `<X1, X2>`-primary ideal.
#[derive(Debug, Clone, Serialize)]
pub struct MdegBound {
    pub mdeg: u32,
    pub primary_evidence: (u32, u32),
    pub max_length: usize,
}

fn mdeg_bound(ideal: &Ideal) -> Result<MdegBound> {
    let evidence = ideal
        .maximal_primary_evidence()?
        .ok_or_else(|| Error::Precondition(format!("{ideal} is not <X1, X2>-primary")))?;
    let mdeg = ideal
        .mdeg()
        .finite()
        .ok_or_else(|| Error::Precondition("zero ideal".into()))?;
    Ok(MdegBound {
        mdeg,
        primary_evidence: evidence,
        max_length: mdeg as usize,
    })
}

/// Lengths of `<X1, X2>^k` with one verified factorization per length.
#[derive(Debug, Clone, Serialize)]
pub struct LengthCertificate {
    pub k: u32,
    pub lengths: LengthSet,
    pub factorizations: Vec<IdentityRecord>,
    pub upper_bound: MdegBound,
    pub atoms: Vec<AtomRef>,
}

impl LengthCertificate {
    pub fn verified(&self) -> bool {
        let found: Vec<usize> = self.factorizations.iter().map(|f| f.lhs.len()).collect();
        self.factorizations.iter().all(IdentityRecord::passed)
            && self.atoms.iter().all(|a| a.verdict == Verdict::Certified)
            && self.lengths.as_slice() == found.as_slice()
            && self.lengths.max() <= self.upper_bound.max_length
            && self.lengths.min() >= 2
    }
}

/// Two-atom factorization of `a[j]` for `j >= 2`.
fn pair(j: u32) -> [IdealFamily; 2] {
    use IdealFamily::*;
    match j {
        2 => [A(1), A(1)],
        3 => [A(1), B(2)],
        4 => [A(1), C(3)],
        5 => [B(2), CPrime],
        _ => [A(1), C(j - 1)],
    }
}

/// Factorization of `a[k]` into `l` atoms for `2 <= l <= k`:
/// `a[1]^(l-2)` times a two-atom factorization of `a[k-l+2]`.
pub fn factorization_of_length(k: u32, l: u32) -> Result<Vec<IdealFamily>> {
    if l < 2 || l > k {
        return Err(Error::InvalidArgument(format!(
            "no factorization of a[{k}] of length {l}"
        )));
    }
    let mut out = vec![IdealFamily::A(1); (l - 2) as usize];
    out.extend(pair(k - l + 2));
    Ok(out)
}

fn verify_factorization(
    factors: &[IdealFamily],
    target: IdealFamily,
    store: &mut AtomStore,
) -> Result<IdentityRecord> {
    for f in factors {
        store.require_atom(*f)?;
    }
    let caps = *store.caps();
    let named = factors
        .iter()
        .map(|f| Ok((f.to_string(), f.expand(2)?.set_caps(caps))))
        .collect::<Result<Vec<_>>>()?;
    let names: Vec<String> = factors.iter().map(|f| f.to_string()).collect();
    verify_product(
        &format!("{} = {target}", names.join(" * ")),
        &named,
        &(target.to_string(), target.expand(2)?.set_caps(caps)),
        true,
    )
}

fn atom_refs<'a>(
    fams: impl IntoIterator<Item = &'a IdealFamily>,
    store: &mut AtomStore,
) -> Result<Vec<AtomRef>> {
    let mut set: Vec<IdealFamily> = fams.into_iter().copied().collect();
    set.sort();
    set.dedup();
    set.into_iter()
        .map(|f| {
            let c = store.certificate(f)?;
            Ok(AtomRef {
                family: f.to_string(),
                verdict: c.verdict,
                gb_hash: c.input_gb_hash.clone(),
            })
        })
        .collect()
}

/// `L(<X1, X2>^k) = [2, k]`, certified.
pub fn theorem51_lengths(k: u32, store: &mut AtomStore) -> Result<LengthCertificate> {
    if k < 2 {
        return Err(Error::InvalidArgument(format!(
            "k must be at least 2, got {k}"
        )));
    }
    if k as usize > store.caps().max_k {
        return Err(Error::CapExceeded {
            what: "k",
            value: k as usize,
            cap: store.caps().max_k,
        });
    }
    let target = IdealFamily::A(k);
    let mut factorizations = Vec::new();
    let mut used = Vec::new();
    for l in 2..=k {
        let factors = factorization_of_length(k, l)?;
        let rec = verify_factorization(&factors, target, store)?;
        if !rec.holds {
            return Err(Error::VerificationFailed(rec.label));
        }
        used.extend(factors);
        factorizations.push(rec);
    }
    let upper_bound = mdeg_bound(&target.expand(2)?)?;
    Ok(LengthCertificate {
        k,
        lengths: LengthSet::interval(2, k as usize),
        factorizations,
        upper_bound,
        atoms: atom_refs(&used, store)?,
    })
}

/// Factorizations of `a[2i+2]` of lengths 2, `2i+1` and `2i+2`, placing
/// `2i+1` and `2i+2` in the union of length sets containing 2.
#[derive(Debug, Clone, Serialize)]
pub struct U2Witness {
    pub i: u32,
    pub element: String,
    pub factorizations: Vec<IdentityRecord>,
    pub members: Vec<usize>,
    pub atoms: Vec<AtomRef>,
}

impl U2Witness {
    pub fn verified(&self) -> bool {
        self.factorizations.iter().all(|f| f.passed() && f.holds)
            && self.atoms.iter().all(|a| a.verdict == Verdict::Certified)
            && self.factorizations.iter().any(|f| f.lhs.len() == 2)
    }
}

pub fn u2_witnesses(i: u32, store: &mut AtomStore) -> Result<U2Witness> {
    use IdealFamily::*;
    if i == 0 {
        return Err(Error::InvalidArgument("i must be positive".into()));
    }
    let target = A(2 * i + 2);
    let mut odd = vec![A(1); 2 * i as usize];
    odd.push(B(2));
    let lists = [
        vec![A(1), C(2 * i + 1)],
        odd,
        vec![A(1); 2 * i as usize + 2],
    ];
    let mut factorizations = Vec::new();
    for factors in &lists {
        factorizations.push(verify_factorization(factors, target, store)?);
    }
    Ok(U2Witness {
        i,
        element: target.to_string(),
        factorizations,
        members: vec![2 * i as usize + 1, 2 * i as usize + 2],
        atoms: atom_refs(lists.iter().flatten(), store)?,
    })
}

/// `I * J1 = I * J2` with `J1` an atom and `J2` not: no transfer homomorphism
/// to a cancellative monoid can exist.
#[derive(Debug, Clone, Serialize)]
pub struct NotTransferKrull {
    pub i: String,
    pub j1: String,
    pub j2: String,
    pub j1_verdict: Verdict,
    pub j2_verdict: Verdict,
    pub products_equal: bool,
    pub distinct: bool,
    pub product_gb_hash: String,
    pub valid: bool,
}

pub fn check_not_transfer_krull(
    i: IdealFamily,
    j1: IdealFamily,
    j2: IdealFamily,
    store: &mut AtomStore,
) -> Result<NotTransferKrull> {
    let caps = *store.caps();
    let ii = i.expand(2)?.set_caps(caps);
    let p1 = ii.product(&j1.expand(2)?);
    let p2 = ii.product(&j2.expand(2)?);
    let products_equal = p1.same_ideal(&p2)?;
    let distinct = !j1.expand(2)?.same_ideal(&j2.expand(2)?)?;
    let j1_verdict = store.certificate(j1)?.verdict;
    let j2_verdict = store.certificate(j2)?.verdict;
    Ok(NotTransferKrull {
        i: i.to_string(),
        j1: j1.to_string(),
        j2: j2.to_string(),
        j1_verdict,
        j2_verdict,
        products_equal,
        distinct,
        product_gb_hash: p1.gb_hash()?,
        valid: products_equal
            && distinct
            && j1_verdict == Verdict::Certified
            && j2_verdict == Verdict::Witness,
    })
}

/// The default instance `a[1] * b[2] = a[1] * a[2]`.
pub fn not_transfer_krull_witness(store: &mut AtomStore) -> Result<NotTransferKrull> {
    use IdealFamily::*;
    check_not_transfer_krull(A(1), B(2), A(2), store)
}

/// `<X1, X2> * <X1^2 + alpha X2^2, X1 X2> = <X1, X2>^3` for several `alpha`.
#[derive(Debug, Clone, Serialize)]
pub struct NonFfWitness {
    pub alphas: Vec<String>,
    pub factors: Vec<String>,
    pub factor_gb_hashes: Vec<String>,
    pub products_equal: Vec<bool>,
    pub pairwise_distinct: bool,
    pub valid: bool,
}

pub fn non_ff_witness(alphas: &[Rational], caps: Caps) -> Result<NonFfWitness> {
    use num_traits::Zero;
    if alphas.iter().any(Zero::is_zero) {
        return Err(Error::Precondition("alpha must be nonzero".into()));
    }
    let mut sorted = alphas.to_vec();
    sorted.sort();
    sorted.dedup();
    if sorted.len() != alphas.len() {
        return Err(Error::Precondition("alphas must be distinct".into()));
    }
    let a1 = IdealFamily::A(1).expand(2)?.set_caps(caps);
    let a3 = IdealFamily::A(3).expand(2)?;
    let mut factors = Vec::new();
    let mut hashes = Vec::new();
    let mut products_equal = Vec::new();
    for alpha in alphas {
        let quad = Polynomial::from_terms(
            2,
            [
                (
                    Monomial::bivariate(2, 2, 0),
                    Rational::from_integer(1.into()),
                ),
                (Monomial::bivariate(2, 0, 2), alpha.clone()),
            ],
        );
        let j = Ideal::with_caps(
            vec![quad, Polynomial::monomial(Monomial::bivariate(2, 1, 1))],
            caps,
        )?;
        products_equal.push(a1.product(&j).same_ideal(&a3)?);
        hashes.push(j.gb_hash()?);
        factors.push(j.to_string());
    }
    let mut uniq = hashes.clone();
    uniq.sort();
    uniq.dedup();
    let pairwise_distinct = uniq.len() == hashes.len();
    Ok(NonFfWitness {
        alphas: alphas.iter().map(|a| a.to_string()).collect(),
        valid: pairwise_distinct && products_equal.iter().all(|&b| b),
        factors,
        factor_gb_hashes: hashes,
        products_equal,
        pairwise_distinct,
    })
}

/// Evidence that `<X1>` is a prime of the ideal monoid not dividing `a[k]`:
/// it is principal with a degree-one generator, and `X2^k` lies in `a[k]`
/// but not in `<X1>`.
#[derive(Debug, Clone, Serialize)]
pub struct PrimeEvidence {
    pub prime: String,
    pub coprime_to: String,
    pub pure_power_outside: bool,
}

fn x1_prime_evidence(k: u32, caps: Caps) -> Result<PrimeEvidence> {
    let p = Ideal::with_caps(vec![Polynomial::var(2, 0)], caps)?;
    let x2k = Polynomial::monomial(Monomial::bivariate(2, 0, k));
    let inside = IdealFamily::A(k).expand(2)?.contains(&x2k)?;
    Ok(PrimeEvidence {
        prime: p.to_string(),
        coprime_to: IdealFamily::A(k).to_string(),
        pure_power_outside: inside && !p.contains(&x2k)?,
    })
}

/// `b = <X1>^(s-2) * a[r-s+2]` with `L(b) = [s, r]` and elasticity `r/s`.
#[derive(Debug, Clone, Serialize)]
pub struct IdealElastic {
    pub q: String,
    pub plan: ElasticPlan,
    pub element: String,
    pub element_gb_hash: String,
    pub witness: LengthCertificate,
    pub prime: PrimeEvidence,
    pub lengths: LengthSet,
    pub rho: String,
    pub verified: bool,
}

pub fn ideal_elasticity_construct(q: Rho, store: &mut AtomStore) -> Result<IdealElastic> {
    let plan = ElasticPlan::new(q)?;
    let k = plan.witness_max as u32;
    let witness = theorem51_lengths(k, store)?;
    plan.check_witness(&witness.lengths)?;
    let caps = *store.caps();
    let prime = x1_prime_evidence(k, caps)?;
    let p = Ideal::with_caps(vec![Polynomial::var(2, 0)], caps)?;
    let element = p
        .power(plan.shift as u32)
        .product(&IdealFamily::A(k).expand(2)?);
    let lengths = plan.predicted(&witness.lengths);
    let verified = witness.verified() && prime.pure_power_outside && lengths.rho() == q;
    Ok(IdealElastic {
        q: rho_string(&q),
        rho: rho_string(&lengths.rho()),
        element: element.to_string(),
        element_gb_hash: element.gb_hash()?,
        plan,
        witness,
        prime,
        lengths,
        verified,
    })
}

/// Outcome of a length-set search.
#[derive(Debug, Clone, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum SearchOutcome {
    Found {
        element: String,
        element_gb_hash: String,
        prime_power: usize,
        witness: Box<LengthCertificate>,
        prime: PrimeEvidence,
    },
    NotFound {
        reason: String,
    },
}

/// Looks for an ideal whose certified set of lengths is `target`.
///
/// Certified lengths of a product `<X1>^n * a[k]` are `n + [2, k]`, so every
/// interval `[a, b]` with `a >= 2` and `b - a + 2 <= max_k` is reached. Other
/// shapes are reported as not found; that is a statement about this search
/// only.
pub fn search_length_set(target: &LengthSet, store: &mut AtomStore) -> Result<SearchOutcome> {
    if target.min() < 2 {
        return Err(Error::Precondition(
            "lengths below 2 belong to atoms and units".into(),
        ));
    }
    if !target.is_interval() {
        return Ok(SearchOutcome::NotFound {
            reason: "only intervals are reachable from the certified families".into(),
        });
    }
    let (lo, hi) = (target.min(), target.max());
    let k = hi - lo + 2;
    if k > store.caps().max_k {
        return Ok(SearchOutcome::NotFound {
            reason: format!("needs <X1,X2>^{k}, above the k cap {}", store.caps().max_k),
        });
    }
    let witness = theorem51_lengths(k as u32, store)?;
    let caps = *store.caps();
    let prime = x1_prime_evidence(k as u32, caps)?;
    let p = Ideal::with_caps(vec![Polynomial::var(2, 0)], caps)?;
    let element = p
        .power((lo - 2) as u32)
        .product(&IdealFamily::A(k as u32).expand(2)?);
    if witness.lengths.shift(lo - 2) != *target || !witness.verified() || !prime.pure_power_outside
    {
        return Err(Error::VerificationFailed(
            "search hit failed its own checks".into(),
        ));
    }
    Ok(SearchOutcome::Found {
        element: element.to_string(),
        element_gb_hash: element.gb_hash()?,
        prime_power: lo - 2,
        witness: Box::new(witness),
        prime,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyarith::rat;

    #[test]
    fn small_theorem51() {
        let mut store = AtomStore::new(Caps::default());
        let c = theorem51_lengths(3, &mut store).unwrap();
        assert_eq!(c.lengths, LengthSet::interval(2, 3));
        assert_eq!(c.factorizations[0].lhs, vec!["a[1]", "b[2]"]);
        assert!(c.verified());
        let c5 = theorem51_lengths(5, &mut store).unwrap();
        assert_eq!(c5.factorizations[0].lhs, vec!["b[2]", "cprime"]);
        assert!(theorem51_lengths(9, &mut store).is_err());
    }

    #[test]
    fn factorization_shapes() {
        assert_eq!(
            factorization_of_length(4, 4).unwrap(),
            vec![IdealFamily::A(1); 4]
        );
        assert!(factorization_of_length(4, 5).is_err());
    }

    #[test]
    fn transfer_krull_and_control() {
        let mut store = AtomStore::new(Caps::default());
        assert!(not_transfer_krull_witness(&mut store).unwrap().valid);
        use IdealFamily::*;
        let bad = check_not_transfer_krull(A(1), B(2), B(2), &mut store).unwrap();
        assert!(!bad.distinct && !bad.valid);
    }

    #[test]
    fn non_ff() {
        let w = non_ff_witness(&[rat(1), rat(2), rat(3)], Caps::default()).unwrap();
        assert!(w.valid);
        assert!(non_ff_witness(&[rat(0)], Caps::default()).is_err());
        assert!(non_ff_witness(&[rat(2), rat(2)], Caps::default()).is_err());
    }

    #[test]
    fn u2_small() {
        let mut store = AtomStore::new(Caps::default());
        let w = u2_witnesses(1, &mut store).unwrap();
        assert!(w.verified());
        assert_eq!(w.members, vec![3, 4]);
        assert!(u2_witnesses(0, &mut store).is_err());
    }

    #[test]
    fn elastic_three_halves() {
        let mut store = AtomStore::new(Caps::default());
        let e = ideal_elasticity_construct(Rho::new(3, 2), &mut store).unwrap();
        assert!(e.verified);
        assert_eq!(e.lengths, LengthSet::interval(2, 3));
    }

    #[test]
    fn search() {
        let mut store = AtomStore::new(Caps::default());
        let hit = search_length_set(&LengthSet::interval(3, 5), &mut store).unwrap();
        assert!(matches!(hit, SearchOutcome::Found { prime_power: 1, .. }));
        let miss = search_length_set(&LengthSet::new([2, 4]).unwrap(), &mut store).unwrap();
        assert!(matches!(miss, SearchOutcome::NotFound { .. }));
    }
}
