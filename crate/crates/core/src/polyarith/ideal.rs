use std::fmt;
use std::sync::OnceLock;

use sha2::{Digest, Sha256};

use super::graded::GradedPiece;
use super::groebner::{is_unit_basis, normal_form, reduced_groebner, GbBudget};
use super::monomial::{default_names, Monomial};
use super::parse::{infer_nvars, parse_generators};
use super::polynomial::{MinDegree, Polynomial};
use crate::config::Caps;
use crate::{Error, Result};

/// A nonzero ideal of `Q[X1..Xn]` given by generators, with a lazily computed
/// reduced lex Gröbner basis.
///
/// Two ideals are equal iff their reduced bases are equal; [`Ideal::gb_hash`]
/// digests that basis.
pub struct Ideal {
    nvars: usize,
    generators: Vec<Polynomial>,
    caps: Caps,
    gb: OnceLock<Vec<Polynomial>>,
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        let gb = OnceLock::new();
        if let Some(b) = self.gb.get() {
            let _ = gb.set(b.clone());
        }
        Ideal {
            nvars: self.nvars,
            generators: self.generators.clone(),
            caps: self.caps,
            gb,
        }
    }
}

impl Ideal {
    /// Builds an ideal from generators; zero generators are dropped.
    pub fn new(generators: Vec<Polynomial>) -> Result<Self> {
        Self::with_caps(generators, Caps::default())
    }

    pub fn with_caps(generators: Vec<Polynomial>, caps: Caps) -> Result<Self> {
        let Some(first) = generators.first() else {
            return Err(Error::InvalidArgument(
                "an ideal needs at least one generator".into(),
            ));
        };
        let nvars = first.nvars();
        if generators.iter().any(|g| g.nvars() != nvars) {
            return Err(Error::InvalidArgument(
                "generators live in different polynomial rings".into(),
            ));
        }
        let generators: Vec<Polynomial> = generators.into_iter().filter(|g| !g.is_zero()).collect();
        if generators.is_empty() {
            return Err(Error::InvalidArgument(
                "the zero ideal is not a monoid element".into(),
            ));
        }
        Ok(Ideal {
            nvars,
            generators,
            caps,
            gb: OnceLock::new(),
        })
    }

    /// Parses `<f1; f2; ...>`; the variable count is inferred (at least 2).
    pub fn parse(s: &str) -> Result<Self> {
        Self::parse_in(s, infer_nvars(s))
    }

    pub fn parse_in(s: &str, nvars: usize) -> Result<Self> {
        Self::new(parse_generators(s, nvars)?)
    }

    pub fn unit(nvars: usize) -> Self {
        Self::new(vec![Polynomial::one(nvars)]).unwrap()
    }

    /// Monomial ideal in `X1, X2` from exponent pairs `(r, s)` for `X1^r X2^s`.
    pub fn bivariate_monomial(nvars: usize, pairs: &[(u32, u32)]) -> Result<Self> {
        Self::new(
            pairs
                .iter()
                .map(|&(r, s)| Polynomial::monomial(Monomial::bivariate(nvars, r, s)))
                .collect(),
        )
    }

    pub fn set_caps(mut self, caps: Caps) -> Self {
        self.caps = caps;
        self
    }

    pub fn caps(&self) -> &Caps {
        &self.caps
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn is_monomial(&self) -> bool {
        self.generators.iter().all(|g| g.is_monomial())
    }

    pub fn is_bivariate(&self) -> bool {
        self.generators.iter().all(|g| g.is_bivariate())
    }

    fn check_caps(&self) -> Result<()> {
        if self.nvars > self.caps.max_vars {
            return Err(Error::CapExceeded {
                what: "number of variables",
                value: self.nvars,
                cap: self.caps.max_vars,
            });
        }
        let deg = self
            .generators
            .iter()
            .filter_map(|g| g.total_degree())
            .max()
            .unwrap_or(0) as usize;
        if deg > self.caps.max_degree {
            return Err(Error::CapExceeded {
                what: "generator degree",
                value: deg,
                cap: self.caps.max_degree,
            });
        }
        Ok(())
    }

    /// The reduced lex Gröbner basis, computed once.
    pub fn groebner(&self) -> Result<&[Polynomial]> {
        if let Some(gb) = self.gb.get() {
            return Ok(gb);
        }
        self.check_caps()?;
        let gb = reduced_groebner(&self.generators, GbBudget::default())?;
        let _ = self.gb.set(gb);
        Ok(self.gb.get().unwrap())
    }

    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        Ok(normal_form(f, self.groebner()?))
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    pub fn contains_ideal(&self, other: &Ideal) -> Result<bool> {
        for g in other.generators() {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn is_unit(&self) -> Result<bool> {
        Ok(is_unit_basis(self.groebner()?))
    }

    /// Ideal equality via reduced Gröbner bases.
    pub fn same_ideal(&self, other: &Ideal) -> Result<bool> {
        Ok(self.nvars == other.nvars && self.groebner()? == other.groebner()?)
    }

    /// Product ideal, generated by pairwise products of generators.
    pub fn product(&self, other: &Ideal) -> Ideal {
        let mut gens = Vec::with_capacity(self.generators.len() * other.generators.len());
        for f in &self.generators {
            for g in &other.generators {
                let h = f * g;
                if !gens.contains(&h) {
                    gens.push(h);
                }
            }
        }
        Ideal {
            nvars: self.nvars,
            generators: gens,
            caps: self.caps,
            gb: OnceLock::new(),
        }
    }

    pub fn product_all<'a>(factors: impl IntoIterator<Item = &'a Ideal>) -> Option<Ideal> {
        let mut it = factors.into_iter();
        let first = it.next()?.clone();
        Some(it.fold(first, |acc, f| acc.product(f)))
    }

    pub fn power(&self, k: u32) -> Ideal {
        let mut acc = Ideal::unit(self.nvars).set_caps(self.caps);
        for _ in 0..k {
            acc = acc.product(self);
        }
        acc
    }

    /// Minimal degree of the ideal: the smallest minimal degree among the
    /// generators. No combination of generators can have smaller minimal
    /// degree, because the minimal degree of a product is additive and that
    /// of a sum is at least the minimum of the summands.
    pub fn mdeg(&self) -> MinDegree {
        self.generators
            .iter()
            .map(|g| g.mdeg())
            .min()
            .unwrap_or(MinDegree::Infinite)
    }

    /// `I_K[d]`: the span of degree-`d` components of elements of the ideal.
    ///
    /// Spanned by `m * (g)_b` over generators `g`, homogeneous parts `b` and
    /// monomials `m` of degree `d - b`.
    pub fn graded_piece(&self, d: u32) -> Result<GradedPiece> {
        if d as usize > self.caps.max_degree {
            return Err(Error::CapExceeded {
                what: "graded piece degree",
                value: d as usize,
                cap: self.caps.max_degree,
            });
        }
        let mut piece = GradedPiece::zero(self.nvars, d);
        for g in &self.generators {
            for b in 0..=d {
                let part = g.homogeneous_part(b);
                if part.is_zero() {
                    continue;
                }
                for m in Monomial::all_of_degree(self.nvars, d - b) {
                    piece.insert(part.mul_term(&m, &num_traits::One::one()));
                }
            }
        }
        Ok(piece)
    }

    /// Canonical JSON of the reduced basis: coefficient/exponent arrays.
    pub fn gb_json(&self) -> Result<serde_json::Value> {
        Ok(serde_json::json!({
            "nvars": self.nvars,
            "basis": self.groebner()?.iter().map(|g| g.to_json()).collect::<Vec<_>>(),
        }))
    }

    /// SHA-256 of the canonical reduced-basis JSON, hex encoded.
    pub fn gb_hash(&self) -> Result<String> {
        let text = serde_json::to_string(&self.gb_json()?).expect("json serialization");
        Ok(hex::encode(Sha256::digest(text.as_bytes())))
    }

    pub fn generators_json(&self) -> serde_json::Value {
        serde_json::json!({
            "nvars": self.nvars,
            "generators": self.generators.iter().map(|g| g.to_json()).collect::<Vec<_>>(),
        })
    }

    pub fn from_generators_json(v: &serde_json::Value) -> Result<Ideal> {
        let bad = || Error::Parse(format!("malformed ideal json: {v}"));
        let nvars = v.get("nvars").and_then(|n| n.as_u64()).ok_or_else(bad)? as usize;
        let gens = v
            .get("generators")
            .and_then(|g| g.as_array())
            .ok_or_else(bad)?
            .iter()
            .map(|g| Polynomial::from_json(nvars, g))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(gens)
    }

    /// Is this `<X1, X2>`-primary? Decided for ideals generated in `X1, X2`:
    /// the ideal must lie in `<X1, X2>` and contain pure powers of both
    /// variables up to the degree cap. Returns the two exponents found.
    pub fn maximal_primary_evidence(&self) -> Result<Option<(u32, u32)>> {
        if !self.is_bivariate() {
            return Err(Error::Precondition(
                "primary test needs generators in X1, X2 only".into(),
            ));
        }
        if self.generators.iter().any(|g| {
            !g.coeff(&Monomial::one(self.nvars))
                .eq(&num_traits::Zero::zero())
        }) {
            return Ok(None);
        }
        let find_power = |var: usize| -> Result<Option<u32>> {
            for e in 1..=self.caps.max_degree as u32 {
                let mut exps = vec![0; self.nvars];
                exps[var] = e;
                if self.contains(&Polynomial::monomial(Monomial::new(exps)))? {
                    return Ok(Some(e));
                }
            }
            Ok(None)
        };
        match (find_power(0)?, find_power(1)?) {
            (Some(a), Some(b)) => Ok(Some((a, b))),
            _ => Ok(None),
        }
    }

    pub fn format_with(&self, names: &[String]) -> String {
        let gens: Vec<String> = self
            .generators
            .iter()
            .map(|g| g.format_with(names))
            .collect();
        format!("<{}>", gens.join("; "))
    }
}

/// Primary test for monomial ideals in `X1, X2`: contains a pure power of
/// each variable. Rejects ideals with a non-monomial generator or a generator
/// involving other variables.
pub fn primary_check_monomial(ideal: &Ideal) -> Result<bool> {
    if !ideal.is_monomial() {
        return Err(Error::Precondition(
            "primary_check_monomial accepts monomial ideals only".into(),
        ));
    }
    if !ideal.is_bivariate() {
        return Err(Error::Precondition(
            "primary_check_monomial accepts ideals in X1, X2 only".into(),
        ));
    }
    let pure = |var: usize| {
        ideal.generators().iter().any(|g| {
            let m = g.leading_monomial().unwrap();
            m.exponent(var) > 0
                && m.exponents()
                    .iter()
                    .enumerate()
                    .all(|(k, &e)| k == var || e == 0)
        })
    };
    Ok(pure(0) && pure(1))
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.format_with(&default_names(self.nvars)))
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(s: &str) -> Ideal {
        Ideal::parse(s).unwrap()
    }

    #[test]
    fn principal_product() {
        let xy = ideal("<X>").product(&ideal("<Y>"));
        assert!(xy.same_ideal(&ideal("<X*Y>")).unwrap());
    }

    #[test]
    fn lemma_two_identity_small_case() {
        let lhs = ideal("<X^2; Y^2>").product(&ideal("<X; Y>"));
        let rhs = ideal("<X; Y>").power(3);
        assert!(lhs.same_ideal(&rhs).unwrap());
    }

    #[test]
    fn example_product_equals_fifth_power() {
        let lhs = ideal("<X^2; Y^2>").product(&ideal("<X^3+Y^3; X^2*Y; X*Y^2>"));
        assert!(lhs.same_ideal(&ideal("<X; Y>").power(5)).unwrap());
    }

    #[test]
    fn remark_factorization_of_c4() {
        let lhs = ideal("<X1^2; X1*X2 + X2^2>").product(&ideal("<X1^2; X1*X2 - X2^2>"));
        let c4 = ideal("<X^4; X^3*Y; X^2*Y^2; Y^4>");
        assert!(lhs.same_ideal(&c4).unwrap());
    }

    #[test]
    fn mdeg_of_ideals() {
        assert_eq!(ideal("<X^2; Y^2>").mdeg(), MinDegree::Finite(2));
        assert_eq!(ideal("<X^3 + Y^3>").mdeg(), MinDegree::Finite(3));
        assert_eq!(ideal("<X + X^5; Y^2>").mdeg(), MinDegree::Finite(1));
    }

    #[test]
    fn graded_pieces_of_examples() {
        assert_eq!(ideal("<X^2; Y^2>").graded_piece(2).unwrap().dim(), 2);
        assert_eq!(ideal("<X; Y>").power(2).graded_piece(2).unwrap().dim(), 3);
        let cp = ideal("<X^3+Y^3; X^2*Y; X*Y^2>").graded_piece(3).unwrap();
        assert_eq!(cp.dim(), 3);
        assert!(cp.contains(&crate::polyarith::parse_polynomial("X^3 + Y^3", 2).unwrap()));
        assert!(!cp.contains(&crate::polyarith::parse_polynomial("X^3", 2).unwrap()));
    }

    #[test]
    fn non_homogeneous_graded_piece() {
        // <X + X^2> at degree 2 is spanned by X*X, X*Y and (X^2 from 1*(g)_2)
        let piece = ideal("<X + X^2>").graded_piece(2).unwrap();
        assert_eq!(piece.dim(), 2);
    }

    #[test]
    fn primary_checks() {
        assert!(primary_check_monomial(&ideal("<X^3; Y^3>")).unwrap());
        assert!(!primary_check_monomial(&ideal("<X^2*Y>")).unwrap());
        assert!(primary_check_monomial(&ideal("<X^3+Y^3; X*Y>")).is_err());
        let cp = ideal("<X^3+Y^3; X^2*Y; X*Y^2>");
        assert_eq!(cp.maximal_primary_evidence().unwrap(), Some((4, 4)));
        assert_eq!(
            ideal("<X + 1; Y>").maximal_primary_evidence().unwrap(),
            None
        );
    }

    #[test]
    fn caps_are_enforced() {
        let caps = Caps {
            max_degree: 3,
            ..Caps::default()
        };
        let big = ideal("<X^4; Y>").set_caps(caps);
        assert!(matches!(big.groebner(), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn json_round_trip_preserves_ideal() {
        let i = ideal("<X^2 + 1/2*Y^2; X*Y>");
        let back = Ideal::from_generators_json(&i.generators_json()).unwrap();
        assert!(i.same_ideal(&back).unwrap());
        assert_eq!(i.gb_hash().unwrap(), back.gb_hash().unwrap());
    }
}
