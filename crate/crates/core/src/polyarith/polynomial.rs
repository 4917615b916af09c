use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::monomial::{default_names, Monomial};

pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Minimal degree of a polynomial; `Infinite` for the zero polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum MinDegree {
    Finite(u32),
    Infinite,
}

impl MinDegree {
    pub fn finite(self) -> Option<u32> {
        match self {
            MinDegree::Finite(d) => Some(d),
            MinDegree::Infinite => None,
        }
    }
}

impl fmt::Display for MinDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MinDegree::Finite(d) => write!(f, "{d}"),
            MinDegree::Infinite => write!(f, "inf"),
        }
    }
}

/// Exact multivariate polynomial over the rationals.
///
/// Terms are kept in a map keyed by monomial, so iteration in reverse yields
/// the terms in decreasing lex order. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, rat(1))
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        Self::term(Monomial::one(nvars), c)
    }

    pub fn term(m: Monomial, c: Rational) -> Self {
        let nvars = m.nvars();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { nvars, terms }
    }

    pub fn monomial(m: Monomial) -> Self {
        Self::term(m, rat(1))
    }

    pub fn var(nvars: usize, var: usize) -> Self {
        Self::monomial(Monomial::var(nvars, var))
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut p = Polynomial::zero(nvars);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.is_one())
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in decreasing lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter().rev()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// The initial (lex-largest) monomial.
    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.keys().next_back()
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.terms.values().next_back()
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        debug_assert_eq!(m.nvars(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    /// `c * m * self`.
    pub fn mul_term(&self, m: &Monomial, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(k, a)| (k.mul(m), a * c)).collect(),
        }
    }

    /// `self - c * m * other`, in place.
    pub fn sub_mul_term(&mut self, other: &Polynomial, m: &Monomial, c: &Rational) {
        for (k, a) in &other.terms {
            self.add_term(k.mul(m), -(a * c));
        }
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    /// Smallest degree carrying a nonzero homogeneous component.
    pub fn mdeg(&self) -> MinDegree {
        self.terms
            .keys()
            .map(|m| m.degree())
            .min()
            .map_or(MinDegree::Infinite, MinDegree::Finite)
    }

    pub fn homogeneous_part(&self, d: u32) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|m| m.degree());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// Uses only `X1` and `X2`.
    pub fn is_bivariate(&self) -> bool {
        self.terms.keys().all(|m| m.is_bivariate())
    }

    pub fn make_monic(&self) -> Polynomial {
        match self.leading_coeff() {
            None => self.clone(),
            Some(c) => self.scale(&c.recip()),
        }
    }

    /// Rescales so that the coefficients are coprime integers with a positive
    /// leading coefficient.
    pub fn primitive_part(&self) -> Polynomial {
        if self.is_zero() {
            return self.clone();
        }
        let mut den_lcm = BigInt::one();
        let mut num_gcd = BigInt::zero();
        for c in self.terms.values() {
            den_lcm = den_lcm.lcm(c.denom());
            num_gcd = num_gcd.gcd(c.numer());
        }
        let mut factor = BigRational::new(den_lcm, num_gcd);
        if self.leading_coeff().is_some_and(|c| c.is_negative()) {
            factor = -factor;
        }
        self.scale(&factor)
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut acc = Polynomial::one(self.nvars);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Evaluates at a rational point.
    pub fn evaluate(&self, point: &[Rational]) -> Rational {
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    t *= num_traits::pow(point[i].clone(), e as usize);
                }
            }
            acc += t;
        }
        acc
    }

    /// Substitutes `value` for variable `var`, keeping the variable count.
    pub fn substitute(&self, var: usize, value: &Rational) -> Polynomial {
        let mut out = Polynomial::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.exponent(var);
            let mut exps = m.exponents().to_vec();
            exps[var] = 0;
            let factor = if e == 0 {
                Rational::one()
            } else {
                num_traits::pow(value.clone(), e as usize)
            };
            out.add_term(Monomial::new(exps), c * factor);
        }
        out
    }

    /// Variables that occur with a positive exponent.
    pub fn support_vars(&self) -> Vec<usize> {
        (0..self.nvars)
            .filter(|&v| self.terms.keys().any(|m| m.exponent(v) > 0))
            .collect()
    }

    /// Coefficients of the polynomial viewed as univariate in `var`, indexed by
    /// degree. Only meaningful when no other variable occurs.
    pub fn univariate_coeffs(&self, var: usize) -> Vec<Rational> {
        let deg = self
            .terms
            .keys()
            .map(|m| m.exponent(var) as usize)
            .max()
            .unwrap_or(0);
        let mut out = vec![Rational::zero(); deg + 1];
        for (m, c) in &self.terms {
            out[m.exponent(var) as usize] += c;
        }
        out
    }

    /// Embeds into a ring with more variables (new ones appended at the end).
    pub fn extend_vars(&self, nvars: usize) -> Polynomial {
        assert!(nvars >= self.nvars);
        Polynomial {
            nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let mut e = m.exponents().to_vec();
                    e.resize(nvars, 0);
                    (Monomial::new(e), c.clone())
                })
                .collect(),
        }
    }

    pub fn format_with(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (m, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = m.format_with(names);
            if m.is_one() {
                out.push_str(&abs.to_string());
            } else if abs.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{abs}*{mono}"));
            }
        }
        out
    }

    /// Canonical array form: `[[coefficient, [exponents...]], ...]` in
    /// decreasing lex order.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.terms()
                .map(|(m, c)| serde_json::json!([c.to_string(), m.exponents()]))
                .collect(),
        )
    }

    pub fn from_json(nvars: usize, v: &serde_json::Value) -> crate::Result<Polynomial> {
        let bad = || crate::Error::Parse(format!("malformed polynomial json: {v}"));
        let arr = v.as_array().ok_or_else(bad)?;
        let mut p = Polynomial::zero(nvars);
        for t in arr {
            let pair = t.as_array().filter(|a| a.len() == 2).ok_or_else(bad)?;
            let c: Rational = pair[0]
                .as_str()
                .ok_or_else(bad)?
                .parse()
                .map_err(|_| bad())?;
            let exps: Vec<u32> = pair[1]
                .as_array()
                .ok_or_else(bad)?
                .iter()
                .map(|e| e.as_u64().map(|x| x as u32).ok_or_else(bad))
                .collect::<crate::Result<_>>()?;
            if exps.len() != nvars {
                return Err(bad());
            }
            p.add_term(Monomial::new(exps), c);
        }
        Ok(p)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.format_with(&default_names(self.nvars)))
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl<'a> Add<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl<'a> Mul<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero(self.nvars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&rat(-1))
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: Polynomial) -> Polynomial {
        &self + &rhs
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        &self - &rhs
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x() -> Polynomial {
        Polynomial::var(2, 0)
    }
    fn y() -> Polynomial {
        Polynomial::var(2, 1)
    }

    #[test]
    fn square_of_binomial() {
        let s = (&x() + &y()).pow(2);
        let expected = Polynomial::from_terms(
            2,
            [
                (Monomial::new(vec![2, 0]), rat(1)),
                (Monomial::new(vec![1, 1]), rat(2)),
                (Monomial::new(vec![0, 2]), rat(1)),
            ],
        );
        assert_eq!(s, expected);
        assert_eq!(s.to_string(), "X^2 + 2*X*Y + Y^2");
    }

    #[test]
    fn times_zero_is_zero() {
        let f = &x() + &y().pow(3);
        assert!((&f * &Polynomial::zero(2)).is_zero());
        assert_eq!(Polynomial::zero(2).mdeg(), MinDegree::Infinite);
    }

    #[test]
    fn mdeg_is_additive_on_example() {
        let f = &x().pow(2) + &x().pow(3);
        let g = &y() + &(&x() * &y());
        assert_eq!(f.mdeg(), MinDegree::Finite(2));
        assert_eq!(g.mdeg(), MinDegree::Finite(1));
        assert_eq!((&f * &g).mdeg(), MinDegree::Finite(3));
        assert_eq!((&x().pow(3) + &y().pow(3)).mdeg(), MinDegree::Finite(3));
    }

    #[test]
    fn leading_term_is_lex_max() {
        let f = &y().pow(5) + &x();
        assert_eq!(f.leading_monomial(), Some(&Monomial::new(vec![1, 0])));
    }

    #[test]
    fn primitive_part_clears_denominators() {
        let f = &x().scale(&ratio(-1, 2)) + &y().scale(&ratio(3, 4));
        let p = f.primitive_part();
        assert_eq!(p.to_string(), "2*X - 3*Y");
    }

    #[test]
    fn json_round_trip() {
        let f = &x().scale(&ratio(3, 2)) - &y().pow(2);
        let back = Polynomial::from_json(2, &f.to_json()).unwrap();
        assert_eq!(f, back);
    }

    #[test]
    fn substitution_and_evaluation_agree() {
        let f = &(&x() * &y()) + &x().pow(2);
        let g = f.substitute(1, &rat(3));
        assert_eq!(g.evaluate(&[rat(2), rat(0)]), rat(10));
        assert_eq!(f.evaluate(&[rat(2), rat(3)]), rat(10));
    }
}
