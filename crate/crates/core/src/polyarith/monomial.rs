use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

/// An exponent vector `X1^e1 * ... * Xn^en`.
///
/// The derived ordering compares exponent vectors entry by entry starting at
/// `X1`, which is exactly the lexicographic order with `X1 > X2 > ... > Xn`.
/// Comparing monomials with different variable counts is a logic error.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    /// The monomial `X_var` (0-based index).
    pub fn var(nvars: usize, var: usize) -> Self {
        let mut e = vec![0; nvars];
        e[var] = 1;
        Monomial(e)
    }

    /// `X1^r X2^s` padded with zeros up to `nvars`.
    pub fn bivariate(nvars: usize, r: u32, s: u32) -> Self {
        let mut e = vec![0; nvars];
        e[0] = r;
        e[1] = s;
        Monomial(e)
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn exponent(&self, var: usize) -> u32 {
        self.0[var]
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        Monomial(other.0.iter().zip(&self.0).map(|(a, b)| a - b).collect())
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Nonzero only in variables `X1` and `X2`.
    pub fn is_bivariate(&self) -> bool {
        self.0.iter().skip(2).all(|&e| e == 0)
    }

    /// Graded comparison used for pair selection: total degree first, lex second.
    pub fn graded_cmp(&self, other: &Monomial) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.cmp(other))
    }

    /// All monomials of total degree `d` in `nvars` variables, in decreasing lex order.
    pub fn all_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut cur = vec![0u32; nvars];
        fill_degree(&mut cur, 0, d, &mut out);
        out
    }

    pub fn format_with(&self, names: &[String]) -> String {
        let mut parts = Vec::new();
        for (i, &e) in self.0.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(names[i].clone()),
                _ => parts.push(format!("{}^{}", names[i], e)),
            }
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

fn fill_degree(cur: &mut Vec<u32>, idx: usize, remaining: u32, out: &mut Vec<Monomial>) {
    let n = cur.len();
    if idx + 1 == n {
        cur[idx] = remaining;
        out.push(Monomial(cur.clone()));
        cur[idx] = 0;
        return;
    }
    for e in (0..=remaining).rev() {
        cur[idx] = e;
        fill_degree(cur, idx + 1, remaining - e, out);
    }
    cur[idx] = 0;
}

/// Default variable names: `X, Y` for two variables, `X1..Xn` otherwise.
pub fn default_names(nvars: usize) -> Vec<String> {
    if nvars == 2 {
        vec!["X".into(), "Y".into()]
    } else {
        (1..=nvars).map(|i| format!("X{i}")).collect()
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.format_with(&default_names(self.nvars())))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lex_order_prefers_first_variable() {
        let x = Monomial::new(vec![1, 0]);
        let y3 = Monomial::new(vec![0, 3]);
        assert!(x > y3);
        let x2y = Monomial::new(vec![2, 1]);
        let x2 = Monomial::new(vec![2, 0]);
        assert!(x2y > x2);
    }

    #[test]
    fn degree_enumeration_is_descending() {
        let ms = Monomial::all_of_degree(2, 3);
        assert_eq!(ms.len(), 4);
        assert!(ms.windows(2).all(|w| w[0] > w[1]));
        assert_eq!(ms[0], Monomial::new(vec![3, 0]));
        assert_eq!(Monomial::all_of_degree(3, 2).len(), 6);
    }

    #[test]
    fn divisibility_and_lcm() {
        let a = Monomial::new(vec![1, 2]);
        let b = Monomial::new(vec![3, 1]);
        assert_eq!(a.lcm(&b), Monomial::new(vec![3, 2]));
        assert!(a.divides(&a.lcm(&b)));
        assert!(!a.divides(&b));
        assert_eq!(a.quotient_of(&a.lcm(&b)), Monomial::new(vec![2, 0]));
    }
}
