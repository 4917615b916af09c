use std::fmt;

use super::monomial::Monomial;
use super::polynomial::Polynomial;

/// A finite-dimensional space of degree-`d` forms kept in reduced row
/// echelon form.
///
/// Rows have pairwise distinct initial monomials in strictly decreasing lex
/// order and leading coefficient 1. Every other row is zero at each row's
/// initial monomial, so two pieces span the same space iff their rows agree.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GradedPiece {
    nvars: usize,
    degree: u32,
    rows: Vec<Polynomial>,
}

impl GradedPiece {
    pub fn zero(nvars: usize, degree: u32) -> Self {
        GradedPiece {
            nvars,
            degree,
            rows: Vec::new(),
        }
    }

    /// Echelonized span of `forms`. Each form must be homogeneous of degree
    /// `degree` (or zero).
    pub fn span(nvars: usize, degree: u32, forms: impl IntoIterator<Item = Polynomial>) -> Self {
        let mut piece = GradedPiece::zero(nvars, degree);
        for f in forms {
            piece.insert(f);
        }
        piece
    }

    /// The whole space of degree-`d` forms.
    pub fn full(nvars: usize, degree: u32) -> Self {
        GradedPiece {
            nvars,
            degree,
            rows: Monomial::all_of_degree(nvars, degree)
                .into_iter()
                .map(Polynomial::monomial)
                .collect(),
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Polynomial] {
        &self.rows
    }

    pub fn initial_monomials(&self) -> Vec<Monomial> {
        self.rows
            .iter()
            .map(|r| r.leading_monomial().unwrap().clone())
            .collect()
    }

    /// Reduces `f` against the rows; the result is zero iff `f` lies in the span.
    pub fn reduce(&self, f: &Polynomial) -> Polynomial {
        let mut p = f.clone();
        for row in &self.rows {
            let pivot = row.leading_monomial().unwrap();
            let c = p.coeff(pivot);
            if c != num_traits::Zero::zero() {
                p.sub_mul_term(row, &Monomial::one(self.nvars), &c);
            }
        }
        p
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        self.reduce(f).is_zero()
    }

    /// Adds `f` to the spanning set; returns whether the dimension grew.
    pub fn insert(&mut self, f: Polynomial) -> bool {
        debug_assert!(f.is_zero() || (f.is_homogeneous() && f.total_degree() == Some(self.degree)));
        let r = self.reduce(&f);
        if r.is_zero() {
            return false;
        }
        let r = r.make_monic();
        let pivot = r.leading_monomial().unwrap().clone();
        for row in &mut self.rows {
            let c = row.coeff(&pivot);
            if c != num_traits::Zero::zero() {
                row.sub_mul_term(&r, &Monomial::one(self.nvars), &c);
            }
        }
        let pos = self
            .rows
            .iter()
            .position(|row| row.leading_monomial().unwrap() < &pivot)
            .unwrap_or(self.rows.len());
        self.rows.insert(pos, r);
        true
    }

    /// Echelonized span of all pairwise products.
    pub fn product(&self, other: &GradedPiece) -> GradedPiece {
        let mut out = GradedPiece::zero(self.nvars, self.degree + other.degree);
        for f in &self.rows {
            for g in &other.rows {
                out.insert(f * g);
            }
        }
        out
    }

    pub fn is_subspace_of(&self, other: &GradedPiece) -> bool {
        self.degree == other.degree && self.rows.iter().all(|r| other.contains(r))
    }

    /// Checks the echelon invariants: strictly decreasing distinct initial
    /// monomials, monic rows, zero entries above and below every pivot.
    pub fn is_echelon(&self) -> bool {
        let inits = self.initial_monomials();
        let decreasing = inits.windows(2).all(|w| w[0] > w[1]);
        let monic = self
            .rows
            .iter()
            .all(|r| r.leading_coeff().is_some_and(num_traits::One::is_one));
        let reduced = self.rows.iter().enumerate().all(|(i, r)| {
            inits
                .iter()
                .enumerate()
                .all(|(k, m)| k == i || r.coeff(m) == num_traits::Zero::zero())
        });
        decreasing && monic && reduced
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "degree": self.degree,
            "dim": self.dim(),
            "rows": self.rows.iter().map(|r| r.to_json()).collect::<Vec<_>>(),
        })
    }
}

impl fmt::Debug for GradedPiece {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self.rows.iter().map(|r| r.to_string()).collect();
        write!(f, "Span[d={}]{{{}}}", self.degree, rows.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyarith::parse::parse_polynomial;

    fn p(s: &str) -> Polynomial {
        parse_polynomial(s, 2).unwrap()
    }

    #[test]
    fn linear_forms_squared() {
        let v = GradedPiece::span(2, 1, [p("X"), p("Y")]);
        let sq = v.product(&v);
        assert_eq!(sq, GradedPiece::full(2, 2));
        assert_eq!(sq.dim(), 3);
    }

    #[test]
    fn echelon_of_dependent_rows() {
        let v = GradedPiece::span(2, 2, [p("X^2 + Y^2"), p("X^2 - Y^2"), p("2*X^2")]);
        assert_eq!(v.dim(), 2);
        assert!(v.is_echelon());
        assert_eq!(v.rows(), &[p("X^2"), p("Y^2")]);
    }

    #[test]
    fn product_dimension_bound() {
        let v = GradedPiece::span(2, 1, [p("X + Y")]);
        let w = GradedPiece::span(2, 2, [p("X^2"), p("X*Y - Y^2")]);
        let vw = v.product(&w);
        assert!(vw.dim() <= v.dim() * w.dim());
        assert!(vw.is_echelon());
        assert!(vw.contains(&(&p("X + Y") * &p("X^2"))));
    }
}
