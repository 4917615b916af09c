//! Exact polynomial arithmetic over the rationals: lex-ordered polynomials,
//! reduced Gröbner bases, ideal products, minimal degrees and graded pieces.

pub mod graded;
pub mod groebner;
pub mod ideal;
pub mod monomial;
pub mod parse;
pub mod polynomial;

pub use graded::GradedPiece;
pub use groebner::{
    is_groebner_basis, is_reduced, is_unit_basis, normal_form, reduced_groebner, GbBudget,
};
pub use ideal::{primary_check_monomial, Ideal};
pub use monomial::Monomial;
pub use parse::{parse_generators, parse_polynomial};
pub use polynomial::{rat, ratio, MinDegree, Polynomial, Rational};
