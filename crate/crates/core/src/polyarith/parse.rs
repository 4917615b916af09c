//! Text syntax for polynomials and ideals.
//!
//! Variables are `X1..Xn`; `X` and `Y` alias `X1` and `X2`. Powers use `^`,
//! `*` is optional between factors, coefficients are integers or `a/b`, and
//! parentheses group. Ideals are written `<f1; f2; ...>`.

use num_bigint::BigInt;

use super::polynomial::{Polynomial, Rational};
use crate::{Error, Result};

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    nvars: usize,
}

impl<'a> Parser<'a> {
    fn err(&self, msg: &str) -> Error {
        Error::Parse(format!(
            "{msg} at offset {} in {:?}",
            self.pos,
            String::from_utf8_lossy(self.src)
        ))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Option<String> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        (self.pos > start).then(|| String::from_utf8_lossy(&self.src[start..self.pos]).into_owned())
    }

    fn exponent(&mut self) -> Result<u32> {
        if self.eat(b'^') {
            self.digits()
                .ok_or_else(|| self.err("expected exponent"))?
                .parse()
                .map_err(|_| self.err("exponent too large"))
        } else {
            Ok(1)
        }
    }

    fn polynomial(&mut self) -> Result<Polynomial> {
        let mut acc = Polynomial::zero(self.nvars);
        let mut first = true;
        loop {
            let sign = if self.eat(b'-') {
                -1
            } else if self.eat(b'+') || first {
                1
            } else {
                break;
            };
            first = false;
            let t = self.term()?;
            acc = if sign < 0 { &acc - &t } else { &acc + &t };
            match self.peek() {
                Some(b'+') | Some(b'-') => continue,
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        loop {
            self.eat(b'*');
            match self.peek() {
                Some(c) if c == b'(' || c == b'X' || c == b'Y' || c.is_ascii_digit() => {
                    let f = self.factor()?;
                    acc = &acc * &f;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.polynomial()?;
                if !self.eat(b')') {
                    return Err(self.err("expected ')'"));
                }
                let e = self.exponent()?;
                Ok(inner.pow(e))
            }
            Some(c) if c.is_ascii_digit() => {
                let num: BigInt = self.digits().unwrap().parse().unwrap();
                let mut value = Rational::from_integer(num);
                if self.eat(b'/') {
                    let den: BigInt = self
                        .digits()
                        .ok_or_else(|| self.err("expected denominator"))?
                        .parse()
                        .unwrap();
                    if den == BigInt::from(0) {
                        return Err(self.err("zero denominator"));
                    }
                    value /= Rational::from_integer(den);
                }
                let e = self.exponent()?;
                Ok(Polynomial::constant(
                    self.nvars,
                    num_traits::pow(value, e as usize),
                ))
            }
            Some(b'X') | Some(b'Y') => {
                let letter = self.src[self.pos];
                self.pos += 1;
                let idx = if letter == b'Y' {
                    2
                } else {
                    match self.digits() {
                        Some(d) => d.parse::<usize>().map_err(|_| self.err("bad variable"))?,
                        None => 1,
                    }
                };
                if idx == 0 || idx > self.nvars {
                    return Err(
                        self.err(&format!("variable index {idx} outside 1..={}", self.nvars))
                    );
                }
                let e = self.exponent()?;
                Ok(Polynomial::var(self.nvars, idx - 1).pow(e))
            }
            _ => Err(self.err("expected a factor")),
        }
    }
}

/// Parses a polynomial in `nvars` variables.
pub fn parse_polynomial(s: &str, nvars: usize) -> Result<Polynomial> {
    let mut p = Parser {
        src: s.as_bytes(),
        pos: 0,
        nvars,
    };
    let out = p.polynomial()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.err("trailing input"));
    }
    Ok(out)
}

/// Parses `<f1; f2; ...>` into its generator list.
pub fn parse_generators(s: &str, nvars: usize) -> Result<Vec<Polynomial>> {
    let t = s.trim();
    let inner = t
        .strip_prefix('<')
        .and_then(|r| r.strip_suffix('>'))
        .ok_or_else(|| Error::Parse(format!("ideal literal must be <f1; f2; ...>, got {s:?}")))?;
    let gens = inner
        .split(';')
        .map(|part| parse_polynomial(part, nvars))
        .collect::<Result<Vec<_>>>()?;
    if gens.is_empty() {
        return Err(Error::Parse("empty ideal literal".into()));
    }
    Ok(gens)
}

/// Smallest variable count (at least 2) that covers every `Xi` in `s`.
pub fn infer_nvars(s: &str) -> usize {
    let bytes = s.as_bytes();
    let mut n = 2;
    let mut i = 0;
    while i < bytes.len() {
        if bytes[i] == b'X' {
            let start = i + 1;
            let mut j = start;
            while j < bytes.len() && bytes[j].is_ascii_digit() {
                j += 1;
            }
            if j > start {
                if let Ok(k) = s[start..j].parse::<usize>() {
                    n = n.max(k);
                }
            }
            i = j;
        } else {
            i += 1;
        }
    }
    n
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyarith::polynomial::ratio;

    #[test]
    fn parses_aliases_and_powers() {
        let f = parse_polynomial("X^3 + Y^3", 2).unwrap();
        let g = parse_polynomial("X1^3+X2^3", 2).unwrap();
        assert_eq!(f, g);
        assert_eq!(f.to_string(), "X^3 + Y^3");
    }

    #[test]
    fn parses_rational_coefficients_and_implicit_products() {
        let f = parse_polynomial("3/2 X Y^2 - 2*X", 2).unwrap();
        assert_eq!(f.num_terms(), 2);
        assert_eq!(
            f.coeff(&crate::polyarith::Monomial::new(vec![1, 2])),
            ratio(3, 2)
        );
    }

    #[test]
    fn parses_parentheses() {
        let f = parse_polynomial("(X+Y)^2 - X^2", 2).unwrap();
        assert_eq!(f.to_string(), "2*X*Y + Y^2");
    }

    #[test]
    fn rejects_out_of_range_variable() {
        assert!(parse_polynomial("X3", 2).is_err());
        assert!(parse_polynomial("X +", 2).is_err());
        assert!(parse_polynomial("1/0", 2).is_err());
    }

    #[test]
    fn parses_ideal_literal() {
        let g = parse_generators("<X^2; X*Y + Y^2>", 2).unwrap();
        assert_eq!(g.len(), 2);
        assert!(parse_generators("X^2, Y", 2).is_err());
        assert_eq!(infer_nvars("<X1*X4; X2>"), 4);
        assert_eq!(infer_nvars("<X; Y>"), 2);
    }
}
