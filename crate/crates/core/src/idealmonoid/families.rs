//! The named ideal families of `K[X1, X2]`.

use std::fmt;
use std::str::FromStr;

use super::staircase::Staircase;
use crate::polyarith::{parse_generators, Ideal};
use crate::{Error, Result};

/// `a[k] = <X1,X2>^k`, `b[i] = <X1^i, X2^i>`, `c[n]` for the two
/// `c`-families (odd and even `n`), and `cprime = <X1^3+X2^3, X1^2 X2, X1 X2^2>`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IdealFamily {
    A(u32),
    B(u32),
    C(u32),
    CPrime,
}

impl IdealFamily {
    pub fn validate(&self) -> Result<()> {
        let ok = match *self {
            IdealFamily::A(k) => k >= 1,
            IdealFamily::B(i) => i >= 1,
            IdealFamily::C(n) => n >= 2,
            IdealFamily::CPrime => true,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidArgument(format!(
                "invalid family parameter in {self}"
            )))
        }
    }

    /// Exponent pairs `(r, s)` of `X1^r X2^s` for the monomial families.
    pub fn monomial_generators(&self) -> Result<Option<Vec<(u32, u32)>>> {
        self.validate()?;
        Ok(match *self {
            IdealFamily::A(k) => Some((0..=k).map(|j| (k - j, j)).collect()),
            IdealFamily::B(i) => Some(vec![(i, 0), (0, i)]),
            IdealFamily::C(n) if n % 2 == 1 => {
                let i = (n - 1) / 2;
                let mut g = vec![(2 * i + 1, 0), (2 * i, 1)];
                g.extend((2..=2 * i).step_by(2).map(|j| (2 * i - j, j + 1)));
                Some(g)
            }
            IdealFamily::C(n) => {
                let i = n / 2;
                let mut g = vec![(2 * i, 0), (2 * i - 1, 1)];
                g.extend((2..=2 * i).step_by(2).map(|j| (2 * i - j, j)));
                Some(g)
            }
            IdealFamily::CPrime => None,
        })
    }

    pub fn staircase(&self) -> Result<Option<Staircase>> {
        self.monomial_generators()?.map(Staircase::new).transpose()
    }

    /// The ideal in `nvars >= 2` variables, generated in `X1, X2`.
    pub fn expand(&self, nvars: usize) -> Result<Ideal> {
        match self.monomial_generators()? {
            Some(pairs) => Ideal::bivariate_monomial(nvars, &pairs),
            None => Ideal::new(parse_generators("<X1^3 + X2^3; X1^2*X2; X1*X2^2>", nvars)?),
        }
    }

    /// Minimal degree of the family member.
    pub fn mdeg(&self) -> u32 {
        match *self {
            IdealFamily::A(k) => k,
            IdealFamily::B(i) => i,
            IdealFamily::C(n) => n,
            IdealFamily::CPrime => 3,
        }
    }
}

impl fmt::Display for IdealFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IdealFamily::A(k) => write!(f, "a[{k}]"),
            IdealFamily::B(i) => write!(f, "b[{i}]"),
            IdealFamily::C(n) => write!(f, "c[{n}]"),
            IdealFamily::CPrime => write!(f, "cprime"),
        }
    }
}

impl FromStr for IdealFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t == "cprime" || t == "c'" {
            return Ok(IdealFamily::CPrime);
        }
        let bad = || Error::Parse(format!("unknown family literal {s:?}"));
        let (tag, rest) = t.split_at_checked(1).ok_or_else(bad)?;
        // `a[3]` or the shorthand `a3`
        let digits = rest
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .unwrap_or(rest);
        let n: u32 = digits.trim().parse().map_err(|_| bad())?;
        let fam = match tag {
            "a" => IdealFamily::A(n),
            "b" => IdealFamily::B(n),
            "c" => IdealFamily::C(n),
            _ => return Err(bad()),
        };
        fam.validate()?;
        Ok(fam)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gens(s: &str) -> Vec<(u32, u32)> {
        s.parse::<IdealFamily>()
            .unwrap()
            .monomial_generators()
            .unwrap()
            .unwrap()
    }

    #[test]
    fn expansions() {
        assert_eq!(gens("c[3]"), vec![(3, 0), (2, 1), (0, 3)]);
        assert_eq!(gens("c[4]"), vec![(4, 0), (3, 1), (2, 2), (0, 4)]);
        assert_eq!(gens("a[2]"), vec![(2, 0), (1, 1), (0, 2)]);
        assert_eq!(gens("b[3]"), vec![(3, 0), (0, 3)]);
        assert_eq!(gens("c[5]"), vec![(5, 0), (4, 1), (2, 3), (0, 5)]);
        assert_eq!(gens("c[6]"), vec![(6, 0), (5, 1), (4, 2), (2, 4), (0, 6)]);
    }

    #[test]
    fn literals() {
        assert_eq!(
            "cprime".parse::<IdealFamily>().unwrap(),
            IdealFamily::CPrime
        );
        assert!("a[0]".parse::<IdealFamily>().is_err());
        assert!("c[1]".parse::<IdealFamily>().is_err());
        assert!("d[2]".parse::<IdealFamily>().is_err());
        assert_eq!(IdealFamily::C(7).to_string(), "c[7]");
    }

    #[test]
    fn cprime_expansion() {
        let i = IdealFamily::CPrime.expand(2).unwrap();
        assert_eq!(i.to_string(), "<X^3 + Y^3; X^2*Y; X*Y^2>");
        assert_eq!(i.mdeg().finite(), Some(3));
    }

    #[test]
    fn families_are_primary() {
        for f in ["a[3]", "b[4]", "c[5]", "c[6]"] {
            let fam: IdealFamily = f.parse().unwrap();
            assert!(fam.staircase().unwrap().unwrap().is_primary(), "{f}");
        }
    }
}
