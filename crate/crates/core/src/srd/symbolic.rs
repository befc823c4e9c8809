//! Linear expressions in the design parameters.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// The eighteen integer parameters of a strongly regular design.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Param {
    N1v,
    K1,
    Lambda1,
    Mu1,
    N2v,
    K2,
    Lambda2,
    Mu2,
    S1,
    S2,
    N1,
    P1,
    N2,
    P2,
    A1,
    B1,
    A2,
    B2,
}

impl Param {
    pub const ALL: [Param; 18] = [
        Param::N1v,
        Param::K1,
        Param::Lambda1,
        Param::Mu1,
        Param::N2v,
        Param::K2,
        Param::Lambda2,
        Param::Mu2,
        Param::S1,
        Param::S2,
        Param::N1,
        Param::P1,
        Param::N2,
        Param::P2,
        Param::A1,
        Param::B1,
        Param::A2,
        Param::B2,
    ];

    /// Key used in parameter files and expressions.
    pub fn name(self) -> &'static str {
        match self {
            Param::N1v => "n1",
            Param::K1 => "k1",
            Param::Lambda1 => "lambda1",
            Param::Mu1 => "mu1",
            Param::N2v => "n2",
            Param::K2 => "k2",
            Param::Lambda2 => "lambda2",
            Param::Mu2 => "mu2",
            Param::S1 => "S1",
            Param::S2 => "S2",
            Param::N1 => "N1",
            Param::P1 => "P1",
            Param::N2 => "N2",
            Param::P2 => "P2",
            Param::A1 => "a1",
            Param::B1 => "b1",
            Param::A2 => "a2",
            Param::B2 => "b2",
        }
    }

    pub fn from_name(s: &str) -> Option<Param> {
        Param::ALL.into_iter().find(|p| p.name() == s)
    }
}

impl fmt::Display for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// `konst + Σ coeff·param`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LinExpr {
    konst: i64,
    terms: BTreeMap<Param, i64>,
}

impl LinExpr {
    pub fn constant(c: i64) -> Self {
        Self {
            konst: c,
            terms: BTreeMap::new(),
        }
    }

    pub fn param(p: Param) -> Self {
        Self {
            konst: 0,
            terms: BTreeMap::from([(p, 1)]),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.konst == 0 && self.terms.is_empty()
    }

    pub fn constant_term(&self) -> i64 {
        self.konst
    }

    pub fn terms(&self) -> impl Iterator<Item = (Param, i64)> + '_ {
        self.terms.iter().map(|(&p, &c)| (p, c))
    }

    fn add_term(&mut self, p: Param, c: i64) {
        let e = self.terms.entry(p).or_insert(0);
        *e += c;
        if *e == 0 {
            self.terms.remove(&p);
        }
    }

    /// Parses expressions such as `n1-2k1+mu1-2`.
    pub fn parse(s: &str) -> Result<Self> {
        let bad = || Error::Input(format!("malformed expression '{s}'"));
        let mut out = LinExpr::default();
        let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        if chars.is_empty() {
            return Err(bad());
        }
        let mut i = 0;
        while i < chars.len() {
            let mut sign = 1;
            if chars[i] == '+' || chars[i] == '-' {
                if chars[i] == '-' {
                    sign = -1;
                }
                i += 1;
            } else if i != 0 {
                return Err(bad());
            }
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let coeff: Option<i64> =
                (i > start).then(|| chars[start..i].iter().collect::<String>().parse().unwrap());
            let nstart = i;
            while i < chars.len() && chars[i].is_ascii_alphanumeric() {
                i += 1;
            }
            let name: String = chars[nstart..i].iter().collect();
            match (coeff, name.is_empty()) {
                (None, true) => return Err(bad()),
                (Some(c), true) => out.konst += sign * c,
                (c, false) => {
                    let p = Param::from_name(&name).ok_or_else(bad)?;
                    out.add_term(p, sign * c.unwrap_or(1));
                }
            }
        }
        Ok(out)
    }

    /// Evaluates with parameter values supplied by `value`.
    pub fn eval(&self, value: impl Fn(Param) -> i64) -> i64 {
        self.terms
            .iter()
            .fold(self.konst, |acc, (&p, &c)| acc + c * value(p))
    }
}

impl fmt::Display for LinExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        let mut write_term = |f: &mut fmt::Formatter<'_>, c: i64, name: &str| -> fmt::Result {
            if c < 0 {
                f.write_str("-")?;
            } else if !first {
                f.write_str("+")?;
            }
            first = false;
            let m = c.unsigned_abs();
            if name.is_empty() {
                write!(f, "{m}")
            } else if m == 1 {
                f.write_str(name)
            } else {
                write!(f, "{m}{name}")
            }
        };
        for (p, c) in &self.terms {
            write_term(f, *c, p.name())?;
        }
        if self.konst != 0 || self.terms.is_empty() {
            write_term(f, self.konst, "")?;
        }
        Ok(())
    }
}

impl Add for LinExpr {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        self.konst += rhs.konst;
        for (p, c) in rhs.terms {
            self.add_term(p, c);
        }
        self
    }
}

impl Neg for LinExpr {
    type Output = Self;
    fn neg(self) -> Self {
        self * -1
    }
}

impl Sub for LinExpr {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Mul<i64> for LinExpr {
    type Output = Self;
    fn mul(self, k: i64) -> Self {
        if k == 0 {
            return Self::default();
        }
        Self {
            konst: self.konst * k,
            terms: self.terms.into_iter().map(|(p, c)| (p, c * k)).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        let e = LinExpr::parse("n1-2k1+mu1-2").unwrap();
        assert_eq!(e.to_string(), "n1-2k1+mu1-2");
        assert_eq!(LinExpr::parse("S2 - a2").unwrap().to_string(), "S2-a2");
        assert_eq!(LinExpr::parse("-1").unwrap(), LinExpr::constant(-1));
        assert_eq!(LinExpr::parse("k1-k1").unwrap().to_string(), "0");
        for bad in ["", "n1+", "x1", "n1 k1", "+-2"] {
            assert!(LinExpr::parse(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn arithmetic() {
        let a = LinExpr::parse("n2+a2").unwrap();
        let b = LinExpr::parse("n2-2S2+a2").unwrap();
        assert_eq!((a - b).to_string(), "2S2");
        let v = LinExpr::parse("n1-S1-k1+P1-1").unwrap().eval(|p| match p {
            Param::N1v => 15,
            Param::S1 => 3,
            Param::K1 => 6,
            Param::P1 => 1,
            _ => 0,
        });
        assert_eq!(v, 6);
    }
}
