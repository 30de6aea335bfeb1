//! Parser for polynomial expressions.
//!
//! Grammar (whitespace insignificant):
//!
//! ```text
//! expr   := [sign] term (sign term)*
//! term   := factor ('*'? factor)*
//! factor := integer ['/' integer] | ident ['^' integer] | '(' expr ')' ['^' integer]
//! ```
//!
//! An identifier that is not a declared variable but is a run of declared
//! single-letter variables is read as their product, so `xy^2` means `x*y^2`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::poly::Poly;
use super::rational::Rational;
use crate::error::{Error, Result};

pub fn parse_poly(input: &str, variables: &[String]) -> Result<Poly> {
    let chars: Vec<(usize, char)> = input
        .chars()
        .enumerate()
        .filter(|(_, c)| !c.is_whitespace())
        .collect();
    let mut p = Parser { chars, pos: 0, variables, input_len: input.chars().count() };
    if p.chars.is_empty() {
        return Err(p.error("empty expression"));
    }
    let out = p.expr()?;
    if p.pos < p.chars.len() {
        return Err(p.error(&format!("unexpected `{}`", p.chars[p.pos].1)));
    }
    Ok(out)
}

struct Parser<'a> {
    chars: Vec<(usize, char)>,
    pos: usize,
    variables: &'a [String],
    input_len: usize,
}

impl Parser<'_> {
    fn nvars(&self) -> usize {
        self.variables.len()
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn column(&self) -> usize {
        self.chars.get(self.pos).map_or(self.input_len, |&(i, _)| i) + 1
    }

    fn error(&self, message: &str) -> Error {
        Error::Parse { column: self.column(), message: message.to_string() }
    }

    fn expr(&mut self) -> Result<Poly> {
        let mut acc = Poly::zero(self.nvars());
        let mut first = true;
        loop {
            let negative = match self.peek() {
                Some('+') => {
                    self.pos += 1;
                    false
                }
                Some('-') => {
                    self.pos += 1;
                    true
                }
                _ if first => false,
                _ => break,
            };
            first = false;
            let t = self.term()?;
            acc = if negative { &acc - &t } else { &acc + &t };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Poly> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some('*') => {
                    self.pos += 1;
                    let f = self.factor()?;
                    acc = &acc * &f;
                }
                Some(c) if c.is_ascii_alphanumeric() || c == '_' || c == '(' => {
                    let f = self.factor()?;
                    acc = &acc * &f;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Poly> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                let mut q = Rational::from_integer(n);
                if self.peek() == Some('/') {
                    self.pos += 1;
                    let d = self.integer()?;
                    if d.is_zero() {
                        return Err(self.error("division by zero"));
                    }
                    q /= Rational::from_integer(d);
                }
                Ok(Poly::constant(self.nvars(), q))
            }
            Some(c) if c.is_ascii_alphabetic() || c == '_' => {
                let start = self.pos;
                let mut name = String::new();
                while let Some(c) = self.peek() {
                    if c.is_ascii_alphanumeric() || c == '_' {
                        name.push(c);
                        self.pos += 1;
                    } else {
                        break;
                    }
                }
                let mut factors = match self.variables.iter().position(|v| *v == name) {
                    Some(i) => vec![i],
                    None => {
                        let split: Option<Vec<usize>> = name
                            .chars()
                            .map(|c| self.variables.iter().position(|v| v.len() == 1 && v.starts_with(c)))
                            .collect();
                        match split {
                            Some(ix) => ix,
                            None => {
                                self.pos = start;
                                return Err(Error::UnknownVariable(name));
                            }
                        }
                    }
                };
                let last = factors.pop().expect("identifier is non-empty");
                let mut out = Poly::constant(self.nvars(), Rational::one());
                for i in factors {
                    out = &out * &Poly::variable(self.nvars(), i);
                }
                let e = self.exponent()?;
                Ok(&out * &Poly::variable(self.nvars(), last).pow(e))
            }
            Some('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(self.error("expected `)`"));
                }
                self.pos += 1;
                let e = self.exponent()?;
                Ok(inner.pow(e))
            }
            Some(c) => Err(self.error(&format!("unexpected `{c}`"))),
            None => Err(self.error("unexpected end of expression")),
        }
    }

    fn exponent(&mut self) -> Result<u32> {
        if self.peek() != Some('^') {
            return Ok(1);
        }
        self.pos += 1;
        let n = self.integer()?;
        u32::try_from(n).map_err(|_| self.error("exponent too large"))
    }

    fn integer(&mut self) -> Result<BigInt> {
        let mut digits = String::new();
        while let Some(c) = self.peek() {
            if c.is_ascii_digit() {
                digits.push(c);
                self.pos += 1;
            } else {
                break;
            }
        }
        if digits.is_empty() {
            return Err(self.error("expected an integer"));
        }
        Ok(digits.parse().expect("ascii digits"))
    }
}
