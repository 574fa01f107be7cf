//! Text form of polynomials.
//!
//! ```text
//! expr     := ['+'|'-'] term (('+'|'-') term)*
//! term     := factor ('*' factor)*
//! factor   := base ('^' posint)?
//! base     := rational | var | name | '(' expr ')'
//! var      := 'x' posint
//! rational := int ('/' posint)?
//! ```
//!
//! Whitespace is insignificant. `name` is any other identifier and is only
//! accepted when the caller supplies a resolver (used for named invariants
//! and torus parameters).

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::{PolyError, Polynomial, Rational};

/// Parses `text` in the context `x1..x{nvars}`.
pub fn parse(text: &str, nvars: usize) -> Result<Polynomial, PolyError> {
    parse_with(text, nvars, &|_| None)
}

/// Parses `text`, resolving identifiers other than `x<k>` through `names`.
pub fn parse_with(
    text: &str,
    nvars: usize,
    names: &dyn Fn(&str) -> Option<Polynomial>,
) -> Result<Polynomial, PolyError> {
    let mut parser = Parser { src: text.as_bytes(), pos: 0, nvars, names };
    let p = parser.expr()?;
    parser.skip_ws();
    if parser.pos < parser.src.len() {
        return Err(parser.err("unexpected trailing input"));
    }
    Ok(p)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    nvars: usize,
    names: &'a dyn Fn(&str) -> Option<Polynomial>,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> PolyError {
        PolyError::Syntax { pos: self.pos, msg: msg.to_string() }
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

    fn expr(&mut self) -> Result<Polynomial, PolyError> {
        let mut negate = false;
        if self.eat(b'-') {
            negate = true;
        } else {
            self.eat(b'+');
        }
        let mut acc = self.term()?;
        if negate {
            acc = -acc;
        }
        loop {
            if self.eat(b'+') {
                let t = self.term()?;
                acc = &acc + &t;
            } else if self.eat(b'-') {
                let t = self.term()?;
                acc = &acc - &t;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial, PolyError> {
        let mut acc = self.factor()?;
        while self.eat(b'*') {
            let f = self.factor()?;
            acc = &acc * &f;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial, PolyError> {
        let base = self.base()?;
        if self.eat(b'^') {
            self.skip_ws();
            let e = self.posint()?;
            let e = u32::try_from(e).map_err(|_| self.err("exponent too large"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn base(&mut self) -> Result<Polynomial, PolyError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.err("expected ')'"));
                }
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.uint()?;
                if self.eat(b'/') {
                    self.skip_ws();
                    let d = self.posint()?;
                    Ok(Polynomial::constant(Rational::new(n, d), self.nvars))
                } else {
                    Ok(Polynomial::constant(Rational::from_integer(n), self.nvars))
                }
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let ident = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                if let Some(poly) = (self.names)(ident) {
                    if poly.nvars() != self.nvars {
                        return Err(PolyError::ContextMismatch { left: self.nvars, right: poly.nvars() });
                    }
                    return Ok(poly);
                }
                let digits = &ident[1..];
                if ident.starts_with('x') && !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit()) {
                    let index: usize = digits
                        .parse()
                        .map_err(|_| PolyError::Syntax { pos: start, msg: "bad variable index".into() })?;
                    if index == 0 || index > self.nvars {
                        return Err(PolyError::VariableOutOfRange { pos: start, index, nvars: self.nvars });
                    }
                    return Ok(Polynomial::var(index - 1, self.nvars));
                }
                Err(PolyError::UnknownName { pos: start, name: ident.to_string() })
            }
            Some(_) => Err(self.err("expected number, variable or '('")),
            None => Err(self.err("unexpected end of input")),
        }
    }

    fn uint(&mut self) -> Result<BigInt, PolyError> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected integer"));
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok(s.parse().unwrap())
    }

    fn posint(&mut self) -> Result<BigInt, PolyError> {
        let start = self.pos;
        let n = self.uint()?;
        if n.is_zero() {
            return Err(PolyError::Syntax { pos: start, msg: "expected positive integer".into() });
        }
        Ok(n)
    }
}

fn write_rational(f: &mut fmt::Formatter<'_>, c: &Rational) -> fmt::Result {
    if c.is_integer() {
        write!(f, "{}", c.numer())
    } else {
        write!(f, "{}/{}", c.numer(), c.denom())
    }
}

/// Prints terms in descending graded-lex order, e.g. `x3^2 - 2*x2*x4`.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms().rev().enumerate() {
            let neg = c.is_negative();
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let a = c.abs();
            if m.is_one() {
                write_rational(f, &a)?;
            } else if a.is_one() {
                write!(f, "{m}")?;
            } else {
                write_rational(f, &a)?;
                write!(f, "*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial[{}]({})", self.nvars(), self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_examples() {
        let p = parse("x3^2 - 2*x2*x4", 4).unwrap();
        assert_eq!(p.num_terms(), 2);
        assert_eq!(p.to_string(), "-2*x2*x4 + x3^2");
        let z = parse("0", 3).unwrap();
        assert!(z.is_zero());
        assert_eq!(z.to_string(), "0");
        let d = parse("(x1+x2)*(x1-x2)", 2).unwrap();
        assert_eq!(d.to_string(), "x1^2 - x2^2");
    }

    #[test]
    fn rationals_and_signs() {
        let p = parse("-x7/1 + 1/2*x3 - 3", 7);
        assert!(p.is_err(), "x7/1 is not in the grammar");
        let p = parse("-1/2*x7 + 3/4 - x1^2", 7).unwrap();
        assert_eq!(p.to_string(), "-x1^2 - 1/2*x7 + 3/4");
        assert_eq!(parse(&p.to_string(), 7).unwrap(), p);
    }

    #[test]
    fn errors_carry_positions() {
        match parse("x1 + x5", 4) {
            Err(PolyError::VariableOutOfRange { pos, index, nvars }) => {
                assert_eq!((pos, index, nvars), (5, 5, 4));
            }
            other => panic!("unexpected {other:?}"),
        }
        match parse("x1 + * x2", 4) {
            Err(PolyError::Syntax { pos, .. }) => assert_eq!(pos, 5),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(parse("x0", 2), Err(PolyError::VariableOutOfRange { .. })));
        assert!(matches!(parse("y", 2), Err(PolyError::UnknownName { .. })));
        assert!(parse("(x1", 2).is_err());
        assert!(parse("x1^0", 2).is_err());
        assert!(parse("", 2).is_err());
    }

    #[test]
    fn named_identifiers() {
        let f1 = parse("2*x3*x5 - x4^2", 5).unwrap();
        let lookup = |s: &str| (s == "f1").then(|| f1.clone());
        let r = parse_with("f1^2 - x5*f1", 5, &lookup).unwrap();
        assert_eq!(r, &f1.pow(2) - &(&parse("x5", 5).unwrap() * &f1));
    }
}
