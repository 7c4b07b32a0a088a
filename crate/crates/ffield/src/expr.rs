//! Expression grammar for rational functions and place sets.
//!
//! ```text
//! expr   :=  term (('+' | '-') term)*
//! term   :=  unary (('*' | '/') unary)*
//! unary  :=  '-' unary | power
//! power  :=  atom ('^' integer)*
//! atom   :=  integer | 't' | '(' expr ')'
//! ```
//!
//! Rational literals `a/b` come out of the division operator; `^` takes a
//! nonnegative integer literal. Whitespace is insignificant. Errors carry the
//! byte offset into the original input.

use alloc::format;
use alloc::string::{String, ToString};

use crate::error::{Error, Result};
use crate::places::PlaceSet;
use crate::poly::Polynomial;
use crate::ratfun::RationalFunction;
use crate::{Int, Rat};

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(s: &'a str) -> Self {
        Parser {
            bytes: s.as_bytes(),
            pos: 0,
        }
    }

    fn err(&self, message: impl Into<String>) -> Error {
        Error::Parse {
            offset: self.pos,
            message: message.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<RationalFunction> {
        let mut acc = self.term()?;
        while let Some(c) = self.peek() {
            match c {
                b'+' => {
                    self.pos += 1;
                    let rhs = self.term()?;
                    acc = &acc + &rhs;
                }
                b'-' => {
                    self.pos += 1;
                    let rhs = self.term()?;
                    acc = &acc - &rhs;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<RationalFunction> {
        let mut acc = self.unary()?;
        while let Some(c) = self.peek() {
            match c {
                b'*' => {
                    self.pos += 1;
                    let rhs = self.unary()?;
                    acc = &acc * &rhs;
                }
                b'/' => {
                    let at = self.pos;
                    self.pos += 1;
                    let rhs = self.unary()?;
                    if rhs.is_zero() {
                        return Err(Error::Parse {
                            offset: at,
                            message: "division by zero".to_string(),
                        });
                    }
                    acc = &acc / &rhs;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<RationalFunction> {
        if self.peek() == Some(b'-') {
            self.pos += 1;
            let inner = self.unary()?;
            return Ok(-&inner);
        }
        self.power()
    }

    fn power(&mut self) -> Result<RationalFunction> {
        let base = self.atom()?;
        let mut acc = base;
        while self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let e = self.integer_literal()?;
            let e: u32 = e
                .try_into()
                .map_err(|_| self.err("exponent out of range"))?;
            acc = acc.pow_u(e);
        }
        Ok(acc)
    }

    fn atom(&mut self) -> Result<RationalFunction> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(b't') => {
                self.pos += 1;
                Ok(RationalFunction::variable())
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer_literal()?;
                Ok(RationalFunction::constant(Rat::from_integer(Int::from(n))))
            }
            Some(c) => Err(self.err(format!("unexpected character '{}'", c as char))),
            None => Err(self.err("unexpected end of input")),
        }
    }

    fn integer_literal(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected an integer literal"));
        }
        core::str::from_utf8(&self.bytes[start..self.pos])
            .ok()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| Error::Parse {
                offset: start,
                message: "integer literal out of range".to_string(),
            })
    }

    fn finish(mut self, value: RationalFunction) -> Result<RationalFunction> {
        if self.peek().is_some() {
            return Err(self.err("trailing input"));
        }
        Ok(value)
    }
}

/// Parses a rational function in the variable `t`.
pub fn parse_ratfun(input: &str) -> Result<RationalFunction> {
    let mut p = Parser::new(input);
    let v = p.expr()?;
    p.finish(v)
}

/// Parses an expression that must reduce to a polynomial.
pub fn parse_polynomial(input: &str) -> Result<Polynomial> {
    let f = parse_ratfun(input)?;
    if !f.den().is_one() {
        return Err(Error::Parse {
            offset: 0,
            message: "expression is not a polynomial".to_string(),
        });
    }
    Ok(f.num().clone())
}

/// Parses the textual form of a place set: comma-separated squarefree monic
/// polynomial expressions plus the optional token `inf`, e.g. `t, t+1, inf`.
pub fn parse_place_set(input: &str) -> Result<PlaceSet> {
    let mut finite = Polynomial::one();
    let mut infinity = false;
    let mut offset = 0usize;
    for part in input.split(',') {
        let trimmed = part.trim();
        if trimmed == "inf" {
            infinity = true;
        } else if trimmed.is_empty() {
            return Err(Error::Parse {
                offset,
                message: "empty place entry".to_string(),
            });
        } else {
            let p = parse_polynomial(trimmed).map_err(|e| match e {
                Error::Parse {
                    offset: inner,
                    message,
                } => Error::Parse {
                    offset: offset + inner + leading_ws(part),
                    message,
                },
                other => other,
            })?;
            if p.is_constant() {
                return Err(Error::Parse {
                    offset,
                    message: "constant polynomial is not a place".to_string(),
                });
            }
            finite = &finite * &p;
        }
        offset += part.len() + 1;
    }
    PlaceSet::new(finite, infinity)
}

fn leading_ws(s: &str) -> usize {
    s.len() - s.trim_start().len()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bivariate_forms() {
        let p = parse_bivariate("X^2 + 3*X*Y - 1/2").unwrap();
        assert_eq!(p.deg_x(), Some(2));
        assert_eq!(p.deg_y(), Some(1));
        assert!(parse_bivariate("X / Y").is_err());
        let q = parse_bivariate("(X - 1)*(Y - 1)").unwrap();
        assert_eq!(q.total_degree(), Some(2));
    }

    #[test]
    fn parses_basic_forms() {
        assert_eq!(parse_ratfun("t^2 - 1").unwrap().height(), 2);
        assert_eq!(
            parse_ratfun("3/4").unwrap().constant_value().unwrap(),
            Rat::new(Int::from(3), Int::from(4))
        );
        assert_eq!(
            parse_ratfun("-t*(t+1)").unwrap(),
            parse_ratfun("-t^2-t").unwrap()
        );
        assert_eq!(parse_ratfun("(1-t)/(1+t)").unwrap().height(), 1);
    }

    #[test]
    fn byte_offsets_reported() {
        match parse_ratfun("t + %") {
            Err(Error::Parse { offset, .. }) => assert_eq!(offset, 4),
            other => panic!("expected parse error, got {other:?}"),
        }
        match parse_ratfun("t^x") {
            Err(Error::Parse { offset, .. }) => assert_eq!(offset, 2),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn place_set_form() {
        let s = parse_place_set("t, t+1, inf").unwrap();
        assert_eq!(s.cardinality(), 3);
        assert!(s.includes_infinity());
        assert!(parse_place_set("t, t, inf").is_err()); // not squarefree
    }

    #[test]
    fn exponent_must_be_literal() {
        assert!(parse_ratfun("t^2").is_ok());
        assert!(parse_ratfun("t^(2)").is_err());
    }
}

// --- bivariate expressions ------------------------------------------------

struct BivarParser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> BivarParser<'a> {
    fn err(&self, message: impl Into<String>) -> Error {
        Error::Parse {
            offset: self.pos,
            message: message.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<crate::bipoly::BivariatePolynomial> {
        let mut acc = self.term()?;
        while let Some(c) = self.peek() {
            match c {
                b'+' => {
                    self.pos += 1;
                    let rhs = self.term()?;
                    acc = &acc + &rhs;
                }
                b'-' => {
                    self.pos += 1;
                    let rhs = self.term()?;
                    acc = &acc - &rhs;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<crate::bipoly::BivariatePolynomial> {
        let mut acc = self.unary()?;
        while let Some(c) = self.peek() {
            match c {
                b'*' => {
                    self.pos += 1;
                    let rhs = self.unary()?;
                    acc = &acc * &rhs;
                }
                b'/' => {
                    let at = self.pos;
                    self.pos += 1;
                    let rhs = self.unary()?;
                    let inv = rhs
                        .terms()
                        .next()
                        .filter(|_| rhs.is_constant() && !rhs.is_zero())
                        .map(|(_, c)| c.clone())
                        .ok_or(Error::Parse {
                            offset: at,
                            message: "division only by nonzero constants".into(),
                        })?;
                    acc = acc.scale(&inv.inv()?);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<crate::bipoly::BivariatePolynomial> {
        if self.peek() == Some(b'-') {
            self.pos += 1;
            let inner = self.unary()?;
            return Ok(-&inner);
        }
        self.power()
    }

    fn power(&mut self) -> Result<crate::bipoly::BivariatePolynomial> {
        let mut acc = self.atom()?;
        while self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let start = self.pos;
            while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
                self.pos += 1;
            }
            if start == self.pos {
                return Err(self.err("expected an integer exponent"));
            }
            let e: u32 = core::str::from_utf8(&self.bytes[start..self.pos])
                .ok()
                .and_then(|s| s.parse().ok())
                .ok_or_else(|| Error::Parse {
                    offset: start,
                    message: "exponent out of range".into(),
                })?;
            acc = acc.pow(e);
        }
        Ok(acc)
    }

    fn atom(&mut self) -> Result<crate::bipoly::BivariatePolynomial> {
        use crate::bipoly::BivariatePolynomial;
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(b'X') | Some(b'x') => {
                self.pos += 1;
                Ok(BivariatePolynomial::var_x())
            }
            Some(b'Y') | Some(b'y') => {
                self.pos += 1;
                Ok(BivariatePolynomial::var_y())
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let n: u64 = core::str::from_utf8(&self.bytes[start..self.pos])
                    .ok()
                    .and_then(|s| s.parse().ok())
                    .ok_or_else(|| Error::Parse {
                        offset: start,
                        message: "integer literal out of range".into(),
                    })?;
                Ok(BivariatePolynomial::constant_rat(Rat::from_integer(
                    Int::from(n),
                )))
            }
            Some(c) => Err(self.err(format!("unexpected character '{}'", c as char))),
            None => Err(self.err("unexpected end of input")),
        }
    }
}

/// Parses a polynomial in X and Y with rational constants, e.g.
/// `X^2 + 3*X*Y - 1/2`. Division is allowed only by nonzero constants.
pub fn parse_bivariate(input: &str) -> Result<crate::bipoly::BivariatePolynomial> {
    let mut p = BivarParser {
        bytes: input.as_bytes(),
        pos: 0,
    };
    let v = p.expr()?;
    if p.peek().is_some() {
        return Err(p.err("trailing input"));
    }
    Ok(v)
}
