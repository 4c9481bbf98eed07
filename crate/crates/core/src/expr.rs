//! Parser for rational expressions in `x` and `y`.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor (('*' | '/') factor)*
//! factor := base ('^' ['-'] integer)?
//! base   := integer | 'x' | 'y' | '(' expr ')' | '-' factor
//! ```

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::exactnum::Rational;
use crate::laurent::{LaurentPolynomial, Monomial, RationalFunction};

/// Exponents above this are rejected; powers of sums grow fast.
pub const MAX_EXPONENT: i64 = 4096;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Integer(BigInt),
    X,
    Y,
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i64),
    Group(Box<Expr>),
}

impl Expr {
    pub fn lower(&self) -> Result<RationalFunction> {
        Ok(match self {
            Expr::Integer(n) => {
                RationalFunction::from_polynomial(LaurentPolynomial::constant(Rational::from_integer(n.clone())))
            }
            Expr::X => RationalFunction::from_monomial(Monomial::X),
            Expr::Y => RationalFunction::from_monomial(Monomial::Y),
            Expr::Neg(e) => e.lower()?.neg(),
            Expr::Add(l, r) => l.lower()?.add(&r.lower()?),
            Expr::Sub(l, r) => l.lower()?.sub(&r.lower()?),
            Expr::Mul(l, r) => l.lower()?.mul(&r.lower()?),
            Expr::Div(l, r) => l.lower()?.div(&r.lower()?)?,
            Expr::Pow(b, k) => b.lower()?.pow(*k)?,
            Expr::Group(e) => e.lower()?,
        })
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn error<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        })
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

    fn digits(&mut self) -> Result<&'a str> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.error("expected integer");
        }
        Ok(std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits"))
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        loop {
            if self.eat(b'+') {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat(b'-') {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.factor()?;
        loop {
            if self.eat(b'*') {
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.factor()?));
            } else if self.eat(b'/') {
                lhs = Expr::Div(Box::new(lhs), Box::new(self.factor()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn factor(&mut self) -> Result<Expr> {
        let base = self.base()?;
        if !self.eat(b'^') {
            return Ok(base);
        }
        let negative = self.eat(b'-');
        let at = self.pos;
        let k: i64 = match self.digits()?.parse::<i64>() {
            Ok(k) if k <= MAX_EXPONENT => k,
            _ => {
                return Err(Error::Parse {
                    pos: at,
                    msg: format!("exponent exceeds {MAX_EXPONENT}"),
                })
            }
        };
        Ok(Expr::Pow(Box::new(base), if negative { -k } else { k }))
    }

    fn base(&mut self) -> Result<Expr> {
        match self.peek() {
            Some(b'x') => {
                self.pos += 1;
                Ok(Expr::X)
            }
            Some(b'y') => {
                self.pos += 1;
                Ok(Expr::Y)
            }
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(b')') {
                    return self.error("expected ')'");
                }
                Ok(Expr::Group(Box::new(inner)))
            }
            Some(b'-') => {
                self.pos += 1;
                Ok(Expr::Neg(Box::new(self.factor()?)))
            }
            Some(c) if c.is_ascii_digit() => {
                let d = self.digits()?;
                Ok(Expr::Integer(d.parse().expect("ascii digits")))
            }
            Some(c) => self.error(format!("unexpected '{}'", c as char)),
            None => self.error("unexpected end of input"),
        }
    }
}

pub fn parse_expression(text: &str) -> Result<Expr> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
    };
    let e = p.expr()?;
    if p.peek().is_some() {
        return p.error("trailing input");
    }
    Ok(e)
}

/// Parses and lowers in one step.
pub fn parse_rational_function(text: &str) -> Result<RationalFunction> {
    parse_expression(text)?.lower()
}
