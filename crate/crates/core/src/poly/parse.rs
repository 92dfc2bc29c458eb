//! Text input for polynomials: sums, products, powers and parentheses over
//! rational constants and variables x1, x2, ...; juxtaposition multiplies.
//!
//! `2x4x3 - x4*x2 + 3/2*(x1 - x2)^2` is accepted.

use crate::error::{Error, Result};
use crate::linalg::Rational;

use super::Polynomial;

enum Ast {
    Const(Rational),
    Var(usize),
    Neg(Box<Ast>),
    Add(Box<Ast>, Box<Ast>),
    Sub(Box<Ast>, Box<Ast>),
    Mul(Box<Ast>, Box<Ast>),
    Pow(Box<Ast>, u32),
}

impl Ast {
    fn max_var(&self) -> usize {
        match self {
            Ast::Const(_) => 0,
            Ast::Var(i) => *i,
            Ast::Neg(a) | Ast::Pow(a, _) => a.max_var(),
            Ast::Add(a, b) | Ast::Sub(a, b) | Ast::Mul(a, b) => a.max_var().max(b.max_var()),
        }
    }

    fn eval(&self, n: usize) -> Polynomial {
        match self {
            Ast::Const(c) => Polynomial::constant(n, c.clone()),
            Ast::Var(i) => Polynomial::var(n, i - 1),
            Ast::Neg(a) => a.eval(n).scale(&Rational::from_int(-1)),
            Ast::Add(a, b) => &a.eval(n) + &b.eval(n),
            Ast::Sub(a, b) => &a.eval(n) - &b.eval(n),
            Ast::Mul(a, b) => &a.eval(n) * &b.eval(n),
            Ast::Pow(a, k) => a.eval(n).pow(*k),
        }
    }
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> Error {
        Error::Parse(format!("{msg} at offset {}", self.pos))
    }

    fn peek(&mut self) -> Option<u8> {
        while self.s.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
        self.s.get(self.pos).copied()
    }

    fn digits(&mut self) -> Result<&str> {
        self.peek();
        let start = self.pos;
        while self.s.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected digits"));
        }
        Ok(std::str::from_utf8(&self.s[start..self.pos]).expect("ascii digits"))
    }

    fn expr(&mut self) -> Result<Ast> {
        let mut acc = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ast::Neg(Box::new(self.term()?))
            }
            Some(b'+') => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = Ast::Add(Box::new(acc), Box::new(self.term()?));
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = Ast::Sub(Box::new(acc), Box::new(self.term()?));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Ast> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = Ast::Mul(Box::new(acc), Box::new(self.factor()?));
                }
                Some(b'x' | b'(') | Some(b'0'..=b'9') => {
                    acc = Ast::Mul(Box::new(acc), Box::new(self.factor()?));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Ast> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let k = self.digits()?.parse::<u32>().map_err(|_| self.err("exponent too large"))?;
            return Ok(Ast::Pow(Box::new(base), k));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Ast> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(b'x') => {
                self.pos += 1;
                if self.peek() == Some(b'_') {
                    self.pos += 1;
                }
                let i = self.digits()?.parse::<usize>().map_err(|_| self.err("variable index too large"))?;
                if i == 0 {
                    return Err(self.err("variables are numbered from x1"));
                }
                Ok(Ast::Var(i))
            }
            Some(b'0'..=b'9') => {
                let num = self.digits()?.to_string();
                let text = if self.peek() == Some(b'/') {
                    self.pos += 1;
                    format!("{num}/{}", self.digits()?)
                } else {
                    num
                };
                text.parse::<Rational>().map(Ast::Const).map_err(|e| self.err(&e.to_string()))
            }
            _ => Err(self.err("expected a number, variable or '('")),
        }
    }
}

impl Polynomial {
    /// Parses a polynomial expression. The variable count is `nvars` when
    /// given (an error if the text uses a larger index) and otherwise the
    /// largest index that occurs.
    pub fn parse(s: &str, nvars: Option<usize>) -> Result<Polynomial> {
        let mut p = Parser { s: s.as_bytes(), pos: 0 };
        let ast = p.expr()?;
        if p.peek().is_some() {
            return Err(p.err("unexpected trailing input"));
        }
        let used = ast.max_var();
        let n = match nvars {
            Some(n) if n < used => {
                return Err(Error::IndexOutOfRange { index: used, min: 1, max: n });
            }
            Some(n) => n,
            None => used,
        };
        Ok(ast.eval(n))
    }
}
