//! ASCII expressions for scalars and polynomials: `+ - * ^`, parentheses,
//! integer literals, declared variable names and the field generator `a`.

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::poly::{Poly, Ring, RingCtx};

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Num(i64),
    Ident(String),
    Op(char),
}

fn tokenize(s: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let chars: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let text: String = chars[start..i].iter().collect();
            out.push(Token::Num(text.parse().map_err(|_| Error::Parse(format!("bad number `{text}`")))?));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push(Token::Ident(chars[start..i].iter().collect()));
        } else if "+-*^()".contains(c) {
            out.push(Token::Op(c));
            i += 1;
        } else {
            return Err(Error::Parse(format!("unexpected character `{c}` in `{s}`")));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    ring: &'a Ring,
    tokens: Vec<Token>,
    pos: usize,
    src: &'a str,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn err(&self, msg: &str) -> Error {
        Error::Parse(format!("{msg} in `{}`", self.src))
    }

    fn expr(&mut self) -> Result<Poly> {
        let mut acc = self.term()?;
        while let Some(Token::Op(op @ ('+' | '-'))) = self.peek().cloned() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = if op == '+' { &acc + &rhs } else { &acc - &rhs };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Poly> {
        let mut acc = self.unary()?;
        while let Some(Token::Op('*')) = self.peek() {
            self.pos += 1;
            let rhs = self.unary()?;
            acc = &acc * &rhs;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Poly> {
        match self.peek() {
            Some(Token::Op('-')) => {
                self.pos += 1;
                Ok(-&self.unary()?)
            }
            Some(Token::Op('+')) => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Poly> {
        let base = self.atom()?;
        if let Some(Token::Op('^')) = self.peek() {
            self.pos += 1;
            match self.peek().cloned() {
                Some(Token::Num(e)) if e <= u32::MAX as i64 => {
                    self.pos += 1;
                    Ok(base.pow(e as u32))
                }
                _ => Err(self.err("expected a nonnegative integer exponent")),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Poly> {
        let field = self.ring.field().clone();
        match self.peek().cloned() {
            Some(Token::Num(n)) => {
                self.pos += 1;
                Ok(Poly::constant(self.ring, field.from_int(n)))
            }
            Some(Token::Ident(name)) => {
                self.pos += 1;
                if let Some(i) = self.ring.var_index(&name) {
                    Ok(Poly::var(self.ring, i))
                } else if name == "a" {
                    field
                        .generator()
                        .map(|g| Poly::constant(self.ring, g))
                        .ok_or_else(|| self.err("`a` used over a prime field"))
                } else {
                    Err(self.err(&format!("unknown variable `{name}`")))
                }
            }
            Some(Token::Op('(')) => {
                self.pos += 1;
                let inner = self.expr()?;
                match self.peek() {
                    Some(Token::Op(')')) => {
                        self.pos += 1;
                        Ok(inner)
                    }
                    _ => Err(self.err("missing `)`")),
                }
            }
            _ => Err(self.err("unexpected end of expression")),
        }
    }
}

pub fn parse_poly(ring: &Ring, s: &str) -> Result<Poly> {
    let tokens = tokenize(s)?;
    if tokens.is_empty() {
        return Err(Error::Parse("empty expression".into()));
    }
    let mut p = Parser { ring, tokens, pos: 0, src: s };
    let out = p.expr()?;
    if p.pos != p.tokens.len() {
        return Err(p.err("trailing input"));
    }
    Ok(out)
}

pub fn parse_scalar(field: &Field, s: &str) -> Result<Scalar> {
    let ring = RingCtx::new(field, &[])?;
    let p = parse_poly(&ring, s)?;
    Ok(p.constant_term())
}
