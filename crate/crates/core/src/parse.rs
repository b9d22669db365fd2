//! Curve equations as text.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary ('*' unary)*
//! unary  := ('+' | '-') unary | power
//! power  := atom ('^' INT)?
//! atom   := INT ('/' INT)? | 'x' | 'y' | '(' expr ')'
//! ```
//!
//! Multiplication must be written out. The printed form of a
//! [`MultiPoly`] parses back to the same polynomial.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::exact::{Rational, Ring};
use crate::poly::MultiPoly;

const VARS: [&str; 2] = ["x", "y"];

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Var(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    line: usize,
    column: usize,
}

fn err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, column, message: message.into() }
}

fn tokenize(text: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let (mut line, mut column) = (1, 1);
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let (l, col) = (line, column);
        if c == '\n' {
            line += 1;
            column = 1;
            i += 1;
            continue;
        }
        if c.is_whitespace() {
            column += 1;
            i += 1;
            continue;
        }
        let tok = if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            column += i - start;
            out.push(Token { tok: Tok::Int(s.parse().expect("digits")), line: l, column: col });
            continue;
        } else if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            column += i - start;
            if !VARS.contains(&s.as_str()) {
                return Err(err(l, col, format!("unknown variable `{s}`")));
            }
            out.push(Token { tok: Tok::Var(s), line: l, column: col });
            continue;
        } else {
            match c {
                '+' => Tok::Plus,
                '-' | '\u{2212}' => Tok::Minus,
                '*' => Tok::Star,
                '/' => Tok::Slash,
                '^' => Tok::Caret,
                '(' => Tok::LParen,
                ')' => Tok::RParen,
                _ => return Err(err(l, col, format!("unexpected character `{c}`"))),
            }
        };
        out.push(Token { tok, line: l, column: col });
        i += 1;
        column += 1;
    }
    out.push(Token { tok: Tok::End, line, column });
    Ok(out)
}

struct Parser {
    toks: Vec<Token>,
    pos: usize,
}

type Poly = MultiPoly<Rational>;

impl Parser {
    fn peek(&self) -> &Token {
        &self.toks[self.pos]
    }

    fn next(&mut self) -> Token {
        let t = self.toks[self.pos].clone();
        if t.tok != Tok::End {
            self.pos += 1;
        }
        t
    }

    fn fail<T>(&self, message: impl Into<String>) -> Result<T> {
        let t = self.peek();
        Err(err(t.line, t.column, message))
    }

    fn expr(&mut self) -> Result<Poly> {
        let mut acc = self.term()?;
        loop {
            match self.peek().tok {
                Tok::Plus => {
                    self.next();
                    acc = acc.add(&self.term()?);
                }
                Tok::Minus => {
                    self.next();
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Poly> {
        let mut acc = self.unary()?;
        while self.peek().tok == Tok::Star {
            self.next();
            acc = acc.mul(&self.unary()?);
        }
        match self.peek().tok {
            Tok::Int(_) | Tok::Var(_) | Tok::LParen => self.fail("missing `*`: implicit multiplication is not allowed"),
            _ => Ok(acc),
        }
    }

    fn unary(&mut self) -> Result<Poly> {
        match self.peek().tok {
            Tok::Minus => {
                self.next();
                Ok(self.unary()?.neg())
            }
            Tok::Plus => {
                self.next();
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Poly> {
        let base = self.atom()?;
        if self.peek().tok != Tok::Caret {
            return Ok(base);
        }
        self.next();
        match self.next().tok {
            Tok::Int(k) => {
                let k: u32 = k.try_into().map_err(|_| {
                    let t = &self.toks[self.pos - 1];
                    err(t.line, t.column, "exponent too large")
                })?;
                Ok(base.pow(k))
            }
            _ => {
                self.pos -= 1;
                self.fail("exponent must be a nonnegative integer literal")
            }
        }
    }

    fn atom(&mut self) -> Result<Poly> {
        let t = self.next();
        match t.tok {
            Tok::Int(n) => {
                let mut q = Rational::from_integer(n);
                if self.peek().tok == Tok::Slash {
                    self.next();
                    let d = self.next();
                    match d.tok {
                        Tok::Int(den) if den != BigInt::from(0) => q /= Rational::from_integer(den),
                        Tok::Int(_) => return Err(err(d.line, d.column, "zero denominator")),
                        _ => return Err(err(d.line, d.column, "expected an integer denominator")),
                    }
                }
                Ok(MultiPoly::constant_in(&VARS, q))
            }
            Tok::Var(v) => MultiPoly::var_in(&VARS, &v),
            Tok::LParen => {
                let e = self.expr()?;
                if self.peek().tok != Tok::RParen {
                    return self.fail("expected `)`");
                }
                self.next();
                Ok(e)
            }
            Tok::End => Err(err(t.line, t.column, "unexpected end of input")),
            other => Err(err(t.line, t.column, format!("unexpected {}", describe(&other)))),
        }
    }
}

fn describe(t: &Tok) -> &'static str {
    match t {
        Tok::Plus => "`+`",
        Tok::Minus => "`-`",
        Tok::Star => "`*`",
        Tok::Slash => "`/`",
        Tok::Caret => "`^`",
        Tok::RParen => "`)`",
        Tok::LParen => "`(`",
        Tok::Int(_) => "number",
        Tok::Var(_) => "variable",
        Tok::End => "end of input",
    }
}

/// Parses a polynomial in `x`, `y` with rational coefficients.
pub fn parse_curve(text: &str) -> Result<MultiPoly<Rational>> {
    let mut p = Parser { toks: tokenize(text)?, pos: 0 };
    let e = p.expr()?;
    if p.peek().tok != Tok::End {
        return p.fail(format!("unexpected {}", describe(&p.peek().tok)));
    }
    Ok(e)
}
