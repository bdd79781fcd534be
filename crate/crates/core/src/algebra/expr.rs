//! Parser for element expressions such as `2 e e^* - 1/3 (z + f) f^*`.
//!
//! ```text
//! expr   := ['-'] term (('+' | '-') term)*
//! term   := factor (['*'] factor)*
//! factor := INT ['/' INT] | NAME ['^*'] | '(' expr ')' ['^*']
//! ```
//!
//! A term made only of scalars denotes that multiple of the identity, and
//! `(x)^*` is the involution of `x`. The canonical rendering produced by
//! `Display` parses back to the same element.

use super::{Algebra, AlgebraError, Element, Generator};
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(String),
    Name(String),
    Slash,
    Star,
    GhostMark,
    Plus,
    Minus,
    LParen,
    RParen,
}

fn is_name_start(c: char) -> bool {
    c.is_ascii_alphabetic() || c == '_' || c == '~'
}

fn is_name_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || matches!(c, '_' | '.' | '~')
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>, AlgebraError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let tok = match c {
            '+' => Tok::Plus,
            '-' | '\u{2212}' => Tok::Minus,
            '/' => Tok::Slash,
            '*' => Tok::Star,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '^' if chars.get(i + 1) == Some(&'*') => {
                i += 1;
                Tok::GhostMark
            }
            c if c.is_ascii_digit() => {
                let start = i;
                while i + 1 < chars.len() && chars[i + 1].is_ascii_digit() {
                    i += 1;
                }
                Tok::Int(chars[start..=i].iter().collect())
            }
            c if is_name_start(c) => {
                let start = i;
                while i + 1 < chars.len() && is_name_char(chars[i + 1]) {
                    i += 1;
                }
                Tok::Name(chars[start..=i].iter().collect())
            }
            other => {
                return Err(AlgebraError::Syntax {
                    position: col,
                    message: format!("unexpected character `{other}`"),
                })
            }
        };
        out.push((col, tok));
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    alg: &'a Algebra,
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

enum Factor {
    Scalar(Scalar),
    Elem(Element),
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.1)
    }

    fn column(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |t| t.0)
    }

    fn error(&self, message: impl Into<String>) -> AlgebraError {
        AlgebraError::Syntax {
            position: self.column(),
            message: message.into(),
        }
    }

    fn expr(&mut self) -> Result<Element, AlgebraError> {
        let negate_first = self.peek() == Some(&Tok::Minus);
        if negate_first {
            self.pos += 1;
        }
        let first = self.term()?;
        let mut acc = if negate_first { first.negate() } else { first };
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    acc = acc.try_add(&self.term()?)?;
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    acc = acc.try_sub(&self.term()?)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn starts_factor(&self) -> bool {
        matches!(self.peek(), Some(Tok::Int(_) | Tok::Name(_) | Tok::LParen))
    }

    fn term(&mut self) -> Result<Element, AlgebraError> {
        let mut coef = self.alg.field().one();
        let mut elem: Option<Element> = None;
        let mut first = true;
        loop {
            if !first && self.peek() == Some(&Tok::Star) {
                self.pos += 1;
                if !self.starts_factor() {
                    return Err(self.error("expected a factor after `*`"));
                }
            }
            if !self.starts_factor() {
                if first {
                    return Err(self.error("expected a term"));
                }
                break;
            }
            first = false;
            match self.factor()? {
                Factor::Scalar(k) => coef = &coef * &k,
                Factor::Elem(x) => {
                    elem = Some(match elem {
                        Some(acc) => acc.mul_unchecked(&x),
                        None => x,
                    })
                }
            }
        }
        Ok(elem.unwrap_or_else(|| self.alg.one()).scale(&coef))
    }

    fn factor(&mut self) -> Result<Factor, AlgebraError> {
        let (col, tok) = self.toks[self.pos].clone();
        self.pos += 1;
        match tok {
            Tok::Int(n) => {
                let text = if self.peek() == Some(&Tok::Slash) {
                    self.pos += 1;
                    match self.peek().cloned() {
                        Some(Tok::Int(d)) => {
                            self.pos += 1;
                            format!("{n}/{d}")
                        }
                        _ => return Err(self.error("expected a denominator")),
                    }
                } else {
                    n
                };
                let k = self
                    .alg
                    .field()
                    .parse_scalar(&text)
                    .map_err(|e| AlgebraError::Syntax {
                        position: col,
                        message: e.to_string(),
                    })?;
                Ok(Factor::Scalar(k))
            }
            Tok::Name(name) => {
                let mut text = name;
                if self.peek() == Some(&Tok::GhostMark) {
                    self.pos += 1;
                    text.push_str("^*");
                }
                let gen = Generator::parse(self.alg.graph(), &text)?;
                Ok(Factor::Elem(self.alg.generator(gen)))
            }
            Tok::LParen => {
                let inner = self.expr()?;
                if self.peek() != Some(&Tok::RParen) {
                    return Err(self.error("expected `)`"));
                }
                self.pos += 1;
                if self.peek() == Some(&Tok::GhostMark) {
                    self.pos += 1;
                    return Ok(Factor::Elem(inner.involution()));
                }
                Ok(Factor::Elem(inner))
            }
            _ => unreachable!("starts_factor checked"),
        }
    }
}

pub(super) fn parse(alg: &Algebra, text: &str) -> Result<Element, AlgebraError> {
    let toks = tokenize(text)?;
    let mut p = Parser {
        alg,
        toks,
        pos: 0,
        end: text.chars().count() + 1,
    };
    let x = p.expr()?;
    if p.pos < p.toks.len() {
        return Err(p.error("unexpected token"));
    }
    Ok(x)
}
