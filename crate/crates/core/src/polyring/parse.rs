//! Text grammar for polynomials.
//!
//! ```text
//! expr    := term (('+' | '-') term)*
//! term    := unary ('*' unary)*
//! unary   := ('-' | '+') unary | power
//! power   := atom ('^' integer)?
//! atom    := integer ('/' integer)? | variable | '(' expr ')'
//! ```
//!
//! Juxtaposition is not multiplication, `/` only forms rational literals and
//! `**` is rejected. Columns in errors are 1-based character positions.

use std::sync::Arc;

use num_bigint::BigInt;
use thiserror::Error;

use super::{Poly, PolyRing};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at column {column}: {message}")]
    Syntax { column: usize, message: String },
    #[error("unknown variable `{name}` at column {column}")]
    UnknownVariable { name: String, column: usize },
    #[error("literal at column {column} is not an element of {field}: {message}")]
    Domain {
        column: usize,
        field: String,
        message: String,
    },
}

impl ParseError {
    pub fn column(&self) -> usize {
        match self {
            ParseError::Syntax { column, .. }
            | ParseError::UnknownVariable { column, .. }
            | ParseError::Domain { column, .. } => *column,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Int(n) => format!("number `{n}`"),
            Tok::Ident(s) => format!("identifier `{s}`"),
            Tok::Plus => "`+`".into(),
            Tok::Minus => "`-`".into(),
            Tok::Star => "`*`".into(),
            Tok::Slash => "`/`".into(),
            Tok::Caret => "`^`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::End => "end of input".into(),
        }
    }
}

fn syntax(column: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        column,
        message: message.into(),
    }
}

fn lex(src: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().collect();
            out.push((Tok::Int(digits.parse().expect("decimal digits")), col));
            continue;
        }
        if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push((Tok::Ident(chars[start..i].iter().collect()), col));
            continue;
        }
        let tok = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => {
                if chars.get(i + 1) == Some(&'*') {
                    return Err(syntax(col, "`**` is not an operator; use `^` for powers"));
                }
                Tok::Star
            }
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            other => return Err(syntax(col, format!("unexpected character `{other}`"))),
        };
        out.push((tok, col));
        i += 1;
    }
    out.push((Tok::End, chars.len() + 1));
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    ring: &'a Arc<PolyRing>,
}

impl Parser<'_> {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn col(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> (Tok, usize) {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn expr(&mut self) -> Result<Poly, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    acc = &acc + &self.term()?;
                }
                Tok::Minus => {
                    self.bump();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Poly, ParseError> {
        let mut acc = self.unary()?;
        while *self.peek() == Tok::Star {
            self.bump();
            acc = &acc * &self.unary()?;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Poly, ParseError> {
        match self.peek() {
            Tok::Minus => {
                self.bump();
                Ok(-self.unary()?)
            }
            Tok::Plus => {
                self.bump();
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Poly, ParseError> {
        let base = self.atom()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let (tok, col) = self.bump();
        match tok {
            Tok::Int(n) => {
                let e = u32::try_from(n).map_err(|_| syntax(col, "exponent too large"))?;
                Ok(base.pow(e))
            }
            Tok::Minus => Err(syntax(col, "exponents must be non-negative integers")),
            other => Err(syntax(col, format!("expected exponent, found {}", other.describe()))),
        }
    }

    fn atom(&mut self) -> Result<Poly, ParseError> {
        let (tok, col) = self.bump();
        match tok {
            Tok::Int(num) => {
                let field = self.ring.field();
                if *self.peek() == Tok::Slash {
                    self.bump();
                    let (dtok, dcol) = self.bump();
                    let Tok::Int(den) = dtok else {
                        return Err(syntax(dcol, "`/` must be followed by an integer denominator"));
                    };
                    let c = field.from_ratio(&num, &den).ok_or_else(|| ParseError::Domain {
                        column: col,
                        field: field.to_string(),
                        message: format!("denominator {den} is zero in this field"),
                    })?;
                    Ok(self.ring.constant(c))
                } else {
                    Ok(self.ring.constant(field.from_bigint(&num)))
                }
            }
            Tok::Ident(name) => self
                .ring
                .var(&name)
                .map_err(|_| ParseError::UnknownVariable { name, column: col }),
            Tok::LParen => {
                let inner = self.expr()?;
                let (close, ccol) = self.bump();
                if close != Tok::RParen {
                    return Err(syntax(ccol, format!("expected `)`, found {}", close.describe())));
                }
                Ok(inner)
            }
            other => Err(syntax(col, format!("unexpected {}", other.describe()))),
        }
    }
}

/// Parses `src` as a polynomial in `ring`.
pub fn parse_poly(src: &str, ring: &Arc<PolyRing>) -> Result<Poly, ParseError> {
    let toks = lex(src)?;
    let mut p = Parser { toks, pos: 0, ring };
    let poly = p.expr()?;
    match p.peek() {
        Tok::End => Ok(poly),
        Tok::Slash => Err(syntax(p.col(), "`/` is only allowed inside rational literals")),
        Tok::Ident(_) | Tok::Int(_) | Tok::LParen => {
            Err(syntax(p.col(), "implicit multiplication is not allowed; write `*`"))
        }
        other => Err(syntax(p.col(), format!("unexpected {}", other.describe()))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::{Field, MonomialOrder};

    fn ring() -> Arc<PolyRing> {
        PolyRing::rational(["x", "y", "z"]).unwrap()
    }

    #[test]
    fn single_monomial() {
        let r = ring();
        let p = parse_poly("x*y", &r).unwrap();
        assert_eq!(p.len(), 1);
        assert!(p.leading_coeff().unwrap().is_one());
        assert_eq!(p.to_string(), "x*y");
    }

    #[test]
    fn cusp_component() {
        let r = ring();
        assert_eq!(parse_poly("x^3-y^2", &r).unwrap().to_string(), "x^3 - y^2");
    }

    #[test]
    fn binomial_cancellation() {
        let r = ring();
        assert_eq!(
            parse_poly("(x+y)^2 - x^2 - 2*x*y", &r).unwrap(),
            parse_poly("y^2", &r).unwrap()
        );
    }

    #[test]
    fn rationals_and_signs() {
        let r = ring();
        let p = parse_poly("-3/4*x + -(y - 1/2)", &r).unwrap();
        assert_eq!(p.to_string(), "-3/4*x - y + 1/2");
        assert_eq!(parse_poly("-x^2", &r).unwrap().to_string(), "-x^2");
    }

    #[test]
    fn double_star_column() {
        let err = parse_poly("x**y", &ring()).unwrap_err();
        assert_eq!(err.to_string().split(':').next().unwrap(), "syntax error at column 2");
    }

    #[test]
    fn errors() {
        let r = ring();
        assert!(matches!(
            parse_poly("2x", &r),
            Err(ParseError::Syntax { column: 2, .. })
        ));
        assert!(matches!(
            parse_poly("x + w", &r),
            Err(ParseError::UnknownVariable { column: 5, .. })
        ));
        assert!(matches!(parse_poly("x/2", &r), Err(ParseError::Syntax { .. })));
        assert!(matches!(parse_poly("x^-1", &r), Err(ParseError::Syntax { .. })));
        assert!(matches!(parse_poly("(x", &r), Err(ParseError::Syntax { .. })));
        assert!(matches!(parse_poly("", &r), Err(ParseError::Syntax { column: 1, .. })));
        assert!(matches!(parse_poly("1/0", &r), Err(ParseError::Domain { .. })));
        let rp = PolyRing::new(["x"], MonomialOrder::Grevlex, Field::Prime(7)).unwrap();
        assert!(matches!(parse_poly("x/1", &rp), Err(ParseError::Syntax { .. })));
        assert!(matches!(parse_poly("1/14", &rp), Err(ParseError::Domain { .. })));
        assert_eq!(parse_poly("1/2", &rp).unwrap().to_string(), "-3");
    }
}
