//! Text grammar for field elements:
//!
//! ```text
//! ELEM  := TERM (('+'|'-') TERM)*
//! TERM  := RAT | RAT '*' ROOT | ROOT
//! ROOT  := 'sqrt(' RAT ')'
//! RAT   := ['-'] INT ['/' INT]
//! ```
//!
//! Whitespace is insignificant. Square roots are resolved against a
//! [`TowerBuilder`], which adjoins new radicands on demand and refuses to go
//! past [`MAX_TOWER_DEPTH`](super::MAX_TOWER_DEPTH).

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::{FieldElement, FieldTower, Rational};
use crate::error::Error;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    /// 1-based line; 0 when parsing a standalone string.
    pub line: usize,
    /// 1-based column of the offending token.
    pub column: usize,
    pub token: String,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.line > 0 {
            write!(f, "line {}, ", self.line)?;
        }
        write!(f, "column {}: {} (at '{}')", self.column, self.message, self.token)
    }
}

impl std::error::Error for ParseError {}

impl ParseError {
    pub fn at_line(mut self, line: usize) -> ParseError {
        self.line = line;
        self
    }

    pub fn shifted(mut self, columns: usize) -> ParseError {
        self.column += columns;
        self
    }
}

/// Grows a tower while square roots are being parsed.
#[derive(Debug, Clone)]
pub struct TowerBuilder {
    tower: FieldTower,
}

impl Default for TowerBuilder {
    fn default() -> Self {
        TowerBuilder::new(FieldTower::rationals())
    }
}

impl TowerBuilder {
    pub fn new(tower: FieldTower) -> TowerBuilder {
        TowerBuilder { tower }
    }

    pub fn tower(&self) -> &FieldTower {
        &self.tower
    }

    /// `√r` in the current tower, adjoining it if necessary.
    pub fn sqrt_of(&mut self, r: &Rational) -> Result<FieldElement, Error> {
        let adj = self.tower.adjoin_sqrt(r)?;
        self.tower = adj.tower;
        Ok(adj.sqrt)
    }
}

struct Cursor<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while let Some(c) = self.text[self.pos..].chars().next() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.text[self.pos..].chars().next()
    }

    fn column(&self) -> usize {
        self.text[..self.pos].chars().count() + 1
    }

    fn token(&self) -> String {
        let rest = &self.text[self.pos..];
        if rest.is_empty() {
            return "<end>".to_string();
        }
        let end = rest
            .char_indices()
            .skip(1)
            .find(|(_, c)| c.is_whitespace() || "+-*/()".contains(*c))
            .map(|(i, _)| i)
            .unwrap_or(rest.len());
        rest[..end].to_string()
    }

    fn error(&mut self, message: impl Into<String>) -> ParseError {
        self.skip_ws();
        ParseError {
            line: 0,
            column: self.column(),
            token: self.token(),
            message: message.into(),
        }
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(format!("expected '{c}'")))
        }
    }

    fn integer(&mut self) -> Result<BigInt, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.text[self.pos..].starts_with(|c: char| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an integer"));
        }
        Ok(self.text[start..self.pos].parse().expect("digits"))
    }

    fn rational(&mut self) -> Result<Rational, ParseError> {
        let negative = self.eat('-');
        let numer = self.integer()?;
        let denom = if self.eat('/') {
            let save = self.pos;
            let d = self.integer()?;
            if d.is_zero() {
                self.pos = save;
                return Err(self.error("zero denominator"));
            }
            d
        } else {
            BigInt::from(1)
        };
        let r = Rational::new(numer, denom);
        Ok(if negative { -r } else { r })
    }

    fn starts_root(&mut self) -> bool {
        self.skip_ws();
        self.text[self.pos..].starts_with("sqrt")
    }

    fn root(&mut self, builder: &mut TowerBuilder) -> Result<FieldElement, ParseError> {
        self.skip_ws();
        let start = self.pos;
        if !self.starts_root() {
            return Err(self.error("expected 'sqrt('"));
        }
        self.pos += 4;
        self.expect('(')?;
        let radicand = self.rational()?;
        self.expect(')')?;
        if !radicand.is_positive() {
            self.pos = start;
            return Err(self.error("radicand must be positive"));
        }
        builder.sqrt_of(&radicand).map_err(|e| {
            self.pos = start;
            self.error(e.to_string())
        })
    }

    fn term(&mut self, builder: &mut TowerBuilder) -> Result<FieldElement, ParseError> {
        if self.starts_root() {
            return self.root(builder);
        }
        let coeff = FieldElement::from_rational(self.rational()?);
        if self.eat('*') {
            let root = self.root(builder)?;
            Ok(&coeff * &root)
        } else {
            Ok(coeff)
        }
    }
}

/// Parses one element; roots extend `builder`'s tower as needed. The
/// returned element lives in the builder's tower at the time it finished.
pub fn parse_element(text: &str, builder: &mut TowerBuilder) -> Result<FieldElement, ParseError> {
    let mut cur = Cursor { text, pos: 0 };
    let mut value = cur.term(builder)?;
    loop {
        match cur.peek() {
            None => break,
            Some('+') => {
                cur.pos += 1;
                value = &value + &cur.term(builder)?;
            }
            Some('-') => {
                cur.pos += 1;
                value = &value - &cur.term(builder)?;
            }
            Some(_) => return Err(cur.error("unexpected token")),
        }
    }
    Ok(value.lift(builder.tower()))
}
