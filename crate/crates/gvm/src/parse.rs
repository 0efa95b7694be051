//! Text syntax for exact scalars.
//!
//! A scalar is a signed sum of terms. A term is an integer, a fraction
//! `a/b`, a generic symbol (`tau` or `sigma`), or a coefficient times a
//! symbol (`3/2*tau`). Whitespace is ignored. The `Display` output of
//! [`ExactScalar`] always parses back to the same value.

use std::str::FromStr;

use gvm_core::{ExactScalar, Rational, Symbol, SIGMA, TAU};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseScalarError {
    #[error("empty scalar")]
    Empty,
    #[error("unexpected character {found:?} at offset {offset}")]
    UnexpectedChar { offset: usize, found: char },
    #[error("unexpected end of input")]
    UnexpectedEnd,
    #[error("unknown symbol {0:?} (expected tau or sigma)")]
    UnknownSymbol(String),
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("number out of range")]
    Overflow,
}

/// The generic symbols accepted by the parser.
pub const SYMBOLS: [Symbol; 2] = [TAU, SIGMA];

struct Cursor {
    chars: Vec<(usize, char)>,
    pos: usize,
}

impl Cursor {
    fn new(src: &str) -> Self {
        Cursor { chars: src.char_indices().collect(), pos: 0 }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    /// Skips whitespace, then peeks.
    fn token(&mut self) -> Option<char> {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
        self.peek()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek();
        self.pos += 1;
        c
    }

    fn unexpected(&self) -> ParseScalarError {
        match self.chars.get(self.pos) {
            Some(&(offset, found)) => ParseScalarError::UnexpectedChar { offset, found },
            None => ParseScalarError::UnexpectedEnd,
        }
    }

    fn integer(&mut self) -> Result<i64, ParseScalarError> {
        let start = self.pos;
        let mut value: i64 = 0;
        while let Some(d) = self.peek().and_then(|c| c.to_digit(10)) {
            value = value
                .checked_mul(10)
                .and_then(|v| v.checked_add(i64::from(d)))
                .ok_or(ParseScalarError::Overflow)?;
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.unexpected());
        }
        Ok(value)
    }

    fn word(&mut self) -> String {
        let mut out = String::new();
        while let Some(c) = self.peek().filter(|c| c.is_alphanumeric() || *c == '_') {
            out.push(c);
            self.pos += 1;
        }
        out
    }

    fn symbol(&mut self) -> Result<Symbol, ParseScalarError> {
        if !self.token().is_some_and(char::is_alphabetic) {
            return Err(self.unexpected());
        }
        let name = self.word();
        SYMBOLS
            .into_iter()
            .find(|s| s.name() == name)
            .ok_or(ParseScalarError::UnknownSymbol(name))
    }

    /// A term without its sign, added into `acc` with the given sign.
    fn term(&mut self, acc: ExactScalar, negative: bool) -> Result<ExactScalar, ParseScalarError> {
        let sign = |r: Rational| if negative { -r } else { r };
        if self.token().is_some_and(char::is_alphabetic) {
            let sym = self.symbol()?;
            return Ok(acc.plus_symbol(sym, sign(Rational::from_integer(1))));
        }
        let numer = self.integer()?;
        let mut value = Rational::from_integer(numer);
        if self.token() == Some('/') {
            self.bump();
            self.token();
            let denom = self.integer()?;
            if denom == 0 {
                return Err(ParseScalarError::ZeroDenominator);
            }
            value = Rational::new(numer, denom);
        }
        if self.token() == Some('*') {
            self.bump();
            let sym = self.symbol()?;
            return Ok(acc.plus_symbol(sym, sign(value)));
        }
        Ok(acc + sign(value))
    }
}

pub fn parse_scalar(src: &str) -> Result<ExactScalar, ParseScalarError> {
    let mut cur = Cursor::new(src);
    if cur.token().is_none() {
        return Err(ParseScalarError::Empty);
    }
    let mut acc = ExactScalar::zero();
    let mut first = true;
    while cur.token().is_some() {
        let negative = match cur.token() {
            Some('-') => {
                cur.bump();
                true
            }
            Some('+') => {
                cur.bump();
                false
            }
            _ if first => false,
            _ => return Err(cur.unexpected()),
        };
        acc = cur.term(acc, negative)?;
        first = false;
    }
    Ok(acc)
}

/// Comma-separated scalars, e.g. `5,3,3,1` or `1/2+tau, -tau`.
pub fn parse_scalar_list(src: &str) -> Result<Vec<ExactScalar>, ParseScalarError> {
    if src.trim().is_empty() {
        return Ok(Vec::new());
    }
    src.split(',').map(parse_scalar).collect()
}

/// Newtype so clap can parse scalars through `FromStr`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScalarArg(pub ExactScalar);

impl FromStr for ScalarArg {
    type Err = ParseScalarError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_scalar(s).map(ScalarArg)
    }
}
