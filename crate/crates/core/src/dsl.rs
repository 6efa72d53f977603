//! Text syntax for representations.
//!
//! ```text
//! Repr := Seg ( "*" Seg )*
//! Seg  := "[" label ":" len ( "@" rat ( "~" "z" frac )? )? "]"
//! ```
//!
//! `[one:2@-1/2] * [rho2:1@0~z1/2]` is `St₂ν^{-1/2}` times `ρ₂` twisted by
//! the unramified character with value `-1` at `ϖ`.

use std::fmt;

use num_traits::Zero;

use crate::scalar::{Rational, Scalar};
use crate::segment::{Representation, Segment};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    /// Byte offset into the source.
    pub offset: usize,
    /// Tokens that would have been accepted here.
    pub expected: Vec<String>,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at byte {}: {}", self.offset, self.message)?;
        if !self.expected.is_empty() {
            write!(f, " (expected {})", self.expected.join(" or "))?;
        }
        Ok(())
    }
}

impl std::error::Error for ParseError {}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.rest().chars().next()
    }

    fn error(&self, expected: &[&str], message: impl Into<String>) -> ParseError {
        ParseError {
            offset: self.pos,
            expected: expected.iter().map(|s| s.to_string()).collect(),
            message: message.into(),
        }
    }

    fn found(&self) -> String {
        match self.rest().chars().next() {
            Some(c) => format!("found `{c}`"),
            None => "unexpected end of input".to_string(),
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            Ok(())
        } else {
            let tok = format!("`{c}`");
            Err(self.error(&[&tok], self.found()))
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

    fn label(&mut self) -> Result<String, ParseError> {
        self.skip_ws();
        let rest = self.rest();
        let ok_start = rest
            .chars()
            .next()
            .is_some_and(|c| c.is_ascii_alphabetic() || c == '_');
        if !ok_start {
            return Err(self.error(&["label"], self.found()));
        }
        let end = rest
            .find(|c: char| !(c.is_ascii_alphanumeric() || c == '_'))
            .unwrap_or(rest.len());
        self.pos += end;
        Ok(rest[..end].to_string())
    }

    fn digits(&mut self, what: &str) -> Result<(usize, i64), ParseError> {
        self.skip_ws();
        let start = self.pos;
        let rest = self.rest();
        let end = rest
            .find(|c: char| !c.is_ascii_digit())
            .unwrap_or(rest.len());
        if end == 0 {
            return Err(self.error(&[what], self.found()));
        }
        let value = rest[..end]
            .parse::<i64>()
            .map_err(|_| self.error(&[what], "integer out of range"))?;
        self.pos += end;
        Ok((start, value))
    }

    fn length(&mut self) -> Result<u32, ParseError> {
        let (start, n) = self.digits("length")?;
        match u32::try_from(n) {
            Ok(n) if n >= 1 => Ok(n),
            _ => Err(ParseError {
                offset: start,
                expected: vec!["positive length".to_string()],
                message: format!("segment length must be at least 1, got {n}"),
            }),
        }
    }

    fn denominator(&mut self) -> Result<i64, ParseError> {
        let (start, d) = self.digits("denominator")?;
        if d == 0 {
            return Err(ParseError {
                offset: start,
                expected: vec!["nonzero denominator".to_string()],
                message: "zero denominator".to_string(),
            });
        }
        Ok(d)
    }

    fn rational(&mut self) -> Result<Rational, ParseError> {
        let negative = if self.eat('-') {
            true
        } else {
            self.eat('+');
            false
        };
        let (_, p) = self.digits("exponent")?;
        let d = if self.eat('/') {
            self.denominator()?
        } else {
            1
        };
        let r = Rational::new(p, d);
        Ok(if negative { -r } else { r })
    }

    fn fraction(&mut self) -> Result<Rational, ParseError> {
        let (_, k) = self.digits("numerator")?;
        self.expect('/')?;
        let n = self.denominator()?;
        Ok(Rational::new(k, n))
    }

    fn segment(&mut self) -> Result<Segment, ParseError> {
        self.expect('[')?;
        let label = self.label()?;
        self.expect(':')?;
        let len = self.length()?;
        let mut tau = Scalar::one();
        let mut expected: &[&str] = &["`@`", "`]`"];
        if self.eat('@') {
            let e = self.rational()?;
            let mut zeta = Rational::zero();
            expected = &["`~`", "`]`"];
            if self.eat('~') {
                self.expect('z')?;
                zeta = self.fraction()?;
                expected = &["`]`"];
            }
            tau = Scalar::new(zeta, e);
        }
        if !self.eat(']') {
            return Err(self.error(expected, self.found()));
        }
        Ok(Segment::new(label, len, tau))
    }

    fn representation(&mut self) -> Result<Vec<Segment>, ParseError> {
        let mut segs = vec![self.segment()?];
        loop {
            match self.peek() {
                None => return Ok(segs),
                Some('*') => {
                    self.pos += 1;
                    segs.push(self.segment()?);
                }
                Some(_) => {
                    let msg = self.found();
                    return Err(self.error(&["`*`", "end of input"], msg));
                }
            }
        }
    }
}

/// Parses a single segment such as `[rho2:1@1/2]`.
pub fn parse_segment(src: &str) -> Result<Segment, ParseError> {
    let mut p = Parser { src, pos: 0 };
    let seg = p.segment()?;
    if p.peek().is_some() {
        let msg = p.found();
        return Err(p.error(&["end of input"], msg));
    }
    Ok(seg)
}

/// Parses `Seg ( "*" Seg )*`. Labels are not resolved here.
pub fn parse_repr(src: &str) -> Result<Representation, ParseError> {
    let mut p = Parser { src, pos: 0 };
    let segs = p.representation()?;
    Ok(Representation::new(segs).expect("grammar requires at least one segment"))
}

/// Inverse of [`parse_repr`].
pub fn render(p: &Representation) -> String {
    p.to_string()
}
