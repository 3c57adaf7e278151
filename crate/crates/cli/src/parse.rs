//! Text syntax for bundles and slopes.
//!
//! ```text
//! bundle := "0" | term ("+" term)*
//! term   := "O(" slope ")" ["^" posint]
//! slope  := int ["/" posint]
//! ```
//!
//! Whitespace is ignored everywhere. Positions in errors are byte offsets
//! into the original text.

use std::fmt;

use hncalc_core::{Bundle, Rational, Slope};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParseErrorKind {
    Expected(&'static str),
    TrailingInput,
    ZeroDenominator,
    ZeroExponent,
    Overflow,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub position: usize,
    pub kind: ParseErrorKind,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            ParseErrorKind::Expected(what) => write!(f, "expected {what}")?,
            ParseErrorKind::TrailingInput => f.write_str("unexpected trailing input")?,
            ParseErrorKind::ZeroDenominator => f.write_str("zero denominator")?,
            ParseErrorKind::ZeroExponent => f.write_str("multiplicity must be positive")?,
            ParseErrorKind::Overflow => f.write_str("number too large")?,
        }
        write!(f, " at position {}", self.position)
    }
}

impl std::error::Error for ParseError {}

struct Cursor<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Self {
        Cursor { text, pos: 0 }
    }

    fn skip_ws(&mut self) {
        let rest = &self.text[self.pos..];
        self.pos += rest.len() - rest.trim_start().len();
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.text[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char, what: &'static str) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(ParseErrorKind::Expected(what)))
        }
    }

    fn error(&mut self, kind: ParseErrorKind) -> ParseError {
        self.skip_ws();
        ParseError {
            position: self.pos,
            kind,
        }
    }

    fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    /// Digits with no sign. Returns the value and the starting position.
    fn natural(&mut self, what: &'static str) -> Result<(u64, usize), ParseError> {
        self.skip_ws();
        let start = self.pos;
        let digits = self.text[start..]
            .bytes()
            .take_while(u8::is_ascii_digit)
            .count();
        if digits == 0 {
            return Err(self.error(ParseErrorKind::Expected(what)));
        }
        self.pos += digits;
        let value = self.text[start..self.pos].parse().map_err(|_| ParseError {
            position: start,
            kind: ParseErrorKind::Overflow,
        })?;
        Ok((value, start))
    }

    fn integer(&mut self) -> Result<i64, ParseError> {
        let negative = if self.eat('-') {
            true
        } else {
            self.eat('+');
            false
        };
        let (n, start) = self.natural("an integer")?;
        let overflow = ParseError {
            position: start,
            kind: ParseErrorKind::Overflow,
        };
        let n = i64::try_from(n).map_err(|_| overflow.clone())?;
        Ok(if negative { -n } else { n })
    }

    fn slope(&mut self) -> Result<Slope, ParseError> {
        let numer = self.integer()?;
        if !self.eat('/') {
            return Ok(Rational::integer(numer));
        }
        let (denom, start) = self.natural("a positive denominator")?;
        if denom == 0 {
            return Err(ParseError {
                position: start,
                kind: ParseErrorKind::ZeroDenominator,
            });
        }
        let denom = i64::try_from(denom).map_err(|_| ParseError {
            position: start,
            kind: ParseErrorKind::Overflow,
        })?;
        Ok(Rational::new(numer, denom).expect("denominator checked"))
    }

    fn term(&mut self) -> Result<(Slope, u32), ParseError> {
        self.expect('O', "'O'")?;
        self.expect('(', "'('")?;
        let slope = self.slope()?;
        self.expect(')', "')'")?;
        if !self.eat('^') {
            return Ok((slope, 1));
        }
        let (m, start) = self.natural("a positive multiplicity")?;
        if m == 0 {
            return Err(ParseError {
                position: start,
                kind: ParseErrorKind::ZeroExponent,
            });
        }
        let m = u32::try_from(m).map_err(|_| ParseError {
            position: start,
            kind: ParseErrorKind::Overflow,
        })?;
        Ok((slope, m))
    }

    fn finish(&mut self) -> Result<(), ParseError> {
        if self.at_end() {
            Ok(())
        } else {
            Err(self.error(ParseErrorKind::TrailingInput))
        }
    }
}

/// Parses a direct sum such as `O(1/2)^2 + O(-1)`, or `0` for the zero
/// bundle. Summands are merged and sorted.
pub fn parse_bundle(text: &str) -> Result<Bundle, ParseError> {
    let mut cur = Cursor::new(text);
    if cur.eat('0') {
        cur.finish()?;
        return Ok(Bundle::zero());
    }
    let mut terms = vec![cur.term()?];
    while cur.eat('+') {
        terms.push(cur.term()?);
    }
    cur.finish()?;
    Ok(Bundle::from_summands(terms))
}

/// Parses `int` or `int/posint`.
pub fn parse_slope(text: &str) -> Result<Slope, ParseError> {
    let mut cur = Cursor::new(text);
    let s = cur.slope()?;
    cur.finish()?;
    Ok(s)
}
