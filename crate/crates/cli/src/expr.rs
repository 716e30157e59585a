//! Text syntax for polynomials and pointed rational functions.
//!
//! ```text
//! input  := sum ('/' sum)?          one top-level division at most
//! sum    := term (('+' | '-') term)*
//! term   := unary (('*')? unary)*   juxtaposition multiplies
//! unary  := ('+' | '-') unary | power
//! power  := atom ('^' digits)?
//! atom   := literal | 'x' | '(' sum ')'
//! literal:= digits ('/' digits)?    longest match, so `1/2` is one number
//! ```
//!
//! Exponent digits never absorb a following slash: `x^2/3` is `x²` over `3`.

use std::fmt;

use a1deg_core::{Field, FieldElement, Polynomial};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

/// Largest accepted exponent.
pub const MAX_EXPONENT: usize = 256;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    /// Zero-based character offset.
    pub position: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at column {}: {}", self.position + 1, self.message)
    }
}

impl std::error::Error for ParseError {}

type PResult<T> = Result<T, ParseError>;

struct Parser {
    chars: Vec<char>,
    pos: usize,
    field: Field,
}

impl Parser {
    fn error<T>(&self, message: impl Into<String>) -> PResult<T> {
        Err(ParseError {
            position: self.pos,
            message: message.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn digits(&mut self) -> Option<String> {
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(char::is_ascii_digit) {
            self.pos += 1;
        }
        (self.pos > start).then(|| self.chars[start..self.pos].iter().collect())
    }

    fn constant(&self, q: BigRational, at: usize) -> PResult<Polynomial> {
        FieldElement::from_rational(self.field, &q)
            .map(Polynomial::constant)
            .map_err(|e| ParseError {
                position: at,
                message: e.to_string(),
            })
    }

    fn literal(&mut self) -> PResult<Polynomial> {
        let start = self.pos;
        let num: BigInt = self.digits().expect("caller saw a digit").parse().expect("digits");
        let save = self.pos;
        if self.peek() == Some('/') {
            self.pos += 1;
            self.skip_ws();
            if let Some(den) = self.digits() {
                let den: BigInt = den.parse().expect("digits");
                if den.is_zero() {
                    return Err(ParseError {
                        position: start,
                        message: "zero denominator in literal".into(),
                    });
                }
                return self.constant(BigRational::new(num, den), start);
            }
        }
        self.pos = save;
        self.constant(BigRational::from_integer(num), start)
    }

    fn atom(&mut self) -> PResult<Polynomial> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => self.literal(),
            Some('x') => {
                self.pos += 1;
                Ok(Polynomial::x(self.field))
            }
            Some('(') => {
                self.pos += 1;
                let inner = self.sum()?;
                match self.peek() {
                    Some(')') => {
                        self.pos += 1;
                        Ok(inner)
                    }
                    Some('/') => self.error("division is only allowed once, at top level"),
                    Some(c) => self.error(format!("expected ')' but found '{c}'")),
                    None => self.error("unclosed '('"),
                }
            }
            Some(c) => self.error(format!("unexpected '{c}'")),
            None => self.error("unexpected end of input"),
        }
    }

    fn power(&mut self) -> PResult<Polynomial> {
        let base = self.atom()?;
        if self.peek() != Some('^') {
            return Ok(base);
        }
        self.pos += 1;
        self.skip_ws();
        if self.chars.get(self.pos) == Some(&'-') {
            return self.error("negative exponents are not allowed");
        }
        let at = self.pos;
        let Some(digits) = self.digits() else {
            return self.error("expected a nonnegative integer exponent");
        };
        match digits.parse::<usize>() {
            Ok(e) if e <= MAX_EXPONENT => Ok(base.pow(e)),
            _ => Err(ParseError {
                position: at,
                message: format!("exponent exceeds {MAX_EXPONENT}"),
            }),
        }
    }

    fn unary(&mut self) -> PResult<Polynomial> {
        match self.peek() {
            Some('-') => {
                self.pos += 1;
                Ok(-&self.unary()?)
            }
            Some('+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn term(&mut self) -> PResult<Polynomial> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some('*') => {
                    self.pos += 1;
                    acc = &acc * &self.unary()?;
                }
                Some(c) if c == 'x' || c == '(' || c.is_ascii_digit() => {
                    acc = &acc * &self.power()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn sum(&mut self) -> PResult<Polynomial> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some('+') => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some('-') => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn finish(&mut self) -> PResult<()> {
        match self.peek() {
            None => Ok(()),
            Some('/') => self.error("division is only allowed once, at top level"),
            Some(c) => self.error(format!("unexpected '{c}'")),
        }
    }
}

/// Parse `numerator [/ denominator]`; the denominator defaults to 1.
pub fn parse_rational_function(field: Field, text: &str) -> Result<(Polynomial, Polynomial), ParseError> {
    let mut p = Parser {
        chars: text.chars().collect(),
        pos: 0,
        field,
    };
    let num = p.sum()?;
    let den = if p.peek() == Some('/') {
        p.pos += 1;
        p.sum()?
    } else {
        Polynomial::one(field)
    };
    p.finish()?;
    Ok((num, den))
}

/// Parse a polynomial (no top-level division).
pub fn parse_polynomial(field: Field, text: &str) -> Result<Polynomial, ParseError> {
    let mut p = Parser {
        chars: text.chars().collect(),
        pos: 0,
        field,
    };
    let poly = p.sum()?;
    p.finish()?;
    Ok(poly)
}
