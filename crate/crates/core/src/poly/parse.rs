//! Text input for Laurent polynomials:
//!
//! ```text
//! poly := sign? term (('+' | '-') term)*
//! term := int | int? '*'? 'q' ('^' sign? int)?
//! ```
//!
//! Whitespace is ignored everywhere, so `q^-1 + 1 + q`, `2q^2-3` and `-q` all parse.

use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;

use super::LaurentPoly;
use crate::error::Error;

impl FromStr for LaurentPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut cursor = Cursor { chars: &chars, pos: 0 };
        if chars.is_empty() {
            return Err(cursor.error("empty polynomial"));
        }
        let mut poly = LaurentPoly::zero();
        let mut negative = cursor.eat_sign().unwrap_or(false);
        loop {
            let (coefficient, exponent) = cursor.term()?;
            poly.add_term(exponent, if negative { -coefficient } else { coefficient });
            if cursor.at_end() {
                return Ok(poly);
            }
            negative = cursor.eat_sign().ok_or_else(|| cursor.error("expected '+' or '-'"))?;
        }
    }
}

struct Cursor<'a> {
    chars: &'a [char],
    pos: usize,
}

impl Cursor<'_> {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn at_end(&self) -> bool {
        self.pos >= self.chars.len()
    }

    fn error(&self, message: &str) -> Error {
        Error::Parse { line: 1, message: format!("{message} at position {}", self.pos) }
    }

    /// `Some(true)` for '-', `Some(false)` for '+'.
    fn eat_sign(&mut self) -> Option<bool> {
        let sign = match self.peek()? {
            '+' => false,
            '-' => true,
            _ => return None,
        };
        self.pos += 1;
        Some(sign)
    }

    fn digits(&mut self) -> Option<String> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| self.chars[start..self.pos].iter().collect())
    }

    fn term(&mut self) -> Result<(BigInt, i64), Error> {
        let coefficient = self.digits().map(|d| d.parse::<BigInt>().expect("ascii digits"));
        if coefficient.is_some() && self.peek() == Some('*') {
            self.pos += 1;
            if self.peek() != Some('q') {
                return Err(self.error("expected 'q' after '*'"));
            }
        }
        if self.peek() != Some('q') {
            return coefficient.map(|c| (c, 0)).ok_or_else(|| self.error("expected a term"));
        }
        self.pos += 1;
        let mut exponent = 1i64;
        if self.peek() == Some('^') {
            self.pos += 1;
            let negative = self.eat_sign().unwrap_or(false);
            let d = self.digits().ok_or_else(|| self.error("expected an exponent"))?;
            let magnitude: i64 = d.parse().map_err(|_| self.error("exponent out of range"))?;
            exponent = if negative { -magnitude } else { magnitude };
        }
        Ok((coefficient.unwrap_or_else(BigInt::one), exponent))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn accepted_forms() {
        assert_eq!(parse("2"), LaurentPoly::constant(2));
        assert_eq!(parse("q"), LaurentPoly::q());
        assert_eq!(parse("1+q"), LaurentPoly::from_terms([(0, 1), (1, 1)]));
        assert_eq!(parse("q^-1 + 1 + q"), LaurentPoly::from_terms([(-1, 1), (0, 1), (1, 1)]));
        assert_eq!(parse(" 3*q^2 - 2 q + 7"), LaurentPoly::from_terms([(2, 3), (1, -2), (0, 7)]));
        assert_eq!(parse("-q^2"), LaurentPoly::monomial(-1, 2));
        assert_eq!(parse("q - q"), LaurentPoly::zero());
    }

    #[test]
    fn rejected_forms() {
        for bad in ["", "+", "q^", "2*", "q q", "x", "1 +", "q^+"] {
            assert!(bad.parse::<LaurentPoly>().is_err(), "{bad:?} should not parse");
        }
    }

    #[test]
    fn rendering_parses_back() {
        for s in ["q^2 - q", "-3 + 2*q^-1", "q^2 + 2 + q^-2", "0"] {
            assert_eq!(parse(s).to_string(), s);
        }
    }
}
