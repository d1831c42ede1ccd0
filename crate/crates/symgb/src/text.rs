//! Parsing and formatting of polynomials.
//!
//! Accepted syntax, whitespace-insensitive:
//!
//! ```text
//! poly     := ['-'] term (('+'|'-') term)*
//! term     := coeff ['*' monomial] | monomial
//! coeff    := integer ['/' positive-integer]
//! monomial := var ('*' var)*
//! var      := 'x' index ['^' exponent]
//! ```
//!
//! Indices and exponents are positive.  Like terms are combined, so the
//! parsed result is always in canonical form.  Formatting (via `Display` on
//! [`Polynomial`]) prints terms in decreasing order with unit coefficients
//! and exponents suppressed, which parses back to the same polynomial.

use crate::error::Error;
use crate::monomial::Monomial;
use crate::poly::{Polynomial, Term};
use crate::scalar::FieldKind;
use crate::Result;
use num_bigint::BigInt;
use num_traits::{One, Zero};

pub fn parse_polynomial(text: &str, field: FieldKind) -> Result<Polynomial> {
    let mut p = Parser {
        bytes: text.as_bytes(),
        pos: 0,
        field,
    };
    let poly = p.poly()?;
    p.skip_ws();
    if p.pos != p.bytes.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(poly)
}

/// Parses a string that must denote a bare monomial: a single term with
/// coefficient 1.
pub fn parse_monomial(text: &str, field: FieldKind) -> Result<Monomial> {
    let poly = parse_polynomial(text, field)?;
    let mut terms = poly.terms();
    match (terms.next(), terms.next()) {
        (Some(t), None) if t.coeff.is_one() => Ok(t.monomial.clone()),
        _ => Err(Error::Parse {
            position: 0,
            message: format!("expected a monomial, got {poly}"),
        }),
    }
}

pub fn format_polynomial(f: &Polynomial) -> String {
    f.to_string()
}

/// Reads a corpus: one polynomial per line, `#` starts a comment line,
/// blank lines are skipped.  Parse failures carry the line number.
pub fn parse_corpus(text: &str, field: FieldKind) -> Result<Vec<Polynomial>> {
    let mut out = Vec::new();
    for (k, line) in text.lines().enumerate() {
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        match parse_polynomial(trimmed, field) {
            Ok(p) => out.push(p),
            Err(Error::Parse { position, message }) => {
                return Err(Error::Parse {
                    position,
                    message: format!("line {}: {}", k + 1, message),
                })
            }
            Err(e) => return Err(e),
        }
    }
    Ok(out)
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
    field: FieldKind,
}

impl<'a> Parser<'a> {
    fn err(&self, message: &str) -> Error {
        Error::Parse {
            position: self.pos,
            message: message.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn bump(&mut self) {
        self.pos += 1;
    }

    fn poly(&mut self) -> Result<Polynomial> {
        let mut terms: Vec<Term> = Vec::new();
        let mut negative = match self.peek() {
            Some(b'-') => {
                self.bump();
                true
            }
            _ => false,
        };
        loop {
            let (coeff, monomial) = self.term()?;
            let coeff = if negative { coeff.neg() } else { coeff };
            terms.push(Term::new(coeff, monomial));
            match self.peek() {
                Some(b'+') => {
                    self.bump();
                    negative = false;
                }
                Some(b'-') => {
                    self.bump();
                    negative = true;
                }
                _ => break,
            }
        }
        Polynomial::from_terms(terms)
    }

    fn term(&mut self) -> Result<(crate::scalar::Scalar, Monomial)> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let coeff_pos = self.pos;
                let numer = self.integer()?;
                let denom = if self.peek() == Some(b'/') {
                    self.bump();
                    match self.peek() {
                        Some(c) if c.is_ascii_digit() => self.integer()?,
                        _ => return Err(self.err("expected a denominator")),
                    }
                } else {
                    BigInt::one()
                };
                if denom.is_zero() {
                    return Err(Error::Parse {
                        position: coeff_pos,
                        message: "division by zero in coefficient".into(),
                    });
                }
                let coeff = self.field.fraction(&numer, &denom).map_err(|e| match e {
                    Error::DivisionByZero => Error::Parse {
                        position: coeff_pos,
                        message: "coefficient denominator is zero in this field".into(),
                    },
                    other => other,
                })?;
                let monomial = if self.peek() == Some(b'*') {
                    self.bump();
                    self.monomial()?
                } else {
                    Monomial::one()
                };
                Ok((coeff, monomial))
            }
            Some(b'x') => Ok((self.field.one(), self.monomial()?)),
            _ => Err(self.err("expected a term")),
        }
    }

    fn monomial(&mut self) -> Result<Monomial> {
        let mut pairs = vec![self.var()?];
        while self.peek() == Some(b'*') {
            let save = self.pos;
            self.bump();
            match self.peek() {
                Some(b'x') => pairs.push(self.var()?),
                _ => {
                    // Not ours: could be `2*x1*3`-style garbage; report here.
                    self.pos = save + 1;
                    return Err(self.err("expected a variable after '*'"));
                }
            }
        }
        Monomial::from_pairs(pairs).map_err(|e| match e {
            Error::Parse { message, .. } => Error::Parse {
                position: self.pos,
                message,
            },
            other => other,
        })
    }

    fn var(&mut self) -> Result<(u32, u32)> {
        match self.peek() {
            Some(b'x') => self.bump(),
            _ => return Err(self.err("expected a variable")),
        }
        let idx_pos = self.pos;
        let index = self.small_number()?;
        if index == 0 {
            return Err(Error::Parse {
                position: idx_pos,
                message: "variable index must be positive".into(),
            });
        }
        let exponent = if self.peek() == Some(b'^') {
            self.bump();
            let exp_pos = self.pos;
            let e = self.small_number()?;
            if e == 0 {
                return Err(Error::Parse {
                    position: exp_pos,
                    message: "exponent must be positive".into(),
                });
            }
            e
        } else {
            1
        };
        Ok((index, exponent))
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected a number"));
        }
        Ok(std::str::from_utf8(&self.bytes[start..self.pos])
            .unwrap()
            .parse()
            .unwrap())
    }

    fn small_number(&mut self) -> Result<u32> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected a number"));
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| Error::Parse {
                position: start,
                message: "number out of range".into(),
            })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Scalar;

    fn parse(s: &str) -> Polynomial {
        parse_polynomial(s, FieldKind::Rational).unwrap()
    }

    #[test]
    fn parses_the_running_generators() {
        let f1 = parse("x1^3*x3 + x1^2*x2^3");
        assert_eq!(f1.num_terms(), 2);
        assert_eq!(
            f1.leading_monomial().unwrap(),
            &Monomial::from_pairs([(1, 3), (3, 1)]).unwrap()
        );
        assert_eq!(f1.to_string(), "x3*x1^3 + x2^3*x1^2");

        let f2 = parse("x2^2*x3^2 - x2^2*x1 + x1*x3^2");
        assert_eq!(f2.num_terms(), 3);
        assert_eq!(f2.to_string(), "x3^2*x2^2 + x3^2*x1 - x2^2*x1");
    }

    #[test]
    fn combines_like_terms() {
        assert_eq!(parse("-3/2*x2 + x2").to_string(), "-1/2*x2");
        assert!(parse("x1 - x1").is_zero());
        assert_eq!(parse("x1*x1").to_string(), "x1^2");
    }

    #[test]
    fn whitespace_is_ignored() {
        assert_eq!(parse("  x1 ^ 2 * x2+ 3 "), parse("x1^2*x2+3"));
    }

    #[test]
    fn rejects_bad_syntax_with_positions() {
        match parse_polynomial("x1 + @", FieldKind::Rational) {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 5),
            other => panic!("expected parse error, got {other:?}"),
        }
        assert!(parse_polynomial("", FieldKind::Rational).is_err());
        assert!(parse_polynomial("3x1", FieldKind::Rational).is_err());
        assert!(parse_polynomial("x1^", FieldKind::Rational).is_err());
        assert!(parse_polynomial("x1 +", FieldKind::Rational).is_err());
        assert!(parse_polynomial("2*", FieldKind::Rational).is_err());
        assert!(parse_polynomial("x1*2", FieldKind::Rational).is_err());
    }

    #[test]
    fn rejects_zero_index_and_exponent() {
        match parse_polynomial("x0", FieldKind::Rational) {
            Err(Error::Parse { message, .. }) => {
                assert!(message.contains("index must be positive"))
            }
            other => panic!("expected parse error, got {other:?}"),
        }
        assert!(parse_polynomial("x1^0", FieldKind::Rational).is_err());
    }

    #[test]
    fn division_by_zero_in_coefficient() {
        match parse_polynomial("1/0*x1", FieldKind::Rational) {
            Err(Error::Parse { message, .. }) => assert!(message.contains("division by zero")),
            other => panic!("expected parse error, got {other:?}"),
        }
        // Denominator hits zero only modulo p.
        assert!(parse_polynomial("3/2", FieldKind::Mod(7)).is_ok());
        assert!(parse_polynomial("3/14", FieldKind::Mod(7)).is_err());
    }

    #[test]
    fn prime_field_coefficients() {
        let f = parse_polynomial("3/2*x1 + 9", FieldKind::Mod(7)).unwrap();
        // 3/2 = 3*4 = 5 mod 7, 9 = 2 mod 7.
        let mut terms = f.terms();
        assert_eq!(terms.next().unwrap().coeff, FieldKind::Mod(7).from_integer(5));
        assert_eq!(terms.next().unwrap().coeff, FieldKind::Mod(7).from_integer(2));
        assert_eq!(f.to_string(), "5*x1 + 2");
    }

    #[test]
    fn round_trips() {
        for s in [
            "x3*x1^3 + x2^3*x1^2",
            "x3^2*x2^2 + x3^2*x1 - x2^2*x1",
            "-x2 + x1",
            "0",
            "5",
            "-7/3",
            "x12^2*x5 - 1",
        ] {
            let f = parse(s);
            assert_eq!(format_polynomial(&f), s);
            assert_eq!(parse(&format_polynomial(&f)), f);
        }
    }

    #[test]
    fn zero_literal() {
        assert!(parse("0").is_zero());
        let z = parse("0*x1");
        assert!(z.is_zero());
    }

    #[test]
    fn corpus_reading() {
        let text = "# generators\n\n x1^3*x3 + x1^2*x2^3 \nx2^2*x3^2 - x2^2*x1 + x1*x3^2\n";
        let polys = parse_corpus(text, FieldKind::Rational).unwrap();
        assert_eq!(polys.len(), 2);
        match parse_corpus("x1\nx2 + @\n", FieldKind::Rational) {
            Err(Error::Parse { message, .. }) => assert!(message.starts_with("line 2:")),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn monomial_entry_point() {
        let m = parse_monomial("x1^3*x2^2*x5^5", FieldKind::Rational).unwrap();
        assert_eq!(m, Monomial::from_pairs([(1, 3), (2, 2), (5, 5)]).unwrap());
        assert!(parse_monomial("2*x1", FieldKind::Rational).is_err());
        assert!(parse_monomial("x1 + x2", FieldKind::Rational).is_err());
        let one = parse_monomial("1", FieldKind::Rational).unwrap();
        assert!(one.is_one());
    }

    #[test]
    fn scalar_display_matches_parse() {
        let half: Scalar = FieldKind::Rational
            .fraction(&3.into(), &2.into())
            .unwrap();
        assert_eq!(half.to_string(), "3/2");
    }
}
