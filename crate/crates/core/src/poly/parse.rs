//! Text parser for integer Laurent polynomials in `t`.
//!
//! ```text
//! poly  := sign? term (("+" | "-") term)*
//! term  := coeff | coeff "*"? var | var
//! var   := "t" ("^" exp)?
//! exp   := "-"? digits | "(" "-"? digits ")"
//! coeff := digits
//! ```
//!
//! Whitespace between tokens is ignored. Repeated exponents are summed.

use num_bigint::BigInt;
use num_traits::One;

use super::{LaurentPolynomial, PolyError};

pub fn parse_poly(text: &str) -> Result<LaurentPolynomial, PolyError> {
    let mut p = Parser { src: text.as_bytes(), pos: 0 };
    let mut terms = Vec::new();

    p.skip_ws();
    let mut negative = match p.peek() {
        Some(b'-') => {
            p.pos += 1;
            true
        }
        Some(b'+') => {
            p.pos += 1;
            false
        }
        _ => false,
    };
    loop {
        let (e, mut c) = p.term()?;
        if negative {
            c = -c;
        }
        terms.push((e, c));
        p.skip_ws();
        match p.peek() {
            None => break,
            Some(b'+') => negative = false,
            Some(b'-') => negative = true,
            Some(_) => return Err(p.error("expected '+' or '-'")),
        }
        p.pos += 1;
    }
    Ok(LaurentPolynomial::from_terms(terms))
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|b| b.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn error(&self, message: &str) -> PolyError {
        PolyError::Syntax {
            offset: self.pos,
            message: message.to_string(),
        }
    }

    fn digits(&mut self) -> Option<String> {
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| String::from_utf8_lossy(&self.src[start..self.pos]).into_owned())
    }

    fn term(&mut self) -> Result<(i64, BigInt), PolyError> {
        self.skip_ws();
        let coeff = self.digits().map(|d| d.parse::<BigInt>().expect("ascii digits"));
        self.skip_ws();
        let has_star = self.peek() == Some(b'*');
        if has_star {
            if coeff.is_none() {
                return Err(self.error("'*' without a coefficient"));
            }
            self.pos += 1;
            self.skip_ws();
        }
        if self.peek() == Some(b't') {
            self.pos += 1;
            let e = self.exponent()?;
            return Ok((e, coeff.unwrap_or_else(BigInt::one)));
        }
        if has_star {
            return Err(self.error("expected 't' after '*'"));
        }
        match coeff {
            Some(c) => Ok((0, c)),
            None => Err(self.error("expected a coefficient or 't'")),
        }
    }

    fn exponent(&mut self) -> Result<i64, PolyError> {
        self.skip_ws();
        if self.peek() != Some(b'^') {
            return Ok(1);
        }
        self.pos += 1;
        self.skip_ws();
        let paren = self.peek() == Some(b'(');
        if paren {
            self.pos += 1;
            self.skip_ws();
        }
        let negative = self.peek() == Some(b'-');
        if negative {
            self.pos += 1;
            self.skip_ws();
        }
        let at = self.pos;
        let Some(digits) = self.digits() else {
            return Err(self.error("expected exponent digits"));
        };
        let mut e: i64 = digits.parse().map_err(|_| PolyError::Syntax {
            offset: at,
            message: "exponent out of range".to_string(),
        })?;
        if negative {
            e = -e;
        }
        if paren {
            self.skip_ws();
            if self.peek() != Some(b')') {
                return Err(self.error("expected ')'"));
            }
            self.pos += 1;
        }
        Ok(e)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn terms(p: &LaurentPolynomial) -> Vec<(i64, i64)> {
        p.terms()
            .map(|(e, c)| (e, i64::try_from(c).unwrap()))
            .collect()
    }

    #[test]
    fn parses_alexander_examples() {
        assert_eq!(terms(&parse_poly("1-3t+t^2").unwrap()), [(0, 1), (1, -3), (2, 1)]);
        assert!(parse_poly("0").unwrap().is_zero());
        assert_eq!(
            terms(&parse_poly("1-t+t^3-t^5+t^6").unwrap()),
            [(0, 1), (1, -1), (3, 1), (5, -1), (6, 1)]
        );
    }

    #[test]
    fn accepts_knotinfo_variants() {
        let a = parse_poly("1-3*t+ t^2").unwrap();
        assert_eq!(a, parse_poly("1-3t+t^2").unwrap());
        let b = parse_poly("t^(-1) - 1 + t").unwrap();
        assert_eq!(b, parse_poly("t^-1-1+t").unwrap());
        assert_eq!(terms(&parse_poly("-1 + t + t^( - 1 )").unwrap()), [(-1, 1), (0, -1), (1, 1)]);
        assert_eq!(terms(&parse_poly("t+t").unwrap()), [(1, 2)]);
        assert!(parse_poly("t-t").unwrap().is_zero());
    }

    #[test]
    fn arbitrary_precision_coefficients() {
        let p = parse_poly("123456789012345678901234567890t^3").unwrap();
        assert_eq!(p.coeff(3).to_string(), "123456789012345678901234567890");
    }

    #[test]
    fn reports_offsets() {
        let offset = |s: &str| match parse_poly(s) {
            Err(PolyError::Syntax { offset, .. }) => offset,
            other => panic!("{s:?} parsed as {other:?}"),
        };
        assert_eq!(offset("garbage"), 0);
        assert_eq!(offset("1+"), 2);
        assert_eq!(offset("1-3x"), 3);
        assert_eq!(offset("t^"), 2);
        assert_eq!(offset("t^(2"), 4);
        assert_eq!(offset("*t"), 0);
        assert_eq!(offset(""), 0);
        assert_eq!(offset("1++t"), 2);
        assert_eq!(offset("t^99999999999999999999"), 2);
    }
}
