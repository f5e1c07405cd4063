//! Exact integer polynomial arithmetic.
//!
//! Alexander polynomials are only defined up to multiplication by `±t^k`;
//! [`LaurentPolynomial::normalize`] fixes a representative with nonzero
//! constant term and positive leading coefficient. All classifications in
//! this crate depend only on that representative.

mod dense;
mod laurent;
mod parse;

pub use dense::DensePolynomial;
pub use laurent::{LaurentPolynomial, Normalized, Violation};
pub use parse::parse_poly;

pub(crate) use laurent::pow_rational;

use thiserror::Error;

/// Exact rationals: always reduced, denominator positive.
pub type ExactRational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("division by zero")]
    DivisionByZero,
    #[error("inexact division, remainder {remainder}")]
    InexactDivision { remainder: LaurentPolynomial },
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_traits::Zero;
    use proptest::prelude::*;

    fn laurent() -> impl Strategy<Value = LaurentPolynomial> {
        (-4i64..4, prop::collection::vec(-30i64..30, 0..8))
            .prop_map(|(low, c)| LaurentPolynomial::from_coeffs(low, &c))
    }

    fn rational() -> impl Strategy<Value = ExactRational> {
        (-40i64..40, 1i64..12)
            .prop_filter("nonzero", |(n, _)| *n != 0)
            .prop_map(|(n, d)| ExactRational::new(BigInt::from(n), BigInt::from(d)))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(256))]

        #[test]
        fn print_parse_round_trip(p in laurent()) {
            prop_assert_eq!(parse_poly(&p.to_string()).unwrap(), p);
        }

        #[test]
        fn normalize_is_idempotent(p in laurent().prop_filter("nonzero", |p| !p.is_zero())) {
            let n = p.normalize().unwrap();
            let again = n.poly.to_laurent().normalize().unwrap();
            prop_assert_eq!(&again.poly, &n.poly);
            prop_assert_eq!((again.shift, again.sign), (0, 1));
            prop_assert!(!n.poly.constant_term().is_zero());
        }

        #[test]
        fn normalize_preserves_positive_values_up_to_unit(
            p in laurent().prop_filter("nonzero", |p| !p.is_zero()),
            x in rational(),
        ) {
            let x = if x < ExactRational::from_integer(0.into()) { -x } else { x };
            let n = p.normalize().unwrap();
            let lhs = n.poly.eval(&x);
            let rhs = p.evaluate(&x).unwrap()
                * pow_rational_signed(&x, -n.shift)
                * ExactRational::from_integer(BigInt::from(n.sign));
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn evaluation_is_multiplicative(p in laurent(), q in laurent(), x in rational()) {
            let pq = &p * &q;
            prop_assert_eq!(
                pq.evaluate(&x).unwrap(),
                p.evaluate(&x).unwrap() * q.evaluate(&x).unwrap()
            );
        }

        #[test]
        fn symmetric_roots_come_in_reciprocal_pairs(
            half in prop::collection::vec(-9i64..9, 1..5),
            x in rational(),
        ) {
            let mut c = half.clone();
            c.extend(half.iter().rev().skip(1));
            let p = LaurentPolynomial::from_coeffs(0, &c);
            prop_assume!(!p.is_zero());
            prop_assert!(p.is_symmetric().unwrap());
            // p(1/x) = ±x^(-n)·p(x), so x is a root iff 1/x is
            let n = p.normalize().unwrap();
            let at_x = n.poly.eval(&x);
            let at_inv = n.poly.eval(&x.recip()) * pow_rational(&x, n.poly.degree() as u64);
            prop_assert!(at_x == at_inv || at_x == -at_inv);
        }
    }

    fn pow_rational_signed(x: &ExactRational, e: i64) -> ExactRational {
        let v = pow_rational(x, e.unsigned_abs());
        if e < 0 {
            v.recip()
        } else {
            v
        }
    }
}
