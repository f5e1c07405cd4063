//! Alexander polynomials from structured sources: torus-knot parameters,
//! homological monodromy matrices, and a bundled table of named examples.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};
use thiserror::Error;

use crate::orderability::IntegerMatrix;
use crate::poly::{parse_poly, LaurentPolynomial, Violation};

const NAMED_EXAMPLES: &str = include_str!("../data/named_examples.tsv");

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error("torus knot parameters must be at least 2, got ({p}, {q})")]
    ParameterTooSmall { p: u32, q: u32 },
    #[error("torus knot parameters ({p}, {q}) are not coprime")]
    NotCoprime { p: u32, q: u32 },
    #[error("monodromy must have determinant ±1, got {det}")]
    NotUnimodular { det: BigInt },
    #[error("characteristic polynomial is not an Alexander polynomial: {0:?}")]
    InvalidAlexander(Vec<Violation>),
}

/// Coprime `2 ≤ p < q`; the constructor swaps so that `p < q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TorusParams {
    p: u32,
    q: u32,
}

impl TorusParams {
    pub fn new(p: u32, q: u32) -> Result<Self, ModelError> {
        if p < 2 || q < 2 {
            return Err(ModelError::ParameterTooSmall { p, q });
        }
        if p.gcd(&q) != 1 {
            return Err(ModelError::NotCoprime { p, q });
        }
        Ok(Self { p: p.min(q), q: p.max(q) })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn q(&self) -> u32 {
        self.q
    }
}

fn one_minus_t_pow(k: u64) -> LaurentPolynomial {
    LaurentPolynomial::from_terms([(0, BigInt::one()), (k as i64, -BigInt::one())])
}

/// `(1 − t)(1 − t^(pq)) / ((1 − t^p)(1 − t^q))`, of degree `(p − 1)(q − 1)`.
pub fn torus_knot_poly(tp: TorusParams) -> LaurentPolynomial {
    let (p, q) = (tp.p as u64, tp.q as u64);
    let num = &one_minus_t_pow(1) * &one_minus_t_pow(p * q);
    let den = &one_minus_t_pow(p) * &one_minus_t_pow(q);
    let quotient = num.exact_divide(&den).expect("cyclotomic quotient is exact");
    quotient.normalize().expect("nonzero").poly.to_laurent()
}

/// The characteristic polynomial of a homological monodromy, which is the
/// Alexander polynomial of the fibred knot.
pub fn alexander_from_monodromy(m: &IntegerMatrix) -> Result<LaurentPolynomial, ModelError> {
    let char_poly = m.char_poly();
    let det = m.determinant();
    if det.abs() != BigInt::one() {
        return Err(ModelError::NotUnimodular { det });
    }
    let delta = char_poly.to_laurent();
    let violations = delta.validate_alexander(true).expect("nonzero");
    if !violations.is_empty() {
        return Err(ModelError::InvalidAlexander(violations));
    }
    Ok(delta.normalize().expect("nonzero").poly.to_laurent())
}

/// Bundled examples. Knot names follow the table convention (`12n_0013`);
/// `lehmer` is Lehmer's polynomial, not a knot, and is flagged non-fibred.
pub fn named_examples() -> BTreeMap<String, (LaurentPolynomial, bool)> {
    parse_fixture(NAMED_EXAMPLES).expect("bundled fixture parses")
}

/// Parses `name<TAB>fibred(0|1)<TAB>polynomial` lines; `#` starts a comment line.
pub fn parse_fixture(text: &str) -> Result<BTreeMap<String, (LaurentPolynomial, bool)>, String> {
    let mut out = BTreeMap::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim_end();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split('\t').collect();
        let [name, fibred, poly] = fields[..] else {
            return Err(format!("line {}: expected 3 tab-separated fields", lineno + 1));
        };
        let fibred = match fibred {
            "1" => true,
            "0" => false,
            other => return Err(format!("line {}: bad fibred flag {other:?}", lineno + 1)),
        };
        let poly = parse_poly(poly).map_err(|e| format!("line {}: {e}", lineno + 1))?;
        out.insert(name.to_string(), (poly, fibred));
    }
    Ok(out)
}
