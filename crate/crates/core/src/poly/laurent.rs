use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::{DensePolynomial, PolyError};

/// Integer Laurent polynomial in `t`. Zero coefficients are never stored, so
/// the zero polynomial is the empty map. Terms iterate in ascending exponent.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPolynomial {
    terms: BTreeMap<i64, BigInt>,
}

/// Result of [`LaurentPolynomial::normalize`]:
/// `poly = sign · t^(-shift) · p` with nonzero constant term and positive
/// leading coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Normalized {
    pub poly: DensePolynomial,
    pub shift: i64,
    pub sign: i8,
}

/// Ways an input fails the basic Alexander-polynomial conditions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Violation {
    /// `|Δ(1)| ≠ 1`.
    Delta1NotUnit,
    /// Coefficient sequence is not a palindrome up to sign.
    NotSymmetric,
    /// A fibred knot needs leading and constant coefficients of absolute value 1.
    NotMonicFibred,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Violation::Delta1NotUnit => "Delta(1) is not +-1",
            Violation::NotSymmetric => "not symmetric",
            Violation::NotMonicFibred => "fibred but not monic",
        })
    }
}

impl LaurentPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(BigInt::one(), 0)
    }

    pub fn monomial(c: BigInt, e: i64) -> Self {
        Self::from_terms([(e, c)])
    }

    /// Builds from `(exponent, coefficient)` pairs; repeated exponents add up.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, BigInt)>,
    {
        let mut map: BTreeMap<i64, BigInt> = BTreeMap::new();
        for (e, c) in terms {
            *map.entry(e).or_default() += c;
        }
        map.retain(|_, c| !c.is_zero());
        Self { terms: map }
    }

    /// Coefficients `c[i]` of `t^(low + i)`.
    pub fn from_coeffs(low: i64, coeffs: &[i64]) -> Self {
        Self::from_terms(
            coeffs
                .iter()
                .enumerate()
                .map(|(i, &c)| (low + i as i64, BigInt::from(c))),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn coeff(&self, e: i64) -> BigInt {
        self.terms.get(&e).cloned().unwrap_or_default()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Width of the exponent range, i.e. the degree after normalization.
    pub fn span(&self) -> Option<u64> {
        Some(self.max_exp()?.abs_diff(self.min_exp()?))
    }

    pub fn mul_monomial(&self, c: &BigInt, e: i64) -> Self {
        Self::from_terms(self.terms.iter().map(|(k, v)| (k + e, v * c)))
    }

    /// `p(1/t)`.
    pub fn invert_variable(&self) -> Self {
        Self::from_terms(self.terms.iter().map(|(e, c)| (-e, c.clone())))
    }

    /// `p(-t)`.
    pub fn negate_variable(&self) -> Self {
        Self::from_terms(
            self.terms
                .iter()
                .map(|(e, c)| (*e, if e % 2 != 0 { -c } else { c.clone() })),
        )
    }

    /// Moves to nonnegative exponents, fixes the sign, and returns the dense
    /// form together with the applied shift and sign.
    pub fn normalize(&self) -> Result<Normalized, PolyError> {
        let low = self.min_exp().ok_or(PolyError::ZeroPolynomial)?;
        let high = self.max_exp().unwrap();
        let width = (high - low) as usize;
        let mut coeffs = vec![BigInt::zero(); width + 1];
        for (e, c) in &self.terms {
            coeffs[(e - low) as usize] = c.clone();
        }
        let sign: i8 = if coeffs[width].is_negative() { -1 } else { 1 };
        if sign < 0 {
            coeffs.iter_mut().for_each(|c| *c = -&*c);
        }
        Ok(Normalized {
            poly: DensePolynomial::new(coeffs),
            shift: low,
            sign,
        })
    }

    /// Exact value at `x`.
    pub fn evaluate(&self, x: &BigRational) -> Result<BigRational, PolyError> {
        if x.is_zero() {
            if self.min_exp().is_some_and(|e| e < 0) {
                return Err(PolyError::DivisionByZero);
            }
            return Ok(BigRational::from_integer(self.coeff(0)));
        }
        let mut acc = BigRational::zero();
        for (e, c) in &self.terms {
            let xe = if *e >= 0 {
                pow_rational(x, *e as u64)
            } else {
                pow_rational(x, e.unsigned_abs()).recip()
            };
            acc += xe * c;
        }
        Ok(acc)
    }

    pub fn evaluate_int(&self, x: i64) -> Result<BigRational, PolyError> {
        self.evaluate(&BigRational::from_integer(BigInt::from(x)))
    }

    /// Value at `t = 1`; always defined.
    pub fn value_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// True iff `p(1/t) = ±t^m · p(t)` for some `m`.
    pub fn is_symmetric(&self) -> Result<bool, PolyError> {
        let n = self.normalize()?;
        let c = n.poly.coeffs();
        let palindrome = |neg: bool| {
            c.iter()
                .zip(c.iter().rev())
                .all(|(a, b)| if neg { *a == -b } else { a == b })
        };
        Ok(palindrome(false) || palindrome(true))
    }

    /// Checks `|Δ(1)| = 1`, symmetry, and monicity when fibred.
    pub fn validate_alexander(&self, fibred: bool) -> Result<Vec<Violation>, PolyError> {
        let n = self.normalize()?;
        let mut out = Vec::new();
        if !self.value_at_one().abs().is_one() {
            out.push(Violation::Delta1NotUnit);
        }
        if !self.is_symmetric()? {
            out.push(Violation::NotSymmetric);
        }
        if fibred {
            let lead = n.poly.leading().unwrap();
            let constant = n.poly.constant_term();
            if !lead.abs().is_one() || !constant.abs().is_one() {
                out.push(Violation::NotMonicFibred);
            }
        }
        Ok(out)
    }

    /// Quotient `self / divisor` when the division is exact over the integers.
    pub fn exact_divide(&self, divisor: &Self) -> Result<Self, PolyError> {
        let d = divisor.normalize()?;
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let n = self.normalize()?;
        let shift = n.shift - d.shift;
        let sign = BigInt::from(n.sign * d.sign);
        match n.poly.div_exact(&d.poly) {
            Ok(q) => Ok(q.to_laurent().mul_monomial(&sign, shift)),
            Err((_, r)) => Err(PolyError::InexactDivision {
                remainder: r.to_laurent().mul_monomial(&BigInt::from(n.sign), n.shift),
            }),
        }
    }

    /// Human-oriented rendering with superscripts and a proper minus sign,
    /// e.g. `1−8t+15t²−8t³+t⁴`.
    pub fn to_unicode(&self) -> String {
        let mut out = String::new();
        self.write_terms(&mut out, '−', |e| {
            let mut s = String::new();
            for ch in e.to_string().chars() {
                s.push(match ch {
                    '-' => '⁻',
                    d => SUPERSCRIPTS[d.to_digit(10).unwrap() as usize],
                });
            }
            s
        })
        .unwrap();
        out
    }

    fn write_terms<W: fmt::Write>(
        &self,
        w: &mut W,
        minus: char,
        exp: impl Fn(i64) -> String,
    ) -> fmt::Result {
        if self.is_zero() {
            return w.write_char('0');
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            if c.is_negative() {
                w.write_char(minus)?;
            } else if i > 0 {
                w.write_char('+')?;
            }
            let a = c.abs();
            if *e == 0 {
                write!(w, "{a}")?;
                continue;
            }
            if !a.is_one() {
                write!(w, "{a}")?;
            }
            w.write_char('t')?;
            if *e != 1 {
                w.write_str(&exp(*e))?;
            }
        }
        Ok(())
    }
}

const SUPERSCRIPTS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];

pub(crate) fn pow_rational(x: &BigRational, e: u64) -> BigRational {
    let mut acc = BigRational::one();
    let mut base = x.clone();
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            acc *= &base;
        }
        base = &base * &base;
        e >>= 1;
    }
    acc
}

/// Canonical ASCII form, ascending exponents: `1-3t+t^2`, `t^-1-1+t`.
/// Parsing this text gives back the same polynomial.
impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_terms(f, '-', |e| format!("^{e}"))
    }
}

impl fmt::Debug for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPolynomial({self})")
    }
}

impl std::str::FromStr for LaurentPolynomial {
    type Err = PolyError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        super::parse_poly(s)
    }
}

impl Serialize for LaurentPolynomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for LaurentPolynomial {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        super::parse_poly(&s).map_err(serde::de::Error::custom)
    }
}

impl std::ops::Neg for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> Self::Output {
        LaurentPolynomial::from_terms(self.terms.iter().map(|(e, c)| (*e, -c)))
    }
}

impl std::ops::Add for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn add(self, rhs: Self) -> Self::Output {
        LaurentPolynomial::from_terms(
            self.terms
                .iter()
                .chain(rhs.terms.iter())
                .map(|(e, c)| (*e, c.clone())),
        )
    }
}

impl std::ops::Sub for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn sub(self, rhs: Self) -> Self::Output {
        self + &-rhs
    }
}

impl std::ops::Mul for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn mul(self, rhs: Self) -> Self::Output {
        LaurentPolynomial::from_terms(
            self.terms
                .iter()
                .flat_map(|(a, x)| rhs.terms.iter().map(move |(b, y)| (a + b, x * y))),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;

    fn lp(s: &str) -> LaurentPolynomial {
        parse_poly(s).unwrap()
    }

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn normalize_shifts_and_flips() {
        let n = LaurentPolynomial::from_coeffs(-1, &[1, -3, 1]).normalize().unwrap();
        assert_eq!(n.poly, DensePolynomial::from_i64s(&[1, -3, 1]));
        assert_eq!((n.shift, n.sign), (-1, 1));

        let n = lp("-1+3t-t^2").normalize().unwrap();
        assert_eq!(n.poly, DensePolynomial::from_i64s(&[1, -3, 1]));
        assert_eq!((n.shift, n.sign), (0, -1));

        let n = lp("1-3t+t^2").normalize().unwrap();
        assert_eq!((n.shift, n.sign), (0, 1));
        assert!(matches!(
            LaurentPolynomial::zero().normalize(),
            Err(PolyError::ZeroPolynomial)
        ));
    }

    #[test]
    fn evaluate_examples() {
        assert_eq!(lp("1-3t+t^2").evaluate_int(1).unwrap(), q(-1, 1));
        assert_eq!(lp("1-7t+13t^2-7t^3+t^4").evaluate_int(1).unwrap(), q(1, 1));
        assert_eq!(lp("1-3t+t^2").evaluate_int(3).unwrap(), q(1, 1));
        assert_eq!(lp("t^-1+t").evaluate(&q(1, 2)).unwrap(), q(5, 2));
        assert!(matches!(
            lp("t^-1").evaluate_int(0),
            Err(PolyError::DivisionByZero)
        ));
        assert_eq!(lp("3+t").evaluate_int(0).unwrap(), q(3, 1));
    }

    #[test]
    fn symmetry_examples() {
        assert!(lp("1-3t+t^2").is_symmetric().unwrap());
        assert!(lp("1-7t+13t^2-7t^3+t^4").is_symmetric().unwrap());
        assert!(!lp("1+2t").is_symmetric().unwrap());
        assert!(lp("1-t").is_symmetric().unwrap());
        assert!(LaurentPolynomial::zero().is_symmetric().is_err());
    }

    #[test]
    fn validate_examples() {
        // rules checked one at a time by hand:
        // 1-3t+t^2: p(1) = -1, palindrome, monic.
        assert!(lp("1-3t+t^2").validate_alexander(true).unwrap().is_empty());
        // 1-3t+3t^2: p(1) = 1, [1,-3,3] not a palindrome, leading 3.
        assert_eq!(
            lp("1-3t+3t^2").validate_alexander(true).unwrap(),
            vec![Violation::NotSymmetric, Violation::NotMonicFibred]
        );
        // 2-5t+2t^2: p(1) = -1, palindrome, leading 2.
        assert_eq!(
            lp("2-5t+2t^2").validate_alexander(true).unwrap(),
            vec![Violation::NotMonicFibred]
        );
        assert!(lp("2-5t+2t^2").validate_alexander(false).unwrap().is_empty());
        assert_eq!(
            lp("1-2t+t^2").validate_alexander(false).unwrap(),
            vec![Violation::Delta1NotUnit]
        );
    }

    #[test]
    fn exact_division_examples() {
        assert_eq!(lp("1-t^2").exact_divide(&lp("1-t")).unwrap(), lp("1+t"));
        let num = &lp("1-t") * &lp("1-t^6");
        let den = &lp("1-t^2") * &lp("1-t^3");
        assert_eq!(num.exact_divide(&den).unwrap(), lp("1-t+t^2"));
        match lp("1+t").exact_divide(&lp("1-t")) {
            Err(PolyError::InexactDivision { remainder }) => assert!(!remainder.is_zero()),
            other => panic!("expected InexactDivision, got {other:?}"),
        }
        assert_eq!(lp("t^-2-1").exact_divide(&lp("t^-1+1")).unwrap(), lp("t^-1-1"));
    }

    #[test]
    fn display_forms() {
        assert_eq!(lp("t^2 - 3t + 1").to_string(), "1-3t+t^2");
        assert_eq!(lp("t^(-1)+t-1").to_string(), "t^-1-1+t");
        assert_eq!(lp("-2t^3").to_string(), "-2t^3");
        assert_eq!(LaurentPolynomial::zero().to_string(), "0");
        assert_eq!(lp("1-8t+15t^2-8t^3+t^4").to_unicode(), "1−8t+15t²−8t³+t⁴");
        assert_eq!(lp("t^-10").to_unicode(), "t⁻¹⁰");
    }
}
