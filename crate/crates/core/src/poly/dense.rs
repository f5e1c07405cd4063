//! Dense univariate polynomials with arbitrary-precision integer coefficients.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::LaurentPolynomial;

/// `coeffs[i]` is the coefficient of `t^i`. The last stored coefficient is
/// never zero; the zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct DensePolynomial {
    coeffs: Vec<BigInt>,
}

impl DensePolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// `a·t + b`.
    pub fn linear(a: BigInt, b: BigInt) -> Self {
        Self::new(vec![b, a])
    }

    /// `c·t^k`.
    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports 0, check [`is_zero`](Self::is_zero).
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeff(0)
    }

    /// Positive gcd of the coefficients; zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Divides out the positive content, so signs are preserved.
    pub fn primitive_part(&self) -> Self {
        let c = self.content();
        if c.is_zero() || c.is_one() {
            return self.clone();
        }
        Self::new(self.coeffs.iter().map(|x| x / &c).collect())
    }

    /// Primitive part scaled so the leading coefficient is positive.
    pub fn normalized_primitive(&self) -> Self {
        let pp = self.primitive_part();
        match pp.leading() {
            Some(l) if l.is_negative() => -pp,
            _ => pp,
        }
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self::new(coeffs)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// `t^deg · p(1/t)`.
    pub fn reciprocal(&self) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        Self::new(coeffs)
    }

    /// `p(-t)`.
    pub fn negate_variable(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + BigRational::from_integer(c.clone()))
    }

    /// Sign of `p(x)` computed on the homogenized integer form
    /// `Σ a_i n^i d^(deg-i)`, which has the same sign since `d > 0`.
    pub fn sign_at(&self, x: &BigRational) -> Ordering {
        if self.is_zero() {
            return Ordering::Equal;
        }
        let n = x.numer();
        let d = x.denom();
        let mut acc = BigInt::zero();
        let mut dpow = BigInt::one();
        for c in self.coeffs.iter().rev() {
            acc = acc * n + c * &dpow;
            dpow *= d;
        }
        acc.sign_ordering()
    }

    pub fn sign_at_pos_inf(&self) -> Ordering {
        self.leading().map_or(Ordering::Equal, |l| l.sign_ordering())
    }

    pub fn sign_at_neg_inf(&self) -> Ordering {
        let s = self.sign_at_pos_inf();
        if self.degree() % 2 == 1 {
            s.reverse()
        } else {
            s
        }
    }

    /// Exact division over the integers. On failure returns
    /// `(partial_quotient, remainder)` with `self = d·q + r`, where the
    /// remainder is either of lower degree than `d` or has a leading
    /// coefficient not divisible by `lc(d)`.
    pub fn div_exact(&self, d: &Self) -> Result<Self, (Self, Self)> {
        assert!(!d.is_zero(), "division by the zero polynomial");
        let ld = d.leading().expect("nonzero divisor").clone();
        let dd = d.degree();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); self.coeffs.len().saturating_sub(dd).max(1)];
        loop {
            while rem.last().is_some_and(Zero::is_zero) {
                rem.pop();
            }
            if rem.is_empty() || rem.len() - 1 < dd {
                break;
            }
            let k = rem.len() - 1 - dd;
            let (q, r) = rem.last().unwrap().div_rem(&ld);
            if !r.is_zero() {
                break;
            }
            for (i, c) in d.coeffs.iter().enumerate() {
                rem[k + i] -= &q * c;
            }
            quot[k] = q;
        }
        let quot = Self::new(quot);
        let rem = Self::new(rem);
        if rem.is_zero() {
            Ok(quot)
        } else {
            Err((quot, rem))
        }
    }

    /// Pseudo-remainder of `self` by `d`, scaled by a power of `|lc(d)|`
    /// so it is a positive multiple of the true remainder over the rationals.
    pub fn pseudo_rem_positive(&self, d: &Self) -> Self {
        assert!(!d.is_zero(), "division by the zero polynomial");
        let d = if d.leading().unwrap().is_negative() {
            -d.clone()
        } else {
            d.clone()
        };
        let ld = d.leading().unwrap().clone();
        let dd = d.degree();
        let mut rem = self.clone();
        while !rem.is_zero() && rem.degree() >= dd {
            let k = rem.degree() - dd;
            let lr = rem.leading().unwrap().clone();
            rem = &rem.scale(&ld) - &d.shift_up(k).scale(&lr);
            // keep growth in check; dividing by positive content preserves signs
            rem = rem.primitive_part();
        }
        rem
    }

    /// Greatest common divisor up to content: primitive, positive leading
    /// coefficient. `gcd(0, 0)` is zero.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.normalized_primitive();
        let mut b = other.normalized_primitive();
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem_positive(&b);
            a = b;
            b = r.normalized_primitive();
        }
        if a.is_constant() && !a.is_zero() {
            return Self::one();
        }
        a
    }

    /// Product of the distinct irreducible factors, primitive with positive
    /// leading coefficient.
    pub fn square_free_part(&self) -> Self {
        if self.is_constant() {
            return self.normalized_primitive();
        }
        let g = self.gcd(&self.derivative());
        self.normalized_primitive()
            .div_exact(&g)
            .expect("gcd divides its argument")
            .normalized_primitive()
    }

    pub fn to_laurent(&self) -> LaurentPolynomial {
        LaurentPolynomial::from_terms(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| (i as i64, c.clone())),
        )
    }
}

trait SignOrdering {
    fn sign_ordering(&self) -> Ordering;
}

impl SignOrdering for BigInt {
    fn sign_ordering(&self) -> Ordering {
        self.cmp(&BigInt::zero())
    }
}

impl fmt::Display for DensePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.to_laurent(), f)
    }
}

impl fmt::Debug for DensePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DensePolynomial({self})")
    }
}

impl std::ops::Neg for DensePolynomial {
    type Output = DensePolynomial;
    fn neg(self) -> Self::Output {
        DensePolynomial {
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl std::ops::Add for &DensePolynomial {
    type Output = DensePolynomial;
    fn add(self, rhs: Self) -> Self::Output {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        DensePolynomial::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl std::ops::Sub for &DensePolynomial {
    type Output = DensePolynomial;
    fn sub(self, rhs: Self) -> Self::Output {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        DensePolynomial::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl std::ops::Mul for &DensePolynomial {
    type Output = DensePolynomial;
    fn mul(self, rhs: Self) -> Self::Output {
        if self.is_zero() || rhs.is_zero() {
            return DensePolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        DensePolynomial::new(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> DensePolynomial {
        DensePolynomial::from_i64s(c)
    }

    #[test]
    fn trims_trailing_zeros() {
        assert_eq!(p(&[1, 2, 0, 0]).coeffs().len(), 2);
        assert!(p(&[0, 0]).is_zero());
    }

    #[test]
    fn exact_division_and_remainder() {
        assert_eq!(p(&[1, 0, -1]).div_exact(&p(&[1, -1])).unwrap(), p(&[1, 1]));
        let (_, r) = p(&[1, 1]).div_exact(&p(&[1, -1])).unwrap_err();
        assert!(!r.is_zero());
        // leading coefficient not divisible: 2t+1 by 3t
        assert!(p(&[1, 2]).div_exact(&p(&[0, 3])).is_err());
    }

    #[test]
    fn gcd_of_shared_factor() {
        let a = &p(&[-1, 1]) * &p(&[1, 1]);
        let b = &p(&[-1, 1]) * &p(&[2, 0, 1]);
        assert_eq!(a.gcd(&b), p(&[-1, 1]));
        assert_eq!(p(&[1, 1]).gcd(&p(&[2, 1])), DensePolynomial::one());
    }

    #[test]
    fn sign_at_rational_matches_eval() {
        let q = p(&[1, -3, 1]);
        let x = BigRational::new(BigInt::from(1), BigInt::from(2));
        assert_eq!(q.sign_at(&x), Ordering::Less);
        assert_eq!(q.eval(&x), BigRational::new(BigInt::from(-1), BigInt::from(4)));
    }

    #[test]
    fn pseudo_remainder_is_positive_multiple() {
        // t^2 mod (-2t + 1) = 1/4 over Q
        let r = p(&[0, 0, 1]).pseudo_rem_positive(&p(&[1, -2]));
        assert!(r.is_constant() && r.constant_term().is_positive());
    }

    #[test]
    fn square_free_part_drops_repeats() {
        let q = &p(&[-1, 1]).pow(3) * &p(&[1, 1]);
        assert_eq!(q.square_free_part(), p(&[-1, 0, 1]));
    }
}
