//! Alexander polynomials of knots with an L-space surgery.
//!
//! Such a polynomial has the form
//!
//! ```text
//! Δ(t) = (−1)^k + Σ_{j=1..k} (−1)^(k−j) (t^(n_j) + t^(−n_j)),   0 < n_1 < … < n_k
//! ```
//!
//! and never has a positive real root: pairing the terms from the inside out
//! writes `Δ(α)` for `α > 1` as a sum of positive quantities, because
//! `α^s + α^(−s)` increases with `s`. [`telescoping_witness`] produces those
//! quantities exactly at a rational sample point.
//!
//! Matching the form is a necessary condition only. A polynomial recognized
//! here is not evidence that the knot has an L-space surgery.

use std::fmt;

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::poly::{pow_rational, ExactRational, LaurentPolynomial};
use crate::roots::count_positive_real_roots;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LSpaceError {
    #[error("sequence must be nonempty, positive and strictly increasing")]
    InvalidSequence,
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("sample point must exceed 1")]
    InvalidAlpha,
}

/// Why a polynomial is not of L-space form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum NotOfForm {
    /// Coefficient of the centered `t^exponent` is outside `{−1, 0, 1}`.
    CoefficientOutOfRange {
        exponent: i64,
        #[serde(serialize_with = "ser_display")]
        coefficient: BigInt,
    },
    /// Odd degree or mismatched coefficients at `t^e` and `t^−e`.
    NotSymmetric,
    /// Nonzero coefficients do not alternate in sign starting from `+1`
    /// at the top.
    SignsNotAlternating { exponent: i64 },
    /// Constant term differs from `(−1)^k`.
    ConstantMismatch {
        expected: i64,
        #[serde(serialize_with = "ser_display")]
        found: BigInt,
    },
    /// Only a constant remains after centering.
    NoTerms,
}

fn ser_display<S: serde::Serializer>(x: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(x)
}

impl fmt::Display for NotOfForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NotOfForm::CoefficientOutOfRange { exponent, coefficient } => {
                write!(f, "coefficient {coefficient} of t^{exponent} is not -1, 0 or 1")
            }
            NotOfForm::NotSymmetric => f.write_str("not symmetric about its midpoint"),
            NotOfForm::SignsNotAlternating { exponent } => {
                write!(f, "signs do not alternate outward (at t^{exponent})")
            }
            NotOfForm::ConstantMismatch { expected, found } => {
                write!(f, "constant term {found}, expected {expected}")
            }
            NotOfForm::NoTerms => f.write_str("constant polynomial"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Recognition {
    Matches(LSpaceSequence),
    NotOfForm(NotOfForm),
}

/// Strictly increasing positive exponents `n_1 < … < n_k`, `k ≥ 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct LSpaceSequence(Vec<u64>);

impl LSpaceSequence {
    pub fn new(n: Vec<u64>) -> Result<Self, LSpaceError> {
        let valid = !n.is_empty() && n[0] > 0 && n.iter().tuple_windows().all(|(a, b)| a < b);
        if valid {
            Ok(Self(n))
        } else {
            Err(LSpaceError::InvalidSequence)
        }
    }

    /// Parses `"1,3,5"`.
    pub fn parse(text: &str) -> Result<Self, LSpaceError> {
        let n = text
            .split(',')
            .map(|s| s.trim().parse::<u64>().map_err(|_| LSpaceError::InvalidSequence))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(n)
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    fn sign(&self, j: usize) -> i64 {
        // (−1)^(k−j) with 1-based j
        if (self.0.len() - j).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Grouped form, e.g. `1 - (t+t^-1) + (t^3+t^-3)`.
    pub fn display_grouped(&self) -> String {
        let k = self.0.len();
        let mut out = String::from(if k.is_multiple_of(2) { "1" } else { "-1" });
        for (idx, n) in self.0.iter().enumerate() {
            let op = if self.sign(idx + 1) > 0 { '+' } else { '-' };
            if *n == 1 {
                out.push_str(&format!(" {op} (t+t^-1)"));
            } else {
                out.push_str(&format!(" {op} (t^{n}+t^-{n})"));
            }
        }
        out
    }

    /// Every sequence with at most `k_max` terms and largest term at most
    /// `n_max`, in lexicographic order by length then entries.
    pub fn enumerate(k_max: usize, n_max: u64) -> Vec<LSpaceSequence> {
        (1..=k_max)
            .flat_map(|k| (1..=n_max).combinations(k))
            .map(LSpaceSequence)
            .collect()
    }
}

impl fmt::Display for LSpaceSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0.iter().join(","))
    }
}

/// `(−1)^k + Σ_j (−1)^(k−j) (t^(n_j) + t^(−n_j))`.
pub fn lspace_poly(seq: &LSpaceSequence) -> LaurentPolynomial {
    let k = seq.len();
    let constant = if k.is_multiple_of(2) { 1 } else { -1 };
    let mut terms = vec![(0i64, BigInt::from(constant))];
    for (idx, &n) in seq.as_slice().iter().enumerate() {
        let s = BigInt::from(seq.sign(idx + 1));
        let n = n as i64;
        terms.push((n, s.clone()));
        terms.push((-n, s));
    }
    LaurentPolynomial::from_terms(terms)
}

/// Finds the sequence whose polynomial equals `±t^m · p`, after centering
/// `p` about the midpoint of its exponent range.
pub fn recognize_lspace_form(p: &LaurentPolynomial) -> Result<Recognition, LSpaceError> {
    let n = p.normalize().map_err(|_| LSpaceError::ZeroPolynomial)?;
    let c = n.poly.coeffs();
    let deg = n.poly.degree();
    let fail = |e: NotOfForm| Ok(Recognition::NotOfForm(e));

    let mid = deg / 2;
    for (i, coefficient) in c.iter().enumerate() {
        if coefficient.abs() > BigInt::one() {
            return fail(NotOfForm::CoefficientOutOfRange {
                exponent: i as i64 - mid as i64,
                coefficient: coefficient.clone(),
            });
        }
    }
    if deg % 2 == 1 || c.iter().zip(c.iter().rev()).any(|(a, b)| a != b) {
        return fail(NotOfForm::NotSymmetric);
    }
    if deg == 0 {
        return fail(NotOfForm::NoTerms);
    }

    // walk outward-in: the top term is +1, then signs alternate
    let mut exponents = Vec::new();
    let mut expected = 1i64;
    for e in (1..=mid).rev() {
        let coefficient = &c[mid + e];
        if coefficient.is_zero() {
            continue;
        }
        if *coefficient != BigInt::from(expected) {
            return fail(NotOfForm::SignsNotAlternating { exponent: e as i64 });
        }
        exponents.push(e as u64);
        expected = -expected;
    }
    exponents.reverse();
    let k = exponents.len();
    let want = if k % 2 == 0 { 1 } else { -1 };
    if c[mid] != BigInt::from(want) {
        return fail(NotOfForm::ConstantMismatch {
            expected: want,
            found: c[mid].clone(),
        });
    }
    Ok(Recognition::Matches(
        LSpaceSequence::new(exponents).expect("collected in increasing order"),
    ))
}

/// Exact positive-root check of [`lspace_poly`]; always true for a valid
/// sequence, so `false` signals a defect in the root-counting kernel.
pub fn verify_no_positive_root(seq: &LSpaceSequence) -> bool {
    let count = count_positive_real_roots(&lspace_poly(seq)).expect("lspace polynomials are nonzero");
    count.with_multiplicity == 0
}

/// The positive summands of `Δ(α)` for `α > 1`, as exact rationals.
///
/// With `f(s) = α^s + α^(−s)`: for odd `k` the terms are `f(n_1) − 1` and
/// `f(n_(i+1)) − f(n_i)` for even `i`; for even `k` they are `1` and
/// `f(n_(i+1)) − f(n_i)` for odd `i`. Their sum is `Δ(α)`.
pub fn telescoping_witness(
    seq: &LSpaceSequence,
    alpha: &ExactRational,
) -> Result<Vec<ExactRational>, LSpaceError> {
    if *alpha <= ExactRational::one() {
        return Err(LSpaceError::InvalidAlpha);
    }
    let n = seq.as_slice();
    let f = |s: u64| {
        let a = pow_rational(alpha, s);
        let inv = a.recip();
        a + inv
    };
    let mut terms = Vec::new();
    // 0-based pairs (i, i+1) correspond to 1-based (i+1, i+2)
    let first_pair = if n.len() % 2 == 1 {
        terms.push(f(n[0]) - ExactRational::one());
        1
    } else {
        terms.push(ExactRational::one());
        0
    };
    for i in (first_pair..n.len().saturating_sub(1)).step_by(2) {
        terms.push(f(n[i + 1]) - f(n[i]));
    }
    Ok(terms)
}

/// One line of an exhaustive sweep.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepLine {
    pub sequence: LSpaceSequence,
    pub positive_roots: usize,
    #[serde(serialize_with = "ser_display")]
    pub value_at_one: BigInt,
}

impl SweepLine {
    pub fn ok(&self) -> bool {
        self.positive_roots == 0 && self.value_at_one.is_one()
    }
}

impl fmt::Display for SweepLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: positive_roots={} {}",
            self.sequence,
            self.positive_roots,
            if self.ok() { "ok" } else { "FAIL" }
        )
    }
}

pub fn sweep(k_max: usize, n_max: u64) -> Vec<SweepLine> {
    LSpaceSequence::enumerate(k_max, n_max)
        .into_iter()
        .map(|sequence| {
            let p = lspace_poly(&sequence);
            let positive_roots = count_positive_real_roots(&p)
                .expect("nonzero")
                .with_multiplicity;
            SweepLine {
                value_at_one: p.value_at_one(),
                sequence,
                positive_roots,
            }
        })
        .collect()
}
