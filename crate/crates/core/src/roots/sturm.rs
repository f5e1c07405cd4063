use std::cmp::Ordering;

use crate::poly::{DensePolynomial, ExactRational};

/// An endpoint of a root-counting interval.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Bound {
    NegInf,
    Finite(ExactRational),
    PosInf,
}

impl Bound {
    pub fn int(n: i64) -> Self {
        Bound::Finite(ExactRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Self::int(0)
    }

    pub(crate) fn lt(&self, other: &Bound) -> bool {
        match (self, other) {
            (Bound::NegInf, Bound::NegInf) | (Bound::PosInf, _) | (_, Bound::NegInf) => false,
            (Bound::NegInf, _) | (_, Bound::PosInf) => true,
            (Bound::Finite(a), Bound::Finite(b)) => a < b,
        }
    }
}

impl From<ExactRational> for Bound {
    fn from(x: ExactRational) -> Self {
        Bound::Finite(x)
    }
}

/// Signed remainder sequence of a square-free polynomial, each element
/// scaled by a positive rational to be primitive.
///
/// For `a < b`, `variations(a) - variations(b)` is the number of distinct real
/// roots in `(a, b]`. Zeros are skipped when counting variations, which makes
/// the count valid even when `a` or `b` is itself a root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SturmChain {
    polys: Vec<DensePolynomial>,
}

impl SturmChain {
    /// Builds the chain of the square-free part of `p`; `p` must be nonzero.
    pub fn new(p: &DensePolynomial) -> Self {
        assert!(!p.is_zero(), "Sturm chain of the zero polynomial");
        let p0 = p.square_free_part();
        let mut polys = vec![p0.clone()];
        if p0.is_constant() {
            return Self { polys };
        }
        polys.push(p0.derivative().primitive_part());
        loop {
            let n = polys.len();
            let r = polys[n - 2].pseudo_rem_positive(&polys[n - 1]);
            if r.is_zero() {
                break;
            }
            polys.push(-r.primitive_part());
        }
        Self { polys }
    }

    pub fn polys(&self) -> &[DensePolynomial] {
        &self.polys
    }

    pub fn variations(&self, at: &Bound) -> usize {
        let signs = self.polys.iter().map(|p| match at {
            Bound::NegInf => p.sign_at_neg_inf(),
            Bound::PosInf => p.sign_at_pos_inf(),
            Bound::Finite(x) => p.sign_at(x),
        });
        count_variations(signs)
    }

    /// Distinct real roots in `(lo, hi]`; zero when `lo >= hi`.
    pub fn count(&self, lo: &Bound, hi: &Bound) -> usize {
        if !lo.lt(hi) {
            return 0;
        }
        self.variations(lo).saturating_sub(self.variations(hi))
    }

    /// Distinct real roots in the open interval `(lo, hi)`.
    pub fn count_open(&self, lo: &Bound, hi: &Bound) -> usize {
        let closed = self.count(lo, hi);
        match hi {
            Bound::Finite(x) if self.polys[0].sign_at(x) == Ordering::Equal => closed - 1,
            _ => closed,
        }
    }

    pub fn is_root(&self, x: &ExactRational) -> bool {
        self.polys[0].sign_at(x) == Ordering::Equal
    }
}

fn count_variations(signs: impl Iterator<Item = Ordering>) -> usize {
    let mut last = Ordering::Equal;
    let mut changes = 0;
    for s in signs.filter(|s| *s != Ordering::Equal) {
        if last != Ordering::Equal && s != last {
            changes += 1;
        }
        last = s;
    }
    changes
}
