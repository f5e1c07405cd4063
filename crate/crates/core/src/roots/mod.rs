//! Exact real-root counting, isolation and refinement for integer
//! polynomials.
//!
//! Counting runs Sturm chains over each factor of the square-free
//! decomposition, so both distinct roots and roots with multiplicity are
//! exact. No floating point is involved.

mod isolate;
mod squarefree;
mod sturm;

pub use isolate::{isolate_roots, refine_root, IsolatingInterval};
pub use squarefree::square_free_decompose;
pub use sturm::{Bound, SturmChain};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::poly::{DensePolynomial, LaurentPolynomial, PolyError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RootError {
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("polynomial has degree zero")]
    DegreeZero,
    #[error("interval endpoints out of order")]
    InvalidInterval,
    #[error("interval does not isolate a single root")]
    NotIsolating,
}

impl From<PolyError> for RootError {
    fn from(e: PolyError) -> Self {
        match e {
            PolyError::ZeroPolynomial => RootError::ZeroPolynomial,
            other => unreachable!("unexpected polynomial error in root analysis: {other}"),
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RootCount {
    pub distinct: usize,
    pub with_multiplicity: usize,
}

/// Real roots of `p` in `(lo, hi]`.
pub fn count_roots_in(p: &DensePolynomial, lo: &Bound, hi: &Bound) -> Result<RootCount, RootError> {
    if p.is_zero() {
        return Err(RootError::ZeroPolynomial);
    }
    if !lo.lt(hi) {
        return Err(RootError::InvalidInterval);
    }
    let mut count = RootCount::default();
    for (f, m) in square_free_decompose(p)? {
        let n = SturmChain::new(&f).count(lo, hi);
        count.distinct += n;
        count.with_multiplicity += n * m as usize;
    }
    Ok(count)
}

/// Roots in `(0, ∞)` of the normalized form of `p`.
pub fn count_positive_real_roots(p: &LaurentPolynomial) -> Result<RootCount, RootError> {
    let n = p.normalize()?;
    count_roots_in(&n.poly, &Bound::zero(), &Bound::PosInf)
}

/// True iff every root of the normalized form, counted with multiplicity,
/// is real and positive.
pub fn all_roots_real_positive(p: &LaurentPolynomial) -> Result<bool, RootError> {
    let n = p.normalize()?;
    if n.poly.degree() == 0 {
        return Err(RootError::DegreeZero);
    }
    let c = count_roots_in(&n.poly, &Bound::zero(), &Bound::PosInf)?;
    Ok(c.with_multiplicity == n.poly.degree())
}

/// Positive real roots of `p` as rounded decimals paired with multiplicities.
pub fn positive_roots_decimal(
    p: &LaurentPolynomial,
    decimals: u32,
) -> Result<Vec<(String, u32)>, RootError> {
    let n = p.normalize()?;
    isolate_roots(&n.poly, &Bound::zero(), &Bound::PosInf)?
        .iter()
        .map(|iv| Ok((refine_root(&n.poly, iv, decimals)?, iv.multiplicity)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;

    fn lp(s: &str) -> LaurentPolynomial {
        parse_poly(s).unwrap()
    }

    fn d(c: &[i64]) -> DensePolynomial {
        DensePolynomial::from_i64s(c)
    }

    fn rc(distinct: usize, with_multiplicity: usize) -> RootCount {
        RootCount { distinct, with_multiplicity }
    }

    #[test]
    fn counts_on_intervals() {
        assert_eq!(count_roots_in(&d(&[1, -3, 1]), &Bound::zero(), &Bound::PosInf).unwrap(), rc(2, 2));
        assert_eq!(count_roots_in(&d(&[1, -1, 1]), &Bound::NegInf, &Bound::PosInf).unwrap(), rc(0, 0));
        assert_eq!(count_roots_in(&d(&[-2, 0, 1]), &Bound::zero(), &Bound::PosInf).unwrap(), rc(1, 1));
        assert_eq!(
            count_roots_in(&d(&[1, -2, 1]), &Bound::zero(), &Bound::PosInf).unwrap(),
            rc(1, 2)
        );
        assert!(matches!(
            count_roots_in(&d(&[1, 1]), &Bound::PosInf, &Bound::zero()),
            Err(RootError::InvalidInterval)
        ));
        assert!(matches!(
            count_roots_in(&d(&[]), &Bound::zero(), &Bound::PosInf),
            Err(RootError::ZeroPolynomial)
        ));
    }

    #[test]
    fn positive_counts_of_alexander_examples() {
        assert_eq!(count_positive_real_roots(&lp("1-3t+t^2")).unwrap(), rc(2, 2));
        assert_eq!(count_positive_real_roots(&lp("1-7t+13t^2-7t^3+t^4")).unwrap(), rc(4, 4));
        assert_eq!(count_positive_real_roots(&lp("1-t+t^3-t^5+t^6")).unwrap(), rc(0, 0));
        // t^-1 shift and sign flip do not matter
        assert_eq!(count_positive_real_roots(&lp("-t^-1+3-t")).unwrap(), rc(2, 2));
    }

    #[test]
    fn all_real_positive_examples() {
        assert!(all_roots_real_positive(&lp("1-3t+t^2")).unwrap());
        assert!(all_roots_real_positive(&lp("1-6t+11t^2-6t^3+t^4")).unwrap());
        assert!(!all_roots_real_positive(&lp("1-t+t^3-t^5+t^6")).unwrap());
        assert!(matches!(all_roots_real_positive(&lp("5")), Err(RootError::DegreeZero)));
    }

    #[test]
    fn eight_twelve_decimals() {
        let roots = positive_roots_decimal(&lp("1-7t+13t^2-7t^3+t^4"), 5).unwrap();
        let shown: Vec<&str> = roots.iter().map(|(s, _)| s.as_str()).collect();
        assert_eq!(shown, ["0.22778", "0.54411", "1.83785", "4.39026"]);
    }

    #[test]
    fn lehmer_salem_number() {
        let lehmer = lp("1+t-t^3-t^4-t^5-t^6-t^7+t^9+t^10");
        let roots = positive_roots_decimal(&lehmer, 5).unwrap();
        assert_eq!(roots.len(), 2);
        assert_eq!(roots[1].0, "1.17628");
    }
}
