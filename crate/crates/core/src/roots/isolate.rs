use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};
use serde::Serialize;

use crate::poly::{DensePolynomial, ExactRational};

use super::{square_free_decompose, Bound, RootError, SturmChain};

/// An open interval `(lo, hi)` holding exactly one distinct real root.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IsolatingInterval {
    #[serde(serialize_with = "ser_rational")]
    pub lo: ExactRational,
    #[serde(serialize_with = "ser_rational")]
    pub hi: ExactRational,
    pub multiplicity: u32,
}

fn ser_rational<S: serde::Serializer>(x: &ExactRational, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(x)
}

/// Rational strictly larger than the absolute value of every root.
fn cauchy_bound(p: &DensePolynomial) -> ExactRational {
    let lead = p.leading().expect("nonzero").abs();
    let max = p.coeffs()[..p.degree()]
        .iter()
        .map(Signed::abs)
        .max()
        .unwrap_or_default();
    ExactRational::one() + ExactRational::new(max, lead)
}

fn half() -> ExactRational {
    ExactRational::new(BigInt::one(), BigInt::from(2))
}

/// A point strictly between `a` and `b` that is not a root of the chain.
fn split_point(chain: &SturmChain, a: &ExactRational, b: &ExactRational) -> ExactRational {
    let w = b - a;
    let mut m = a + &w * half();
    let mut step = &w * half() * half();
    while chain.is_root(&m) {
        m = a + &w * half() + &step;
        step *= half();
    }
    m
}

/// Disjoint isolating intervals for the real roots of `p` in `(lo, hi]`,
/// sorted left to right, with multiplicities from the square-free
/// decomposition of `p`.
pub fn isolate_roots(
    p: &DensePolynomial,
    lo: &Bound,
    hi: &Bound,
) -> Result<Vec<IsolatingInterval>, RootError> {
    if p.is_zero() {
        return Err(RootError::ZeroPolynomial);
    }
    if !lo.lt(hi) {
        return Err(RootError::InvalidInterval);
    }
    let factors: Vec<(SturmChain, u32)> = square_free_decompose(p)?
        .into_iter()
        .map(|(f, m)| (SturmChain::new(&f), m))
        .collect();
    let chain = SturmChain::new(p);
    if chain.polys()[0].is_constant() {
        return Ok(Vec::new());
    }

    let bound = cauchy_bound(&chain.polys()[0]);
    let a0 = match lo {
        Bound::Finite(x) if *x > -&bound => x.clone(),
        Bound::PosInf => unreachable!("lo < hi"),
        _ => -&bound,
    };
    let (b0, hi_is_user_root) = match hi {
        Bound::Finite(x) if *x < bound => (x.clone(), chain.is_root(x)),
        Bound::NegInf => unreachable!("lo < hi"),
        _ => (bound.clone(), false),
    };
    if a0 >= b0 {
        return Ok(Vec::new());
    }

    let mut found = Vec::new();
    let mut stack = vec![(a0, b0)];
    while let Some((a, b)) = stack.pop() {
        let n = chain.count(&Bound::Finite(a.clone()), &Bound::Finite(b.clone()));
        match n {
            0 => {}
            1 => found.push((a, b)),
            _ => {
                let m = split_point(&chain, &a, &b);
                stack.push((m.clone(), b));
                stack.push((a, m));
            }
        }
    }
    found.sort_by(|x, y| x.0.cmp(&y.0));

    if hi_is_user_root {
        // the last interval ends at a root; extend it past the root
        let last = found.last_mut().expect("hi is a root in range");
        let r = last.1.clone();
        let mut step = &r - &last.0;
        while chain.count(&Bound::Finite(r.clone()), &Bound::Finite(&r + &step)) > 0 {
            step *= half();
        }
        last.1 = &r + &step;
    }

    Ok(found
        .into_iter()
        .map(|(lo, hi)| {
            let (l, h) = (Bound::Finite(lo.clone()), Bound::Finite(hi.clone()));
            let multiplicity = factors
                .iter()
                .find(|(c, _)| c.count_open(&l, &h) == 1)
                .map(|(_, m)| *m)
                .expect("every root belongs to one square-free factor");
            IsolatingInterval { lo, hi, multiplicity }
        })
        .collect())
}

/// Decimal value of the root isolated by `iv`, correctly rounded to
/// `decimals` places (half away from zero).
pub fn refine_root(
    p: &DensePolynomial,
    iv: &IsolatingInterval,
    decimals: u32,
) -> Result<String, RootError> {
    if p.is_zero() {
        return Err(RootError::ZeroPolynomial);
    }
    let chain = SturmChain::new(p);
    let mut a = iv.lo.clone();
    let mut b = iv.hi.clone();
    if a >= b
        || chain.count_open(&Bound::Finite(a.clone()), &Bound::Finite(b.clone())) != 1
    {
        return Err(RootError::NotIsolating);
    }
    let scale = ExactRational::from_integer(BigInt::from(10).pow(decimals));
    let tol = (&scale * ExactRational::from_integer(10.into())).recip();

    // invariant: exactly one root r with a < r < b
    let left_of = |a: &ExactRational, m: &ExactRational| {
        chain.count(&Bound::Finite(a.clone()), &Bound::Finite(m.clone())) == 1
    };
    let cell = |a: &mut ExactRational, b: &mut ExactRational| -> BigInt {
        while &*b - &*a >= tol {
            let m = &*a + (&*b - &*a) * half();
            if chain.is_root(&m) {
                return round_cell(&m, &scale);
            }
            if left_of(a, &m) {
                *b = m;
            } else {
                *a = m;
            }
        }
        loop {
            let ka = round_cell(a, &scale);
            let kb = round_cell(b, &scale);
            if ka == kb {
                return ka;
            }
            if &kb - &ka == BigInt::one() {
                let beta = (ExactRational::from_integer(ka.clone()) + half()) / &scale;
                if chain.is_root(&beta) {
                    return round_cell(&beta, &scale);
                }
                return if left_of(a, &beta) { ka } else { kb };
            }
            let m = &*a + (&*b - &*a) * half();
            if chain.is_root(&m) {
                return round_cell(&m, &scale);
            }
            if left_of(a, &m) {
                *b = m;
            } else {
                *a = m;
            }
        }
    };
    let k = cell(&mut a, &mut b);
    Ok(format_scaled(&k, decimals))
}

/// `sign(x) · floor(|x|·scale + 1/2)`.
fn round_cell(x: &ExactRational, scale: &ExactRational) -> BigInt {
    let y = x.abs() * scale + half();
    let k = y.numer().div_floor(y.denom());
    if x.is_negative() {
        -k
    } else {
        k
    }
}

fn format_scaled(k: &BigInt, decimals: u32) -> String {
    let digits = k.abs().to_string();
    let d = decimals as usize;
    let padded = if digits.len() <= d {
        format!("{}{}", "0".repeat(d + 1 - digits.len()), digits)
    } else {
        digits
    };
    let (int, frac) = padded.split_at(padded.len() - d);
    let sign = if k.is_negative() { "-" } else { "" };
    if d == 0 {
        format!("{sign}{int}")
    } else {
        format!("{sign}{int}.{frac}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> DensePolynomial {
        DensePolynomial::from_i64s(c)
    }

    fn r(n: i64, d: i64) -> ExactRational {
        ExactRational::new(n.into(), d.into())
    }

    fn contains(iv: &IsolatingInterval, x: f64) -> bool {
        let lo = iv.lo.numer().to_string().parse::<f64>().unwrap()
            / iv.lo.denom().to_string().parse::<f64>().unwrap();
        let hi = iv.hi.numer().to_string().parse::<f64>().unwrap()
            / iv.hi.denom().to_string().parse::<f64>().unwrap();
        lo < x && x < hi
    }

    #[test]
    fn isolates_golden_ratio_pair() {
        // quadratic formula: (3 ± √5)/2
        let small = (3.0 - 5f64.sqrt()) / 2.0;
        let large = (3.0 + 5f64.sqrt()) / 2.0;
        let ivs = isolate_roots(&p(&[1, -3, 1]), &Bound::zero(), &Bound::PosInf).unwrap();
        assert_eq!(ivs.len(), 2);
        assert!(contains(&ivs[0], small) && contains(&ivs[1], large));
        assert!(ivs[0].hi <= ivs[1].lo);
        assert_eq!(refine_root(&p(&[1, -3, 1]), &ivs[0], 5).unwrap(), "0.38197");
        assert_eq!(refine_root(&p(&[1, -3, 1]), &ivs[1], 5).unwrap(), "2.61803");
    }

    #[test]
    fn linear_and_complex_cases() {
        let ivs = isolate_roots(&p(&[-1, 1]), &Bound::NegInf, &Bound::PosInf).unwrap();
        assert_eq!(ivs.len(), 1);
        assert!(ivs[0].lo < r(1, 1) && r(1, 1) < ivs[0].hi);
        assert_eq!(ivs[0].multiplicity, 1);
        assert!(isolate_roots(&p(&[1, -1, 1]), &Bound::zero(), &Bound::PosInf)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn exact_rational_roots_and_multiplicity() {
        // (t - 1)^2 (2t + 1)
        let q = &p(&[-1, 1]).pow(2) * &p(&[1, 2]);
        let ivs = isolate_roots(&q, &Bound::NegInf, &Bound::PosInf).unwrap();
        assert_eq!(ivs.iter().map(|i| i.multiplicity).collect::<Vec<_>>(), [1, 2]);
        assert_eq!(refine_root(&q, &ivs[0], 3).unwrap(), "-0.500");
        assert_eq!(refine_root(&q, &ivs[1], 5).unwrap(), "1.00000");
    }

    #[test]
    fn user_endpoint_on_a_root() {
        // roots 0, 1, 2; (0, 2] holds 1 and 2
        let q = &(&p(&[0, 1]) * &p(&[-1, 1])) * &p(&[-2, 1]);
        let ivs = isolate_roots(&q, &Bound::zero(), &Bound::int(2)).unwrap();
        assert_eq!(ivs.len(), 2);
        assert!(ivs[1].lo < r(2, 1) && r(2, 1) < ivs[1].hi);
        assert!(ivs[0].hi <= ivs[1].lo);
        assert_eq!(refine_root(&q, &ivs[1], 2).unwrap(), "2.00");
    }

    #[test]
    fn half_way_roots_round_away_from_zero() {
        // 2t - 1 and 2t + 1 at 0 decimals, 20t - 1 at one decimal
        let iv = |lo: i64, hi: i64| IsolatingInterval { lo: r(lo, 1), hi: r(hi, 1), multiplicity: 1 };
        assert_eq!(refine_root(&p(&[-1, 2]), &iv(0, 1), 0).unwrap(), "1");
        assert_eq!(refine_root(&p(&[1, 2]), &iv(-1, 0), 0).unwrap(), "-1");
        assert_eq!(refine_root(&p(&[-1, 20]), &iv(0, 1), 1).unwrap(), "0.1");
        assert_eq!(refine_root(&p(&[-1, 40]), &iv(0, 1), 1).unwrap(), "0.0");
    }

    #[test]
    fn rejects_non_isolating_intervals() {
        let q = p(&[1, -3, 1]);
        let bad = IsolatingInterval { lo: r(0, 1), hi: r(3, 1), multiplicity: 1 };
        assert!(matches!(refine_root(&q, &bad, 5), Err(RootError::NotIsolating)));
        let empty = IsolatingInterval { lo: r(1, 1), hi: r(2, 1), multiplicity: 1 };
        assert!(matches!(refine_root(&q, &empty, 5), Err(RootError::NotIsolating)));
    }

    #[test]
    fn formats_scaled_integers() {
        assert_eq!(format_scaled(&BigInt::from(38197), 5), "0.38197");
        assert_eq!(format_scaled(&BigInt::from(-5), 3), "-0.005");
        assert_eq!(format_scaled(&BigInt::from(439026), 5), "4.39026");
        assert_eq!(format_scaled(&BigInt::from(7), 0), "7");
    }
}
