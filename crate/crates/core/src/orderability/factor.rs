//! Factorization over the integers by Kronecker's interpolation method.
//!
//! For each candidate degree `d` the search picks `d + 1` integer sample
//! points where the polynomial takes values with few divisors, then tries
//! every interpolant through a choice of signed divisors. The smallest degree
//! factor found is necessarily irreducible. Interpolants are pruned early by
//! the divisibility `(x_i - x_j) | (g(x_i) - g(x_j))` that every integer
//! polynomial satisfies.

use num_bigint::BigInt;
use num_integer::{Integer, Roots};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::poly::DensePolynomial;
use crate::roots::square_free_decompose;

/// Default degree limit for [`factor_over_integers`].
pub const DEFAULT_DEGREE_CAP: usize = 10;

/// `input = content · Π factors`, each factor irreducible over the integers,
/// primitive with positive leading coefficient, repeated per multiplicity and
/// sorted by degree then coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub content: BigInt,
    pub factors: Vec<DensePolynomial>,
}

impl Factorization {
    pub fn product(&self) -> DensePolynomial {
        self.factors
            .iter()
            .fold(DensePolynomial::constant(self.content.clone()), |acc, f| &acc * f)
    }

    /// Distinct factors with their multiplicities, in order.
    pub fn grouped(&self) -> Vec<(DensePolynomial, u32)> {
        let mut out: Vec<(DensePolynomial, u32)> = Vec::new();
        for f in &self.factors {
            match out.last_mut() {
                Some((g, m)) if g == f => *m += 1,
                _ => out.push((f.clone(), 1)),
            }
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FactorError {
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("degree {degree} exceeds factorization cap {cap}")]
    DegreeCapExceeded { degree: usize, cap: usize },
}

pub fn factor_over_integers(
    p: &DensePolynomial,
    degree_cap: usize,
) -> Result<Factorization, FactorError> {
    if p.is_zero() {
        return Err(FactorError::ZeroPolynomial);
    }
    if p.degree() > degree_cap {
        return Err(FactorError::DegreeCapExceeded {
            degree: p.degree(),
            cap: degree_cap,
        });
    }
    let mut content = p.content();
    if p.leading().unwrap().is_negative() {
        content = -content;
    }
    let mut factors = Vec::new();
    for (f, m) in square_free_decompose(p).expect("nonzero") {
        for g in factor_square_free(f) {
            factors.extend(std::iter::repeat_n(g, m as usize));
        }
    }
    factors.sort_by(|a, b| {
        a.degree()
            .cmp(&b.degree())
            .then_with(|| a.coeffs().iter().rev().cmp(b.coeffs().iter().rev()))
    });
    Ok(Factorization { content, factors })
}

fn factor_square_free(mut f: DensePolynomial) -> Vec<DensePolynomial> {
    let mut out = Vec::new();
    let mut d = 1;
    while f.degree() >= 2 * d {
        match find_factor_of_degree(&f, d) {
            Some(g) => {
                f = f.div_exact(&g).expect("verified divisor").normalized_primitive();
                out.push(g);
            }
            None => d += 1,
        }
    }
    if !f.is_constant() {
        out.push(f);
    }
    out
}

fn find_factor_of_degree(f: &DensePolynomial, d: usize) -> Option<DensePolynomial> {
    let points = sample_points(f, d + 1);
    // an integer root gives a linear factor directly
    if let Some((x, _)) = points.iter().find(|(_, v)| v.is_zero()) {
        return Some(DensePolynomial::linear(BigInt::one(), -x));
    }
    let choices: Vec<Vec<BigInt>> = points
        .iter()
        .enumerate()
        .map(|(i, (_, v))| {
            let pos = divisors(&v.abs());
            if i == 0 {
                // the factor is only determined up to sign
                pos
            } else {
                pos.iter().flat_map(|q| [q.clone(), -q]).collect()
            }
        })
        .collect();
    let xs: Vec<BigInt> = points.into_iter().map(|(x, _)| x).collect();
    let mut values = Vec::with_capacity(xs.len());
    search(f, d, &xs, &choices, &mut values)
}

fn search(
    f: &DensePolynomial,
    d: usize,
    xs: &[BigInt],
    choices: &[Vec<BigInt>],
    values: &mut Vec<BigInt>,
) -> Option<DensePolynomial> {
    let i = values.len();
    if i == xs.len() {
        let g = interpolate(xs, values)?;
        if g.degree() != d || g.content() != BigInt::one() {
            return None;
        }
        let g = g.normalized_primitive();
        return f.div_exact(&g).is_ok().then_some(g);
    }
    for v in &choices[i] {
        let compatible = (0..i).all(|j| (v - &values[j]).is_multiple_of(&(&xs[i] - &xs[j])));
        if !compatible {
            continue;
        }
        values.push(v.clone());
        if let Some(g) = search(f, d, xs, choices, values) {
            return Some(g);
        }
        values.pop();
    }
    None
}

/// Integer points `0, 1, -1, 2, -2, …` ranked by how many divisors the value
/// of `f` has there; zeros come first.
fn sample_points(f: &DensePolynomial, count: usize) -> Vec<(BigInt, BigInt)> {
    let pool = (2 * count + 4) as i64;
    let mut candidates: Vec<(usize, i64, BigInt)> = (0..pool)
        .map(|k| if k % 2 == 0 { -(k / 2) } else { k / 2 + 1 })
        .map(|x| {
            let v = f.eval_int(&BigInt::from(x));
            let weight = if v.is_zero() { 0 } else { divisor_count(&v.abs()) };
            (weight, x, v)
        })
        .collect();
    candidates.sort_by_key(|(w, x, _)| (*w, x.abs(), *x));
    candidates
        .into_iter()
        .take(count)
        .map(|(_, x, v)| (BigInt::from(x), v))
        .collect()
}

fn divisor_count(n: &BigInt) -> usize {
    divisors(n).len()
}

/// Positive divisors of `n > 0`, ascending.
fn divisors(n: &BigInt) -> Vec<BigInt> {
    if let Some(small) = n.to_u64() {
        let mut lo = Vec::new();
        let mut hi = Vec::new();
        let r = small.sqrt();
        for k in 1..=r {
            if small % k == 0 {
                lo.push(BigInt::from(k));
                if k != small / k {
                    hi.push(BigInt::from(small / k));
                }
            }
        }
        lo.extend(hi.into_iter().rev());
        return lo;
    }
    let mut lo = Vec::new();
    let mut hi = Vec::new();
    let r = n.sqrt();
    let mut k = BigInt::one();
    while k <= r {
        if n.is_multiple_of(&k) {
            let q = n / &k;
            if q != k {
                hi.push(q);
            }
            lo.push(k.clone());
        }
        k += 1;
    }
    lo.extend(hi.into_iter().rev());
    lo
}

/// Newton interpolation; `None` unless every coefficient is an integer.
fn interpolate(xs: &[BigInt], ys: &[BigInt]) -> Option<DensePolynomial> {
    let n = xs.len();
    let mut dd: Vec<BigRational> = ys.iter().cloned().map(BigRational::from_integer).collect();
    for level in 1..n {
        for i in (level..n).rev() {
            let num = &dd[i] - &dd[i - 1];
            let den = BigRational::from_integer(&xs[i] - &xs[i - level]);
            dd[i] = num / den;
        }
    }
    // expand Σ dd[k] Π_{j<k} (t - x_j), highest term first
    let mut acc: Vec<BigRational> = vec![dd[n - 1].clone()];
    for k in (0..n - 1).rev() {
        let mut next = vec![BigRational::zero(); acc.len() + 1];
        for (i, c) in acc.iter().enumerate() {
            next[i + 1] += c;
            next[i] -= c * BigRational::from_integer(xs[k].clone());
        }
        next[0] += &dd[k];
        acc = next;
    }
    let coeffs: Option<Vec<BigInt>> = acc
        .into_iter()
        .map(|c| c.is_integer().then(|| c.to_integer()))
        .collect();
    Some(DensePolynomial::new(coeffs?))
}
