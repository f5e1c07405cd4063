use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::poly::DensePolynomial;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MatrixError {
    #[error("matrix must have at least one row")]
    Empty,
    #[error("row {row} has {len} entries, expected {expected}")]
    NotSquare { row: usize, len: usize, expected: usize },
    #[error("bad matrix entry {0:?}")]
    BadEntry(String),
    #[error("companion matrix needs a monic polynomial of degree at least 1")]
    NotMonic,
}

/// Square integer matrix, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct IntegerMatrix {
    n: usize,
    entries: Vec<BigInt>,
}

impl IntegerMatrix {
    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Result<Self, MatrixError> {
        let n = rows.len();
        if n == 0 {
            return Err(MatrixError::Empty);
        }
        let mut entries = Vec::with_capacity(n * n);
        for (row, r) in rows.into_iter().enumerate() {
            if r.len() != n {
                return Err(MatrixError::NotSquare { row, len: r.len(), expected: n });
            }
            entries.extend(r);
        }
        Ok(Self { n, entries })
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Result<Self, MatrixError> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
    }

    /// Parses `"a,b;c,d"` (rows separated by `;`, entries by `,`).
    pub fn parse(text: &str) -> Result<Self, MatrixError> {
        let rows = text
            .split(';')
            .map(|row| {
                row.split(',')
                    .map(|e| {
                        let e = e.trim();
                        e.parse::<BigInt>()
                            .map_err(|_| MatrixError::BadEntry(e.to_string()))
                    })
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_rows(rows)
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self { n, entries: vec![BigInt::zero(); n * n] };
        for i in 0..n {
            m.entries[i * n + i] = BigInt::one();
        }
        m
    }

    /// Companion matrix of a monic polynomial; its characteristic polynomial
    /// is the input.
    pub fn companion(p: &DensePolynomial) -> Result<Self, MatrixError> {
        if p.is_constant() || !p.leading().unwrap().is_one() {
            return Err(MatrixError::NotMonic);
        }
        let n = p.degree();
        let mut m = Self { n, entries: vec![BigInt::zero(); n * n] };
        for i in 1..n {
            m.entries[i * n + (i - 1)] = BigInt::one();
        }
        for i in 0..n {
            m.entries[i * n + (n - 1)] = -p.coeff(i);
        }
        Ok(m)
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.n + j]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[BigInt]> {
        self.entries.chunks(self.n)
    }

    pub fn trace(&self) -> BigInt {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    fn add_scalar(&mut self, c: &BigInt) {
        for i in 0..self.n {
            self.entries[i * self.n + i] += c;
        }
    }

    /// Characteristic polynomial `det(λI − M)`, monic of degree `n`,
    /// by the Faddeev–LeVerrier recurrence with exact integer divisions.
    pub fn char_poly(&self) -> DensePolynomial {
        let n = self.n;
        let mut coeffs = vec![BigInt::zero(); n + 1];
        coeffs[n] = BigInt::one();
        // running matrix M_k with M_1 = I
        let mut mk = Self::identity(n);
        for k in 1..=n {
            let am = self * &mk;
            let c = -am.trace() / BigInt::from(k);
            coeffs[n - k] = c.clone();
            mk = am;
            mk.add_scalar(&c);
        }
        DensePolynomial::new(coeffs)
    }

    /// `det(M) = (−1)^n χ(0)`.
    pub fn determinant(&self) -> BigInt {
        let c0 = self.char_poly().constant_term();
        if self.n % 2 == 1 {
            -c0
        } else {
            c0
        }
    }
}

impl std::ops::Mul for &IntegerMatrix {
    type Output = IntegerMatrix;
    fn mul(self, rhs: Self) -> IntegerMatrix {
        assert_eq!(self.n, rhs.n, "dimension mismatch");
        let n = self.n;
        let mut out = vec![BigInt::zero(); n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    out[i * n + j] += a * rhs.get(k, j);
                }
            }
        }
        IntegerMatrix { n, entries: out }
    }
}

impl fmt::Display for IntegerMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows().enumerate() {
            if i > 0 {
                f.write_str(";")?;
            }
            for (j, x) in row.iter().enumerate() {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{x}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntegerMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntegerMatrix[{self}]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> IntegerMatrix {
        IntegerMatrix::from_i64_rows(rows).unwrap()
    }

    fn p(c: &[i64]) -> DensePolynomial {
        DensePolynomial::from_i64s(c)
    }

    /// Laplace expansion of `det(λI − M)` with polynomial entries; an
    /// independent route to the characteristic polynomial.
    fn char_poly_by_cofactors(a: &IntegerMatrix) -> DensePolynomial {
        let n = a.dim();
        let entries: Vec<Vec<DensePolynomial>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let c = DensePolynomial::constant(-a.get(i, j).clone());
                        if i == j {
                            &c + &p(&[0, 1])
                        } else {
                            c
                        }
                    })
                    .collect()
            })
            .collect();
        fn det(m: &[Vec<DensePolynomial>]) -> DensePolynomial {
            if m.len() == 1 {
                return m[0][0].clone();
            }
            let mut acc = DensePolynomial::zero();
            for col in 0..m.len() {
                let minor: Vec<Vec<DensePolynomial>> = m[1..]
                    .iter()
                    .map(|r| {
                        r.iter()
                            .enumerate()
                            .filter(|(j, _)| *j != col)
                            .map(|(_, x)| x.clone())
                            .collect()
                    })
                    .collect();
                let term = &m[0][col] * &det(&minor);
                acc = if col % 2 == 0 { &acc + &term } else { &acc - &term };
            }
            acc
        }
        det(&entries)
    }

    #[test]
    fn small_char_polys() {
        // det([[λ-2, -1], [-1, λ-1]]) = λ² - 3λ + 1
        assert_eq!(m(&[&[2, 1], &[1, 1]]).char_poly(), p(&[1, -3, 1]));
        assert_eq!(m(&[&[0, -1], &[1, 0]]).char_poly(), p(&[1, 0, 1]));
        assert_eq!(IntegerMatrix::identity(3).char_poly(), p(&[-1, 1]).pow(3));
    }

    #[test]
    fn matches_cofactor_expansion() {
        let a = m(&[&[3, -1, 4, 1], &[5, 9, -2, 6], &[5, 3, 5, -8], &[9, -7, 9, 3]]);
        assert_eq!(a.char_poly(), char_poly_by_cofactors(&a));
        let b = m(&[&[0, 0, 7], &[1, 0, -2], &[0, 1, 11]]);
        assert_eq!(b.char_poly(), char_poly_by_cofactors(&b));
    }

    #[test]
    fn companion_round_trip() {
        let q = p(&[5, -4, 0, 2, 1]);
        assert_eq!(IntegerMatrix::companion(&q).unwrap().char_poly(), q);
        assert!(IntegerMatrix::companion(&p(&[1, 2])).is_err());
    }

    #[test]
    fn parse_and_errors() {
        assert_eq!(IntegerMatrix::parse("2,1;1,1").unwrap(), m(&[&[2, 1], &[1, 1]]));
        assert_eq!(IntegerMatrix::parse(" -2 , 0 ; 0 , -3 ").unwrap().to_string(), "-2,0;0,-3");
        assert!(matches!(IntegerMatrix::parse("1,2;3"), Err(MatrixError::NotSquare { .. })));
        assert!(matches!(IntegerMatrix::parse("1,x"), Err(MatrixError::BadEntry(_))));
        assert_eq!(m(&[&[2, 1], &[1, 1]]).determinant(), BigInt::one());
        assert_eq!(m(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 10]]).determinant(), BigInt::from(-3));
    }
}
