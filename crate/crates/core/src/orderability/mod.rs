//! Decision layer: knot-group classification from Alexander polynomials and
//! eigenvalue criteria for automorphisms given by their action on rational
//! homology.
//!
//! An automorphism that preserves a bi-ordering of a nontrivial finitely
//! generated group must have a positive real eigenvalue
//! ([`necessary_condition`]). For automorphisms of free abelian groups the
//! exact criterion is per irreducible factor of the characteristic
//! polynomial: each factor needs a positive real root ([`full_criterion`]).

mod classify;
mod factor;
mod matrix;

pub use classify::{classify_fibred_knot, Classification, RootSummary, Rule, Verdict};
pub use factor::{factor_over_integers, FactorError, Factorization, DEFAULT_DEGREE_CAP};
pub use matrix::{IntegerMatrix, MatrixError};

use serde::Serialize;
use thiserror::Error;

use crate::poly::{DensePolynomial, Violation};
use crate::roots::{count_roots_in, Bound};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrderError {
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("not a valid Alexander polynomial: {}", list(.0))]
    InvalidAlexander(Vec<Violation>),
    #[error("matrix is singular")]
    SingularMatrix,
}

fn list(v: &[Violation]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FactorReport {
    #[serde(serialize_with = "ser_display")]
    pub factor: DensePolynomial,
    pub multiplicity: u32,
    pub has_positive_root: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EigenReport {
    #[serde(serialize_with = "ser_display")]
    pub char_poly: DensePolynomial,
    pub has_positive_real_eigenvalue: bool,
    /// Present only when the characteristic polynomial was factored.
    pub irreducible_factors: Option<Vec<FactorReport>>,
    /// True iff every irreducible factor has a positive real root.
    pub full_criterion: Option<bool>,
}

fn ser_display<S: serde::Serializer>(p: &DensePolynomial, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(p)
}

fn has_positive_root(p: &DensePolynomial) -> bool {
    count_roots_in(p, &Bound::zero(), &Bound::PosInf)
        .expect("characteristic polynomials are monic, never zero")
        .distinct
        > 0
}

/// Whether `m` has a positive real eigenvalue. `false` means no bi-ordering
/// of a nontrivial finitely generated group inducing this action on
/// homology can be preserved.
pub fn necessary_condition(m: &IntegerMatrix) -> EigenReport {
    let char_poly = m.char_poly();
    EigenReport {
        has_positive_real_eigenvalue: has_positive_root(&char_poly),
        char_poly,
        irreducible_factors: None,
        full_criterion: None,
    }
}

/// Per-factor criterion for a nonsingular `m`. When the characteristic
/// polynomial is above `degree_cap` the factor fields stay `None`.
pub fn full_criterion(m: &IntegerMatrix, degree_cap: usize) -> Result<EigenReport, OrderError> {
    let mut report = necessary_condition(m);
    if report.char_poly.constant_term() == 0.into() {
        return Err(OrderError::SingularMatrix);
    }
    match factor_over_integers(&report.char_poly, degree_cap) {
        Ok(f) => {
            let factors: Vec<FactorReport> = f
                .grouped()
                .into_iter()
                .map(|(factor, multiplicity)| FactorReport {
                    has_positive_root: has_positive_root(&factor),
                    factor,
                    multiplicity,
                })
                .collect();
            report.full_criterion = Some(factors.iter().all(|f| f.has_positive_root));
            report.irreducible_factors = Some(factors);
        }
        Err(FactorError::DegreeCapExceeded { degree, cap }) => {
            log::info!("characteristic polynomial of degree {degree} above cap {cap}; not factored");
        }
        Err(FactorError::ZeroPolynomial) => unreachable!("monic"),
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> IntegerMatrix {
        IntegerMatrix::from_i64_rows(rows).unwrap()
    }

    fn companion(c: &[i64]) -> IntegerMatrix {
        IntegerMatrix::companion(&DensePolynomial::from_i64s(c)).unwrap()
    }

    #[test]
    fn necessary_condition_examples() {
        assert!(necessary_condition(&m(&[&[2, 1], &[1, 1]])).has_positive_real_eigenvalue);
        assert!(!necessary_condition(&m(&[&[0, -1], &[1, 0]])).has_positive_real_eigenvalue);
        assert!(!necessary_condition(&m(&[&[-2, 0], &[0, -3]])).has_positive_real_eigenvalue);
    }

    #[test]
    fn full_criterion_examples() {
        let r = full_criterion(&m(&[&[2, 1], &[1, 1]]), DEFAULT_DEGREE_CAP).unwrap();
        assert_eq!(r.full_criterion, Some(true));
        assert_eq!(r.irreducible_factors.unwrap().len(), 1);

        let r = full_criterion(&companion(&[1, 1, 1]), DEFAULT_DEGREE_CAP).unwrap();
        assert_eq!(r.full_criterion, Some(false));

        // (t^2 - 3t + 1)(t^2 + 1) = t^4 - 3t^3 + 2t^2 - 3t + 1
        let r = full_criterion(&companion(&[1, -3, 2, -3, 1]), DEFAULT_DEGREE_CAP).unwrap();
        assert!(r.has_positive_real_eigenvalue);
        assert_eq!(r.full_criterion, Some(false));
        let flags: Vec<(String, bool)> = r
            .irreducible_factors
            .unwrap()
            .into_iter()
            .map(|f| (f.factor.to_string(), f.has_positive_root))
            .collect();
        assert_eq!(flags, [("1-3t+t^2".to_string(), true), ("1+t^2".to_string(), false)]);
    }

    #[test]
    fn singular_and_capped() {
        assert_eq!(
            full_criterion(&m(&[&[1, 2], &[2, 4]]), DEFAULT_DEGREE_CAP),
            Err(OrderError::SingularMatrix)
        );
        let r = full_criterion(&IntegerMatrix::identity(3), 2).unwrap();
        assert!(r.has_positive_real_eigenvalue);
        assert_eq!(r.full_criterion, None);
    }
}
