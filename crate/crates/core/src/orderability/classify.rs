use std::fmt;

use serde::{Deserialize, Serialize};

use crate::poly::{LaurentPolynomial, PolyError};
use crate::roots::{count_positive_real_roots, RootCount};

use super::OrderError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Verdict {
    BiOrderable,
    NotBiOrderable,
    Unknown,
    Trivial,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::BiOrderable => "BiOrderable",
            Verdict::NotBiOrderable => "NotBiOrderable",
            Verdict::Unknown => "Unknown",
            Verdict::Trivial => "Trivial",
        })
    }
}

/// Which criterion produced a verdict. For `Unknown` this is the reason.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Rule {
    /// Fibred, and every root of Δ is real and positive: bi-orderable.
    AllRootsRealPositive,
    /// Fibred, nontrivial, and Δ has no positive real root: not bi-orderable.
    NoPositiveRealRoot,
    /// Fibred with Δ = 1: the unknot, whose group is ℤ.
    TrivialKnot,
    NotFibred,
    /// Some but not all roots real and positive; neither criterion applies.
    MixedRoots,
    /// The input could not be classified (census rows only).
    InvalidInput,
}

impl Rule {
    pub fn as_str(&self) -> &'static str {
        match self {
            Rule::AllRootsRealPositive => "all-roots-real-positive",
            Rule::NoPositiveRealRoot => "no-positive-real-root",
            Rule::TrivialKnot => "trivial-knot",
            Rule::NotFibred => "not-fibred",
            Rule::MixedRoots => "mixed-roots",
            Rule::InvalidInput => "invalid-input",
        }
    }

    pub fn description(&self) -> &'static str {
        match self {
            Rule::AllRootsRealPositive => "all roots real and positive",
            Rule::NoPositiveRealRoot => "no positive real root",
            Rule::TrivialKnot => "trivial knot",
            Rule::NotFibred => "not fibred",
            Rule::MixedRoots => "some but not all roots real and positive",
            Rule::InvalidInput => "invalid input",
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct RootSummary {
    pub positive: RootCount,
    pub degree: usize,
}

/// Serializes as the flat record
/// `{verdict, rule, positive_roots_distinct, positive_roots_with_mult, degree}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "ClassificationRecord", from = "ClassificationRecord")]
pub struct Classification {
    pub verdict: Verdict,
    pub rule: Rule,
    pub root_summary: RootSummary,
}

#[derive(Serialize, Deserialize)]
struct ClassificationRecord {
    verdict: Verdict,
    rule: Rule,
    positive_roots_distinct: usize,
    positive_roots_with_mult: usize,
    degree: usize,
}

impl From<Classification> for ClassificationRecord {
    fn from(c: Classification) -> Self {
        Self {
            verdict: c.verdict,
            rule: c.rule,
            positive_roots_distinct: c.root_summary.positive.distinct,
            positive_roots_with_mult: c.root_summary.positive.with_multiplicity,
            degree: c.root_summary.degree,
        }
    }
}

impl From<ClassificationRecord> for Classification {
    fn from(r: ClassificationRecord) -> Self {
        Self {
            verdict: r.verdict,
            rule: r.rule,
            root_summary: RootSummary {
                positive: RootCount {
                    distinct: r.positive_roots_distinct,
                    with_multiplicity: r.positive_roots_with_mult,
                },
                degree: r.degree,
            },
        }
    }
}

impl Classification {
    pub fn invalid_input() -> Self {
        Self {
            verdict: Verdict::Unknown,
            rule: Rule::InvalidInput,
            root_summary: RootSummary::default(),
        }
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ({})", self.verdict, self.rule.description())
    }
}

/// Classifies the group of a knot from its Alexander polynomial.
///
/// The input is taken up to `±t^k`. For fibred knots a polynomial with no
/// positive real root rules out bi-orderability, and one whose roots are all
/// real and positive guarantees it. Everything else is `Unknown`.
pub fn classify_fibred_knot(
    delta: &LaurentPolynomial,
    fibred: bool,
) -> Result<Classification, OrderError> {
    if delta.is_zero() {
        return Err(OrderError::ZeroPolynomial);
    }
    let violations = delta.validate_alexander(fibred).map_err(poly_err)?;
    if !violations.is_empty() {
        return Err(OrderError::InvalidAlexander(violations));
    }
    let normalized = delta.normalize().map_err(poly_err)?;
    let degree = normalized.poly.degree();
    let positive = count_positive_real_roots(delta).map_err(|_| OrderError::ZeroPolynomial)?;
    let root_summary = RootSummary { positive, degree };
    let (verdict, rule) = if !fibred {
        (Verdict::Unknown, Rule::NotFibred)
    } else if degree == 0 {
        (Verdict::Trivial, Rule::TrivialKnot)
    } else if positive.with_multiplicity == 0 {
        (Verdict::NotBiOrderable, Rule::NoPositiveRealRoot)
    } else if positive.with_multiplicity == degree {
        (Verdict::BiOrderable, Rule::AllRootsRealPositive)
    } else {
        (Verdict::Unknown, Rule::MixedRoots)
    };
    log::debug!("classified {delta} (fibred={fibred}): {verdict} by {rule}");
    Ok(Classification { verdict, rule, root_summary })
}

fn poly_err(e: PolyError) -> OrderError {
    match e {
        PolyError::ZeroPolynomial => OrderError::ZeroPolynomial,
        other => unreachable!("classification only normalizes and evaluates at 1: {other}"),
    }
}
