use crate::poly::DensePolynomial;

use super::RootError;

/// Yun's square-free decomposition over the integers.
///
/// Returns `(factor, multiplicity)` pairs with `p = c · Π factor^multiplicity`
/// for an integer `c`. Factors are pairwise coprime, square-free, primitive
/// with positive leading coefficient, and listed by increasing multiplicity.
/// A constant input has no factors.
pub fn square_free_decompose(p: &DensePolynomial) -> Result<Vec<(DensePolynomial, u32)>, RootError> {
    if p.is_zero() {
        return Err(RootError::ZeroPolynomial);
    }
    let f = p.normalized_primitive();
    if f.is_constant() {
        return Ok(Vec::new());
    }

    let df = f.derivative();
    let g = f.gcd(&df);
    let mut a = exact(&f, &g);
    let mut b = exact(&df, &g);
    let mut c = &b - &a.derivative();
    let mut out = Vec::new();
    let mut i = 1u32;
    while !a.is_constant() {
        let d = a.gcd(&c);
        if !d.is_constant() {
            out.push((d.clone(), i));
        }
        a = exact(&a, &d);
        b = exact(&c, &d);
        c = &b - &a.derivative();
        i += 1;
    }
    Ok(out)
}

fn exact(n: &DensePolynomial, d: &DensePolynomial) -> DensePolynomial {
    n.div_exact(d)
        .expect("primitive gcd divides exactly over the integers")
}
