//! Sylvester resultants of univariate polynomials with CoeffPoly
//! coefficients, taken at the written degrees (no exponent-gcd division),
//! which realizes the cycle convention for edge resultants.

use crate::error::{Error, Result};
use crate::poly::CoeffPoly;
use crate::resultant::det::determinant;

/// Trims actual zero leading coefficients; the written degree is the top
/// declared exponent with a nonzero coefficient polynomial.
fn written(coeffs: &[CoeffPoly]) -> Vec<CoeffPoly> {
    let mut v = coeffs.to_vec();
    while v.len() > 1 && v.last().unwrap().is_zero() {
        v.pop();
    }
    v
}

/// Resultant of f = sum f[k] t^k and g = sum g[k] t^k as the determinant of
/// the (deg f + deg g) Sylvester matrix, sign-normalized.
pub fn sylvester_resultant(f: &[CoeffPoly], g: &[CoeffPoly]) -> Result<CoeffPoly> {
    let f = written(f);
    let g = written(g);
    let m = f.len() - 1;
    let n = g.len() - 1;
    if m == 0 && n == 0 {
        return Err(Error::NoVariableToEliminate);
    }
    if m == 0 {
        return Ok(f[0].pow(n as u32).normalize_sign());
    }
    if n == 0 {
        return Ok(g[0].pow(m as u32).normalize_sign());
    }
    let size = m + n;
    let mut mat = vec![vec![CoeffPoly::zero(); size]; size];
    // Columns track exponent size-1-j; row i of the first block is t^(n-1-i) f.
    for i in 0..n {
        for (k, c) in f.iter().enumerate() {
            mat[i][size - 1 - (k + n - 1 - i)] = c.clone();
        }
    }
    for i in 0..m {
        for (k, c) in g.iter().enumerate() {
            mat[n + i][size - 1 - (k + m - 1 - i)] = c.clone();
        }
    }
    Ok(determinant(&mat).normalize_sign())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::pt;
    use crate::poly::CoeffSymbol;

    fn var(label: u32, x: i64) -> CoeffPoly {
        CoeffPoly::symbol(CoeffSymbol::new(label, pt(x, 0)))
    }

    #[test]
    fn linear_pair() {
        // f = b + a t, g = d + c t: resultant ad - bc up to sign.
        let f = [var(1, 0), var(1, 1)];
        let g = [var(2, 0), var(2, 1)];
        let r = sylvester_resultant(&f, &g).unwrap();
        let expect = var(1, 1).mul(&var(2, 0)).sub(&var(1, 0).mul(&var(2, 1)));
        assert!(r == expect.clone().normalize_sign());
    }

    #[test]
    fn constant_cases() {
        let c = var(1, 0);
        let g = [var(2, 0), var(2, 1), var(2, 2)];
        assert_eq!(sylvester_resultant(&[c.clone()], &g).unwrap(), c.pow(2));
        assert!(matches!(
            sylvester_resultant(&[c.clone()], &[var(2, 0)]),
            Err(Error::NoVariableToEliminate)
        ));
    }

    #[test]
    fn quadratic_discriminant_via_derivative() {
        // Res(c + b t + a t^2, b + 2a t) = a (b^2 - 4ac) up to sign.
        let a = var(1, 2);
        let b = var(1, 1);
        let c = var(1, 0);
        let two = CoeffPoly::from_i64(2);
        let r = sylvester_resultant(&[c.clone(), b.clone(), a.clone()], &[b.clone(), two.mul(&a)])
            .unwrap();
        let disc = b.mul(&b).sub(&a.mul(&c).scale(&num_bigint::BigInt::from(4)));
        assert_eq!(r, a.mul(&disc).normalize_sign());
    }

    #[test]
    fn common_root_specialization_vanishes() {
        // f = (t-1)(t-2), g = (t-1)(t-3) share the root 1.
        let f = [CoeffPoly::from_i64(2), CoeffPoly::from_i64(-3), CoeffPoly::one()];
        let g = [CoeffPoly::from_i64(3), CoeffPoly::from_i64(-4), CoeffPoly::one()];
        assert!(sylvester_resultant(&f, &g).unwrap().is_zero());
        let h = [CoeffPoly::from_i64(12), CoeffPoly::from_i64(-7), CoeffPoly::one()];
        assert!(!sylvester_resultant(&f, &h).unwrap().is_zero());
    }

    #[test]
    fn power_rule_degree_two() {
        // Res(a + b t^2, u + v t^2) = (Res(a + b t, u + v t))^2 up to sign.
        let a = var(1, 0);
        let b = var(1, 1);
        let u = var(2, 0);
        let v = var(2, 1);
        let z = CoeffPoly::zero;
        let lhs = sylvester_resultant(&[a.clone(), z(), b.clone()], &[u.clone(), z(), v.clone()])
            .unwrap();
        let base = sylvester_resultant(&[a, b], &[u, v]).unwrap();
        assert_eq!(lhs, base.pow(2).normalize_sign());
    }
}
