//! Univariate discriminant cycles via Res(f, x f') with extreme-coefficient
//! stripping, and the product extra factor of the univariate
//! multiplicativity formula.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::lattice::{LatticePoint, SupportConfig};
use crate::poly::laurent::LaurentPoly;
use crate::poly::{CoeffPoly, CoeffSymbol, Monomial};
use crate::resultant::sylvester_resultant;

/// Coefficient vector of a univariate Laurent polynomial after translating
/// the minimal exponent to 0. Returns (coeffs, original minimum).
pub fn univariate_coeffs(f: &LaurentPoly) -> Result<(Vec<CoeffPoly>, i64)> {
    let pts = f.support().points();
    if pts.iter().any(|p| p.y != 0) {
        return Err(Error::Input("support is not univariate (y != 0)".into()));
    }
    let min = pts.iter().map(|p| p.x).min().ok_or(Error::EmptyConfiguration)?;
    let max = pts.iter().map(|p| p.x).max().unwrap();
    let mut coeffs = vec![CoeffPoly::zero(); (max - min) as usize + 1];
    for &p in pts {
        coeffs[(p.x - min) as usize] = f.coefficient_at(p);
    }
    Ok((coeffs, min))
}

/// Divides out the minimal power of a symbol appearing in every term.
fn strip_symbol(p: &CoeffPoly, s: CoeffSymbol) -> CoeffPoly {
    let e = p
        .terms()
        .keys()
        .map(|m| m.exponent_of(s))
        .min()
        .unwrap_or(0);
    if e == 0 {
        return p.clone();
    }
    let m = Monomial::from_factors(vec![(s, e)]);
    p.exact_div(&CoeffPoly::monomial(m, num_traits::One::one()))
        .expect("monomial content division is exact")
}

/// The discriminant cycle of a univariate polynomial with support A:
/// Res(f, x f') with the extreme coefficient powers divided out. Equals
/// Delta_A to the power i(A) = gcd of exponent differences.
pub fn univariate_discriminant(f: &LaurentPoly) -> Result<CoeffPoly> {
    if f.support().points().len() < 2 {
        return Err(Error::MonomialInput);
    }
    let (coeffs, _) = univariate_coeffs(f)?;
    let d = coeffs.len() - 1;
    // x f' has coefficient k c_k at exponent k.
    let xfp: Vec<CoeffPoly> = coeffs
        .iter()
        .enumerate()
        .map(|(k, c)| c.scale(&BigInt::from(k as i64)))
        .collect();
    let s = sylvester_resultant(&coeffs, &xfp)?;
    // Strip the minimal powers of the extreme coefficient symbols.
    let mut out = s;
    for c in [&coeffs[0], &coeffs[d]] {
        if let Some((m, k)) = single_symbol(c) {
            if k.is_one() || k == BigInt::from(-1) {
                out = strip_symbol(&out, m);
            }
        }
    }
    Ok(out.primitive_part().normalize_sign())
}

/// Some(symbol, coefficient) when the polynomial is a single symbol times a
/// constant.
fn single_symbol(p: &CoeffPoly) -> Option<(CoeffSymbol, BigInt)> {
    if p.num_terms() != 1 {
        return None;
    }
    let (m, c) = p.terms().iter().next().unwrap();
    match m.factors() {
        [(s, 1)] => Some((*s, c.clone())),
        _ => None,
    }
}

use num_traits::One;

/// Extreme-coefficient extra factor E of the univariate product formula.
/// For supports A' (symbols labeled by ap.label()) and A'' (app.label())
/// with minimal exponent 0 and tops d1, d2:
/// E = a0^(i1-m0) b0^(j1-m0) a_d1^((d1-i_m)-m1) b_d2^((d2-j_l)-m1) with
/// m0 = min(i1, j1) and m1 = min(d1-i_m, d2-j_l), where i1/i_m are the
/// second-smallest/second-largest exponents.
pub fn univariate_product_factor(ap: &SupportConfig, app: &SupportConfig) -> Result<CoeffPoly> {
    let gaps = |a: &SupportConfig| -> Result<(i64, i64, i64)> {
        let mut xs: Vec<i64> = a.points().iter().map(|p| p.x).collect();
        if a.points().iter().any(|p| p.y != 0) {
            return Err(Error::Input("support is not univariate".into()));
        }
        xs.sort_unstable();
        if xs[0] != 0 {
            return Err(Error::SupportNotNormalized);
        }
        if xs.len() < 2 {
            return Err(Error::MonomialInput);
        }
        let d = *xs.last().unwrap();
        let low_gap = xs[1];
        let high_gap = d - xs[xs.len() - 2];
        Ok((d, low_gap, high_gap))
    };
    let (d1, i1, top1) = gaps(ap)?;
    let (d2, j1, top2) = gaps(app)?;
    let m0 = i1.min(j1);
    let m1 = top1.min(top2);
    let sym = |label: u32, x: i64| CoeffPoly::symbol(CoeffSymbol::new(label, LatticePoint::new(x, 0)));
    let factor = sym(ap.label(), 0)
        .pow((i1 - m0) as u32)
        .mul(&sym(app.label(), 0).pow((j1 - m0) as u32))
        .mul(&sym(ap.label(), d1).pow((top1 - m1) as u32))
        .mul(&sym(app.label(), d2).pow((top2 - m1) as u32));
    Ok(factor)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::pt;
    use num_bigint::BigInt;

    fn axis_support(label: u32, xs: &[i64]) -> SupportConfig {
        SupportConfig::new(label, xs.iter().map(|&x| pt(x, 0)).collect()).unwrap()
    }

    fn sym(label: u32, x: i64) -> CoeffPoly {
        CoeffPoly::symbol(CoeffSymbol::new(label, pt(x, 0)))
    }

    #[test]
    fn quadratic_is_b2_minus_4ac() {
        let f = LaurentPoly::symbolic(&axis_support(1, &[0, 1, 2]));
        let d = univariate_discriminant(&f).unwrap();
        let (a, b, c) = (sym(1, 2), sym(1, 1), sym(1, 0));
        let expect = b.mul(&b).sub(&a.mul(&c).scale(&BigInt::from(4)));
        assert_eq!(d, expect.normalize_sign());
    }

    #[test]
    fn index_two_support_gives_square() {
        // a + b x^2 + c x^4: the cycle is (b^2 - 4ac)^2 up to sign.
        let f = LaurentPoly::symbolic(&axis_support(1, &[0, 2, 4]));
        let d = univariate_discriminant(&f).unwrap();
        let (a, b, c) = (sym(1, 0), sym(1, 2), sym(1, 4));
        let base = b.mul(&b).sub(&a.mul(&c).scale(&BigInt::from(4)));
        assert_eq!(d, base.pow(2).normalize_sign());
    }

    #[test]
    fn monomial_is_rejected() {
        let f = LaurentPoly::symbolic(&axis_support(1, &[3]));
        assert!(matches!(univariate_discriminant(&f), Err(Error::MonomialInput)));
    }

    #[test]
    fn translation_invariance() {
        let f = LaurentPoly::symbolic(&axis_support(1, &[0, 1, 2]));
        let g = LaurentPoly::symbolic(&axis_support(1, &[-3, -2, -1]));
        // Same coefficient pattern after renaming symbols by the shift.
        let df = univariate_discriminant(&f).unwrap();
        let dg = univariate_discriminant(&g).unwrap();
        let renamed = dg
            .substitute(CoeffSymbol::new(1, pt(-3, 0)), &sym(1, 0))
            .substitute(CoeffSymbol::new(1, pt(-2, 0)), &sym(1, 1))
            .substitute(CoeffSymbol::new(1, pt(-1, 0)), &sym(1, 2));
        assert_eq!(df, renamed);
    }

    #[test]
    fn product_factor_examples() {
        let ap = axis_support(1, &[0, 2, 3]);
        let app = axis_support(2, &[0, 1, 4]);
        let e = univariate_product_factor(&ap, &app).unwrap();
        assert_eq!(e, sym(1, 0).mul(&sym(2, 4).pow(2)));

        let full1 = axis_support(1, &[0, 1, 2, 3]);
        let full2 = axis_support(2, &[0, 1, 2]);
        assert_eq!(
            univariate_product_factor(&full1, &full2).unwrap(),
            CoeffPoly::one()
        );

        let a3 = axis_support(1, &[0, 1, 3]);
        let b2 = axis_support(2, &[0, 1, 2]);
        assert_eq!(univariate_product_factor(&a3, &b2).unwrap(), sym(1, 3));
    }

    #[test]
    fn product_factor_requires_normalized_support() {
        let ap = axis_support(1, &[1, 2]);
        let app = axis_support(2, &[0, 1]);
        assert!(matches!(
            univariate_product_factor(&ap, &app),
            Err(Error::SupportNotNormalized)
        ));
    }
}
