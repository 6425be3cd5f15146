//! Multivariate gcd over Z[c_{i,alpha}] via content extraction and a
//! subresultant polynomial remainder sequence in a chosen main variable.

use num_integer::Integer;

use super::{CoeffPoly, CoeffSymbol, Monomial};

/// Gcd of two polynomials, sign-normalized to a positive leading
/// coefficient. gcd(p, 0) = p up to sign.
pub fn mv_gcd(p: &CoeffPoly, q: &CoeffPoly) -> CoeffPoly {
    if p.is_zero() {
        return q.normalize_sign();
    }
    if q.is_zero() {
        return p.normalize_sign();
    }
    // Monomial and integer content split off first; they gcd separately.
    let mono_g = p.monomial_content().gcd(&q.monomial_content());
    let int_g = p.content().gcd(&q.content());
    let a = p.primitive_part();
    let b = q.primitive_part();
    let core = gcd_primitive(&a, &b);
    core.mul_monomial(&mono_g).scale(&int_g).normalize_sign()
}

/// Gcd of two nonzero primitive polynomials.
fn gcd_primitive(a: &CoeffPoly, b: &CoeffPoly) -> CoeffPoly {
    if a == b {
        return a.clone();
    }
    if a.is_constant() || b.is_constant() {
        return CoeffPoly::one();
    }
    // Cheap wins: one argument divides the other.
    if a.degree() <= b.degree() && b.exact_div(a).is_ok() {
        return a.clone();
    }
    if b.degree() < a.degree() && a.exact_div(b).is_ok() {
        return b.clone();
    }
    // Main variable: common symbol minimizing the larger of the two degrees.
    let common: Vec<CoeffSymbol> = a
        .variables()
        .intersection(&b.variables())
        .copied()
        .collect();
    let v = match common
        .iter()
        .min_by_key(|&&s| a.degree_in(s).max(b.degree_in(s)))
    {
        Some(&v) => v,
        None => return CoeffPoly::one(),
    };
    gcd_in_variable(a, b, v)
}

/// Univariate polynomial in `v` with CoeffPoly coefficients, dense in the
/// exponent.
#[derive(Clone)]
struct UniPoly {
    coeffs: Vec<CoeffPoly>,
}

impl UniPoly {
    fn from_poly(p: &CoeffPoly, v: CoeffSymbol) -> Self {
        let map = p.as_univariate_in(v);
        let deg = map.keys().max().copied().unwrap_or(0) as usize;
        let mut coeffs = vec![CoeffPoly::zero(); deg + 1];
        for (e, c) in map {
            coeffs[e as usize] = c;
        }
        UniPoly { coeffs }
    }

    fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    fn lc(&self) -> &CoeffPoly {
        self.coeffs.last().unwrap()
    }

    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    fn trim(mut self) -> Self {
        while self.coeffs.len() > 1 && self.coeffs.last().unwrap().is_zero() {
            self.coeffs.pop();
        }
        self
    }

    /// Content with respect to the coefficient ring.
    fn content(&self) -> CoeffPoly {
        let mut g = CoeffPoly::zero();
        for c in &self.coeffs {
            if !c.is_zero() {
                g = mv_gcd(&g, c);
                if g.is_constant() {
                    break;
                }
            }
        }
        g
    }

    fn div_coeff(&self, d: &CoeffPoly) -> UniPoly {
        UniPoly {
            coeffs: self
                .coeffs
                .iter()
                .map(|c| if c.is_zero() { CoeffPoly::zero() } else { c.exact_div(d).unwrap() })
                .collect(),
        }
    }

    /// Pseudo-remainder of self by g: lc(g)^(deg f - deg g + 1) f mod g.
    fn pseudo_rem(&self, g: &UniPoly) -> UniPoly {
        let mut r = self.clone();
        let dg = g.degree();
        let lg = g.lc().clone();
        while !r.is_zero() && r.degree() >= dg {
            let dr = r.degree();
            let lr = r.coeffs[dr].clone();
            let mut next = vec![CoeffPoly::zero(); dr.max(1)];
            for i in 0..dr {
                let mut t = r.coeffs[i].mul(&lg);
                let j = i as i64 - (dr - dg) as i64;
                if j >= 0 {
                    t = t.sub(&g.coeffs[j as usize].mul(&lr));
                }
                next[i] = t;
            }
            r = UniPoly { coeffs: next }.trim();
        }
        r
    }

    fn to_poly(&self, v: CoeffSymbol) -> CoeffPoly {
        let xv = Monomial::var(v);
        let mut out = CoeffPoly::zero();
        let mut power = Monomial::one();
        for c in &self.coeffs {
            out = out.add(&c.mul_monomial(&power));
            power = power.mul(&xv);
        }
        out
    }
}

/// Subresultant PRS gcd in the main variable `v`, with contents handled
/// recursively. The pseudo-remainder here multiplies by lc each step rather
/// than a fixed power, so results are normalized through primitive parts.
fn gcd_in_variable(a: &CoeffPoly, b: &CoeffPoly, v: CoeffSymbol) -> CoeffPoly {
    let fa = UniPoly::from_poly(a, v);
    let fb = UniPoly::from_poly(b, v);
    let ca = fa.content();
    let cb = fb.content();
    let cont = mv_gcd(&ca, &cb);
    let mut f = fa.div_coeff(&ca);
    let mut g = fb.div_coeff(&cb);
    if f.degree() < g.degree() {
        std::mem::swap(&mut f, &mut g);
    }
    loop {
        let r = f.pseudo_rem(&g);
        if r.is_zero() {
            let gp = g.to_poly(v).primitive_part();
            return gp.mul(&cont);
        }
        if r.degree() == 0 {
            return cont;
        }
        // Primitive PRS: simple and exact; coefficient growth is tamed by
        // taking contents every step.
        let rc = r.content();
        f = g;
        g = r.div_coeff(&rc);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::pt;
    use crate::poly::CoeffSymbol;
    use num_bigint::BigInt;

    fn var(label: u32, x: i64) -> CoeffPoly {
        CoeffPoly::symbol(CoeffSymbol::new(label, pt(x, 0)))
    }

    #[test]
    fn monomial_gcd() {
        let a = var(1, 0);
        let b = var(1, 1);
        let c = var(1, 2);
        assert_eq!(mv_gcd(&a.mul(&b), &a.mul(&c)), a);
    }

    #[test]
    fn gcd_of_equal_inputs_is_primitive_part() {
        let a = var(1, 0);
        let b = var(1, 1);
        let p = a.add(&b).scale(&BigInt::from(-6));
        assert_eq!(mv_gcd(&p, &p), a.add(&b).scale(&BigInt::from(6)));
    }

    #[test]
    fn common_factor_extraction() {
        let a = var(1, 0);
        let b = var(1, 1);
        let q = var(2, 0).add(&var(2, 1));
        let r = var(2, 1).mul(&var(2, 1)).add(&CoeffPoly::one());
        let p1 = a.mul(&a).sub(&b.mul(&b)).mul(&q);
        let p2 = a.sub(&b).mul(&r);
        assert_eq!(mv_gcd(&p1, &p2), b.sub(&a));
    }

    #[test]
    fn coprime_inputs() {
        let a = var(1, 0);
        let b = var(1, 1);
        assert_eq!(mv_gcd(&a.add(&CoeffPoly::one()), &b), CoeffPoly::one());
    }

    #[test]
    fn integer_content_gcd() {
        let p = CoeffPoly::from_i64(12);
        let q = var(1, 0).scale(&BigInt::from(18));
        assert_eq!(mv_gcd(&p, &q), CoeffPoly::from_i64(6));
    }

    #[test]
    fn gcd_with_zero() {
        let p = var(1, 0).mul(&var(1, 1)).scale(&BigInt::from(-2));
        assert_eq!(mv_gcd(&p, &CoeffPoly::zero()), var(1, 0).mul(&var(1, 1)).scale(&BigInt::from(2)));
    }
}
