//! Sparse integer polynomials in the coefficient symbols c_{i,alpha}.
//! All elimination-theoretic output (resultants, discriminants, boundary
//! factors) lives in this ring.

mod gcd;
pub mod laurent;

pub use gcd::mv_gcd;

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::lattice::LatticePoint;

/// The symbol c_{i,alpha}: coefficient of x^alpha in the polynomial with
/// label i.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CoeffSymbol {
    pub label: u32,
    pub alpha: LatticePoint,
}

impl CoeffSymbol {
    pub fn new(label: u32, alpha: LatticePoint) -> Self {
        CoeffSymbol { label, alpha }
    }
}

impl fmt::Display for CoeffSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "c_{}_{}_{}", self.label, self.alpha.x, self.alpha.y)
    }
}

/// Power product of coefficient symbols; factors sorted by symbol, exponents
/// positive.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<(CoeffSymbol, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(s: CoeffSymbol) -> Self {
        Monomial(vec![(s, 1)])
    }

    pub fn from_factors(mut factors: Vec<(CoeffSymbol, u32)>) -> Self {
        factors.retain(|&(_, e)| e > 0);
        factors.sort_by_key(|&(s, _)| s);
        let mut merged: Vec<(CoeffSymbol, u32)> = Vec::with_capacity(factors.len());
        for (s, e) in factors {
            match merged.last_mut() {
                Some(last) if last.0 == s => last.1 += e,
                _ => merged.push((s, e)),
            }
        }
        Monomial(merged)
    }

    pub fn factors(&self) -> &[(CoeffSymbol, u32)] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    pub fn exponent_of(&self, s: CoeffSymbol) -> u32 {
        self.0
            .iter()
            .find(|&&(t, _)| t == s)
            .map_or(0, |&(_, e)| e)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut factors = self.0.clone();
        factors.extend_from_slice(&other.0);
        Monomial::from_factors(factors)
    }

    /// Quotient self / other if other divides self.
    pub fn try_div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = Vec::with_capacity(self.0.len());
        let mut it = self.0.iter().peekable();
        for &(s, e) in &other.0 {
            loop {
                let &&(t, f) = it.peek()?;
                if t < s {
                    out.push((t, f));
                    it.next();
                } else if t == s {
                    if f < e {
                        return None;
                    }
                    if f > e {
                        out.push((t, f - e));
                    }
                    it.next();
                    break;
                } else {
                    return None;
                }
            }
        }
        out.extend(it.copied());
        Some(Monomial(out))
    }

    /// Componentwise gcd.
    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::new();
        for &(s, e) in &self.0 {
            let f = other.exponent_of(s);
            if f > 0 {
                out.push((s, e.min(f)));
            }
        }
        Monomial(out)
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }
}

/// Graded lexicographic order: total degree first, then lex with larger
/// symbols more significant. Lex is compared sparsely from the top symbol
/// down; the first differing exponent decides.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        let d = self.degree().cmp(&other.degree());
        if d != Ordering::Equal {
            return d;
        }
        let mut i = self.0.len();
        let mut j = other.0.len();
        loop {
            match (i > 0, j > 0) {
                (false, false) => return Ordering::Equal,
                (true, false) => return Ordering::Greater,
                (false, true) => return Ordering::Less,
                (true, true) => {}
            }
            let (s1, e1) = self.0[i - 1];
            let (s2, e2) = other.0[j - 1];
            if s1 != s2 {
                return s1.cmp(&s2);
            }
            if e1 != e2 {
                return e1.cmp(&e2);
            }
            i -= 1;
            j -= 1;
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let mut first = true;
        for &(s, e) in &self.0 {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{s}")?;
            } else {
                write!(f, "{s}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Element of Z[c_{i,alpha}], stored as monomial -> nonzero coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct CoeffPoly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl CoeffPoly {
    pub fn zero() -> Self {
        CoeffPoly::default()
    }

    pub fn one() -> Self {
        CoeffPoly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(), c);
        }
        CoeffPoly { terms }
    }

    pub fn from_i64(c: i64) -> Self {
        CoeffPoly::constant(BigInt::from(c))
    }

    pub fn symbol(s: CoeffSymbol) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Monomial::var(s), BigInt::one());
        CoeffPoly { terms }
    }

    pub fn monomial(m: Monomial, c: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        CoeffPoly { terms }
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, BigInt> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms.keys().next().unwrap().is_one())
    }

    pub fn as_constant(&self) -> Option<BigInt> {
        if self.terms.is_empty() {
            return Some(BigInt::zero());
        }
        if self.is_constant() {
            return self.terms.values().next().cloned();
        }
        None
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Leading term in the graded order.
    pub fn leading(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.iter().next_back()
    }

    pub fn degree(&self) -> u32 {
        self.terms.keys().map(|m| m.degree()).max().unwrap_or(0)
    }

    pub fn degree_in(&self, s: CoeffSymbol) -> u32 {
        self.terms.keys().map(|m| m.exponent_of(s)).max().unwrap_or(0)
    }

    pub fn variables(&self) -> BTreeSet<CoeffSymbol> {
        let mut out = BTreeSet::new();
        for m in self.terms.keys() {
            for &(s, _) in m.factors() {
                out.insert(s);
            }
        }
        out
    }

    fn insert_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &CoeffPoly) -> CoeffPoly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.insert_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &CoeffPoly) -> CoeffPoly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.insert_term(m.clone(), -c.clone());
        }
        out
    }

    pub fn neg(&self) -> CoeffPoly {
        CoeffPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }

    pub fn mul(&self, other: &CoeffPoly) -> CoeffPoly {
        let mut out = CoeffPoly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.insert_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    /// self += p * q without materializing intermediate sums.
    pub fn add_mul_assign(&mut self, p: &CoeffPoly, q: &CoeffPoly) {
        for (m1, c1) in &p.terms {
            for (m2, c2) in &q.terms {
                self.insert_term(m1.mul(m2), c1 * c2);
            }
        }
    }

    pub fn scale(&self, c: &BigInt) -> CoeffPoly {
        if c.is_zero() {
            return CoeffPoly::zero();
        }
        CoeffPoly {
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> CoeffPoly {
        CoeffPoly {
            terms: self.terms.iter().map(|(k, c)| (k.mul(m), c.clone())).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> CoeffPoly {
        let mut out = CoeffPoly::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                out = out.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        out
    }

    /// Exact quotient self / divisor; the division must terminate with zero
    /// remainder, otherwise the remainder's leading term is reported.
    pub fn exact_div(&self, divisor: &CoeffPoly) -> Result<CoeffPoly> {
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (dm, dc) = divisor.leading().map(|(m, c)| (m.clone(), c.clone())).unwrap();
        let mut rem = self.clone();
        let mut quo = CoeffPoly::zero();
        while let Some((rm, rc)) = rem.leading() {
            let qm = match rm.try_div(&dm) {
                Some(q) => q,
                None => return Err(Error::InexactDivision(format!("{rc}*{rm}"))),
            };
            let (qc, r) = rc.div_rem(&dc);
            if !r.is_zero() {
                return Err(Error::InexactDivision(format!("{rc}*{rm}")));
            }
            let t = CoeffPoly::monomial(qm, qc);
            rem = rem.sub(&t.mul(divisor));
            quo = quo.add(&t);
        }
        Ok(quo)
    }

    /// Gcd of the integer coefficients; zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Componentwise gcd of all monomials.
    pub fn monomial_content(&self) -> Monomial {
        let mut it = self.terms.keys();
        let mut g = match it.next() {
            Some(m) => m.clone(),
            None => return Monomial::one(),
        };
        for m in it {
            if g.is_one() {
                break;
            }
            g = g.gcd(m);
        }
        g
    }

    /// Divides out integer content and monomial content.
    /// Divides out the integer content only, keeping monomial factors.
    pub fn integer_primitive(&self) -> CoeffPoly {
        if self.is_zero() {
            return CoeffPoly::zero();
        }
        let ic = self.content();
        CoeffPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c / &ic)).collect(),
        }
    }

    pub fn primitive_part(&self) -> CoeffPoly {
        if self.is_zero() {
            return CoeffPoly::zero();
        }
        let ic = self.content();
        let mc = self.monomial_content();
        CoeffPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.try_div(&mc).unwrap(), c / &ic))
                .collect(),
        }
    }

    /// Flips the global sign if the leading coefficient is negative.
    pub fn normalize_sign(&self) -> CoeffPoly {
        match self.leading() {
            Some((_, c)) if c.is_negative() => self.neg(),
            _ => self.clone(),
        }
    }

    /// Sum of exponents per label, for one term.
    fn term_label_degrees(m: &Monomial) -> BTreeMap<u32, u32> {
        let mut d = BTreeMap::new();
        for &(s, e) in m.factors() {
            *d.entry(s.label).or_insert(0) += e;
        }
        d
    }

    /// Per-label degree vector, shared by every term; None when the
    /// polynomial is not multihomogeneous in the label grouping.
    pub fn group_multidegree(&self) -> Option<BTreeMap<u32, u32>> {
        let mut it = self.terms.keys();
        let first = Self::term_label_degrees(it.next()?);
        for m in it {
            if Self::term_label_degrees(m) != first {
                return None;
            }
        }
        Some(first)
    }

    /// Maximum degree in the symbols of a given label.
    pub fn label_degree(&self, label: u32) -> u32 {
        self.terms
            .keys()
            .map(|m| {
                m.factors()
                    .iter()
                    .filter(|&&(s, _)| s.label == label)
                    .map(|&(_, e)| e)
                    .sum::<u32>()
            })
            .max()
            .unwrap_or(0)
    }

    /// Evaluates at a full rational assignment of the variables.
    pub fn specialize(&self, assignment: &BTreeMap<CoeffSymbol, BigRational>) -> Result<BigRational> {
        let mut acc = BigRational::zero();
        for (m, c) in &self.terms {
            let mut t = BigRational::from(c.clone());
            for &(s, e) in m.factors() {
                let v = assignment
                    .get(&s)
                    .ok_or_else(|| Error::MissingSymbol(s.to_string()))?;
                for _ in 0..e {
                    t *= v;
                }
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Replaces one symbol by a polynomial.
    pub fn substitute(&self, s: CoeffSymbol, value: &CoeffPoly) -> CoeffPoly {
        let mut out = CoeffPoly::zero();
        for (m, c) in &self.terms {
            let e = m.exponent_of(s);
            let rest = Monomial::from_factors(
                m.factors().iter().copied().filter(|&(t, _)| t != s).collect(),
            );
            let part = CoeffPoly::monomial(rest, c.clone());
            if e == 0 {
                out = out.add(&part);
            } else {
                out = out.add(&part.mul(&value.pow(e)));
            }
        }
        out
    }

    /// Coefficients of self viewed as a univariate polynomial in `s`.
    pub fn as_univariate_in(&self, s: CoeffSymbol) -> BTreeMap<u32, CoeffPoly> {
        let mut out: BTreeMap<u32, CoeffPoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let e = m.exponent_of(s);
            let rest = Monomial::from_factors(
                m.factors().iter().copied().filter(|&(t, _)| t != s).collect(),
            );
            out.entry(e)
                .or_insert_with(CoeffPoly::zero)
                .insert_term(rest, c.clone());
        }
        out.retain(|_, p| !p.is_zero());
        out
    }
}

impl fmt::Display for CoeffPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // Descending graded order, leading term first.
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let abs = c.abs();
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

impl std::ops::Add for &CoeffPoly {
    type Output = CoeffPoly;
    fn add(self, rhs: &CoeffPoly) -> CoeffPoly {
        CoeffPoly::add(self, rhs)
    }
}

impl std::ops::Sub for &CoeffPoly {
    type Output = CoeffPoly;
    fn sub(self, rhs: &CoeffPoly) -> CoeffPoly {
        CoeffPoly::sub(self, rhs)
    }
}

impl std::ops::Mul for &CoeffPoly {
    type Output = CoeffPoly;
    fn mul(self, rhs: &CoeffPoly) -> CoeffPoly {
        CoeffPoly::mul(self, rhs)
    }
}
