//! Bivariate Laurent polynomials with coefficients in Z[c_{i,alpha}] and an
//! explicitly declared support. The declared support is the configuration the
//! elimination machinery sees; actual terms may sit on a subset of it.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::lattice::{minkowski_sum, LatticePoint, SupportConfig};
use crate::poly::{CoeffPoly, CoeffSymbol};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentPoly {
    support: SupportConfig,
    terms: BTreeMap<LatticePoint, CoeffPoly>,
}

impl LaurentPoly {
    /// The generic polynomial of a configuration: one fresh symbol per point.
    pub fn symbolic(support: &SupportConfig) -> Self {
        let terms = support
            .points()
            .iter()
            .map(|&p| (p, CoeffPoly::symbol(CoeffSymbol::new(support.label(), p))))
            .collect();
        LaurentPoly { support: support.clone(), terms }
    }

    /// Polynomial with given coefficients on a declared support. Coefficients
    /// off the support are rejected; zero coefficients are dropped from the
    /// term map but the support keeps the point.
    pub fn with_coeffs(
        support: &SupportConfig,
        coeffs: BTreeMap<LatticePoint, CoeffPoly>,
    ) -> Result<Self> {
        for p in coeffs.keys() {
            if !support.contains(*p) {
                return Err(Error::Input(format!(
                    "coefficient at ({}, {}) outside declared support",
                    p.x, p.y
                )));
            }
        }
        let terms = coeffs.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        Ok(LaurentPoly { support: support.clone(), terms })
    }

    pub fn support(&self) -> &SupportConfig {
        &self.support
    }

    pub fn terms(&self) -> &BTreeMap<LatticePoint, CoeffPoly> {
        &self.terms
    }

    pub fn coefficient_at(&self, p: LatticePoint) -> CoeffPoly {
        self.terms.get(&p).cloned().unwrap_or_else(CoeffPoly::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Single-term test; a monomial has no discriminant.
    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// Product, declared on the Minkowski sum of the declared supports.
    /// The result carries the given label.
    pub fn product(&self, other: &LaurentPoly, label: u32) -> LaurentPoly {
        let support = minkowski_sum(&self.support, &other.support).relabel(label);
        let mut terms: BTreeMap<LatticePoint, CoeffPoly> = BTreeMap::new();
        for (&a, ca) in &self.terms {
            for (&b, cb) in &other.terms {
                let p = a.add(b);
                terms
                    .entry(p)
                    .or_insert_with(CoeffPoly::zero)
                    .add_mul_assign(ca, cb);
            }
        }
        terms.retain(|_, c| !c.is_zero());
        LaurentPoly { support, terms }
    }

    /// Restriction to the face of the declared support minimizing <eta, .>.
    pub fn facial_restriction(&self, eta: LatticePoint) -> LaurentPoly {
        let nu = self
            .support
            .points()
            .iter()
            .map(|&p| eta.dot(p))
            .min()
            .expect("support is nonempty");
        let face_points: Vec<LatticePoint> = self
            .support
            .points()
            .iter()
            .copied()
            .filter(|&p| eta.dot(p) == nu)
            .collect();
        let support = SupportConfig::new(self.support.label(), face_points)
            .expect("face of a valid support is valid");
        let terms = self
            .terms
            .iter()
            .filter(|(p, _)| eta.dot(**p) == nu)
            .map(|(&p, c)| (p, c.clone()))
            .collect();
        LaurentPoly { support, terms }
    }

    /// Applies a ring map to every coefficient.
    pub fn map_coeffs(&self, f: impl Fn(&CoeffPoly) -> CoeffPoly) -> LaurentPoly {
        let terms = self
            .terms
            .iter()
            .map(|(&p, c)| (p, f(c)))
            .filter(|(_, c)| !c.is_zero())
            .collect();
        LaurentPoly { support: self.support.clone(), terms }
    }
}

/// Toric Jacobian det(x dF/dx, y dF/dy) of a pair, declared on the Minkowski
/// sum of the declared supports with the given label. Term at a + b picks up
/// the cross product of the exponent vectors.
pub fn toric_jacobian(f1: &LaurentPoly, f2: &LaurentPoly, label: u32) -> LaurentPoly {
    let support = minkowski_sum(f1.support(), f2.support()).relabel(label);
    let mut terms: BTreeMap<LatticePoint, CoeffPoly> = BTreeMap::new();
    for (&a, ca) in f1.terms() {
        for (&b, cb) in f2.terms() {
            let cross = a.x * b.y - a.y * b.x;
            if cross == 0 {
                continue;
            }
            let t = ca.mul(cb).scale(&BigInt::from(cross));
            let entry = terms.entry(a.add(b)).or_insert_with(CoeffPoly::zero);
            *entry = entry.add(&t);
        }
    }
    terms.retain(|_, c| !c.is_zero());
    LaurentPoly { support, terms }
}
