//! Resultant cycles: edge (Sylvester) resultants with the cycle convention,
//! the three-polynomial sparse resultant via Canny-Emiris matrices with
//! multi-lifting GCD extraction, and a dense Macaulay oracle.

mod canny_emiris;
mod det;
mod macaulay;
mod sylvester;

pub use canny_emiris::{canny_emiris_matrix, CannyEmirisData, SubdivisionCell};
pub use det::determinant;
pub use macaulay::macaulay_dense_oracle;
pub use sylvester::sylvester_resultant;

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::lattice::{
    essential_subfamilies, mixed_volume, segment_length, LatticePoint, SupportConfig,
};
use crate::poly::laurent::LaurentPoly;
use crate::poly::{mv_gcd, CoeffPoly};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ResMethod {
    Sylvester,
    CannyEmiris,
    Macaulay,
    MonomialRule,
}

impl ResMethod {
    pub fn as_str(self) -> &'static str {
        match self {
            ResMethod::Sylvester => "sylvester",
            ResMethod::CannyEmiris => "canny_emiris",
            ResMethod::Macaulay => "macaulay",
            ResMethod::MonomialRule => "monomial_rule",
        }
    }
}

#[derive(Clone, Debug)]
pub struct ResultantOutput {
    pub value: CoeffPoly,
    pub method: ResMethod,
    /// Per label: (observed, predicted) degree.
    pub degree_audit: BTreeMap<u32, (u32, u32)>,
    pub liftings_used: Vec<u64>,
    pub verified: bool,
}

#[derive(Clone, Debug)]
pub struct ResOptions {
    pub seed: u64,
    /// Minimum number of distinct liftings entering the GCD.
    pub liftings: usize,
    /// Maximum liftings before giving up on a stable audit.
    pub budget: usize,
    /// Expected degree per coefficient label; None uses mixed-volume
    /// predictions keyed by each input's own label.
    pub expected_degrees: Option<BTreeMap<u32, u32>>,
}

impl Default for ResOptions {
    fn default() -> Self {
        ResOptions { seed: 1, liftings: 2, budget: 8, expected_degrees: None }
    }
}

/// Edge data: a collinear declared support parametrized as p0 + k*d with d
/// primitive, plus the coefficient vector along k.
fn edge_coeffs(f: &LaurentPoly) -> Result<(Option<LatticePoint>, Vec<CoeffPoly>)> {
    let pts = f.support().points();
    if pts.len() == 1 {
        return Ok((None, vec![f.coefficient_at(pts[0])]));
    }
    let mut sorted = pts.to_vec();
    sorted.sort_by_key(|p| (p.x, p.y));
    let first = sorted[0];
    let last = sorted[sorted.len() - 1];
    let len = segment_length(first, last);
    let d = LatticePoint::new((last.x - first.x) / len, (last.y - first.y) / len);
    let mut coeffs = vec![CoeffPoly::zero(); len as usize + 1];
    for &p in &sorted {
        let rel = p.sub(first);
        if rel.x * d.y - rel.y * d.x != 0 {
            return Err(Error::NotEtaHomogeneous);
        }
        let k = if d.x != 0 { rel.x / d.x } else { rel.y / d.y };
        if first.add(LatticePoint::new(d.x * k, d.y * k)) != p {
            return Err(Error::NotEtaHomogeneous);
        }
        coeffs[k as usize] = f.coefficient_at(p);
    }
    Ok((Some(d), coeffs))
}

/// Resultant of two polynomials supported on faces with a common edge
/// direction, with the standard cycle conventions: monomial versus monomial
/// gives 1, monomial versus edge gives the coefficient raised to the other
/// edge's normalized length, and two edges give the as-written Sylvester
/// resultant.
pub fn edge_resultant(f1: &LaurentPoly, f2: &LaurentPoly) -> Result<CoeffPoly> {
    let (d1, c1) = edge_coeffs(f1)?;
    let (d2, c2) = edge_coeffs(f2)?;
    match (d1, d2) {
        (None, None) => Ok(CoeffPoly::one()),
        (None, Some(_)) => {
            let l = (c2.len() - 1) as u32;
            Ok(c1[0].pow(l).normalize_sign())
        }
        (Some(_), None) => {
            let l = (c1.len() - 1) as u32;
            Ok(c2[0].pow(l).normalize_sign())
        }
        (Some(u), Some(v)) => {
            if u != v && u != LatticePoint::new(-v.x, -v.y) {
                return Err(Error::NotEtaHomogeneous);
            }
            let c2 = if u == v {
                c2
            } else {
                c2.into_iter().rev().collect()
            };
            sylvester_resultant(&c1, &c2)
        }
    }
}

/// Predicted degree of the sparse resultant in the coefficients of input i:
/// the mixed volume of the other two Newton polytopes.
pub fn mv_degree_predictions(supports: [&SupportConfig; 3]) -> BTreeMap<u32, u32> {
    let mut out = BTreeMap::new();
    for i in 0..3 {
        let j = (i + 1) % 3;
        let k = (i + 2) % 3;
        let mv = mixed_volume(supports[j], supports[k]);
        out.insert(supports[i].label(), mv as u32);
    }
    out
}

/// Sparse resultant cycle of three bivariate Laurent polynomials via
/// multi-seed Canny-Emiris determinants and GCD extraction, with a degree
/// audit against mixed-volume (or caller-supplied) predictions.
pub fn sparse_resultant(
    f1: &LaurentPoly,
    f2: &LaurentPoly,
    f3: &LaurentPoly,
    opts: &ResOptions,
) -> Result<ResultantOutput> {
    let supports = [f1.support().clone(), f2.support().clone(), f3.support().clone()];
    let polys = [f1, f2, f3];
    let essential = essential_subfamilies(&supports);
    if essential.len() != 1 {
        // Def 2.2 convention: no unique essential subfamily means Res = 1.
        return Ok(ResultantOutput {
            value: CoeffPoly::one(),
            method: ResMethod::MonomialRule,
            degree_audit: BTreeMap::new(),
            liftings_used: Vec::new(),
            verified: true,
        });
    }
    let ess = &essential[0];
    if ess.len() == 1 {
        // A singleton essential family is a single point: the monomial rule
        // c^MV(others).
        let i = ess[0];
        let j = (i + 1) % 3;
        let k = (i + 2) % 3;
        let mv = mixed_volume(&supports[j], &supports[k]) as u32;
        let c = polys[i].coefficient_at(supports[i].points()[0]);
        let value = c.pow(mv).normalize_sign();
        let mut audit = BTreeMap::new();
        audit.insert(supports[i].label(), (value.label_degree(supports[i].label()), mv));
        return Ok(ResultantOutput {
            value,
            method: ResMethod::MonomialRule,
            degree_audit: audit,
            liftings_used: Vec::new(),
            verified: true,
        });
    }
    if ess.len() == 2 {
        // Two collinear supports along a common direction: the edge
        // (Sylvester) resultant of the pair is the cycle.
        let value = edge_resultant(polys[ess[0]], polys[ess[1]])?;
        return Ok(ResultantOutput {
            value,
            method: ResMethod::Sylvester,
            degree_audit: BTreeMap::new(),
            liftings_used: Vec::new(),
            verified: true,
        });
    }

    let predicted = opts
        .expected_degrees
        .clone()
        .unwrap_or_else(|| mv_degree_predictions([&supports[0], &supports[1], &supports[2]]));

    let make_audit = |value: &CoeffPoly| -> BTreeMap<u32, (u32, u32)> {
        predicted
            .iter()
            .map(|(&l, &p)| (l, (value.label_degree(l), p)))
            .collect()
    };
    let audit_exact =
        |audit: &BTreeMap<u32, (u32, u32)>| audit.values().all(|&(o, p)| o == p);

    let mut gcd = CoeffPoly::zero();
    let mut liftings_used = Vec::new();
    let mut seed = opts.seed;
    let mut attempts = 0usize;
    while liftings_used.len() < opts.budget {
        attempts += 1;
        if attempts > opts.budget * 4 {
            return Err(Error::ResultantExtractionFailed);
        }
        let data = match canny_emiris_matrix([f1, f2, f3], seed) {
            Ok(d) => d,
            Err(Error::NonGenericLifting) => {
                seed = seed.wrapping_add(1);
                continue;
            }
            Err(e) => return Err(e),
        };
        let det = determinant(&data.matrix);
        seed = seed.wrapping_add(1);
        if det.is_zero() {
            continue;
        }
        liftings_used.push(data.seed);

        // Quotient route: the extraneous factor of a generic lifting is the
        // minor on the rows and columns indexed by points in non-mixed cells.
        let non_mixed: Vec<usize> = (0..data.points.len())
            .filter(|&r| !data.cells[data.row_cells[r]].mixed)
            .collect();
        let ext = if non_mixed.is_empty() {
            CoeffPoly::one()
        } else {
            let sub: Vec<Vec<CoeffPoly>> = non_mixed
                .iter()
                .map(|&r| {
                    non_mixed
                        .iter()
                        .map(|&c| data.matrix[r][c].clone())
                        .collect()
                })
                .collect();
            determinant(&sub)
        };
        if !ext.is_zero() {
            if let Ok(q) = det.exact_div(&ext) {
                let value = q.integer_primitive().normalize_sign();
                let audit = make_audit(&value);
                if audit_exact(&audit) {
                    return Ok(ResultantOutput {
                        value,
                        method: ResMethod::CannyEmiris,
                        degree_audit: audit,
                        liftings_used,
                        verified: true,
                    });
                }
            }
        }

        gcd = mv_gcd(&gcd, &det);
        if liftings_used.len() < opts.liftings {
            continue;
        }
        let value = gcd.integer_primitive().normalize_sign();
        let audit = make_audit(&value);
        if audit_exact(&audit) {
            return Ok(ResultantOutput {
                value,
                method: ResMethod::CannyEmiris,
                degree_audit: audit,
                liftings_used,
                verified: true,
            });
        }
        if audit.values().any(|&(o, p)| o < p) {
            // The GCD can only shrink; a deficit never recovers.
            return Err(Error::ResultantExtractionFailed);
        }
        // Excess degree: keep adding liftings until the budget runs out.
    }
    Err(Error::ResultantExtractionFailed)
}
