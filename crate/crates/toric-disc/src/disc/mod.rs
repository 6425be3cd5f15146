//! Mixed discriminant extraction: the boundary factor E, the division
//! Res(f1, f2, J) / E, the vertex (mixed-multiplicity) regrouping, and the
//! two bidegree formulas.

pub mod multiplicativity;
pub mod univariate;

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::lattice::{
    edge_profiles, is_full, lattice_index, lattice_perimeter, minkowski_sum,
    mixed_multiplicity, mixed_volume, normalized_volume, EdgeProfile, LatticePoint, SupportConfig,
};
use crate::poly::laurent::{toric_jacobian, LaurentPoly};
use crate::poly::{CoeffPoly, CoeffSymbol};
use crate::resultant::{edge_resultant, sparse_resultant, ResOptions, ResultantOutput};

#[derive(Clone, Debug)]
pub struct BoundaryEntry {
    pub profile: EdgeProfile,
    /// Edge resultant Res(f1^eta, f2^eta), sign-normalized.
    pub value: CoeffPoly,
    /// Exponent mu(eta) in E.
    pub mu: i64,
}

#[derive(Clone, Debug)]
pub struct BoundaryFactor {
    pub entries: Vec<BoundaryEntry>,
    pub product: CoeffPoly,
}

/// E = product over the edge normals eta of Q1 + Q2 of the facial resultants
/// raised to mu(eta).
pub fn boundary_factor(f1: &LaurentPoly, f2: &LaurentPoly) -> Result<BoundaryFactor> {
    let profiles = edge_profiles(f1.support(), f2.support())?;
    let mut entries = Vec::with_capacity(profiles.len());
    let mut product = CoeffPoly::one();
    for profile in profiles {
        let face1 = f1.facial_restriction(profile.eta);
        let face2 = f2.facial_restriction(profile.eta);
        let value = edge_resultant(&face1, &face2)?;
        product = product.mul(&value.pow(profile.mu as u32));
        entries.push(BoundaryEntry { value, mu: profile.mu, profile });
    }
    Ok(BoundaryFactor { entries, product })
}

#[derive(Clone, Debug)]
pub struct DiscriminantOutput {
    /// The discriminant cycle polynomial (Delta to the lattice index).
    pub delta: CoeffPoly,
    pub index: i64,
    pub boundary: BoundaryFactor,
    pub resultant: ResultantOutput,
    pub achieved_bidegree: (u32, u32),
    pub predicted_bidegree: (i64, i64),
    pub defective: bool,
}

/// Expected bidegree of Res(f1, f2, J) in the labels of f1 and f2, from the
/// resultant bidegree formula (2 MV + Vol(Q2), 2 MV + Vol(Q1)).
pub fn jacobian_resultant_degrees(a1: &SupportConfig, a2: &SupportConfig) -> BTreeMap<u32, u32> {
    let mv = mixed_volume(a1, a2);
    let mut out = BTreeMap::new();
    out.insert(a1.label(), (2 * mv + normalized_volume(a2)) as u32);
    out.insert(a2.label(), (2 * mv + normalized_volume(a1)) as u32);
    out
}

/// Mixed discriminant cycle of a pair via the main factorization
/// Res(f1, f2, J) = Delta * E.
pub fn mixed_discriminant(
    f1: &LaurentPoly,
    f2: &LaurentPoly,
    opts: &ResOptions,
) -> Result<DiscriminantOutput> {
    let a1 = f1.support();
    let a2 = f2.support();
    if a1.dim() < 2 || a2.dim() < 2 {
        return Err(Error::NotTwoDimensional);
    }
    let jac_label = a1.label().max(a2.label()) + 1;
    let j = toric_jacobian(f1, f2, jac_label);
    let mut res_opts = opts.clone();
    if res_opts.expected_degrees.is_none() {
        res_opts.expected_degrees = Some(jacobian_resultant_degrees(a1, a2));
    }
    let resultant = sparse_resultant(f1, f2, &j, &res_opts)?;
    let boundary = boundary_factor(f1, f2)?;
    let quotient = resultant
        .value
        .exact_div(&boundary.product)
        .map_err(|e| match e {
            Error::InexactDivision(_) => Error::FactorizationViolated,
            other => other,
        })?;
    let defective = quotient.is_constant();
    let delta = if defective {
        CoeffPoly::one()
    } else {
        quotient.primitive_part().normalize_sign()
    };
    let index = lattice_index(&[a1.clone(), a2.clone()])?;
    let achieved = (delta.label_degree(a1.label()), delta.label_degree(a2.label()));
    let predicted = predicted_bidegree(a1, a2, BidegreeMode::Sparse)?;
    Ok(DiscriminantOutput {
        delta,
        index,
        boundary,
        resultant,
        achieved_bidegree: achieved,
        predicted_bidegree: predicted,
        defective,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BidegreeMode {
    Sparse,
    DenseFan,
}

/// Predicted bidegree of the mixed discriminant cycle.
pub fn predicted_bidegree(
    a1: &SupportConfig,
    a2: &SupportConfig,
    mode: BidegreeMode,
) -> Result<(i64, i64)> {
    if a1.dim() < 2 || a2.dim() < 2 {
        return Err(Error::NotTwoDimensional);
    }
    match mode {
        BidegreeMode::Sparse => {
            let mv = mixed_volume(a1, a2);
            let profiles = edge_profiles(a1, a2)?;
            let delta_for = |first: bool| -> Result<i64> {
                let (ai, aj) = if first { (a1, a2) } else { (a2, a1) };
                let sigma_prime_sum: i64 = profiles
                    .iter()
                    .filter(|p| p.in_sigma_prime)
                    .map(|p| {
                        let lj = if first { p.len2 } else { p.len1 };
                        lj * p.mu
                    })
                    .sum();
                let mut mm_sum = 0;
                for &v in crate::lattice::convex_hull(ai.points()).iter() {
                    mm_sum += mixed_multiplicity(v, a1, a2, if first { 1 } else { 2 })?;
                }
                Ok(normalized_volume(aj) + 2 * mv - sigma_prime_sum - mm_sum)
            };
            Ok((delta_for(true)?, delta_for(false)?))
        }
        BidegreeMode::DenseFan => {
            if !is_full(a1) || !is_full(a2) {
                return Err(Error::Input(
                    "dense_fan bidegree requires full supports".into(),
                ));
            }
            let normals = |a: &SupportConfig| -> Vec<LatticePoint> {
                let mut v: Vec<LatticePoint> = edge_profiles(a, a)
                    .unwrap()
                    .into_iter()
                    .map(|p| p.eta)
                    .collect();
                v.sort();
                v
            };
            if normals(a1) != normals(a2) {
                return Err(Error::Input(
                    "dense_fan bidegree requires equal normal fans".into(),
                ));
            }
            let sum = minkowski_sum(a1, a2);
            let vol = normalized_volume(&sum);
            let d1 = vol - normalized_volume(a1) - lattice_perimeter(a2);
            let d2 = vol - normalized_volume(a2) - lattice_perimeter(a1);
            Ok((d1, d2))
        }
    }
}

/// Recomputes the boundary in the vertex-regrouped (mixed multiplicity)
/// form: factors over Sigma' stay edge resultants, factors over Sigma minus
/// Sigma' regroup into vertex coefficient powers c_v^mm(v). Returns the full
/// factorization product Delta * prod c_v^mm(v) * prod_{Sigma'} Res^mu and
/// asserts it equals the sparse resultant.
pub fn discriminant_mm_form(
    f1: &LaurentPoly,
    f2: &LaurentPoly,
    opts: &ResOptions,
) -> Result<CoeffPoly> {
    let disc = mixed_discriminant(f1, f2, opts)?;
    mm_form_from(&disc, f1, f2)
}

pub fn mm_form_from(
    disc: &DiscriminantOutput,
    f1: &LaurentPoly,
    f2: &LaurentPoly,
) -> Result<CoeffPoly> {
    let a1 = f1.support();
    let a2 = f2.support();
    // Accumulate vertex exponents from the non-Sigma' normals.
    let mut vertex_exp: BTreeMap<(u8, LatticePoint), i64> = BTreeMap::new();
    let mut sigma_prime_product = CoeffPoly::one();
    for entry in &disc.boundary.entries {
        let p = &entry.profile;
        if p.in_sigma_prime {
            sigma_prime_product = sigma_prime_product.mul(&entry.value.pow(p.mu as u32));
            continue;
        }
        // Exactly one support meets eta in a vertex here.
        if p.len1 == 0 && p.len2 > 0 {
            let v = a1.points()[p.face1[0]];
            *vertex_exp.entry((1, v)).or_insert(0) += p.len2 * p.mu;
        } else if p.len2 == 0 && p.len1 > 0 {
            let v = a2.points()[p.face2[0]];
            *vertex_exp.entry((2, v)).or_insert(0) += p.len1 * p.mu;
        } else {
            return Err(Error::MmFormInconsistency(format!(
                "normal ({}, {}) cuts edges of neither or both hulls yet is outside Sigma'",
                p.eta.x, p.eta.y
            )));
        }
    }
    // Each accumulated exponent must equal the mixed multiplicity.
    let mut vertex_product = CoeffPoly::one();
    for (&(which, v), &e) in &vertex_exp {
        let mm = mixed_multiplicity(v, a1, a2, which)?;
        if mm != e {
            return Err(Error::MmFormInconsistency(format!(
                "vertex ({}, {}) of A{}: edge-sum exponent {} != mm {}",
                v.x, v.y, which, e, mm
            )));
        }
        let label = if which == 1 { a1.label() } else { a2.label() };
        let c = CoeffPoly::symbol(CoeffSymbol::new(label, v));
        vertex_product = vertex_product.mul(&c.pow(e as u32));
    }
    let delta_term = if disc.defective {
        // The raw quotient for defective pairs is a constant; the resultant
        // itself is recovered without a Delta factor.
        disc.resultant
            .value
            .exact_div(&disc.boundary.product)
            .map_err(|_| Error::FactorizationViolated)?
    } else {
        disc.delta.clone()
    };
    let rebuilt = delta_term.mul(&vertex_product).mul(&sigma_prime_product);
    if rebuilt.normalize_sign() != disc.resultant.value.normalize_sign() {
        return Err(Error::MmFormInconsistency(
            "regrouped product does not match the resultant".into(),
        ));
    }
    Ok(rebuilt.normalize_sign())
}
