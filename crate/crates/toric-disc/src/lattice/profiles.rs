//! Edge data of a pair of configurations: primitive inner normals of the
//! Minkowski sum, faces, normalized edge lengths, mu exponents, mixed
//! multiplicities and the essential-family classifier.

use super::snf::int_rank;
use super::{
    convex_hull, minkowski_sum, mixed_volume, segment_length, LatticePoint, SupportConfig,
};
use crate::error::{Error, Result};

/// Per-normal record driving the boundary factor E.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeProfile {
    /// Primitive inner normal of an edge of conv(A1 + A2).
    pub eta: LatticePoint,
    /// Minimum of <eta, .> over A1 and A2.
    pub nu: (i64, i64),
    /// Indices into A1 of the face A1^eta, sorted along the edge direction.
    pub face1: Vec<usize>,
    /// Indices into A2 of the face A2^eta.
    pub face2: Vec<usize>,
    /// Normalized length of the edge of conv(A1) cut by eta; 0 for a vertex.
    pub len1: i64,
    pub len2: i64,
    /// Gap between the two smallest distinct values of <eta, .> over A_i.
    pub mu1: i64,
    pub mu2: i64,
    /// mu = min(mu1, mu2), the exponent of the edge resultant in E.
    pub mu: i64,
    /// True iff eta cuts edges in both hulls.
    pub in_sigma_prime: bool,
}

/// Face data of a single configuration along a fixed direction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EtaFaceData {
    pub nu: i64,
    pub face: Vec<usize>,
    pub len: i64,
    pub mu: i64,
}

/// Face, minimum value, normalized face length and mu gap of `a` along `eta`.
/// Errors if `a` has a single distinct value along `eta` (degenerate 1-D
/// configuration; no gap is defined).
pub fn eta_face_data(a: &SupportConfig, eta: LatticePoint) -> Result<EtaFaceData> {
    let mut values: Vec<i64> = a.points().iter().map(|p| eta.dot(*p)).collect();
    let nu = *values.iter().min().unwrap();
    let mut face: Vec<usize> = (0..a.points().len()).filter(|&i| values[i] == nu).collect();
    values.sort_unstable();
    values.dedup();
    if values.len() < 2 {
        return Err(Error::NotTwoDimensional);
    }
    let mu = values[1] - nu;
    // Sort the face along the edge direction (eta rotated by -90 degrees).
    let dir = LatticePoint::new(eta.y, -eta.x);
    face.sort_by_key(|&i| dir.dot(a.points()[i]));
    let len = if face.len() >= 2 {
        let first = a.points()[face[0]];
        let last = a.points()[face[face.len() - 1]];
        segment_length(first, last)
    } else {
        0
    };
    Ok(EtaFaceData { nu, face, len, mu })
}

/// Deterministic counterclockwise angular order on nonzero integer vectors,
/// starting at direction (1, 0).
pub(crate) fn angle_order(a: LatticePoint, b: LatticePoint) -> std::cmp::Ordering {
    fn half(v: LatticePoint) -> u8 {
        if v.y > 0 || (v.y == 0 && v.x > 0) {
            0
        } else {
            1
        }
    }
    half(a).cmp(&half(b)).then_with(|| {
        let cross = a.x * b.y - a.y * b.x;
        cross.cmp(&0).reverse()
    })
}

/// One profile per primitive inner edge normal of conv(A1 + A2), sorted by
/// angle. Requires both hulls to be 2-dimensional.
pub fn edge_profiles(a1: &SupportConfig, a2: &SupportConfig) -> Result<Vec<EdgeProfile>> {
    if a1.dim() < 2 || a2.dim() < 2 {
        return Err(Error::NotTwoDimensional);
    }
    let sum = minkowski_sum(a1, a2);
    let hull = convex_hull(sum.points());
    let mut profiles = Vec::with_capacity(hull.len());
    for i in 0..hull.len() {
        let v = hull[i];
        let w = hull[(i + 1) % hull.len()];
        let e = w.sub(v);
        let g = num_integer::gcd(e.x.abs(), e.y.abs());
        // Inner normal of a CCW polygon: rotate the edge vector left.
        let eta = LatticePoint::new(-e.y / g, e.x / g);
        let d1 = eta_face_data(a1, eta)?;
        let d2 = eta_face_data(a2, eta)?;
        let in_sigma_prime = d1.len >= 1 && d2.len >= 1;
        profiles.push(EdgeProfile {
            eta,
            nu: (d1.nu, d2.nu),
            face1: d1.face,
            face2: d2.face,
            len1: d1.len,
            len2: d2.len,
            mu1: d1.mu,
            mu2: d2.mu,
            mu: d1.mu.min(d2.mu),
            in_sigma_prime,
        });
    }
    profiles.sort_by(|p, q| angle_order(p.eta, q.eta));
    Ok(profiles)
}

/// Mixed multiplicity mm(v) = MV(Q1, Q2) - MV(conv(A_i \ {v}), Q_j) of a
/// vertex v of conv(A_i), where `which` selects i = 1 or 2.
pub fn mixed_multiplicity(
    v: LatticePoint,
    a1: &SupportConfig,
    a2: &SupportConfig,
    which: u8,
) -> Result<i64> {
    let (ai, aj) = match which {
        1 => (a1, a2),
        2 => (a2, a1),
        _ => return Err(Error::Input(format!("which must be 1 or 2, got {which}"))),
    };
    if !convex_hull(ai.points()).contains(&v) {
        return Err(Error::NotAVertex);
    }
    let trimmed = ai.without(v)?;
    let mm = mixed_volume(a1, a2) - mixed_volume(&trimmed, aj);
    debug_assert!(mm >= 0);
    Ok(mm)
}

/// Rank of the joint difference lattice of a family.
fn family_rank(family: &[&SupportConfig]) -> usize {
    let mut rows: Vec<Vec<i128>> = Vec::new();
    for a in family {
        let p0 = a.points()[0];
        for p in &a.points()[1..] {
            rows.push(vec![(p.x - p0.x) as i128, (p.y - p0.y) as i128]);
        }
    }
    if rows.is_empty() {
        0
    } else {
        int_rank(&rows)
    }
}

/// Essential-family test: the joint difference lattice has rank k - 1 and
/// every proper nonempty subfamily spans rank at least its cardinality.
pub fn is_essential(family: &[SupportConfig]) -> bool {
    let k = family.len();
    if k == 0 {
        return false;
    }
    let all: Vec<&SupportConfig> = family.iter().collect();
    if family_rank(&all) != k - 1 {
        return false;
    }
    for mask in 1..(1u32 << k) - 1 {
        let subset: Vec<&SupportConfig> = (0..k)
            .filter(|i| mask & (1 << i) != 0)
            .map(|i| &family[i])
            .collect();
        if subset.is_empty() {
            continue;
        }
        if family_rank(&subset) < subset.len() {
            return false;
        }
    }
    true
}

/// All essential subfamilies of a family, as index sets.
pub fn essential_subfamilies(family: &[SupportConfig]) -> Vec<Vec<usize>> {
    let k = family.len();
    let mut found = Vec::new();
    for mask in 1..(1u32 << k) {
        let idx: Vec<usize> = (0..k).filter(|i| mask & (1 << i) != 0).collect();
        let subset: Vec<SupportConfig> = idx.iter().map(|&i| family[i].clone()).collect();
        if is_essential(&subset) {
            found.push(idx);
        }
    }
    found
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{dilated_simplex, grid, pt};

    fn cfg(label: u32, pts: &[(i64, i64)]) -> SupportConfig {
        SupportConfig::new(label, pts.iter().map(|&(x, y)| pt(x, y)).collect()).unwrap()
    }

    fn sigma(label: u32) -> SupportConfig {
        cfg(label, &[(0, 0), (1, 0), (0, 1)])
    }

    #[test]
    fn profiles_unit_squares() {
        let sq = grid(1, 1, 1);
        let profiles = edge_profiles(&sq, &sq.relabel(2)).unwrap();
        assert_eq!(profiles.len(), 4);
        let normals: Vec<LatticePoint> = profiles.iter().map(|p| p.eta).collect();
        assert_eq!(normals, vec![pt(1, 0), pt(0, 1), pt(-1, 0), pt(0, -1)]);
        for p in &profiles {
            assert_eq!((p.mu1, p.mu2, p.mu), (1, 1, 1));
            assert!(p.in_sigma_prime);
        }
    }

    #[test]
    fn profiles_two_sigma_sigma() {
        let profiles = edge_profiles(&dilated_simplex(1, 2), &sigma(2)).unwrap();
        assert_eq!(profiles.len(), 3);
        let normals: Vec<LatticePoint> = profiles.iter().map(|p| p.eta).collect();
        assert_eq!(normals, vec![pt(1, 0), pt(0, 1), pt(-1, -1)]);
        for p in &profiles {
            assert!(p.in_sigma_prime);
            assert_eq!(p.len1, 2);
            assert_eq!(p.len2, 1);
        }
    }

    #[test]
    fn mu_gap_on_vertex_only_triangle() {
        let sparse = cfg(1, &[(0, 0), (3, 0), (0, 3)]);
        let profiles = edge_profiles(&sparse, &sigma(2)).unwrap();
        let p = profiles.iter().find(|p| p.eta == pt(1, 0)).unwrap();
        assert_eq!(p.mu1, 3);
        assert_eq!(p.mu2, 1);
        assert_eq!(p.mu, 1);
    }

    #[test]
    fn edge_vectors_close_up() {
        // Sum of len_i * rotated(eta) over all profiles must vanish for each hull.
        let pairs = [
            (grid(1, 1, 1), grid(2, 1, 1)),
            (dilated_simplex(1, 2), sigma(2)),
            (cfg(1, &[(0, 0), (3, 0), (0, 3)]), sigma(2)),
        ];
        for (a1, a2) in &pairs {
            let profiles = edge_profiles(a1, a2).unwrap();
            for which in [1, 2] {
                let mut sx = 0;
                let mut sy = 0;
                for p in &profiles {
                    let l = if which == 1 { p.len1 } else { p.len2 };
                    // Edge direction for inner normal eta on a CCW hull.
                    sx += l * p.eta.y;
                    sy += l * -p.eta.x;
                }
                assert_eq!((sx, sy), (0, 0));
            }
        }
    }

    #[test]
    fn mixed_multiplicity_dense_pair_vanishes() {
        let mm = mixed_multiplicity(pt(0, 0), &dilated_simplex(1, 2), &sigma(2), 1).unwrap();
        assert_eq!(mm, 0);
    }

    #[test]
    fn mixed_multiplicity_by_definition() {
        let a1 = sigma(1);
        let a2 = cfg(2, &[(0, 0), (2, 1), (1, 2)]);
        let mm = mixed_multiplicity(pt(0, 0), &a1, &a2, 2).unwrap();
        let trimmed = cfg(2, &[(2, 1), (1, 2)]);
        assert_eq!(mm, mixed_volume(&a1, &a2) - mixed_volume(&trimmed, &a1));
        assert!(mm >= 0);
    }

    #[test]
    fn mixed_multiplicity_rejects_non_vertex() {
        let r = mixed_multiplicity(pt(1, 0), &dilated_simplex(1, 2), &sigma(2), 1);
        assert_eq!(r, Err(Error::NotAVertex));
    }

    #[test]
    fn essential_families() {
        assert!(is_essential(&[sigma(1), sigma(2), sigma(3)]));
        assert!(!is_essential(&[cfg(1, &[(0, 0)]), sigma(2), sigma(3)]));
        let col1 = cfg(1, &[(0, 0), (1, 0)]);
        let col2 = cfg(2, &[(0, 0), (2, 0)]);
        assert!(!is_essential(&[col1.clone(), col2.clone(), sigma(3)]));
        assert!(is_essential(&[col1, col2]));
    }

    #[test]
    fn essential_subfamily_enumeration() {
        let fam = [cfg(1, &[(0, 0)]), sigma(2), sigma(3), sigma(4)];
        let subs = essential_subfamilies(&fam);
        assert!(subs.contains(&vec![0]));
        assert!(subs.contains(&vec![1, 2, 3]));
    }
}
