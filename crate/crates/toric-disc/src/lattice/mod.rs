//! Combinatorial geometry of plane lattice configurations: hulls, normalized
//! and mixed volumes, Minkowski sums, edge data and lattice indices.

mod profiles;
mod snf;

pub use profiles::{
    edge_profiles, essential_subfamilies, eta_face_data, is_essential, mixed_multiplicity,
    EdgeProfile, EtaFaceData,
};
pub use snf::{cayley_matrix, lattice_index, smith_normal_form, CayleyData};

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// A lattice point in the exponent plane. Coordinates may be negative
/// (Laurent exponents).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub struct LatticePoint {
    pub x: i64,
    pub y: i64,
}

impl LatticePoint {
    pub const fn new(x: i64, y: i64) -> Self {
        Self { x, y }
    }

    pub fn add(self, o: Self) -> Self {
        Self::new(self.x + o.x, self.y + o.y)
    }

    pub fn sub(self, o: Self) -> Self {
        Self::new(self.x - o.x, self.y - o.y)
    }

    pub fn dot(self, o: Self) -> i64 {
        self.x * o.x + self.y * o.y
    }

    /// z-component of the cross product (o - self) x (p - self).
    pub fn cross(self, o: Self, p: Self) -> i64 {
        (o.x - self.x) * (p.y - self.y) - (o.y - self.y) * (p.x - self.x)
    }
}

pub fn pt(x: i64, y: i64) -> LatticePoint {
    LatticePoint::new(x, y)
}

/// A finite set of lattice points with an identity label, the support of one
/// of the input polynomials.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SupportConfig {
    label: u32,
    points: Vec<LatticePoint>,
}

impl SupportConfig {
    /// Builds a configuration, rejecting empty input and duplicate points.
    /// The given point order is preserved.
    pub fn new(label: u32, points: Vec<LatticePoint>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::EmptyConfiguration);
        }
        let mut seen = std::collections::HashSet::new();
        for p in &points {
            if !seen.insert(*p) {
                return Err(Error::DuplicatePoint(p.x, p.y));
            }
        }
        Ok(Self { label, points })
    }

    pub fn label(&self) -> u32 {
        self.label
    }

    pub fn points(&self) -> &[LatticePoint] {
        &self.points
    }

    pub fn contains(&self, p: LatticePoint) -> bool {
        self.points.contains(&p)
    }

    pub fn hull(&self) -> Vec<LatticePoint> {
        convex_hull(&self.points)
    }

    /// Affine dimension of the configuration: 0, 1 or 2.
    pub fn dim(&self) -> usize {
        config_dim(&self.points)
    }

    /// Returns the same point set relabelled.
    pub fn relabel(&self, label: u32) -> Self {
        Self { label, points: self.points.clone() }
    }

    /// Removes one point, keeping the label.
    pub fn without(&self, p: LatticePoint) -> Result<Self> {
        let pts: Vec<_> = self.points.iter().copied().filter(|q| *q != p).collect();
        Self::new(self.label, pts)
    }
}

pub(crate) fn config_dim(points: &[LatticePoint]) -> usize {
    if points.len() <= 1 {
        return 0;
    }
    let p0 = points[0];
    let mut dir: Option<LatticePoint> = None;
    for p in &points[1..] {
        let d = p.sub(p0);
        if d.x == 0 && d.y == 0 {
            continue;
        }
        match dir {
            None => dir = Some(d),
            Some(v) => {
                if v.x * d.y - v.y * d.x != 0 {
                    return 2;
                }
            }
        }
    }
    if dir.is_some() {
        1
    } else {
        0
    }
}

/// Convex hull of a nonempty point set, counterclockwise, collinear interior
/// points excluded. Degenerate hulls come back as one or two vertices.
pub fn convex_hull(points: &[LatticePoint]) -> Vec<LatticePoint> {
    assert!(!points.is_empty(), "convex hull of empty set");
    let mut pts: Vec<LatticePoint> = points.to_vec();
    pts.sort_by_key(|p| (p.x, p.y));
    pts.dedup();
    let n = pts.len();
    if n == 1 {
        return pts;
    }
    if config_dim(&pts) < 2 {
        // Segment: the two lexicographic extremes.
        return vec![pts[0], pts[n - 1]];
    }
    // Andrew's monotone chain; strict turns only so collinear points drop out.
    let mut lower: Vec<LatticePoint> = Vec::new();
    for &p in &pts {
        while lower.len() >= 2 && lower[lower.len() - 2].cross(lower[lower.len() - 1], p) <= 0 {
            lower.pop();
        }
        lower.push(p);
    }
    let mut upper: Vec<LatticePoint> = Vec::new();
    for &p in pts.iter().rev() {
        while upper.len() >= 2 && upper[upper.len() - 2].cross(upper[upper.len() - 1], p) <= 0 {
            upper.pop();
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

/// Normalized volume of conv(A): twice the Euclidean area, an integer.
/// Zero for configurations of dimension < 2.
pub fn normalized_volume(a: &SupportConfig) -> i64 {
    hull_volume(&a.hull())
}

pub(crate) fn hull_volume(hull: &[LatticePoint]) -> i64 {
    if hull.len() < 3 {
        return 0;
    }
    let mut two_area = 0i64;
    for i in 0..hull.len() {
        let p = hull[i];
        let q = hull[(i + 1) % hull.len()];
        two_area += p.x * q.y - q.x * p.y;
    }
    two_area.abs()
}

/// Minkowski sum of configurations: all pairwise sums, deduplicated.
/// The result carries label 0 (it is derived bookkeeping, not an input).
pub fn minkowski_sum(a: &SupportConfig, b: &SupportConfig) -> SupportConfig {
    let mut pts: Vec<LatticePoint> = Vec::with_capacity(a.points.len() * b.points.len());
    for &p in &a.points {
        for &q in &b.points {
            pts.push(p.add(q));
        }
    }
    pts.sort_by_key(|p| (p.x, p.y));
    pts.dedup();
    SupportConfig { label: 0, points: pts }
}

/// Mixed volume via the n = 2 identity
/// 2 MV(Q1,Q2) = Vol(Q1+Q2) - Vol(Q1) - Vol(Q2).
pub fn mixed_volume(a: &SupportConfig, b: &SupportConfig) -> i64 {
    let sum = minkowski_sum(a, b);
    let v = normalized_volume(&sum) - normalized_volume(a) - normalized_volume(b);
    debug_assert!(v >= 0 && v % 2 == 0);
    v / 2
}

/// True iff A consists of all lattice points of its convex hull.
pub fn is_full(a: &SupportConfig) -> bool {
    let hull = a.hull();
    let (xmin, xmax) = match hull.iter().map(|p| p.x).fold(None, fold_minmax) {
        Some(m) => m,
        None => return true,
    };
    let (ymin, ymax) = hull.iter().map(|p| p.y).fold(None, fold_minmax).unwrap();
    for x in xmin..=xmax {
        for y in ymin..=ymax {
            let p = pt(x, y);
            if point_in_hull(&hull, p) && !a.contains(p) {
                return false;
            }
        }
    }
    true
}

fn fold_minmax(acc: Option<(i64, i64)>, v: i64) -> Option<(i64, i64)> {
    Some(match acc {
        None => (v, v),
        Some((lo, hi)) => (lo.min(v), hi.max(v)),
    })
}

/// Closed membership test against a hull returned by [`convex_hull`].
pub(crate) fn point_in_hull(hull: &[LatticePoint], p: LatticePoint) -> bool {
    match hull.len() {
        0 => false,
        1 => hull[0] == p,
        2 => {
            let (a, b) = (hull[0], hull[1]);
            if a.cross(b, p) != 0 {
                return false;
            }
            let t = (p.x - a.x) * (b.x - a.x) + (p.y - a.y) * (b.y - a.y);
            let len2 = (b.x - a.x).pow(2) + (b.y - a.y).pow(2);
            t >= 0 && t <= len2
        }
        _ => {
            for i in 0..hull.len() {
                let a = hull[i];
                let b = hull[(i + 1) % hull.len()];
                if a.cross(b, p) < 0 {
                    return false;
                }
            }
            true
        }
    }
}

/// Perimeter in the lattice sense: number of boundary lattice points.
pub fn lattice_perimeter(a: &SupportConfig) -> i64 {
    let hull = a.hull();
    match hull.len() {
        1 => 1,
        2 => segment_length(hull[0], hull[1]) + 1,
        _ => {
            let mut count = 0;
            for i in 0..hull.len() {
                count += segment_length(hull[i], hull[(i + 1) % hull.len()]);
            }
            count
        }
    }
}

/// Normalized lattice length of a segment: number of lattice points minus 1.
pub fn segment_length(a: LatticePoint, b: LatticePoint) -> i64 {
    num_integer::gcd((b.x - a.x).abs(), (b.y - a.y).abs())
}

/// Dilated standard simplex d*sigma, all lattice points, given label.
pub fn dilated_simplex(label: u32, d: i64) -> SupportConfig {
    assert!(d >= 1);
    let mut pts = Vec::new();
    for x in 0..=d {
        for y in 0..=(d - x) {
            pts.push(pt(x, y));
        }
    }
    SupportConfig::new(label, pts).unwrap()
}

/// All lattice points of the axis-aligned box [0,w] x [0,h].
pub fn grid(label: u32, w: i64, h: i64) -> SupportConfig {
    let mut pts = Vec::new();
    for x in 0..=w {
        for y in 0..=h {
            pts.push(pt(x, y));
        }
    }
    SupportConfig::new(label, pts).unwrap()
}
