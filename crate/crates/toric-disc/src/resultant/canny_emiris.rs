//! Canny-Emiris sparse resultant matrices: seeded random liftings induce a
//! regular mixed subdivision of Q1 + Q2 + Q3; lattice points of the
//! delta-translated sum polytope index rows and columns, and the row-content
//! function fills each row with shifted coefficients of one input.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::lattice::{convex_hull, normalized_volume, LatticePoint, SupportConfig};
use crate::poly::laurent::LaurentPoly;
use crate::poly::CoeffPoly;

/// Perturbation delta = (3/512, 7/512); generic for all desk-scale supports.
const DELTA_NUM: (i64, i64) = (3, 7);
const DELTA_DEN: i64 = 512;

#[derive(Clone, Debug)]
pub struct SubdivisionCell {
    /// Counterclockwise hull of the cell.
    pub vertices: Vec<LatticePoint>,
    /// Generating faces F1, F2, F3, one per support.
    pub faces: [Vec<LatticePoint>; 3],
    /// Dimensions of the generating faces; they sum to 2.
    pub face_dims: [usize; 3],
    /// Mixed cells are sums with no 2-dimensional summand.
    pub mixed: bool,
}

#[derive(Clone, Debug)]
pub struct CannyEmirisData {
    pub seed: u64,
    /// Lattice points of (Q + delta), row/column index space, sorted.
    pub points: Vec<LatticePoint>,
    pub matrix: Vec<Vec<CoeffPoly>>,
    pub cells: Vec<SubdivisionCell>,
    /// Per row: (input index 0..2, chosen vertex of its support).
    pub row_contents: Vec<(usize, LatticePoint)>,
    /// Per row: index into `cells` of the cell containing the point.
    pub row_cells: Vec<usize>,
}

impl CannyEmirisData {
    /// Versioned diagnostic text: one cell per line.
    pub fn dump(&self) -> String {
        let mut out = String::from("ce-dump/1\n");
        for cell in &self.cells {
            let fmt_pts = |pts: &[LatticePoint]| {
                pts.iter()
                    .map(|p| format!("({},{})", p.x, p.y))
                    .collect::<Vec<_>>()
                    .join(" ")
            };
            let _ = writeln!(
                out,
                "cell {} | {} | F1 {} | F2 {} | F3 {}",
                fmt_pts(&cell.vertices),
                if cell.mixed { "mixed" } else { "non-mixed" },
                fmt_pts(&cell.faces[0]),
                fmt_pts(&cell.faces[1]),
                fmt_pts(&cell.faces[2]),
            );
        }
        out
    }
}

fn dim_of(points: &[LatticePoint]) -> usize {
    if points.len() <= 1 {
        return 0;
    }
    let p0 = points[0];
    let mut dir: Option<LatticePoint> = None;
    for &p in &points[1..] {
        let d = p.sub(p0);
        match dir {
            None => dir = Some(d),
            Some(v) => {
                if v.x * d.y - v.y * d.x != 0 {
                    return 2;
                }
            }
        }
    }
    1
}

/// Closed containment of a scaled query point in a scaled convex polygon
/// given by its CCW hull. Both live at scale `DELTA_DEN`.
fn in_scaled_hull(hull: &[LatticePoint], q: (i64, i64)) -> bool {
    if hull.len() == 1 {
        return q == (hull[0].x * DELTA_DEN, hull[0].y * DELTA_DEN);
    }
    if hull.len() == 2 {
        let (a, b) = (hull[0], hull[1]);
        let cr = (b.x - a.x) * (q.1 - a.y * DELTA_DEN) - (b.y - a.y) * (q.0 - a.x * DELTA_DEN);
        if cr != 0 {
            return false;
        }
        let d = (b.x - a.x) * (q.0 - a.x * DELTA_DEN) + (b.y - a.y) * (q.1 - a.y * DELTA_DEN);
        return d >= 0 && d <= ((b.x - a.x).pow(2) + (b.y - a.y).pow(2)) * DELTA_DEN;
    }
    for i in 0..hull.len() {
        let a = hull[i];
        let b = hull[(i + 1) % hull.len()];
        let cr = (b.x - a.x) * (q.1 - a.y * DELTA_DEN) - (b.y - a.y) * (q.0 - a.x * DELTA_DEN);
        if cr < 0 {
            return false;
        }
    }
    true
}

pub fn canny_emiris_matrix(
    polys: [&LaurentPoly; 3],
    seed: u64,
) -> Result<CannyEmirisData> {
    let supports: [&SupportConfig; 3] = [
        polys[0].support(),
        polys[1].support(),
        polys[2].support(),
    ];
    // Seeded integer liftings in [0, 2^16).
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut lifts: [BTreeMap<LatticePoint, i64>; 3] = Default::default();
    for (i, s) in supports.iter().enumerate() {
        for &p in s.points() {
            lifts[i].insert(p, rng.gen_range(0..1i64 << 16));
        }
    }

    // Lower envelope of the lifted Minkowski sum, reduced to the minimal
    // height per projected point.
    let mut cloud: BTreeMap<LatticePoint, i64> = BTreeMap::new();
    for &a1 in supports[0].points() {
        for &a2 in supports[1].points() {
            let partial = lifts[0][&a1] + lifts[1][&a2];
            let s12 = a1.add(a2);
            for &a3 in supports[2].points() {
                let s = s12.add(a3);
                let h = partial + lifts[2][&a3];
                cloud
                    .entry(s)
                    .and_modify(|v| *v = (*v).min(h))
                    .or_insert(h);
            }
        }
    }
    let pts: Vec<(i64, i64, i64)> = cloud.iter().map(|(p, &h)| (p.x, p.y, h)).collect();
    let n = pts.len();

    // Lower-hull facets by triple enumeration; deduplicated by vertex set.
    let mut facet_sets: std::collections::BTreeSet<Vec<usize>> = Default::default();
    let mut facet_normals: BTreeMap<Vec<usize>, (i64, i64, i64)> = BTreeMap::new();
    for i in 0..n {
        for j in (i + 1)..n {
            for k in (j + 1)..n {
                let v1 = (pts[j].0 - pts[i].0, pts[j].1 - pts[i].1, pts[j].2 - pts[i].2);
                let v2 = (pts[k].0 - pts[i].0, pts[k].1 - pts[i].1, pts[k].2 - pts[i].2);
                let mut nx = v1.1 * v2.2 - v1.2 * v2.1;
                let mut ny = v1.2 * v2.0 - v1.0 * v2.2;
                let mut nz = v1.0 * v2.1 - v1.1 * v2.0;
                if nz == 0 {
                    continue;
                }
                if nz < 0 {
                    nx = -nx;
                    ny = -ny;
                    nz = -nz;
                }
                let mut ok = true;
                let mut on_plane = Vec::new();
                for (l, p) in pts.iter().enumerate() {
                    let d = nx * (p.0 - pts[i].0) + ny * (p.1 - pts[i].1) + nz * (p.2 - pts[i].2);
                    if d < 0 {
                        ok = false;
                        break;
                    }
                    if d == 0 {
                        on_plane.push(l);
                    }
                }
                if ok && facet_sets.insert(on_plane.clone()) {
                    facet_normals.insert(on_plane, (nx, ny, nz));
                }
            }
        }
    }

    // Recover cell types from the supporting plane normals.
    let mut cells = Vec::with_capacity(facet_sets.len());
    for (set, &(nx, ny, nz)) in &facet_normals {
        let proj: Vec<LatticePoint> = set
            .iter()
            .map(|&l| LatticePoint::new(pts[l].0, pts[l].1))
            .collect();
        let vertices = convex_hull(&proj);
        let mut faces: [Vec<LatticePoint>; 3] = Default::default();
        let mut face_dims = [0usize; 3];
        for i in 0..3 {
            let key = |a: LatticePoint| nz * lifts[i][&a] + nx * a.x + ny * a.y;
            let min = supports[i].points().iter().map(|&a| key(a)).min().unwrap();
            faces[i] = supports[i]
                .points()
                .iter()
                .copied()
                .filter(|&a| key(a) == min)
                .collect();
            face_dims[i] = dim_of(&faces[i]);
        }
        if face_dims.iter().sum::<usize>() != 2 {
            return Err(Error::NonGenericLifting);
        }
        let mixed = face_dims.iter().all(|&d| d <= 1);
        cells.push(SubdivisionCell { vertices, faces, face_dims, mixed });
    }

    // Tiling check: cell volumes sum to the volume of Q.
    let q_points: Vec<LatticePoint> = cloud.keys().copied().collect();
    let q_cfg = SupportConfig::new(0, q_points.clone())?;
    let total: i64 = cells
        .iter()
        .map(|c| {
            let cfg = SupportConfig::new(0, c.vertices.clone()).unwrap();
            normalized_volume(&cfg)
        })
        .sum();
    if total != normalized_volume(&q_cfg) {
        return Err(Error::NonGenericLifting);
    }

    // E = lattice points of Q + delta.
    let q_hull = convex_hull(&q_points);
    let (minx, maxx) = (
        q_points.iter().map(|p| p.x).min().unwrap(),
        q_points.iter().map(|p| p.x).max().unwrap(),
    );
    let (miny, maxy) = (
        q_points.iter().map(|p| p.y).min().unwrap(),
        q_points.iter().map(|p| p.y).max().unwrap(),
    );
    let mut points = Vec::new();
    for x in minx..=maxx + 1 {
        for y in miny..=maxy + 1 {
            let q = (x * DELTA_DEN - DELTA_NUM.0, y * DELTA_DEN - DELTA_NUM.1);
            if in_scaled_hull(&q_hull, q) {
                points.push(LatticePoint::new(x, y));
            }
        }
    }
    let col_index: BTreeMap<LatticePoint, usize> =
        points.iter().enumerate().map(|(i, &p)| (p, i)).collect();

    // Row contents via point location in the subdivision.
    let mut row_contents = Vec::with_capacity(points.len());
    let mut row_cells = Vec::with_capacity(points.len());
    for &p in &points {
        let q = (p.x * DELTA_DEN - DELTA_NUM.0, p.y * DELTA_DEN - DELTA_NUM.1);
        let hits: Vec<usize> = (0..cells.len())
            .filter(|&c| in_scaled_hull(&cells[c].vertices, q))
            .collect();
        if hits.len() != 1 {
            return Err(Error::NonGenericLifting);
        }
        let cell = &cells[hits[0]];
        row_cells.push(hits[0]);
        // Largest input index whose generating face is a vertex.
        let i = (0..3)
            .rev()
            .find(|&i| cell.face_dims[i] == 0)
            .expect("face dimensions sum to 2, so some face is a vertex");
        row_contents.push((i, cell.faces[i][0]));
    }

    // Matrix fill: row p carries x^(p - a) f_i on the declared support.
    let m = points.len();
    let mut matrix = vec![vec![CoeffPoly::zero(); m]; m];
    for (r, (&p, &(i, a))) in points.iter().zip(&row_contents).enumerate() {
        for &b in supports[i].points() {
            let target = p.sub(a).add(b);
            let c = match col_index.get(&target) {
                Some(&c) => c,
                None => return Err(Error::NonGenericLifting),
            };
            matrix[r][c] = polys[i].coefficient_at(b);
        }
    }

    Ok(CannyEmirisData { seed, points, matrix, cells, row_contents, row_cells })
}
