//! Classical Macaulay resultant of three dense bivariate polynomials with
//! supports d_i * sigma, via the quotient det(M) / det(M') at the critical
//! degree d1 + d2 + d3 - 2. Serves as an independent oracle for the sparse
//! engine on dilated-simplex supports.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::lattice::dilated_simplex;
use crate::poly::laurent::LaurentPoly;
use crate::poly::CoeffPoly;
use crate::resultant::det::determinant;

/// Homogeneous exponent in (x0, x1, x2).
type HExp = (i64, i64, i64);

fn monomials_of_degree(d: i64) -> Vec<HExp> {
    let mut out = Vec::new();
    for a in 0..=d {
        for b in 0..=(d - a) {
            out.push((d - a - b, a, b));
        }
    }
    out
}

/// Exponent of x_{i} in gamma (i in 0..3).
fn comp(g: HExp, i: usize) -> i64 {
    match i {
        0 => g.0,
        1 => g.1,
        _ => g.2,
    }
}

pub fn macaulay_dense_oracle(polys: &[&LaurentPoly; 3], degrees: [i64; 3]) -> Result<CoeffPoly> {
    for (f, &d) in polys.iter().zip(&degrees) {
        let expect = dilated_simplex(f.support().label(), d);
        let mut pts = f.support().points().to_vec();
        pts.sort();
        if pts != expect.points() {
            return Err(Error::Input(format!(
                "support of label {} is not the dilated simplex of degree {d}",
                f.support().label()
            )));
        }
    }
    let crit = degrees.iter().sum::<i64>() - 2;
    let cols = monomials_of_degree(crit);
    let col_index: BTreeMap<HExp, usize> =
        cols.iter().enumerate().map(|(i, &g)| (g, i)).collect();

    // Column gamma is assigned to the first i with gamma_i >= d_{i+1};
    // it is reduced when exactly one i qualifies.
    let assign = |g: HExp| -> usize {
        (0..3)
            .find(|&i| comp(g, i) >= degrees[i])
            .expect("critical degree guarantees a qualifying index")
    };
    let is_reduced = |g: HExp| -> bool {
        (0..3).filter(|&i| comp(g, i) >= degrees[i]).count() == 1
    };

    let n = cols.len();
    let mut m = vec![vec![CoeffPoly::zero(); n]; n];
    let mut row_reduced = vec![false; n];
    for (r, &g) in cols.iter().enumerate() {
        let i = assign(g);
        row_reduced[r] = is_reduced(g);
        // Row: x^(gamma - d_i e_i) * F_i with F_i the homogenization of f_i.
        let mut base = g;
        match i {
            0 => base.0 -= degrees[0],
            1 => base.1 -= degrees[1],
            _ => base.2 -= degrees[2],
        }
        for (p, c) in polys[i].terms() {
            let h = degrees[i] - p.x - p.y;
            let target = (base.0 + h, base.1 + p.x, base.2 + p.y);
            let col = col_index[&target];
            m[r][col] = c.clone();
        }
    }

    let det_m = determinant(&m);
    // Minor on the non-reduced rows and columns.
    let keep: Vec<usize> = (0..n).filter(|&r| !row_reduced[r]).collect();
    let minor: Vec<Vec<CoeffPoly>> = keep
        .iter()
        .map(|&r| keep.iter().map(|&c| m[r][c].clone()).collect())
        .collect();
    let det_minor = determinant(&minor);
    if det_minor.is_zero() {
        return Err(Error::InexactDivision("vanishing Macaulay minor".into()));
    }
    Ok(det_m.exact_div(&det_minor)?.normalize_sign())
}
