//! Integer row reduction: Smith normal form, lattice indices and the Cayley
//! matrix of a family of configurations.

use super::{LatticePoint, SupportConfig};
use crate::error::{Error, Result};

/// Diagonal of the Smith normal form of an integer matrix, nonnegative,
/// each entry dividing the next. Trailing zeros are kept.
pub fn smith_normal_form(matrix: &[Vec<i128>]) -> Vec<i128> {
    let rows = matrix.len();
    if rows == 0 {
        return Vec::new();
    }
    let cols = matrix[0].len();
    let mut m: Vec<Vec<i128>> = matrix.to_vec();
    let n = rows.min(cols);
    let mut diag = vec![0i128; n];
    let mut r0 = 0;
    for k in 0..n {
        // Find a nonzero pivot of minimal absolute value.
        loop {
            let mut pivot: Option<(usize, usize)> = None;
            for i in r0..rows {
                for j in k..cols {
                    if m[i][j] != 0 {
                        match pivot {
                            Some((pi, pj)) if m[pi][pj].abs() <= m[i][j].abs() => {}
                            _ => pivot = Some((i, j)),
                        }
                    }
                }
            }
            let (pi, pj) = match pivot {
                Some(p) => p,
                None => return diag,
            };
            m.swap(r0, pi);
            for row in m.iter_mut() {
                row.swap(k, pj);
            }
            let mut clean = true;
            for i in (r0 + 1)..rows {
                let q = m[i][k].div_euclid(m[r0][k]);
                if q != 0 {
                    for j in k..cols {
                        m[i][j] -= q * m[r0][j];
                    }
                }
                if m[i][k] != 0 {
                    clean = false;
                }
            }
            for j in (k + 1)..cols {
                let q = m[r0][j].div_euclid(m[r0][k]);
                if q != 0 {
                    for i in r0..rows {
                        m[i][j] -= q * m[i][k];
                    }
                }
                if m[r0][j] != 0 {
                    clean = false;
                }
            }
            if clean {
                break;
            }
        }
        diag[k] = m[r0][k].abs();
        r0 += 1;
        if r0 >= rows {
            break;
        }
    }
    // Enforce the divisibility chain.
    for i in 0..diag.len() {
        for j in (i + 1)..diag.len() {
            if diag[j] != 0 {
                let g = gcd128(diag[i], diag[j]);
                if g != 0 {
                    let l = diag[i] / g * diag[j];
                    diag[i] = g;
                    diag[j] = l;
                }
            }
        }
    }
    diag
}

fn gcd128(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Rank of an integer matrix.
pub(crate) fn int_rank(matrix: &[Vec<i128>]) -> usize {
    smith_normal_form(matrix).iter().filter(|&&d| d != 0).count()
}

/// Generating difference vectors of a configuration: p - p0 for every point.
fn difference_rows(a: &SupportConfig) -> Vec<Vec<i128>> {
    let p0 = a.points()[0];
    a.points()
        .iter()
        .skip(1)
        .map(|p| vec![(p.x - p0.x) as i128, (p.y - p0.y) as i128])
        .collect()
}

/// Index [Z^2 : ZA_1 + ... + ZA_n] of the joint difference lattice, where
/// ZA_i is the lattice generated by differences within A_i.
pub fn lattice_index(configs: &[SupportConfig]) -> Result<i64> {
    let mut rows: Vec<Vec<i128>> = Vec::new();
    for a in configs {
        rows.extend(difference_rows(a));
    }
    let diag = smith_normal_form(&rows);
    let nonzero: Vec<i128> = diag.iter().copied().filter(|&d| d != 0).collect();
    if nonzero.len() < 2 {
        return Err(Error::DefectiveLatticeSpan);
    }
    Ok((nonzero[0] * nonzero[1]) as i64)
}

/// The Cayley matrix of a family together with the index of the Cayley
/// configuration's lattice; `index` is `None` when that lattice has
/// deficient rank (no finite index).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CayleyData {
    pub matrix: Vec<Vec<i64>>,
    pub index: Option<i64>,
    /// Support of phi(x, y) = sum_i y_i f_i(x): one column per (i, alpha).
    pub phi_support: Vec<(u32, LatticePoint)>,
}

/// Assembles the 2n x m Cayley matrix (identity-pattern top block, support
/// coordinates below). For a single univariate configuration (all points on
/// the x-axis) the n = 1 convention gives a 2 x m matrix with one top row
/// and one support row.
pub fn cayley_matrix(configs: &[SupportConfig]) -> Result<CayleyData> {
    let n = configs.len();
    if n == 0 {
        return Err(Error::EmptyConfiguration);
    }
    let univariate = n == 1 && configs[0].points().iter().all(|p| p.y == 0);
    let coord_rows = if univariate { 1 } else { 2 };
    let m: usize = configs.iter().map(|a| a.points().len()).sum();
    let mut matrix = vec![vec![0i64; m]; n + coord_rows];
    let mut phi_support = Vec::with_capacity(m);
    let mut col = 0;
    for (i, a) in configs.iter().enumerate() {
        for &p in a.points() {
            matrix[i][col] = 1;
            matrix[n][col] = p.x;
            if !univariate {
                matrix[n + 1][col] = p.y;
            }
            phi_support.push((a.label(), p));
            col += 1;
        }
    }
    // Index of the lattice spanned by the columns inside Z^(n + coord_rows).
    let rows128: Vec<Vec<i128>> = (0..m)
        .map(|j| matrix.iter().map(|row| row[j] as i128).collect())
        .collect();
    let diag = smith_normal_form(&rows128);
    let nonzero: Vec<i128> = diag.iter().copied().filter(|&d| d != 0).collect();
    let index = if nonzero.len() == n + coord_rows {
        Some(nonzero.iter().product::<i128>() as i64)
    } else {
        None
    };
    Ok(CayleyData { matrix, index, phi_support })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::pt;

    fn cfg(label: u32, pts: &[(i64, i64)]) -> SupportConfig {
        SupportConfig::new(label, pts.iter().map(|&(x, y)| pt(x, y)).collect()).unwrap()
    }

    fn sigma(label: u32) -> SupportConfig {
        cfg(label, &[(0, 0), (1, 0), (0, 1)])
    }

    #[test]
    fn snf_diagonal() {
        let m = vec![vec![2, 0], vec![0, 3]];
        assert_eq!(smith_normal_form(&m), vec![1, 6]);
        let m = vec![vec![2, 0], vec![0, 2]];
        assert_eq!(smith_normal_form(&m), vec![2, 2]);
        let m = vec![vec![1, 0], vec![0, 1]];
        assert_eq!(smith_normal_form(&m), vec![1, 1]);
    }

    #[test]
    fn index_examples() {
        assert_eq!(lattice_index(&[sigma(1), sigma(2)]).unwrap(), 1);
        let doubled = cfg(1, &[(0, 0), (2, 0), (0, 2)]);
        assert_eq!(lattice_index(&[doubled.clone(), doubled.relabel(2)]).unwrap(), 4);
        let a = cfg(1, &[(0, 0), (2, 0)]);
        let b = cfg(2, &[(0, 0), (0, 3)]);
        assert_eq!(lattice_index(&[a, b]).unwrap(), 6);
    }

    #[test]
    fn index_defective() {
        let a = cfg(1, &[(0, 0), (1, 0)]);
        let b = cfg(2, &[(0, 0), (2, 0)]);
        assert_eq!(lattice_index(&[a, b]), Err(Error::DefectiveLatticeSpan));
    }

    #[test]
    fn cayley_two_simplices() {
        let data = cayley_matrix(&[sigma(1), sigma(2)]).unwrap();
        assert_eq!(data.matrix.len(), 4);
        assert_eq!(data.matrix[0].len(), 6);
        assert_eq!(data.matrix[0], vec![1, 1, 1, 0, 0, 0]);
        assert_eq!(data.matrix[1], vec![0, 0, 0, 1, 1, 1]);
        assert_eq!(data.index, Some(1));
    }

    #[test]
    fn cayley_single_point_univariate() {
        let data = cayley_matrix(&[cfg(1, &[(0, 0)])]).unwrap();
        assert_eq!(data.matrix, vec![vec![1], vec![0]]);
    }

    #[test]
    fn cayley_index_matches_lattice_index() {
        let families: Vec<Vec<SupportConfig>> = vec![
            vec![sigma(1), sigma(2)],
            vec![cfg(1, &[(0, 0), (2, 0), (0, 2)]), cfg(2, &[(0, 0), (2, 0), (0, 2)])],
            vec![cfg(1, &[(0, 0), (2, 0)]), cfg(2, &[(0, 0), (0, 3)])],
            vec![cfg(1, &[(1, 1), (3, 1)]), cfg(2, &[(0, 2), (0, 4)])],
        ];
        for fam in &families {
            let want = lattice_index(fam).unwrap();
            let got = cayley_matrix(fam).unwrap().index;
            assert_eq!(got, Some(want), "family {fam:?}");
        }
    }
}
