//! Exact determinants of matrices over Z[c_{i,alpha}]. Three kernels:
//! cofactor expansion for tiny matrices, a sparsity-aware column-subset
//! scan for mid-size symbolic matrices, and fraction-free elimination
//! beyond that.

use std::collections::HashMap;

use crate::poly::CoeffPoly;

/// Determinant of a square matrix. Panics on a non-square input.
pub fn determinant(m: &[Vec<CoeffPoly>]) -> CoeffPoly {
    let n = m.len();
    for row in m {
        assert_eq!(row.len(), n, "determinant of a non-square matrix");
    }
    if n == 0 {
        return CoeffPoly::one();
    }
    if n <= 4 {
        return det_cofactor(m);
    }
    // Fraction-free elimination is best for numeric matrices; the subset
    // scan wins on sparse symbolic ones where minors blow up.
    let all_constant = m.iter().flatten().all(|e| e.is_constant());
    if all_constant || n > 18 {
        det_bareiss(m)
    } else {
        det_subset_scan(m)
    }
}

fn det_cofactor(m: &[Vec<CoeffPoly>]) -> CoeffPoly {
    let n = m.len();
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = CoeffPoly::zero();
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<CoeffPoly>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(k, _)| k != j)
                    .map(|(_, e)| e.clone())
                    .collect()
            })
            .collect();
        let sub = det_cofactor(&minor);
        let term = m[0][j].mul(&sub);
        if j % 2 == 0 {
            acc = acc.add(&term);
        } else {
            acc = acc.sub(&term);
        }
    }
    acc
}

/// Row-by-row expansion over used-column bitmasks. Exploits row sparsity:
/// the work per state is the number of nonzero entries of the current row.
fn det_subset_scan(m: &[Vec<CoeffPoly>]) -> CoeffPoly {
    let n = m.len();
    let mut states: HashMap<u32, CoeffPoly> = HashMap::new();
    states.insert(0, CoeffPoly::one());
    for row in m {
        let nonzero: Vec<(usize, &CoeffPoly)> = row
            .iter()
            .enumerate()
            .filter(|(_, e)| !e.is_zero())
            .collect();
        let mut next: HashMap<u32, CoeffPoly> = HashMap::with_capacity(states.len());
        for (mask, acc) in &states {
            for &(j, entry) in &nonzero {
                let bit = 1u32 << j;
                if mask & bit != 0 {
                    continue;
                }
                // Parity of used columns above j gives the permutation sign.
                let sign_flips = (mask >> (j + 1)).count_ones();
                let term = acc.mul(entry);
                let slot = next.entry(mask | bit).or_insert_with(CoeffPoly::zero);
                if sign_flips % 2 == 0 {
                    *slot = slot.add(&term);
                } else {
                    *slot = slot.sub(&term);
                }
            }
        }
        next.retain(|_, p| !p.is_zero());
        states = next;
        if states.is_empty() {
            return CoeffPoly::zero();
        }
    }
    states.remove(&((1u64 << n) as u32).wrapping_sub(1)).unwrap_or_else(CoeffPoly::zero)
}

/// Bareiss fraction-free elimination with row pivoting.
fn det_bareiss(m: &[Vec<CoeffPoly>]) -> CoeffPoly {
    let n = m.len();
    let mut a: Vec<Vec<CoeffPoly>> = m.to_vec();
    let mut sign = false;
    let mut prev = CoeffPoly::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let pivot = (k + 1..n).find(|&i| !a[i][k].is_zero());
            match pivot {
                Some(i) => {
                    a.swap(k, i);
                    sign = !sign;
                }
                None => return CoeffPoly::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = a[k][k].mul(&a[i][j]).sub(&a[i][k].mul(&a[k][j]));
                a[i][j] = num.exact_div(&prev).expect("Bareiss divisions are exact");
            }
            a[i][k] = CoeffPoly::zero();
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if sign {
        det.neg()
    } else {
        det
    }
}
