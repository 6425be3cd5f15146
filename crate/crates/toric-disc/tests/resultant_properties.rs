//! Property suite for the sparse resultant engine: multiplicativity, the
//! monomial and power rules, degree audits, and lifting-seed invariance.

use std::collections::BTreeMap;

use toric_disc::disc::{jacobian_resultant_degrees, mixed_discriminant};
use toric_disc::lattice::{dilated_simplex, grid, mixed_volume, pt, SupportConfig};
use toric_disc::poly::laurent::LaurentPoly;
use toric_disc::poly::{CoeffPoly, CoeffSymbol};
use toric_disc::resultant::{
    determinant, sparse_resultant, sylvester_resultant, ResOptions,
};

fn sym(label: u32, x: i64, y: i64) -> CoeffPoly {
    CoeffPoly::symbol(CoeffSymbol::new(label, pt(x, y)))
}

/// Independent oracle: the resultant of three generic lines is the
/// determinant of their coefficient matrix.
fn three_lines_oracle(labels: [u32; 3]) -> CoeffPoly {
    let mat: Vec<Vec<CoeffPoly>> = labels
        .iter()
        .map(|&l| vec![sym(l, 0, 0), sym(l, 1, 0), sym(l, 0, 1)])
        .collect();
    determinant(&mat).normalize_sign()
}

#[test]
fn multiplicativity_in_the_first_argument() {
    // Res(f' f'', f2, f3) = +/- Res(f', f2, f3) * Res(f'', f2, f3).
    let f1p = LaurentPoly::symbolic(&dilated_simplex(1, 1));
    let f1pp = LaurentPoly::symbolic(&dilated_simplex(4, 1));
    let f2 = LaurentPoly::symbolic(&dilated_simplex(2, 1));
    let f3 = LaurentPoly::symbolic(&dilated_simplex(3, 1));
    let f1 = f1p.product(&f1pp, 5);
    // The coefficients of f1 live in labels 1 and 4, so the default
    // label-keyed predictions do not apply; supply the factored degrees.
    let mut expected = BTreeMap::new();
    expected.insert(1, 1u32);
    expected.insert(4, 1u32);
    expected.insert(2, 2u32);
    expected.insert(3, 2u32);
    let opts = ResOptions { expected_degrees: Some(expected), ..ResOptions::default() };
    let lhs = sparse_resultant(&f1, &f2, &f3, &opts).unwrap().value;
    let rhs = three_lines_oracle([1, 2, 3])
        .mul(&three_lines_oracle([4, 2, 3]))
        .normalize_sign();
    assert_eq!(lhs.normalize_sign(), rhs);
}

#[test]
fn monomial_rule_in_each_position() {
    let mono = |label: u32| {
        let cfg = SupportConfig::new(label, vec![pt(1, 1)]).unwrap();
        LaurentPoly::symbolic(&cfg)
    };
    let line = |label: u32| LaurentPoly::symbolic(&dilated_simplex(label, 1));
    let conic = |label: u32| LaurentPoly::symbolic(&dilated_simplex(label, 2));
    // MV(sigma, 2 sigma) = 2 in every position of the monomial.
    let out = sparse_resultant(&mono(1), &line(2), &conic(3), &ResOptions::default()).unwrap();
    assert_eq!(out.value, sym(1, 1, 1).pow(2));
    let out = sparse_resultant(&line(1), &mono(2), &conic(3), &ResOptions::default()).unwrap();
    assert_eq!(out.value, sym(2, 1, 1).pow(2));
    let out = sparse_resultant(&line(1), &conic(2), &mono(3), &ResOptions::default()).unwrap();
    assert_eq!(out.value, sym(3, 1, 1).pow(2));
}

/// Spreads univariate coefficients over exponents scaled by d.
fn spread(coeffs: &[CoeffPoly], d: usize) -> Vec<CoeffPoly> {
    let mut out = vec![CoeffPoly::zero(); (coeffs.len() - 1) * d + 1];
    for (k, c) in coeffs.iter().enumerate() {
        out[k * d] = c.clone();
    }
    out
}

#[test]
fn power_rule_degrees_two_and_three() {
    // Res(f(t^d), g(t^d)) = +/- Res(f, g)^d.
    let f: Vec<CoeffPoly> = (0..=2).map(|k| sym(1, k, 0)).collect();
    let g: Vec<CoeffPoly> = (0..=1).map(|k| sym(2, k, 0)).collect();
    let base = sylvester_resultant(&f, &g).unwrap();
    for d in [2usize, 3] {
        let r = sylvester_resultant(&spread(&f, d), &spread(&g, d)).unwrap();
        assert_eq!(r, base.pow(d as u32).normalize_sign(), "power rule d = {d}");
    }
}

#[test]
fn degree_audit_matches_mixed_volume_predictions() {
    let f1 = LaurentPoly::symbolic(&dilated_simplex(1, 1));
    let f2 = LaurentPoly::symbolic(&dilated_simplex(2, 1));
    let f3 = LaurentPoly::symbolic(&dilated_simplex(3, 2));
    let out = sparse_resultant(&f1, &f2, &f3, &ResOptions::default()).unwrap();
    assert!(out.verified);
    // MV predictions: (MV(s,2s), MV(s,2s), MV(s,s)) = (2, 2, 1).
    for (label, mv) in [(1u32, 2u32), (2, 2), (3, 1)] {
        let (observed, predicted) = out.degree_audit[&label];
        assert_eq!(predicted, mv);
        assert_eq!(observed, predicted);
    }
}

#[test]
fn jacobian_resultant_degree_audits() {
    // Asymmetric supports separate the two slots of the degree formula.
    let cases: Vec<(LaurentPoly, LaurentPoly)> = vec![
        (
            LaurentPoly::symbolic(&grid(1, 1, 1)),
            LaurentPoly::symbolic(&grid(2, 1, 1)),
        ),
        (
            LaurentPoly::symbolic(&grid(1, 1, 1)),
            LaurentPoly::symbolic(&dilated_simplex(2, 1)),
        ),
        (
            LaurentPoly::symbolic(&dilated_simplex(1, 2)),
            LaurentPoly::symbolic(&dilated_simplex(2, 1)),
        ),
    ];
    for (f1, f2) in &cases {
        let disc = mixed_discriminant(f1, f2, &ResOptions::default()).unwrap();
        let predicted = jacobian_resultant_degrees(f1.support(), f2.support());
        assert!(disc.resultant.verified);
        for (&label, &p) in &predicted {
            let (observed, audited) = disc.resultant.degree_audit[&label];
            assert_eq!(audited, p);
            assert_eq!(observed, p);
        }
    }
    // Spot check one asymmetric prediction by hand: 2 sigma vs sigma has
    // MV = 2, Vol = 4 and 1, so the degrees are (2*2 + 1, 2*2 + 4).
    let d = jacobian_resultant_degrees(&dilated_simplex(1, 2), &dilated_simplex(2, 1));
    assert_eq!(d[&1], 5);
    assert_eq!(d[&2], 8);
    let mv = mixed_volume(&dilated_simplex(1, 2), &dilated_simplex(2, 1));
    assert_eq!(mv, 2);
}

#[test]
fn lifting_seed_invariance() {
    let f1 = LaurentPoly::symbolic(&dilated_simplex(1, 1));
    let f2 = LaurentPoly::symbolic(&dilated_simplex(2, 1));
    let f3 = LaurentPoly::symbolic(&dilated_simplex(3, 2));
    let mut values = Vec::new();
    for seed in [1u64, 97, 4242] {
        let opts = ResOptions { seed, ..ResOptions::default() };
        values.push(sparse_resultant(&f1, &f2, &f3, &opts).unwrap().value);
    }
    assert_eq!(values[0], values[1]);
    assert_eq!(values[1], values[2]);
}
