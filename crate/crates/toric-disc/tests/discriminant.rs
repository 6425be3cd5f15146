//! End-to-end mixed discriminant pipeline tests with independent oracles.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use toric_disc::disc::multiplicativity::dense_identity_check;
use toric_disc::disc::{
    boundary_factor, discriminant_mm_form, mixed_discriminant, predicted_bidegree, BidegreeMode,
};
use toric_disc::lattice::{dilated_simplex, grid, pt, SupportConfig};
use toric_disc::poly::laurent::{toric_jacobian, LaurentPoly};
use toric_disc::poly::{CoeffPoly, CoeffSymbol};
use toric_disc::resultant::{macaulay_dense_oracle, ResOptions};

fn rat(v: i64) -> BigRational {
    BigRational::from(BigInt::from(v))
}

/// Assignment sending the symbolic bilinear f to the given coefficients on
/// the unit square, ordered (0,0), (1,0), (0,1), (1,1).
fn square_assign(assign: &mut BTreeMap<CoeffSymbol, BigRational>, label: u32, c: [i64; 4]) {
    let pts = [pt(0, 0), pt(1, 0), pt(0, 1), pt(1, 1)];
    for (p, v) in pts.iter().zip(c) {
        assign.insert(CoeffSymbol::new(label, *p), rat(v));
    }
}

#[test]
fn bilinear_main_factorization() {
    let f1 = LaurentPoly::symbolic(&grid(1, 1, 1));
    let f2 = LaurentPoly::symbolic(&grid(2, 1, 1));
    let disc = mixed_discriminant(&f1, &f2, &ResOptions::default()).unwrap();
    assert!(!disc.defective);
    assert_eq!(disc.index, 1);
    assert_eq!(disc.achieved_bidegree, (2, 2));
    assert_eq!(disc.predicted_bidegree, (2, 2));
    // Four boundary normals, all with exponent 1.
    assert_eq!(disc.boundary.entries.len(), 4);
    for e in &disc.boundary.entries {
        assert_eq!(e.mu, 1);
        assert!(e.profile.in_sigma_prime);
    }

    // Tangency witness: x1 x2 - 1 and 2 - x1 - x2 meet tangentially at (1,1).
    let mut tangent = BTreeMap::new();
    square_assign(&mut tangent, 1, [-1, 0, 0, 1]);
    square_assign(&mut tangent, 2, [2, -1, -1, 0]);
    assert!(disc.delta.specialize(&tangent).unwrap().is_zero());

    // Transverse witness: x1 x2 - 1 and x1 + x2 - 3 meet in two simple roots.
    let mut transverse = BTreeMap::new();
    square_assign(&mut transverse, 1, [-1, 0, 0, 1]);
    square_assign(&mut transverse, 2, [-3, 1, 1, 0]);
    assert!(!disc.delta.specialize(&transverse).unwrap().is_zero());
}

#[test]
fn bilinear_mm_form_has_no_vertex_factors() {
    let f1 = LaurentPoly::symbolic(&grid(1, 1, 1));
    let f2 = LaurentPoly::symbolic(&grid(2, 1, 1));
    let rebuilt = discriminant_mm_form(&f1, &f2, &ResOptions::default()).unwrap();
    let disc = mixed_discriminant(&f1, &f2, &ResOptions::default()).unwrap();
    assert_eq!(rebuilt, disc.resultant.value.clone().normalize_sign());
}

#[test]
fn conic_line_discriminant_and_bidegrees() {
    let f1 = LaurentPoly::symbolic(&dilated_simplex(1, 2));
    let f2 = LaurentPoly::symbolic(&dilated_simplex(2, 1));
    let disc = mixed_discriminant(&f1, &f2, &ResOptions::default()).unwrap();
    assert!(!disc.defective);
    assert_eq!(disc.achieved_bidegree, (2, 2));
    assert_eq!(disc.predicted_bidegree, (2, 2));
    let dense = predicted_bidegree(f1.support(), f2.support(), BidegreeMode::DenseFan).unwrap();
    assert_eq!(dense, (2, 2));

    // Cross-oracle: the Macaulay determinant quotient agrees with the
    // sparse engine up to sign.
    let j = toric_jacobian(&f1, &f2, 3);
    let mac = macaulay_dense_oracle(&[&f1, &f2, &j], [2, 1, 3]).unwrap();
    assert_eq!(
        mac.primitive_part().normalize_sign(),
        disc.resultant.value.primitive_part().normalize_sign()
    );

    // Witness: x1^2 + x2^2 - 2 tangent to x1 + x2 - 2 at (1, 1).
    let mut tangent = BTreeMap::new();
    for (p, v) in [
        (pt(0, 0), -2),
        (pt(2, 0), 1),
        (pt(0, 2), 1),
        (pt(1, 0), 0),
        (pt(0, 1), 0),
        (pt(1, 1), 0),
    ] {
        tangent.insert(CoeffSymbol::new(1, p), rat(v));
    }
    for (p, v) in [(pt(0, 0), -2), (pt(1, 0), 1), (pt(0, 1), 1)] {
        tangent.insert(CoeffSymbol::new(2, p), rat(v));
    }
    assert!(disc.delta.specialize(&tangent).unwrap().is_zero());
}

#[test]
fn two_lines_are_defective() {
    let f1 = LaurentPoly::symbolic(&dilated_simplex(1, 1));
    let f2 = LaurentPoly::symbolic(&dilated_simplex(2, 1));
    let disc = mixed_discriminant(&f1, &f2, &ResOptions::default()).unwrap();
    assert!(disc.defective);
    assert_eq!(disc.delta, CoeffPoly::one());
}

#[test]
fn square_vs_simplex_vertex_factor() {
    // A1 = unit square, A2 = sigma: the normal (-1,-1) cuts an edge of Q2
    // only; its boundary factor is the coefficient of A1's vertex (1,1).
    let f1 = LaurentPoly::symbolic(&grid(1, 1, 1));
    let f2 = LaurentPoly::symbolic(&dilated_simplex(2, 1));
    let e = boundary_factor(&f1, &f2).unwrap();
    let entry = e
        .entries
        .iter()
        .find(|en| en.profile.eta == pt(-1, -1))
        .expect("(-1,-1) is a normal of the sum");
    assert!(!entry.profile.in_sigma_prime);
    let c = CoeffPoly::symbol(CoeffSymbol::new(1, pt(1, 1)));
    assert_eq!(entry.value, c);
    // The regrouped form accounts it as mm of vertex (1,1).
    let rebuilt = discriminant_mm_form(&f1, &f2, &ResOptions::default()).unwrap();
    assert!(!rebuilt.is_zero());
}

#[test]
fn dense_three_facet_identity() {
    for (d1, d2) in [(1i64, 1i64), (2, 1)] {
        let rep = dense_identity_check(d1, d2, &ResOptions::default()).unwrap();
        assert!(rep.holds, "dense identity fails for ({d1}, {d2})");
    }
}

#[test]
fn vertex_only_triangle_pipeline() {
    let sparse = SupportConfig::new(1, vec![pt(0, 0), pt(3, 0), pt(0, 3)]).unwrap();
    let f1 = LaurentPoly::symbolic(&sparse);
    let f2 = LaurentPoly::symbolic(&dilated_simplex(2, 1));
    let disc = mixed_discriminant(&f1, &f2, &ResOptions::default()).unwrap();
    let predicted = disc.predicted_bidegree;
    if disc.defective {
        assert_eq!(disc.delta, CoeffPoly::one());
    } else {
        assert_eq!(
            (disc.achieved_bidegree.0 as i64, disc.achieved_bidegree.1 as i64),
            predicted
        );
    }
}
