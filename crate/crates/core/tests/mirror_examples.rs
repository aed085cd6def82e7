use std::sync::Arc;

use mirrorsmith::algebra::Algebra;
use mirrorsmith::examples::{self, presentation};
use mirrorsmith::exact::{vecops, Matrix};
use mirrorsmith::field::{Field, FieldSpec, PrimeField, Rationals};
use mirrorsmith::mirror::*;
use mirrorsmith::modrep::tensor_over_corner;
use mirrorsmith::quiver::{verify_presentation, PathAlgebra, SearchOptions};

fn build<F: Field>(f: &F, text: &str) -> (PathAlgebra<F>, Arc<Algebra<F>>) {
    let pa = PathAlgebra::build(f, &presentation(text, FieldSpec::Rationals), 30).unwrap();
    let a = Arc::new(pa.algebra.clone());
    (pa, a)
}

#[test]
fn mirror_of_a_at_vertex_one() {
    let (pa, a) = build(&Rationals, examples::A);
    let e = pa.vertex(0);
    let r = build_mirror(&a, &e, &e).unwrap();
    assert_eq!(r.algebra.dim(), 12);
    r.algebra.check().unwrap();
    assert_eq!(r.check_formula(), None);
    let rep = check_idealized_extension(&r);
    assert!(rep.passes(), "{rep:?}");
    assert!(!rep.square_zero);
    let p = presentation(examples::R_A, FieldSpec::Rationals);
    let m = verify_presentation(&r.algebra, &p, None, &SearchOptions::default()).unwrap();
    assert!(m.is_match(), "{m:?}");
}

#[test]
fn mirror_of_b_over_f2() {
    let f = PrimeField::new(2).unwrap();
    let (pb, b) = build(&f, examples::B);
    let e = pb.vertex(0);
    let r = build_mirror(&b, &e, &e).unwrap();
    assert_eq!(r.algebra.dim(), 18);
    assert!(check_idealized_extension(&r).passes());
    assert_eq!(r.check_formula(), None);
    let p = presentation(examples::R_B, FieldSpec::Prime(2));
    assert!(verify_presentation(&r.algebra, &p, None, &SearchOptions::default()).unwrap().is_match());
}

#[test]
fn level_zero_is_the_trivial_extension() {
    let (pa, a) = build(&Rationals, examples::A);
    let zero = vecops::zero(&Rationals, a.dim());
    let r = build_mirror(&a, &pa.vertex(0), &zero).unwrap();
    assert_eq!(r.algebra.dim(), 12);
    assert!(r.omega.is_zero());
    let rep = check_idealized_extension(&r);
    assert!(rep.passes() && rep.square_zero);
}

#[test]
fn zero_idempotent_gives_the_algebra_back() {
    let (_, a) = build(&Rationals, examples::A);
    let zero = vecops::zero(&Rationals, a.dim());
    let r = build_mirror(&a, &zero, &zero).unwrap();
    assert_eq!(r.algebra.dim(), a.dim());
    assert!(check_idealized_extension(&r).passes());
}

#[test]
fn unit_idempotent_gives_multiplication() {
    let f = Rationals;
    let a = Arc::new(Algebra::truncated_polynomial(&f, 3));
    let r = build_mirror(&a, a.unit(), a.unit()).unwrap();
    let d = &r.delta;
    for (x, y) in d.basis_pairs() {
        for (x2, y2) in d.basis_pairs() {
            let lhs = r.omega.apply(&d.pair(&x, &y), &d.pair(&x2, &y2));
            let prod = a.multiply(&a.multiply(&x, &y), &a.multiply(&x2, &y2));
            assert_eq!(lhs, d.pair(&prod, a.unit()));
        }
    }
}

#[test]
fn omega_e_is_bijective_on_the_tensor_square() {
    let (pa, a) = build(&Rationals, examples::A);
    let e = pa.vertex(0);
    let d = tensor_over_corner(&a, &e).unwrap();
    let level = Level::new(&a, &d.corner, &e).unwrap();
    let w = omega_map(&d, &level);
    let m = omega_on_tensor(&d, &w).expect("balanced");
    assert_eq!((m.rows(), m.cols(), m.rank()), (6, 6, 6));
}

#[test]
fn rho_is_an_isomorphism_for_both_examples() {
    for text in [examples::A, examples::B] {
        let (pa, a) = build(&Rationals, text);
        let d = tensor_over_corner(&a, &pa.vertex(0)).unwrap();
        let rep = rho_iso_check(&d).unwrap();
        assert_eq!((rep.center_dim, rep.end_dim), (3, 3));
        assert!(rep.passes(), "{rep:?}");
    }
    let f = Rationals;
    let a = Arc::new(Algebra::matrix_algebra(&f, 2));
    let d = tensor_over_corner(&a, a.unit()).unwrap();
    let rep = rho_iso_check(&d).unwrap();
    assert_eq!((rep.center_dim, rep.end_dim), (1, 1));
    assert!(rep.passes());
}

#[test]
fn rho_of_gamma_is_nilpotent() {
    let (pa, a) = build(&Rationals, examples::A);
    let d = tensor_over_corner(&a, &pa.vertex(0)).unwrap();
    let gamma = pa.parse_element("gamma").unwrap();
    let rho = rho_endo(&d, &Level::new(&a, &d.corner, &gamma).unwrap());
    assert!(!rho.mul(&rho).is_zero());
    assert!(rho.pow(3).is_zero());
    let e = rho_endo(&d, &Level::new(&a, &d.corner, &pa.vertex(0)).unwrap());
    assert_eq!(e, Matrix::identity(&Rationals, 6));
}

#[test]
fn non_central_level_is_rejected() {
    let f = Rationals;
    let a = Arc::new(Algebra::matrix_algebra(&f, 2));
    let x = a.basis_element(1);
    assert!(build_mirror(&a, a.unit(), &x).is_err());
}

#[test]
fn level_orbits() {
    let (pa, a) = build(&Rationals, examples::A);
    let e = pa.vertex(0);
    let corner = a.corner(&e).unwrap();
    let lv = |s: &str| Level::new(&a, &corner, &pa.parse_element(s).unwrap()).unwrap();
    assert!(levels_isomorphic(&corner, &lv("gamma"), &lv("gamma + gamma^2"), 1 << 16).unwrap().is_equivalent());
    assert!(levels_isomorphic(&corner, &lv("gamma"), &lv("gamma"), 1 << 16).unwrap().is_equivalent());
    assert!(!levels_isomorphic(&corner, &lv("0"), &lv("v1"), 1 << 16).unwrap().is_equivalent());
    assert!(!levels_isomorphic(&corner, &lv("gamma"), &lv("v1"), 1 << 16).unwrap().is_equivalent());
    assert!(!levels_isomorphic(&corner, &lv("v1"), &lv("gamma"), 1 << 16).unwrap().is_equivalent());
    assert!(levels_isomorphic(&corner, &lv("2 v1"), &lv("v1 + gamma"), 1 << 16).unwrap().is_equivalent());
}

#[test]
fn hand_built_non_ideal_is_rejected() {
    let f = Rationals;
    let one = f.one();
    // k[v]/(v² − 1): v·v = 1 leaves X = span{v}
    let table = vec![vec![(0, one.clone())], vec![(1, one.clone())], vec![(1, one.clone())], vec![(0, one.clone())]];
    let r = Algebra::from_sparse(&f, vec!["1".into(), "v".into()], table, vec![one.clone(), f.zero()]);
    let a = Algebra::ground(&f);
    let rep = check_idealized(&r, &a);
    assert!(!rep.passes());
    assert!(rep.failures[0].contains("X is not closed"), "{rep:?}");
}

#[test]
fn central_unit_rescaling_gives_isomorphic_mirrors() {
    let (pa, a) = build(&Rationals, examples::A);
    let e = pa.vertex(0);
    let lambda = pa.parse_element("gamma").unwrap();
    let mu = pa.parse_element("2 v1 + gamma").unwrap();
    let r1 = build_mirror(&a, &e, &lambda).unwrap();
    let r2 = build_mirror(&a, &e, &a.multiply(&lambda, &mu)).unwrap();
    let c = compare_mirrors(&r1, &r2, &mu).unwrap();
    assert!(c.matches(), "{c:?}");
    // not an isomorphism when the level changes by a non-unit
    let r3 = build_mirror(&a, &e, &a.multiply(&lambda, &lambda)).unwrap();
    assert!(!compare_mirrors(&r1, &r3, &mu).unwrap().isomorphism);
}
