use std::sync::Arc;

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use mirrorsmith::corpus::{random_instance, CorpusOptions};
use mirrorsmith::examples::{self, presentation};
use mirrorsmith::exact::{Echelon, Matrix};
use mirrorsmith::field::{Field, FieldSpec, PrimeField};
use mirrorsmith::homotopy::random::random_complex;
use mirrorsmith::homotopy::*;
use mirrorsmith::invariants::Fingerprint;
use mirrorsmith::quiver::PathAlgebra;

type F3 = PrimeField;

fn context_a() -> Arc<ProjContext<F3>> {
    let f = PrimeField::new(3).unwrap();
    let pa = PathAlgebra::build(&f, &presentation(examples::A, FieldSpec::Rationals), 30).unwrap();
    ProjContext::from_path_algebra(&pa, &Arc::new(pa.algebra.clone())).unwrap()
}

fn corpus_context(seed: u64) -> Arc<ProjContext<F3>> {
    let f = PrimeField::new(5).unwrap();
    let inst = random_instance(&f, FieldSpec::Prime(5), seed, &CorpusOptions { max_dim: 8, ..CorpusOptions::default() }).unwrap();
    ProjContext::from_path_algebra(&inst.path_algebra, &inst.algebra).unwrap()
}

fn random_map(hom: &HomSpace<F3>, rng: &mut ChaCha8Rng, f: &F3) -> ChainMap<F3> {
    let c: Vec<u64> = (0..hom.dim()).map(|_| f.random(rng)).collect();
    hom.map_of(&c)
}

/// Rank of `H^n(f)` for a chain map between complexes of projectives.
fn cohomology_rank(x: &ProjComplex<F3>, y: &ProjComplex<F3>, f: &ChainMap<F3>, n: i32) -> usize {
    let ctx = &x.ctx;
    let fd = ctx.field();
    let (mx, my) = (ModComplex::from_proj(x), ModComplex::from_proj(y));
    let block = f.block(&ctx.algebra, n, x.term(n).len(), y.term(n).len());
    let fm: Matrix<F3> = ctx.module_map(x.term(n), y.term(n), &block);
    let dim = my.term(n).dim();
    let dy = my.diff(n - 1);
    let boundaries = Echelon::from_vectors(fd, dim, (0..dy.cols()).map(|c| dy.column(c)).collect::<Vec<_>>().iter());
    let mut all = boundaries.clone();
    for z in mx.diff(n).kernel_basis() {
        all.insert(fm.mul_vec(&z));
    }
    all.rank() - boundaries.rank()
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 100, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn hom_vanishes_outside_the_window(seed in any::<u64>()) {
        let ctx = context_a();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let p = random_complex(&ctx, rng.gen_range(-2..=0), 3, 2, &mut rng);
        let q = random_complex(&ctx, rng.gen_range(-2..=0), 3, 2, &mut rng);
        prop_assume!(!p.is_zero() && !q.is_zero());
        for n in [q.lo - p.hi() - 1, q.lo - p.hi() - 2, q.hi() - p.lo + 1, q.hi() - p.lo + 2] {
            prop_assert_eq!(hom_homotopy(&p, &q, n).unwrap().dim(), 0);
        }
    }

    #[test]
    fn classes_are_bilinear_and_composition_descends(seed in any::<u64>()) {
        let ctx = context_a();
        let f = ctx.field().clone();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = random_complex(&ctx, -1, 2, 2, &mut rng);
        let y = random_complex(&ctx, -1, 2, 2, &mut rng);
        let z = random_complex(&ctx, -1, 2, 2, &mut rng);
        let hxy = hom_complexes(&x, &y).unwrap();
        let hyz = hom_complexes(&y, &z).unwrap();
        let hxz = hom_complexes(&x, &z).unwrap();
        let (u, v) = (random_map(&hxy, &mut rng, &f), random_map(&hxy, &mut rng, &f));
        let s = f.random(&mut rng);
        let lhs = hxy.class_of(&u.add(&f, &v.scale(&f, &s))).unwrap();
        let (cu, cv) = (hxy.class_of(&u).unwrap(), hxy.class_of(&v).unwrap());
        let rhs: Vec<u64> = cu.iter().zip(&cv).map(|(a, b)| f.add(a, &f.mul(&s, b))).collect();
        prop_assert_eq!(lhs, rhs);
        // composites of homotopic maps are homotopic
        let g = random_map(&hyz, &mut rng, &f);
        let null: Vec<ChainMap<F3>> = hxy.chain_maps().into_iter().filter(|m| hxy.is_null_homotopic(m)).collect();
        let shifted = null.iter().fold(u.clone(), |acc, n| acc.add(&f, n));
        let a = hxz.class_of(&u.then(&g, &x, &y, &z)).unwrap();
        let b = hxz.class_of(&shifted.then(&g, &x, &y, &z)).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn cone_has_the_long_exact_sequence(seed in any::<u64>()) {
        let ctx = context_a();
        let f = ctx.field().clone();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = random_complex(&ctx, -1, 3, 2, &mut rng);
        let y = random_complex(&ctx, -1, 3, 2, &mut rng);
        let h = hom_complexes(&x, &y).unwrap();
        let m = random_map(&h, &mut rng, &f);
        prop_assert!(m.is_chain_map(&x, &y));
        let c = ProjComplex::cone(&x, &y, &m);
        c.check().unwrap();
        let (mx, my, mc) = (ModComplex::from_proj(&x), ModComplex::from_proj(&y), ModComplex::from_proj(&c));
        for n in -3..=2 {
            let expected = my.cohomology(n).dim() - cohomology_rank(&x, &y, &m, n) + mx.cohomology(n + 1).dim() - cohomology_rank(&x, &y, &m, n + 1);
            prop_assert_eq!(mc.cohomology(n).dim(), expected, "degree {}", n);
        }
    }

    #[test]
    fn dualize_preserves_selforthogonality_and_end(seed in any::<u64>()) {
        let ctx = context_a();
        let op = ctx.opposite().unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let p = random_complex(&ctx, -1, 2, 2, &mut rng);
        let d = p.dualize(&op);
        d.check().unwrap();
        let so = is_selforthogonal(&p).unwrap();
        prop_assert_eq!(so, is_selforthogonal(&d).unwrap());
        let dd = d.dualize(&op.opposite().unwrap());
        let e = Fingerprint::of(&end_algebra_complex(&p).unwrap().algebra).unwrap();
        prop_assert_eq!(&e, &Fingerprint::of(&end_algebra_complex(&dd).unwrap().algebra).unwrap());
        let ed = end_algebra_complex(&d).unwrap().algebra;
        prop_assert_eq!(ed.dim(), e.dim);
    }

    #[test]
    fn end_of_the_regular_stalk_is_the_algebra(seed in 0u64..1_000_000) {
        let ctx = corpus_context(seed);
        let p = ProjComplex::stalk(&ctx, (0..ctx.len()).collect(), 0);
        prop_assert!(is_selforthogonal(&p).unwrap());
        let end = end_algebra_complex(&p).unwrap().algebra;
        prop_assert_eq!(Fingerprint::of(&end).unwrap(), Fingerprint::of(&ctx.algebra).unwrap());
    }

    #[test]
    fn verified_tilting_has_a_unimodular_k0_basis(seed in any::<u64>()) {
        let ctx = context_a();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut p = random_complex(&ctx, -1, 2, 2, &mut rng);
        if rng.gen_bool(0.5) {
            p = p.direct_sum(&ProjComplex::stalk(&ctx, vec![rng.gen_range(0..ctx.len())], 0));
        }
        let report = is_tilting(&p, 60).unwrap();
        if report.verdict == TiltingVerdict::Verified {
            let k = k0_generation_check(&p, &projective_targets(&p)).unwrap();
            prop_assert!(k.pass && is_unimodular_basis(&k));
        }
    }
}
