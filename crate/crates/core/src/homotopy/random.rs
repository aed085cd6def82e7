//! Random bounded complexes of projectives, for tests and sampling.

use std::sync::Arc;

use rand::Rng;

use crate::exact::vecops;
use crate::field::Field;

use super::amatrix::AMatrix;
use super::complex::ProjComplex;
use super::context::ProjContext;
use super::hom::hom_complexes;

/// A random map `⊕ Ae_s → ⊕ Ae_t` with entries drawn from the slices.
pub fn random_amatrix<F: Field, R: Rng + ?Sized>(ctx: &ProjContext<F>, source: &[usize], target: &[usize], rng: &mut R) -> AMatrix<F> {
    let a = &ctx.algebra;
    let f = a.field();
    let mut m = AMatrix::zeros(a, source.len(), target.len());
    for (k, &s) in source.iter().enumerate() {
        for (l, &t) in target.iter().enumerate() {
            let b = ctx.slice(s, t).basis();
            let c: Vec<F::Elem> = b.iter().map(|_| f.random(rng)).collect();
            m.set(k, l, vecops::combination(f, a.dim(), &c, b));
        }
    }
    m
}

/// A random complex in degrees `lo..lo+len` with at most `max_terms`
/// summands per degree. Each new differential is a random element of the
/// space of maps killing the previous one.
pub fn random_complex<F: Field, R: Rng + ?Sized>(ctx: &Arc<ProjContext<F>>, lo: i32, len: usize, max_terms: usize, rng: &mut R) -> ProjComplex<F> {
    let f = ctx.field();
    let terms: Vec<Vec<usize>> = (0..len.max(1)).map(|_| (0..rng.gen_range(0..=max_terms)).map(|_| rng.gen_range(0..ctx.len())).collect()).collect();
    let mut c = ProjComplex { ctx: ctx.clone(), lo, terms: vec![terms[0].clone()], diffs: Vec::new() };
    for (i, t) in terms.iter().enumerate().skip(1) {
        let d = if i == 1 {
            random_amatrix(ctx, &terms[0], t, rng)
        } else {
            // chain maps from the complex so far to `t` placed in its top degree
            let top = ProjComplex { ctx: ctx.clone(), lo: c.hi(), terms: vec![t.clone()], diffs: Vec::new() };
            let hom = hom_complexes(&c, &top).expect("same context");
            let mut m = AMatrix::zeros(&ctx.algebra, terms[i - 1].len(), t.len());
            for z in hom.chain_maps() {
                let b = z.block(&ctx.algebra, c.hi(), terms[i - 1].len(), t.len());
                m = m.add(f, &b.scale(f, &f.random(rng)));
            }
            m
        };
        c.terms.push(t.clone());
        c.diffs.push(d);
    }
    debug_assert!(c.check().is_ok());
    c
}
