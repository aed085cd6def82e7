//! Seeded random admissible quiver algebras with idempotents and levels.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::Algebra;
use crate::error::Result;
use crate::exact::{vecops, Vector};
use crate::field::{Field, FieldSpec};
use crate::quiver::{Arrow, NcPoly, Path, PathAlgebra, Presentation};

#[derive(Clone, Debug)]
pub struct CorpusOptions {
    pub max_vertices: usize,
    pub max_arrows: usize,
    pub max_dim: usize,
}

impl Default for CorpusOptions {
    fn default() -> Self {
        CorpusOptions { max_vertices: 4, max_arrows: 6, max_dim: 12 }
    }
}

#[derive(Clone, Debug)]
pub struct Instance<F: Field> {
    pub seed: u64,
    pub path_algebra: PathAlgebra<F>,
    pub algebra: Arc<Algebra<F>>,
    /// Sum of a nonempty set of vertex idempotents.
    pub e: Vector<F>,
    /// Central in `eAe`, as an element of `A`.
    pub lambda: Vector<F>,
    /// A central unit of `eAe`, as an element of `A`.
    pub mu: Vector<F>,
}

/// Per-instance seed derived from a root seed.
pub fn instance_seed(root: u64, index: u64) -> u64 {
    root ^ index.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15)
}

fn paths_of_length(arrows: &[Arrow], vertices: usize, len: usize) -> Vec<Path> {
    let mut out: Vec<Path> = (0..vertices).map(Path::trivial).collect();
    for _ in 0..len {
        out = out
            .iter()
            .flat_map(|p| {
                arrows.iter().enumerate().filter_map(move |(i, a)| p.then(&Path { source: a.source, target: a.target, arrows: vec![i] }))
            })
            .collect();
    }
    out
}

/// Random quiver with relations: each length-2 path is killed with
/// probability 1/2, some parallel survivors are identified, and all paths of
/// length 3 are killed.
pub fn random_presentation<R: Rng>(rng: &mut R, opts: &CorpusOptions, field: FieldSpec) -> Presentation {
    let n = rng.gen_range(1..=opts.max_vertices);
    let m = rng.gen_range(0..=opts.max_arrows);
    let vertices = (1..=n).map(|i| format!("v{i}")).collect();
    let arrows: Vec<Arrow> = (0..m).map(|i| Arrow { name: format!("a{i}"), source: rng.gen_range(0..n), target: rng.gen_range(0..n) }).collect();
    let mut relations = Vec::new();
    let mut survivors: Vec<Path> = Vec::new();
    for p in paths_of_length(&arrows, n, 2) {
        if rng.gen_bool(0.5) {
            relations.push(NcPoly { terms: vec![(1, p)] });
        } else {
            survivors.push(p);
        }
    }
    for i in 0..survivors.len() {
        for j in i + 1..survivors.len() {
            let (p, q) = (&survivors[i], &survivors[j]);
            if (p.source, p.target) == (q.source, q.target) && rng.gen_bool(0.3) {
                let c = if rng.gen_bool(0.5) { -1 } else { 1 };
                relations.push(NcPoly { terms: vec![(1, p.clone()), (c, q.clone())] });
            }
        }
    }
    relations.extend(paths_of_length(&arrows, n, 3).into_iter().map(|p| NcPoly { terms: vec![(1, p)] }));
    Presentation { field, vertices, arrows, relations }
}

fn random_central<F: Field, R: Rng>(rng: &mut R, a: &Algebra<F>, e: &[F::Elem]) -> Result<Vec<Vector<F>>> {
    let corner = a.corner(e)?;
    let center = corner.algebra.center_basis();
    let f = a.field();
    let sample = |rng: &mut R| {
        let c: Vec<F::Elem> = center.iter().map(|_| f.random(rng)).collect();
        vecops::combination(f, corner.algebra.dim(), &c, &center)
    };
    let lambda = corner.include(&sample(rng));
    let mut mu = e.to_vec();
    for _ in 0..16 {
        let z = sample(rng);
        if corner.algebra.is_unit(&z) {
            mu = corner.include(&z);
            break;
        }
    }
    Ok(vec![lambda, mu])
}

/// One instance from `seed`, retrying presentations until the algebra fits.
pub fn random_instance<F: Field>(field: &F, spec: FieldSpec, seed: u64, opts: &CorpusOptions) -> Result<Instance<F>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let pres = random_presentation(&mut rng, opts, spec.clone());
        let pa = PathAlgebra::build(field, &pres, 4)?;
        let dim = pa.algebra.dim();
        if dim == 0 || dim > opts.max_dim {
            continue;
        }
        let n = pres.vertices.len();
        let mask = rng.gen_range(1..(1u32 << n));
        let f = pa.field().clone();
        let e = (0..n).filter(|v| mask >> v & 1 == 1).fold(vecops::zero(&f, dim), |acc, v| vecops::add(&f, &acc, &pa.vertex(v)));
        let algebra = Arc::new(pa.algebra.clone());
        let mut lm = random_central(&mut rng, &algebra, &e)?;
        let mu = lm.pop().expect("two elements");
        let lambda = lm.pop().expect("two elements");
        return Ok(Instance { seed, path_algebra: pa, algebra, e, lambda, mu });
    }
}

/// `count` instances from a root seed.
pub fn corpus<F: Field>(field: &F, spec: FieldSpec, root: u64, count: usize, opts: &CorpusOptions) -> Result<Vec<Instance<F>>> {
    (0..count as u64).map(|i| random_instance(field, spec.clone(), instance_seed(root, i), opts)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;

    #[test]
    fn corpus_respects_bounds_and_is_reproducible() {
        let f = PrimeField::new(5).unwrap();
        let opts = CorpusOptions::default();
        let c = corpus(&f, FieldSpec::Prime(5), 7, 20, &opts).unwrap();
        for inst in &c {
            let p = &inst.path_algebra.presentation;
            assert!(p.vertices.len() <= 4 && p.arrows.len() <= 6);
            assert!(inst.algebra.dim() <= 12);
            assert!(inst.algebra.is_idempotent(&inst.e));
            let corner = inst.algebra.corner(&inst.e).unwrap();
            assert!(corner.algebra.is_central(&corner.restrict(&inst.lambda).unwrap()));
            assert!(corner.algebra.is_unit(&corner.restrict(&inst.mu).unwrap()));
        }
        let again = corpus(&f, FieldSpec::Prime(5), 7, 20, &opts).unwrap();
        assert!(c.iter().zip(&again).all(|(x, y)| x.lambda == y.lambda && x.algebra.dim() == y.algebra.dim()));
    }
}
