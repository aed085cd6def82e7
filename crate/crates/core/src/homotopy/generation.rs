//! Generation witnesses and tilting verdicts.

use std::fmt;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::field::Field;

use super::complex::{ChainMap, ProjComplex};
use super::hom::{end_algebra_complex, hom_complexes, selforthogonality_failure};
use super::k0::{k0_generation_check, summand_idempotents, K0Check};

pub const DEFAULT_SEED: u64 = 0xA1B2;

/// Each step produces one new object, numbered in order.
#[derive(Clone, Debug)]
pub enum WitnessStep<F: Field> {
    /// A generator, by index.
    Start(usize),
    /// `object[n]`.
    Shift { object: usize, n: i32 },
    /// The cone of `map : object[source] → object[target]`.
    Cone { source: usize, target: usize, map: ChainMap<F> },
    /// `targets[target]` as a homotopy retract of `object`: `section` then
    /// `retraction` is homotopic to the identity, so `retraction` then
    /// `section` is an idempotent endomorphism of `object` splitting it off.
    Summand { object: usize, target: usize, section: ChainMap<F>, retraction: ChainMap<F> },
}

impl<F: Field> fmt::Display for WitnessStep<F> {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WitnessStep::Start(g) => write!(out, "START {g}"),
            WitnessStep::Shift { object, n } => write!(out, "SHIFT #{object} by {n}"),
            WitnessStep::Cone { source, target, .. } => write!(out, "CONE #{source} -> #{target}"),
            WitnessStep::Summand { object, target, .. } => write!(out, "SUMMAND target {target} of #{object}"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct GenerationWitness<F: Field> {
    pub steps: Vec<WitnessStep<F>>,
}

impl<F: Field> Default for GenerationWitness<F> {
    fn default() -> Self {
        GenerationWitness { steps: Vec::new() }
    }
}

#[derive(Clone, Debug)]
pub struct GenerationReport {
    pub verified: bool,
    /// For each target, the object it was split off from.
    pub reached: Vec<Option<usize>>,
}

/// `(section, retraction)` with `section` then `retraction` homotopic to `id_T`.
pub type Retraction<F> = (ChainMap<F>, ChainMap<F>);

/// Looks for `T` as a homotopy retract of `X`. Basis pairs are tried first;
/// when `End(T)` is local this is a decision. Otherwise seeded random
/// combinations are tried as well.
pub fn find_retract<F: Field>(t: &ProjComplex<F>, x: &ProjComplex<F>, seed: u64) -> Result<Option<Retraction<F>>> {
    if t.is_zero() {
        return Ok(Some((ChainMap::zero(t, x), ChainMap::zero(x, t))));
    }
    let to = hom_complexes(t, x)?;
    let from = hom_complexes(x, t)?;
    if to.dim() == 0 || from.dim() == 0 {
        return Ok(None);
    }
    let end = end_algebra_complex(t)?;
    let e = &end.algebra;
    let fd = t.ctx.field();
    let finish = |s: &ChainMap<F>, r: &ChainMap<F>| -> Option<Retraction<F>> {
        let c = end.hom.class_of(&s.then(r, t, x, t))?;
        let inv = e.inverse(&c)?;
        let r2 = r.then(&end.hom.map_of(&inv), x, t, t);
        Some((s.clone(), r2))
    };
    for s in &to.classes {
        for r in &from.classes {
            if let Some(w) = finish(s, r) {
                return Ok(Some(w));
            }
        }
    }
    if e.num_simples()? > 1 || e.structure()?.idempotents.len() > 1 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..64 {
            let cs: Vec<F::Elem> = (0..to.dim()).map(|_| fd.random(&mut rng)).collect();
            let cr: Vec<F::Elem> = (0..from.dim()).map(|_| fd.random(&mut rng)).collect();
            if let Some(w) = finish(&to.map_of(&cs), &from.map_of(&cr)) {
                return Ok(Some(w));
            }
        }
    }
    Ok(None)
}

/// Checks a retraction certificate.
pub fn is_retraction<F: Field>(t: &ProjComplex<F>, x: &ProjComplex<F>, section: &ChainMap<F>, retraction: &ChainMap<F>) -> Result<bool> {
    if !section.is_chain_map(t, x) || !retraction.is_chain_map(x, t) {
        return Ok(false);
    }
    let end = hom_complexes(t, t)?;
    let diff = section.then(retraction, t, x, t).add(t.ctx.field(), &t.identity().scale(t.ctx.field(), &t.ctx.field().neg(&t.ctx.field().one())));
    Ok(end.is_null_homotopic(&diff))
}

/// Replays `witness`. Targets not split off by a `SUMMAND` step are searched
/// for as retracts of every produced object.
pub fn generation_check<F: Field>(generators: &[ProjComplex<F>], targets: &[ProjComplex<F>], witness: &GenerationWitness<F>) -> Result<GenerationReport> {
    let mut objects: Vec<ProjComplex<F>> = Vec::new();
    let mut reached: Vec<Option<usize>> = vec![None; targets.len()];
    let bad = |step: usize, reason: &str| Error::MalformedWitness { step, reason: reason.to_string() };
    for (i, step) in witness.steps.iter().enumerate() {
        let next = match step {
            WitnessStep::Start(g) => generators.get(*g).ok_or_else(|| bad(i, "no such generator"))?.clone(),
            WitnessStep::Shift { object, n } => objects.get(*object).ok_or_else(|| bad(i, "no such object"))?.shift(*n),
            WitnessStep::Cone { source, target, map } => {
                let x = objects.get(*source).ok_or_else(|| bad(i, "no such source"))?;
                let y = objects.get(*target).ok_or_else(|| bad(i, "no such target"))?;
                if map.blocks.len() != x.terms.len() || !map.is_chain_map(x, y) {
                    return Err(bad(i, "cone map is not a chain map"));
                }
                ProjComplex::cone(x, y, map)
            }
            WitnessStep::Summand { object, target, section, retraction } => {
                let x = objects.get(*object).ok_or_else(|| bad(i, "no such object"))?;
                let t = targets.get(*target).ok_or_else(|| bad(i, "no such target"))?;
                if !is_retraction(t, x, section, retraction)? {
                    return Err(bad(i, "not a retraction up to homotopy"));
                }
                reached[*target] = Some(*object);
                t.clone()
            }
        };
        objects.push(next);
    }
    for (k, t) in targets.iter().enumerate() {
        if reached[k].is_some() {
            continue;
        }
        for (j, x) in objects.iter().enumerate() {
            if find_retract(t, x, DEFAULT_SEED)?.is_some() {
                reached[k] = Some(j);
                break;
            }
        }
    }
    Ok(GenerationReport { verified: reached.iter().all(|r| r.is_some()), reached })
}

/// Breadth-first search for a witness: shifts and cones of idempotent-cut
/// Hom-basis maps between produced objects, at most `budget` cones.
pub fn find_witness<F: Field>(generators: &[ProjComplex<F>], targets: &[ProjComplex<F>], budget: usize, seed: u64) -> Result<Option<GenerationWitness<F>>> {
    let mut steps: Vec<WitnessStep<F>> = Vec::new();
    let mut objects: Vec<ProjComplex<F>> = Vec::new();
    for (g, x) in generators.iter().enumerate() {
        steps.push(WitnessStep::Start(g));
        objects.push(x.clone());
    }
    let mut reached = vec![false; targets.len()];
    let mut checked = 0;
    let mut cones = 0;
    loop {
        // try to split the targets off the objects not yet examined
        for j in checked..objects.len() {
            for (k, t) in targets.iter().enumerate() {
                if reached[k] || objects[j].is_zero() {
                    continue;
                }
                let x = objects[j].clone();
                for n in (t.lo - x.hi())..=(t.hi() - x.lo) {
                    let shifted = x.shift(n);
                    if let Some((section, retraction)) = find_retract(t, &shifted, seed)? {
                        let obj = if n == 0 {
                            j
                        } else {
                            steps.push(WitnessStep::Shift { object: j, n });
                            objects.push(shifted);
                            objects.len() - 1
                        };
                        steps.push(WitnessStep::Summand { object: obj, target: k, section, retraction });
                        objects.push(t.clone());
                        reached[k] = true;
                        break;
                    }
                }
            }
        }
        if reached.iter().all(|&r| r) {
            return Ok(Some(GenerationWitness { steps }));
        }
        let frontier = objects.len();
        if checked == frontier || cones >= budget {
            return Ok(None);
        }
        // cones of maps object[i] → object[j][n] cut down by strict summand idempotents
        let mut new_steps = Vec::new();
        let mut new_objects = Vec::new();
        'outer: for i in 0..frontier {
            for j in 0..frontier {
                if i < checked && j < checked {
                    continue;
                }
                let (x, y) = (&objects[i], &objects[j]);
                if x.is_zero() || y.is_zero() {
                    continue;
                }
                let ex = summand_idempotents(x)?;
                let ey = summand_idempotents(y)?;
                for n in (y.lo - x.hi())..=(y.hi() - x.lo) {
                    let ys = y.shift(n);
                    let hom = hom_complexes(x, &ys)?;
                    if hom.dim() == 0 {
                        continue;
                    }
                    let target_index = if n == 0 {
                        j
                    } else {
                        new_steps.push(WitnessStep::Shift { object: j, n });
                        new_objects.push(ys.clone());
                        frontier + new_objects.len() - 1
                    };
                    for f in &hom.classes {
                        for a in &ex {
                            for b in &ey {
                                let g = a.then(f, x, x, &ys).then(&b.shift(n), x, &ys, &ys);
                                if hom.is_null_homotopic(&g) {
                                    continue;
                                }
                                new_steps.push(WitnessStep::Cone { source: i, target: target_index, map: g.clone() });
                                new_objects.push(ProjComplex::cone(x, &ys, &g));
                                cones += 1;
                                if cones >= budget {
                                    break 'outer;
                                }
                            }
                        }
                    }
                }
            }
        }
        checked = frontier;
        steps.extend(new_steps);
        objects.extend(new_objects);
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TiltingVerdict {
    Verified,
    K0PassUnverified,
    Fail(String),
}

impl fmt::Display for TiltingVerdict {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TiltingVerdict::Verified => write!(out, "Verified"),
            TiltingVerdict::K0PassUnverified => write!(out, "K0PassUnverified"),
            TiltingVerdict::Fail(r) => write!(out, "Fail({r})"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct TiltingReport<F: Field> {
    pub verdict: TiltingVerdict,
    pub selforthogonal: bool,
    pub k0: Option<K0Check>,
    pub witness: Option<GenerationWitness<F>>,
}

/// Stalks of the context projectives in degree 0.
pub fn projective_targets<F: Field>(p: &ProjComplex<F>) -> Vec<ProjComplex<F>> {
    (0..p.ctx.len()).map(|s| ProjComplex::stalk(&p.ctx, vec![s], 0)).collect()
}

/// Self-orthogonality, then the `K₀` test, then a witness search.
pub fn is_tilting<F: Field>(p: &ProjComplex<F>, auto_witness_budget: usize) -> Result<TiltingReport<F>> {
    is_tilting_seeded(p, auto_witness_budget, DEFAULT_SEED)
}

/// As [`is_tilting`], with the seed of the random retract trials.
pub fn is_tilting_seeded<F: Field>(p: &ProjComplex<F>, auto_witness_budget: usize, seed: u64) -> Result<TiltingReport<F>> {
    if let Some(n) = selforthogonality_failure(p)? {
        return Ok(TiltingReport { verdict: TiltingVerdict::Fail(format!("self-orthogonality: Hom(P, P[{n}]) ≠ 0")), selforthogonal: false, k0: None, witness: None });
    }
    let targets = projective_targets(p);
    let k0 = k0_generation_check(p, &targets)?;
    if !k0.pass {
        return Ok(TiltingReport { verdict: TiltingVerdict::Fail("K0: summand classes do not span the lattice".into()), selforthogonal: true, k0: Some(k0), witness: None });
    }
    let witness = find_witness(std::slice::from_ref(p), &targets, auto_witness_budget, seed)?;
    let verdict = if witness.is_some() { TiltingVerdict::Verified } else { TiltingVerdict::K0PassUnverified };
    Ok(TiltingReport { verdict, selforthogonal: true, k0: Some(k0), witness })
}
