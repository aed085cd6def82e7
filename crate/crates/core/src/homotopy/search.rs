//! Exhaustive search for tilting complexes over a finite field.

use std::collections::BTreeMap;
use std::sync::Arc;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exact::{vecops, Span, Vector};
use crate::field::Field;
use crate::invariants::Fingerprint;

use super::amatrix::AMatrix;
use super::complex::ProjComplex;
use super::context::ProjContext;
use super::generation::{is_tilting_seeded, TiltingVerdict};
use super::hom::{end_algebra_complex, is_selforthogonal};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchShape {
    pub lo: i32,
    pub hi: i32,
    /// Largest multiplicity of each indecomposable projective in a term.
    pub max_mult: usize,
}

impl Default for SearchShape {
    fn default() -> Self {
        SearchShape { lo: -1, hi: 0, max_mult: 2 }
    }
}

#[derive(Clone, Debug)]
pub struct SearchOptions {
    pub shape: SearchShape,
    pub seed: u64,
    /// Candidates (term shapes times differentials) examined at most.
    pub budget: u64,
    /// Cones tried per witness search.
    pub witness_budget: usize,
    /// Tilting checks per fingerprint before settling for the best verdict.
    pub tries_per_fingerprint: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { shape: SearchShape::default(), seed: 0xA1B2, budget: 1_000_000, witness_budget: 200, tries_per_fingerprint: 4 }
    }
}

#[derive(Clone, Debug)]
pub struct SearchEntry<F: Field> {
    pub complex: ProjComplex<F>,
    pub fingerprint: Fingerprint,
    pub verdict: TiltingVerdict,
    /// Self-orthogonal candidates sharing the fingerprint.
    pub candidates: u64,
}

#[derive(Clone, Debug)]
pub struct SearchResult<F: Field> {
    /// Sorted by fingerprint.
    pub entries: Vec<SearchEntry<F>>,
    pub examined: u64,
    pub total: u64,
    pub selforthogonal: u64,
    pub budget_exceeded: bool,
}

/// A term shape: the projectives per degree and the radical coordinates
/// of every differential entry.
struct Shape {
    terms: Vec<Vec<usize>>,
    /// `(diff index, row, col)` of entries with nonzero `e_s J e_t`
    slots: Vec<(usize, usize, usize)>,
    coords: usize,
}

/// Vectors of `e_s J e_t` for every pair, as coordinates in the algebra.
fn radical_slices<F: Field>(ctx: &ProjContext<F>) -> Result<Vec<Vec<Vec<Vector<F>>>>> {
    let a = &ctx.algebra;
    let rad = a.radical_basis()?;
    Ok((0..ctx.len())
        .map(|s| {
            (0..ctx.len())
                .map(|t| {
                    let vs = rad.iter().map(|j| a.multiply(&a.multiply(&ctx.idempotents[s], j), &ctx.idempotents[t]));
                    Span::from_vectors(a.field(), a.dim(), vs).into_basis()
                })
                .collect()
        })
        .collect())
}

fn multisets(r: usize, max_mult: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for s in 0..r {
        out = out
            .into_iter()
            .flat_map(|t: Vec<usize>| (0..=max_mult).map(move |m| t.iter().copied().chain(std::iter::repeat(s).take(m)).collect()))
            .collect();
    }
    out
}

/// Decodes candidate `index` of a shape into a differential list.
fn decode<F: Field>(ctx: &ProjContext<F>, shape: &Shape, rad: &[Vec<Vec<Vector<F>>>], index: u64, q: u64) -> Vec<AMatrix<F>> {
    let a = &ctx.algebra;
    let f = a.field();
    let mut diffs: Vec<AMatrix<F>> = shape.terms.windows(2).map(|w| AMatrix::zeros(a, w[0].len(), w[1].len())).collect();
    let mut rest = index;
    for &(d, r, c) in &shape.slots {
        let (s, t) = (shape.terms[d][r], shape.terms[d + 1][c]);
        let basis = &rad[s][t];
        let coeffs: Vec<F::Elem> = basis
            .iter()
            .map(|_| {
                let x = f.element(rest % q);
                rest /= q;
                x
            })
            .collect();
        diffs[d].set(r, c, vecops::combination(f, a.dim(), &coeffs, basis));
    }
    diffs
}

/// Enumerates complexes in `shape.lo..=shape.hi` with terms in `add(A)` and
/// radical differentials, keeping the self-orthogonal ones and grouping them
/// by the fingerprint of their endomorphism algebra. Every complex of
/// projectives is homotopy equivalent to one with radical differentials.
pub fn tilting_search<F: Field>(ctx: &Arc<ProjContext<F>>, opts: &SearchOptions) -> Result<SearchResult<F>> {
    let f = ctx.field();
    let q = f.order().ok_or_else(|| Error::UnsupportedCharacteristic("tilting search enumerates differentials and needs a finite field".into()))?;
    let rad = radical_slices(ctx)?;
    let degrees = (opts.shape.hi - opts.shape.lo + 1).max(1) as usize;
    let per_degree = multisets(ctx.len(), opts.shape.max_mult);
    let mut shapes = Vec::new();
    let mut combos: Vec<Vec<usize>> = vec![Vec::new()];
    for _ in 0..degrees {
        combos = combos.into_iter().flat_map(|c| (0..per_degree.len()).map(move |i| [c.clone(), vec![i]].concat())).collect();
    }
    for c in combos {
        let terms: Vec<Vec<usize>> = c.iter().map(|&i| per_degree[i].clone()).collect();
        if terms.iter().all(|t| t.is_empty()) {
            continue;
        }
        let mut slots = Vec::new();
        let mut coords = 0;
        for d in 0..degrees - 1 {
            for (r, &s) in terms[d].iter().enumerate() {
                for (cc, &t) in terms[d + 1].iter().enumerate() {
                    let n = rad[s][t].len();
                    if n > 0 {
                        slots.push((d, r, cc));
                        coords += n;
                    }
                }
            }
        }
        shapes.push(Shape { terms, slots, coords });
    }
    let counts: Vec<u64> = shapes.iter().map(|s| q.checked_pow(s.coords as u32).unwrap_or(u64::MAX)).collect();
    let total = counts.iter().fold(0u64, |acc, &c| acc.saturating_add(c));
    let budget_exceeded = total > opts.budget;

    // canonical candidate order: shape, then differential index
    let mut work: Vec<(usize, u64, u64)> = Vec::new();
    let mut left = opts.budget;
    for (i, &c) in counts.iter().enumerate() {
        if left == 0 {
            break;
        }
        let take = c.min(left);
        work.push((i, 0, take));
        left -= take;
    }
    let examined = opts.budget.min(total);

    let found: Vec<(usize, u64, Fingerprint)> = work
        .par_iter()
        .flat_map_iter(|&(si, start, len)| (start..start + len).map(move |k| (si, k)))
        .map(|(si, k)| -> Result<Option<(usize, u64, Fingerprint)>> {
            let shape = &shapes[si];
            let diffs = decode(ctx, shape, &rad, k, q);
            // d² ≠ 0 rejects the candidate
            let Ok(c) = ProjComplex::new(ctx, opts.shape.lo, shape.terms.clone(), diffs) else {
                return Ok(None);
            };
            if c.is_zero() || !is_selforthogonal(&c)? {
                return Ok(None);
            }
            let fp = Fingerprint::of(&end_algebra_complex(&c)?.algebra)?;
            Ok(Some((si, k, fp)))
        })
        .filter_map(|r| r.transpose())
        .collect::<Result<_>>()?;

    let selforthogonal = found.len() as u64;
    let mut groups: BTreeMap<Fingerprint, Vec<(usize, u64)>> = BTreeMap::new();
    for (si, k, fp) in found {
        groups.entry(fp).or_default().push((si, k));
    }
    let entries: Vec<SearchEntry<F>> = groups
        .into_par_iter()
        .map(|(fp, members)| {
            let mut best: Option<(ProjComplex<F>, TiltingVerdict)> = None;
            for &(si, k) in members.iter().take(opts.tries_per_fingerprint.max(1)) {
                let shape = &shapes[si];
                let c = ProjComplex::new(ctx, opts.shape.lo, shape.terms.clone(), decode(ctx, shape, &rad, k, q))?;
                let v = is_tilting_seeded(&c, opts.witness_budget, opts.seed)?.verdict;
                let rank = |v: &TiltingVerdict| match v {
                    TiltingVerdict::Verified => 2,
                    TiltingVerdict::K0PassUnverified => 1,
                    TiltingVerdict::Fail(_) => 0,
                };
                if best.as_ref().is_none_or(|(_, b)| rank(&v) > rank(b)) {
                    best = Some((c, v.clone()));
                }
                if v == TiltingVerdict::Verified {
                    break;
                }
            }
            let (complex, verdict) = best.expect("groups are nonempty");
            Ok(SearchEntry { complex, fingerprint: fp, verdict, candidates: members.len() as u64 })
        })
        .collect::<Result<_>>()?;
    Ok(SearchResult { entries, examined, total, selforthogonal, budget_exceeded })
}
