//! Evidence that a split tilting complex `P = P₁ ⊕ P₂` over `A` relates
//! `(A, e)` to `(B, f)`: `End(P) ≅ B`, `P₁` generates `K^b(add Ae)`, and the
//! split idempotent corresponds to `f`.

use std::fmt;

use crate::algebra::Algebra;
use crate::error::Result;
use crate::exact::{vecops, Matrix, Vector};
use crate::field::Field;
use crate::invariants::Fingerprint;
use crate::modrep::Module;

use super::amatrix::AMatrix;
use super::complex::{ChainMap, ProjComplex};
use super::generation::{find_witness, DEFAULT_SEED};
use super::hom::end_algebra_complex;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CheckStatus {
    Pass,
    Inconclusive(String),
    Fail(String),
}

impl fmt::Display for CheckStatus {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CheckStatus::Pass => write!(out, "pass"),
            CheckStatus::Inconclusive(r) => write!(out, "inconclusive ({r})"),
            CheckStatus::Fail(r) => write!(out, "fail ({r})"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct PairReport {
    pub end_fingerprint: Fingerprint,
    pub b_fingerprint: Fingerprint,
    /// (a) by invariants.
    pub invariants: bool,
    /// (a) by the supplied isomorphism, when given.
    pub explicit_iso: Option<bool>,
    /// (b) every term of `P₁` lies in `add(Ae)`.
    pub p1_in_add: bool,
    /// (b) a witness reaches every summand of `Ae` from `P₁`.
    pub p1_generates: bool,
    /// (c) `End(P₁)` against `fBf` by invariants.
    pub corner_invariants: bool,
    /// (c) the supplied isomorphism sends `f` to the split idempotent.
    pub idempotent_matches: Option<bool>,
    pub status: CheckStatus,
}

/// `y ↦ y·x` on a stalk complex, entry `(k, l)` equal to `e_{s_k} x e_{t_l}`.
pub fn stalk_endomorphism<F: Field>(p: &ProjComplex<F>, x: &[F::Elem]) -> ChainMap<F> {
    let ctx = &p.ctx;
    let a = &ctx.algebra;
    let blocks = (p.lo..=p.hi())
        .map(|d| {
            let t = p.term(d);
            let mut m = AMatrix::zeros(a, t.len(), t.len());
            for (k, &s) in t.iter().enumerate() {
                for (l, &u) in t.iter().enumerate() {
                    m.set(k, l, a.multiply(&a.multiply(&ctx.idempotents[s], x), &ctx.idempotents[u]));
                }
            }
            m
        })
        .collect();
    ChainMap { lo: p.lo, blocks }
}

/// The idempotent of `P₁ ⊕ P₂` projecting onto `P₁`.
pub fn split_idempotent<F: Field>(p1: &ProjComplex<F>, p2: &ProjComplex<F>) -> (ProjComplex<F>, ChainMap<F>) {
    let p = p1.direct_sum(p2);
    let a = &p.ctx.algebra;
    let blocks = (p.lo..=p.hi())
        .map(|d| {
            let (n1, n) = (p1.term(d).len(), p.term(d).len());
            let mut m = AMatrix::zeros(a, n, n);
            for (k, &s) in p1.term(d).iter().enumerate() {
                m.set(k, k, p.ctx.idempotents[s].clone());
            }
            debug_assert!(n1 <= n);
            m
        })
        .collect();
    (p.clone(), ChainMap { lo: p.lo, blocks })
}

/// Indices of the context projectives that are summands of `Ae`.
pub fn summands_of<F: Field>(p: &ProjComplex<F>, e: &[F::Elem]) -> Result<Vec<usize>> {
    let ctx = &p.ctx;
    let a = &ctx.algebra;
    let ae = Module::projective(a, e);
    let top = ae.top_multiplicities()?;
    let mut out = Vec::new();
    for s in 0..ctx.len() {
        let ts = ctx.module(&[s]).top_multiplicities()?;
        if ts.iter().zip(&top).all(|(x, y)| *x == 0 || *y > 0) {
            out.push(s);
        }
    }
    Ok(out)
}

/// `iso[i]` is the image of the `i`-th basis element of `B` in the class
/// coordinates of `End(P)`.
pub fn pair_equiv_check<F: Field>(
    p1: &ProjComplex<F>,
    p2: &ProjComplex<F>,
    e: &[F::Elem],
    b: &Algebra<F>,
    f_idem: &[F::Elem],
    iso: Option<&[Vector<F>]>,
    witness_budget: usize,
) -> Result<PairReport> {
    let fd = b.field();
    let (p, eps) = split_idempotent(p1, p2);
    let end = end_algebra_complex(&p)?;
    let end_fingerprint = Fingerprint::of(&end.algebra)?;
    let b_fingerprint = Fingerprint::of(b)?;
    let invariants = end_fingerprint == b_fingerprint;

    let allowed = summands_of(&p, e)?;
    let p1_in_add = p1.terms.iter().flatten().all(|s| allowed.contains(s));
    let targets: Vec<ProjComplex<F>> = allowed.iter().map(|&s| ProjComplex::stalk(&p.ctx, vec![s], 0)).collect();
    let p1_generates = p1_in_add && find_witness(std::slice::from_ref(p1), &targets, witness_budget, DEFAULT_SEED)?.is_some();

    let corner = b.corner(f_idem)?;
    let corner_invariants = Fingerprint::of(&end_algebra_complex(p1)?.algebra)? == Fingerprint::of(&corner.algebra)?;

    let (explicit_iso, idempotent_matches) = match iso {
        None => (None, None),
        Some(images) => {
            let e_alg = &end.algebra;
            let n = b.dim();
            let ok_shape = images.len() == n && e_alg.dim() == n;
            let hom = ok_shape && {
                let m = Matrix::from_columns(fd, n, images);
                let mult = (0..n).all(|i| (0..n).all(|j| {
                    let lhs = vecops::combination(fd, n, &b.basis_product_vec(i, j), images);
                    lhs == e_alg.multiply(&images[i], &images[j])
                }));
                let unit = vecops::combination(fd, n, b.unit(), images) == *e_alg.unit();
                m.is_invertible() && mult && unit
            };
            let matches = hom && end.hom.class_of(&eps).is_some_and(|c| vecops::combination(fd, n, f_idem, images) == c);
            (Some(hom), Some(matches))
        }
    };

    let status = if !invariants {
        CheckStatus::Fail(format!("End(P) has {end_fingerprint}, B has {b_fingerprint}"))
    } else if explicit_iso == Some(false) {
        CheckStatus::Fail("supplied map is not an algebra isomorphism".into())
    } else if !p1_in_add {
        CheckStatus::Fail("P1 has terms outside add(Ae)".into())
    } else if !p1_generates {
        CheckStatus::Fail("no witness reaches Ae from P1".into())
    } else if !corner_invariants {
        CheckStatus::Fail("End(P1) and fBf have different invariants".into())
    } else if idempotent_matches == Some(false) {
        CheckStatus::Fail("the split idempotent does not correspond to f".into())
    } else if idempotent_matches == Some(true) {
        CheckStatus::Pass
    } else {
        CheckStatus::Inconclusive("invariants agree; no explicit isomorphism supplied".into())
    };
    Ok(PairReport { end_fingerprint, b_fingerprint, invariants, explicit_iso, p1_in_add, p1_generates, corner_invariants, idempotent_matches, status })
}
