//! Bounded complexes of projectives `⊕ Ae_s` with differentials given by
//! matrices over the algebra, and degree-0 chain maps between them.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::Field;

use super::amatrix::AMatrix;
use super::context::ProjContext;

/// Terms `terms[i]` sit in degree `lo + i`; `diffs[i]` maps degree `lo + i`
/// to `lo + i + 1`. Shift: `X[n]^i = X^{i+n}`, `d_{X[n]} = (-1)^n d_X`.
#[derive(Clone)]
pub struct ProjComplex<F: Field> {
    pub ctx: Arc<ProjContext<F>>,
    pub lo: i32,
    pub terms: Vec<Vec<usize>>,
    pub diffs: Vec<AMatrix<F>>,
}

impl<F: Field> fmt::Debug for ProjComplex<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl<F: Field> fmt::Display for ProjComplex<F> {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(out, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .enumerate()
            .map(|(i, t)| {
                let names: Vec<&str> = t.iter().map(|&s| self.ctx.names[s].as_str()).collect();
                format!("[{}]{}", self.lo + i as i32, if names.is_empty() { "0".to_string() } else { names.join("+") })
            })
            .collect();
        write!(out, "{}", parts.join(" -> "))
    }
}

/// A degree-0 chain map; `blocks[i]` starts in degree `lo + i` of the source.
#[derive(Clone, Debug, PartialEq)]
pub struct ChainMap<F: Field> {
    pub lo: i32,
    pub blocks: Vec<AMatrix<F>>,
}

impl<F: Field> ProjComplex<F> {
    /// Checks shapes, slice membership and `d² = 0`, then trims zero ends.
    pub fn new(ctx: &Arc<ProjContext<F>>, lo: i32, terms: Vec<Vec<usize>>, diffs: Vec<AMatrix<F>>) -> Result<Self> {
        let c = ProjComplex { ctx: ctx.clone(), lo, terms, diffs };
        c.check()?;
        Ok(c.trimmed())
    }

    pub fn zero(ctx: &Arc<ProjContext<F>>) -> Self {
        ProjComplex { ctx: ctx.clone(), lo: 0, terms: Vec::new(), diffs: Vec::new() }
    }

    /// `⊕ Ae_s` in a single degree.
    pub fn stalk(ctx: &Arc<ProjContext<F>>, terms: Vec<usize>, degree: i32) -> Self {
        ProjComplex { ctx: ctx.clone(), lo: degree, terms: vec![terms], diffs: Vec::new() }.trimmed()
    }

    pub fn check(&self) -> Result<()> {
        let a = self.ctx.algebra.as_ref();
        let f = a.field();
        if self.terms.len() != self.diffs.len() + 1 && !(self.terms.is_empty() && self.diffs.is_empty()) {
            return Err(Error::DifferentialMismatch(format!("{} terms but {} differentials", self.terms.len(), self.diffs.len())));
        }
        for (i, d) in self.diffs.iter().enumerate() {
            let (src, tgt) = (&self.terms[i], &self.terms[i + 1]);
            let deg = self.lo + i as i32;
            if (d.rows, d.cols) != (src.len(), tgt.len()) {
                return Err(Error::DifferentialMismatch(format!("differential in degree {deg} has shape {}x{}, expected {}x{}", d.rows, d.cols, src.len(), tgt.len())));
            }
            for (k, &s) in src.iter().enumerate() {
                for (l, &t) in tgt.iter().enumerate() {
                    if !self.ctx.slice(s, t).contains(d.get(k, l)) {
                        return Err(Error::DifferentialMismatch(format!("entry ({k}, {l}) of the differential in degree {deg} is not in e_{}Ae_{}", self.ctx.names[s], self.ctx.names[t])));
                    }
                }
            }
            if i + 1 < self.diffs.len() && !d.mul(a, &self.diffs[i + 1]).is_zero(f) {
                return Err(Error::DifferentialMismatch(format!("d² ≠ 0 at degree {deg}")));
            }
        }
        Ok(())
    }

    fn trimmed(mut self) -> Self {
        while self.terms.first().is_some_and(|t| t.is_empty()) {
            self.terms.remove(0);
            if !self.diffs.is_empty() {
                self.diffs.remove(0);
            }
            self.lo += 1;
        }
        while self.terms.last().is_some_and(|t| t.is_empty()) {
            self.terms.pop();
            self.diffs.pop();
        }
        if self.terms.is_empty() {
            self.lo = 0;
            self.diffs.clear();
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Highest degree with a term (`lo - 1` for the zero complex).
    pub fn hi(&self) -> i32 {
        self.lo + self.terms.len() as i32 - 1
    }

    pub fn term(&self, degree: i32) -> &[usize] {
        let i = degree - self.lo;
        if i < 0 || i as usize >= self.terms.len() {
            &[]
        } else {
            &self.terms[i as usize]
        }
    }

    /// `d^degree`, zero outside the range.
    pub fn diff(&self, degree: i32) -> AMatrix<F> {
        let i = degree - self.lo;
        if i >= 0 && (i as usize) < self.diffs.len() {
            self.diffs[i as usize].clone()
        } else {
            AMatrix::zeros(&self.ctx.algebra, self.term(degree).len(), self.term(degree + 1).len())
        }
    }

    pub fn shift(&self, n: i32) -> Self {
        let f = self.ctx.field();
        let diffs = if n % 2 == 0 { self.diffs.clone() } else { self.diffs.iter().map(|d| d.neg(f)).collect() };
        ProjComplex { ctx: self.ctx.clone(), lo: self.lo - n, terms: self.terms.clone(), diffs }
    }

    /// Degreewise direct sum.
    pub fn direct_sum(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let a = &self.ctx.algebra;
        let lo = self.lo.min(other.lo);
        let hi = self.hi().max(other.hi());
        let terms: Vec<Vec<usize>> = (lo..=hi).map(|d| [self.term(d), other.term(d)].concat()).collect();
        let diffs = (lo..hi)
            .map(|d| {
                let rows = [self.term(d).len(), other.term(d).len()];
                let cols = [self.term(d + 1).len(), other.term(d + 1).len()];
                AMatrix::from_blocks(a, &rows, &cols, |i, j| match (i, j) {
                    (0, 0) => Some(self.diff(d)),
                    (1, 1) => Some(other.diff(d)),
                    _ => None,
                })
            })
            .collect();
        ProjComplex { ctx: self.ctx.clone(), lo, terms, diffs }
    }

    pub fn identity(&self) -> ChainMap<F> {
        ChainMap { lo: self.lo, blocks: self.terms.iter().map(|t| self.ctx.identity(t)).collect() }
    }

    /// `cone(f)^i = X^{i+1} ⊕ Y^i` with `d = [[-d_X, f], [0, d_Y]]`.
    pub fn cone(x: &Self, y: &Self, f: &ChainMap<F>) -> Self {
        let a = &x.ctx.algebra;
        let fd = a.field();
        if x.is_zero() {
            return y.clone();
        }
        let lo = (x.lo - 1).min(if y.is_zero() { x.lo - 1 } else { y.lo });
        let hi = (x.hi() - 1).max(if y.is_zero() { x.hi() - 1 } else { y.hi() });
        let terms: Vec<Vec<usize>> = (lo..=hi).map(|d| [x.term(d + 1), y.term(d)].concat()).collect();
        let diffs = (lo..hi)
            .map(|d| {
                let rows = [x.term(d + 1).len(), y.term(d).len()];
                let cols = [x.term(d + 2).len(), y.term(d + 1).len()];
                AMatrix::from_blocks(a, &rows, &cols, |i, j| match (i, j) {
                    (0, 0) => Some(x.diff(d + 1).neg(fd)),
                    (0, 1) => Some(f.block(a, d + 1, x.term(d + 1).len(), y.term(d + 1).len())),
                    (1, 1) => Some(y.diff(d)),
                    _ => None,
                })
            })
            .collect();
        ProjComplex { ctx: x.ctx.clone(), lo, terms, diffs }.trimmed()
    }

    /// `Hom_A(-, A)` termwise: a complex over the opposite algebra with
    /// `(X*)^{-i} = (X^i)*` and `d_{X*}^{-i-1} = (-1)^{i+1} (d_X^i)^T`.
    pub fn dualize(&self, op: &Arc<ProjContext<F>>) -> Self {
        let f = self.ctx.field();
        if self.is_zero() {
            return ProjComplex::zero(op);
        }
        let terms: Vec<Vec<usize>> = (self.lo..=self.hi()).rev().map(|d| self.term(d).to_vec()).collect();
        let diffs = (self.lo..self.hi())
            .rev()
            .map(|i| {
                let t = self.diff(i).transpose();
                if (i + 1) % 2 == 0 { t } else { t.neg(f) }
            })
            .collect();
        ProjComplex { ctx: op.clone(), lo: -self.hi(), terms, diffs }
    }

    /// Total number of indecomposable summands over all terms.
    pub fn size(&self) -> usize {
        self.terms.iter().map(|t| t.len()).sum()
    }
}

impl<F: Field> ChainMap<F> {
    pub fn zero(x: &ProjComplex<F>, y: &ProjComplex<F>) -> Self {
        let a = &x.ctx.algebra;
        ChainMap { lo: x.lo, blocks: (x.lo..=x.hi()).map(|d| AMatrix::zeros(a, x.term(d).len(), y.term(d).len())).collect() }
    }

    /// Block in `degree`, zero of the given shape outside the stored range.
    pub fn block(&self, a: &crate::algebra::Algebra<F>, degree: i32, rows: usize, cols: usize) -> AMatrix<F> {
        let i = degree - self.lo;
        match (i >= 0).then(|| self.blocks.get(i as usize)).flatten() {
            Some(b) if b.rows == rows && b.cols == cols => b.clone(),
            _ => AMatrix::zeros(a, rows, cols),
        }
    }

    /// `f` then `g`.
    pub fn then(&self, g: &Self, x: &ProjComplex<F>, y: &ProjComplex<F>, z: &ProjComplex<F>) -> Self {
        let a = &x.ctx.algebra;
        let blocks = (x.lo..=x.hi())
            .map(|d| {
                let fb = self.block(a, d, x.term(d).len(), y.term(d).len());
                let gb = g.block(a, d, y.term(d).len(), z.term(d).len());
                fb.mul(a, &gb)
            })
            .collect();
        ChainMap { lo: x.lo, blocks }
    }

    /// `f[n] : X[n] → Y[n]`, the same blocks reindexed.
    pub fn shift(&self, n: i32) -> Self {
        ChainMap { lo: self.lo - n, blocks: self.blocks.clone() }
    }

    pub fn add(&self, f: &F, other: &Self) -> Self {
        ChainMap { lo: self.lo, blocks: self.blocks.iter().zip(&other.blocks).map(|(a, b)| a.add(f, b)).collect() }
    }

    pub fn scale(&self, f: &F, s: &F::Elem) -> Self {
        ChainMap { lo: self.lo, blocks: self.blocks.iter().map(|b| b.scale(f, s)).collect() }
    }

    /// `d_X f = f d_Y` in every degree.
    pub fn is_chain_map(&self, x: &ProjComplex<F>, y: &ProjComplex<F>) -> bool {
        let a = &x.ctx.algebra;
        let f = a.field();
        (x.lo - 1..=x.hi()).all(|d| {
            let left = x.diff(d).mul(a, &self.block(a, d + 1, x.term(d + 1).len(), y.term(d + 1).len()));
            let right = self.block(a, d, x.term(d).len(), y.term(d).len()).mul(a, &y.diff(d));
            left == right || left.sub(f, &right).is_zero(f)
        })
    }
}
