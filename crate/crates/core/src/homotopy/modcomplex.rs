//! Complexes of arbitrary modules: cohomology, truncations and `ξ_X`.

use std::sync::Arc;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::exact::{Echelon, Matrix, Span, Vector};
use crate::field::Field;
use crate::modrep::Module;

use super::complex::ProjComplex;

/// `diffs[i] : terms[i] → terms[i+1]` acting on column vectors.
#[derive(Clone, Debug)]
pub struct ModComplex<F: Field> {
    pub algebra: Arc<Algebra<F>>,
    pub lo: i32,
    pub terms: Vec<Module<F>>,
    pub diffs: Vec<Matrix<F>>,
}

/// `H^n = Ker d^n / Im d^{n-1}`, with the data to compute classes.
#[derive(Clone, Debug)]
pub struct Cohomology<F: Field> {
    pub module: Module<F>,
    kernel: Span<F>,
    image: Echelon<F>,
}

impl<F: Field> Cohomology<F> {
    /// Class of a cycle, or `None` if `v` is not a cycle.
    pub fn class_of(&self, v: &[F::Elem]) -> Option<Vector<F>> {
        let k = self.kernel.coords(v)?;
        Some(self.image.quotient_coords(&k))
    }

    pub fn dim(&self) -> usize {
        self.module.dim()
    }
}

impl<F: Field> ModComplex<F> {
    pub fn new(algebra: &Arc<Algebra<F>>, lo: i32, terms: Vec<Module<F>>, diffs: Vec<Matrix<F>>) -> Result<Self> {
        let c = ModComplex { algebra: algebra.clone(), lo, terms, diffs };
        c.check()?;
        Ok(c)
    }

    pub fn stalk(m: &Module<F>, degree: i32) -> Self {
        ModComplex { algebra: m.algebra().clone(), lo: degree, terms: vec![m.clone()], diffs: Vec::new() }
    }

    pub fn from_proj(p: &ProjComplex<F>) -> Self {
        let ctx = &p.ctx;
        let terms = p.terms.iter().map(|t| ctx.module(t)).collect();
        let diffs = p.diffs.iter().enumerate().map(|(i, d)| ctx.module_map(&p.terms[i], &p.terms[i + 1], d)).collect();
        ModComplex { algebra: ctx.algebra.clone(), lo: p.lo, terms, diffs }
    }

    pub fn check(&self) -> Result<()> {
        if !self.terms.is_empty() && self.diffs.len() + 1 != self.terms.len() {
            return Err(Error::DifferentialMismatch("term and differential counts disagree".into()));
        }
        for (i, d) in self.diffs.iter().enumerate() {
            let (s, t) = (&self.terms[i], &self.terms[i + 1]);
            if (d.rows(), d.cols()) != (t.dim(), s.dim()) {
                return Err(Error::DifferentialMismatch(format!("differential in degree {} has the wrong shape", self.lo + i as i32)));
            }
            if !crate::modrep::is_module_hom(s, t, d) {
                return Err(Error::DifferentialMismatch(format!("differential in degree {} is not a module map", self.lo + i as i32)));
            }
            if i + 1 < self.diffs.len() && !self.diffs[i + 1].mul(d).is_zero() {
                return Err(Error::DifferentialMismatch(format!("d² ≠ 0 at degree {}", self.lo + i as i32)));
            }
        }
        Ok(())
    }

    pub fn hi(&self) -> i32 {
        self.lo + self.terms.len() as i32 - 1
    }

    pub fn term(&self, degree: i32) -> Module<F> {
        let i = degree - self.lo;
        if i >= 0 && (i as usize) < self.terms.len() {
            self.terms[i as usize].clone()
        } else {
            Module::zero(&self.algebra)
        }
    }

    pub fn diff(&self, degree: i32) -> Matrix<F> {
        let i = degree - self.lo;
        if i >= 0 && (i as usize) < self.diffs.len() {
            self.diffs[i as usize].clone()
        } else {
            Matrix::zeros(self.algebra.field(), self.term(degree + 1).dim(), self.term(degree).dim())
        }
    }

    pub fn cohomology_data(&self, n: i32) -> Cohomology<F> {
        let f = self.algebra.field();
        let m = self.term(n);
        let kernel_basis = self.diff(n).kernel_basis();
        let kernel = Span::from_vectors(f, m.dim(), kernel_basis.iter().cloned());
        let k = m.submodule(kernel.basis());
        let din = self.diff(n - 1);
        let image: Vec<Vector<F>> = (0..din.cols()).map(|c| kernel.coords(&din.column(c)).expect("image lies in the kernel")).collect();
        let (module, image) = k.quotient(&image);
        Cohomology { module, kernel, image }
    }

    pub fn cohomology(&self, n: i32) -> Module<F> {
        self.cohomology_data(n).module
    }

    /// `… → X^{n-1} → Ker d^n → 0`.
    pub fn truncate_le(&self, n: i32) -> Self {
        let f = self.algebra.field();
        if n < self.lo {
            return ModComplex { algebra: self.algebra.clone(), lo: n, terms: vec![Module::zero(&self.algebra)], diffs: Vec::new() };
        }
        let kernel = Span::from_vectors(f, self.term(n).dim(), self.diff(n).kernel_basis());
        let mut terms: Vec<Module<F>> = (self.lo..n).map(|d| self.term(d)).collect();
        terms.push(self.term(n).submodule(kernel.basis()));
        let mut diffs: Vec<Matrix<F>> = (self.lo..n - 1).map(|d| self.diff(d)).collect();
        if n > self.lo {
            let d = self.diff(n - 1);
            let cols: Vec<Vector<F>> = (0..d.cols()).map(|c| kernel.coords(&d.column(c)).expect("image lies in the kernel")).collect();
            diffs.push(Matrix::from_columns(f, kernel.len(), &cols));
        }
        ModComplex { algebra: self.algebra.clone(), lo: self.lo, terms, diffs }
    }

    /// `0 → Coker d^{n-1} → X^{n+1} → …`.
    pub fn truncate_ge(&self, n: i32) -> Self {
        let f = self.algebra.field();
        let hi = self.hi().max(n);
        let d = self.diff(n - 1);
        let image: Vec<Vector<F>> = (0..d.cols()).map(|c| d.column(c)).collect();
        let (coker, ech) = self.term(n).quotient(&image);
        let mut terms = vec![coker];
        terms.extend((n + 1..=hi).map(|k| self.term(k)));
        let mut diffs = Vec::new();
        if hi > n {
            let dn = self.diff(n);
            let cols: Vec<Vector<F>> = ech.free_columns().into_iter().map(|c| dn.column(c)).collect();
            diffs.push(Matrix::from_columns(f, self.term(n + 1).dim(), &cols));
            diffs.extend((n + 1..hi).map(|k| self.diff(k)));
        }
        ModComplex { algebra: self.algebra.clone(), lo: n, terms, diffs }
    }

    pub fn cohomology_dims(&self) -> Vec<(i32, usize)> {
        (self.lo..=self.hi()).map(|n| (n, self.cohomology(n).dim())).collect()
    }
}

/// `ξ_X : X → H⁰(X)` for `X` with no cohomology in positive degrees: the
/// inverse of `λ⁰ : τ^{≤0}X → X` followed by `π⁰ : τ^{≤0}X → H⁰(X)`.
#[derive(Clone, Debug)]
pub struct XiMap<F: Field> {
    pub truncation: ModComplex<F>,
    /// `λ⁰` in degree 0: `Ker d⁰ → X⁰`.
    pub lambda0: Matrix<F>,
    /// `π⁰` in degree 0: `Ker d⁰ → H⁰(X)`.
    pub pi0: Matrix<F>,
    /// `H⁰(ξ_X) = H⁰(π⁰) H⁰(λ⁰)^{-1}`, an automorphism of `H⁰(X)`.
    pub h0: Matrix<F>,
}

pub fn xi_map<F: Field>(x: &ModComplex<F>) -> Result<XiMap<F>> {
    let f = x.algebra.field();
    for n in 1..=x.hi() {
        if x.cohomology(n).dim() > 0 {
            return Err(Error::PositiveCohomology(n));
        }
    }
    let t = x.truncate_le(0);
    let ht = t.cohomology_data(0);
    let hx = x.cohomology_data(0);
    let t0 = t.term(0);
    let kernel = Span::from_vectors(f, x.term(0).dim(), x.diff(0).kernel_basis());
    let lambda0 = Matrix::from_columns(f, x.term(0).dim(), kernel.basis());
    // π⁰ is the quotient map of the stalk H⁰ = τ^{≥0}τ^{≤0}X
    let pi_cols: Vec<Vector<F>> = (0..t0.dim()).map(|c| ht.class_of(&crate::exact::vecops::unit(f, t0.dim(), c)).expect("cycle")).collect();
    let pi0 = Matrix::from_columns(f, ht.dim(), &pi_cols);
    // H⁰ of λ⁰ and of π⁰ on the class representatives of H⁰(τ^{≤0}X)
    let reps: Vec<Vector<F>> = ht.image.free_columns().into_iter().map(|c| ht.kernel.basis()[c].clone()).collect();
    let h_lambda_cols: Vec<Vector<F>> = reps.iter().map(|r| hx.class_of(&lambda0.mul_vec(r)).expect("cycle")).collect();
    let h_lambda = Matrix::from_columns(f, hx.dim(), &h_lambda_cols);
    let h_pi_cols: Vec<Vector<F>> = reps.iter().map(|r| pi0.mul_vec(r)).collect();
    let h_pi = Matrix::from_columns(f, ht.dim(), &h_pi_cols);
    let inv = h_lambda.inverse().ok_or_else(|| Error::ModuleViolation("λ⁰ is not a quasi-isomorphism".into()))?;
    let h0 = h_pi.mul(&inv);
    if !h0.is_invertible() {
        return Err(Error::ModuleViolation("H⁰(ξ_X) is not an automorphism".into()));
    }
    Ok(XiMap { truncation: t, lambda0, pi0, h0 })
}
