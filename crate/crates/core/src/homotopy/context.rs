//! The indecomposable projectives `Ae_s` a complex is built from, with the
//! slices `e_s A e_t = Hom_A(Ae_s, Ae_t)` precomputed.

use std::sync::Arc;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::exact::{Matrix, Span, Vector};
use crate::field::Field;
use crate::modrep::Module;
use crate::quiver::PathAlgebra;

use super::amatrix::AMatrix;

#[derive(Debug)]
pub struct ProjContext<F: Field> {
    pub algebra: Arc<Algebra<F>>,
    pub idempotents: Vec<Vector<F>>,
    pub names: Vec<String>,
    slices: Vec<Vec<Span<F>>>,
    projectives: Vec<Span<F>>,
}

impl<F: Field> ProjContext<F> {
    /// `idempotents` should be primitive; they are checked to be idempotent.
    pub fn new(algebra: &Arc<Algebra<F>>, idempotents: Vec<Vector<F>>, names: Vec<String>) -> Result<Arc<Self>> {
        if idempotents.iter().any(|e| !algebra.is_idempotent(e)) {
            return Err(Error::NotIdempotent);
        }
        let a = algebra.as_ref();
        let slices = idempotents.iter().map(|s| idempotents.iter().map(|t| a.span_of(a.slice_basis(s, t))).collect()).collect();
        let projectives = idempotents.iter().map(|s| a.span_of(a.slice_basis(a.unit(), s))).collect();
        Ok(Arc::new(ProjContext { algebra: algebra.clone(), idempotents, names, slices, projectives }))
    }

    /// One idempotent per isomorphism class of indecomposable projectives.
    pub fn from_structure(algebra: &Arc<Algebra<F>>) -> Result<Arc<Self>> {
        let s = algebra.structure()?;
        let reps = s.representatives();
        let idem = reps.iter().map(|&r| s.idempotents[r].clone()).collect();
        let names = (0..reps.len()).map(|i| format!("P{}", i + 1)).collect();
        Self::new(algebra, idem, names)
    }

    /// Vertex idempotents of a compiled presentation, named by vertex.
    pub fn from_path_algebra(pa: &PathAlgebra<F>, algebra: &Arc<Algebra<F>>) -> Result<Arc<Self>> {
        Self::new(algebra, pa.vertex_idempotents(), pa.presentation.vertices.clone())
    }

    /// The same idempotents over the opposite algebra.
    pub fn opposite(&self) -> Result<Arc<Self>> {
        Self::new(&Arc::new(self.algebra.opposite()), self.idempotents.clone(), self.names.clone())
    }

    pub fn len(&self) -> usize {
        self.idempotents.len()
    }

    pub fn is_empty(&self) -> bool {
        self.idempotents.is_empty()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn field(&self) -> &F {
        self.algebra.field()
    }

    /// `e_s A e_t`.
    pub fn slice(&self, s: usize, t: usize) -> &Span<F> {
        &self.slices[s][t]
    }

    /// Basis of `Ae_s`.
    pub fn projective_basis(&self, s: usize) -> &[Vector<F>] {
        self.projectives[s].basis()
    }

    /// `⊕ Ae_s` as a module.
    pub fn module(&self, terms: &[usize]) -> Module<F> {
        let parts: Vec<Module<F>> = terms.iter().map(|&s| Module::regular(&self.algebra).submodule(self.projective_basis(s))).collect();
        Module::direct_sum_all(&self.algebra, &parts)
    }

    /// Matrix of `x ↦ x·M` from `⊕ Ae_s` to `⊕ Ae_t` in the module bases.
    pub fn module_map(&self, source: &[usize], target: &[usize], m: &AMatrix<F>) -> Matrix<F> {
        let a = self.algebra.as_ref();
        let f = a.field();
        let rows: usize = target.iter().map(|&t| self.projectives[t].len()).sum();
        let mut cols = Vec::new();
        for (k, &s) in source.iter().enumerate() {
            for b in self.projective_basis(s) {
                let mut col = Vec::with_capacity(rows);
                for (l, &t) in target.iter().enumerate() {
                    let img = a.multiply(b, m.get(k, l));
                    col.extend(self.projectives[t].coords(&img).expect("image lies in Ae_t"));
                }
                cols.push(col);
            }
        }
        Matrix::from_columns(f, rows, &cols)
    }

    /// Identity on `⊕ Ae_s`.
    pub fn identity(&self, terms: &[usize]) -> AMatrix<F> {
        let diag: Vec<Vector<F>> = terms.iter().map(|&s| self.idempotents[s].clone()).collect();
        AMatrix::diagonal(&self.algebra, &diag)
    }

    pub fn same(self: &Arc<Self>, other: &Arc<Self>) -> bool {
        Arc::ptr_eq(self, other) || (self.idempotents == other.idempotents && *self.algebra == *other.algebra)
    }
}
