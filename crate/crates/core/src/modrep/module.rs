//! Left modules and bimodules given by action matrices.

use std::sync::Arc;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::exact::{vecops, Echelon, Matrix, Span, Vector};
use crate::field::Field;

/// Left module: one `dim × dim` matrix per basis element of the algebra,
/// acting on column vectors.
#[derive(Clone, Debug)]
pub struct Module<F: Field> {
    algebra: Arc<Algebra<F>>,
    dim: usize,
    action: Vec<Matrix<F>>,
}

impl<F: Field> PartialEq for Module<F> {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.action == other.action && same_algebra(&self.algebra, &other.algebra)
    }
}

pub(crate) fn same_algebra<F: Field>(a: &Arc<Algebra<F>>, b: &Arc<Algebra<F>>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl<F: Field> Module<F> {
    pub fn new(algebra: &Arc<Algebra<F>>, dim: usize, action: Vec<Matrix<F>>) -> Result<Self> {
        if action.len() != algebra.dim() || action.iter().any(|m| m.rows() != dim || m.cols() != dim) {
            return Err(Error::ShapeMismatch(format!("module action of dimension {dim}")));
        }
        Ok(Module { algebra: algebra.clone(), dim, action })
    }

    pub fn zero(algebra: &Arc<Algebra<F>>) -> Self {
        let f = algebra.field();
        Module { algebra: algebra.clone(), dim: 0, action: (0..algebra.dim()).map(|_| Matrix::zeros(f, 0, 0)).collect() }
    }

    /// `A` acting on itself from the left.
    pub fn regular(algebra: &Arc<Algebra<F>>) -> Self {
        let action = (0..algebra.dim()).map(|i| algebra.left_basis_matrix(i)).collect();
        Module { algebra: algebra.clone(), dim: algebra.dim(), action }
    }

    /// The left ideal `Ae`.
    pub fn projective(algebra: &Arc<Algebra<F>>, e: &[F::Elem]) -> Self {
        let basis = algebra.slice_basis(algebra.unit(), e);
        Module::regular(algebra).submodule(&basis)
    }

    pub fn algebra(&self) -> &Arc<Algebra<F>> {
        &self.algebra
    }
    pub fn field(&self) -> &F {
        self.algebra.field()
    }
    pub fn dim(&self) -> usize {
        self.dim
    }
    pub fn action(&self) -> &[Matrix<F>] {
        &self.action
    }
    pub fn basis_action(&self, i: usize) -> &Matrix<F> {
        &self.action[i]
    }

    /// Matrix of an arbitrary algebra element.
    pub fn action_of(&self, a: &[F::Elem]) -> Matrix<F> {
        Matrix::combination(self.field(), self.dim, self.dim, a, &self.action)
    }

    pub fn act(&self, a: &[F::Elem], v: &[F::Elem]) -> Vector<F> {
        let f = self.field();
        let mut out = vecops::zero(f, self.dim);
        for (c, m) in a.iter().zip(&self.action) {
            if !f.is_zero(c) {
                vecops::axpy(f, &mut out, c, &m.mul_vec(v));
            }
        }
        out
    }

    /// Module axioms on all basis pairs and the unit.
    pub fn check(&self) -> Result<()> {
        let a = &self.algebra;
        if !self.action_of(a.unit()).is_identity() {
            return Err(Error::ModuleViolation("unit does not act as the identity".into()));
        }
        for i in 0..a.dim() {
            for j in 0..a.dim() {
                let lhs = self.action_of(&a.basis_product_vec(i, j));
                if lhs != self.action[i].mul(&self.action[j]) {
                    return Err(Error::ModuleViolation(format!("action fails on ({}, {})", a.labels()[i], a.labels()[j])));
                }
            }
        }
        Ok(())
    }

    /// Submodule spanned by `basis` (assumed closed under the action).
    pub fn submodule(&self, basis: &[Vector<F>]) -> Self {
        let f = self.field();
        let span = Span::from_vectors(f, self.dim, basis.iter().cloned());
        let b = span.basis();
        let action = self
            .action
            .iter()
            .map(|m| {
                let cols: Vec<Vector<F>> = b.iter().map(|v| span.coords(&m.mul_vec(v)).expect("submodule closed under action")).collect();
                Matrix::from_columns(f, b.len(), &cols)
            })
            .collect();
        Module { algebra: self.algebra.clone(), dim: b.len(), action }
    }

    /// Submodule generated by `vectors`.
    pub fn generated(&self, vectors: &[Vector<F>]) -> Vec<Vector<F>> {
        let f = self.field();
        let mut span = Span::new(f, self.dim);
        let mut queue = vectors.to_vec();
        let gens = self.algebra.generator_indices().to_vec();
        while let Some(v) = queue.pop() {
            if span.push(v.clone()) {
                for &g in &gens {
                    queue.push(self.action[g].mul_vec(&v));
                }
            }
        }
        span.into_basis()
    }

    /// `M / U` on the free columns of `U`'s echelon form.
    pub fn quotient(&self, sub: &[Vector<F>]) -> (Self, Echelon<F>) {
        let f = self.field();
        let ech = Echelon::from_vectors(f, self.dim, sub.iter());
        let free = ech.free_columns();
        let action = self
            .action
            .iter()
            .map(|m| {
                let cols: Vec<Vector<F>> = free.iter().map(|&c| ech.quotient_coords(&m.column(c))).collect();
                Matrix::from_columns(f, free.len(), &cols)
            })
            .collect();
        (Module { algebra: self.algebra.clone(), dim: free.len(), action }, ech)
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        let action = self.action.iter().zip(&other.action).map(|(a, b)| Matrix::block_diag(self.field(), &[a.clone(), b.clone()])).collect();
        Module { algebra: self.algebra.clone(), dim: self.dim + other.dim, action }
    }

    pub fn direct_sum_all(algebra: &Arc<Algebra<F>>, parts: &[Self]) -> Self {
        parts.iter().fold(Module::zero(algebra), |acc, m| acc.direct_sum(m))
    }

    /// `D(M) = Hom_k(M, k)` as a left module over the opposite algebra.
    pub fn dual(&self, opposite: &Arc<Algebra<F>>) -> Self {
        Module { algebra: opposite.clone(), dim: self.dim, action: self.action.iter().map(|m| m.transpose()).collect() }
    }

    /// Restriction along an algebra map given on basis elements.
    pub fn restrict(&self, target: &Arc<Algebra<F>>, images: &[Vector<F>]) -> Self {
        Module { algebra: target.clone(), dim: self.dim, action: images.iter().map(|x| self.action_of(x)).collect() }
    }

    /// `J M`.
    pub fn radical(&self) -> Result<Vec<Vector<F>>> {
        let s = self.algebra.structure()?;
        let vs: Vec<Vector<F>> = s.radical.iter().flat_map(|j| {
            let m = self.action_of(j);
            (0..self.dim).map(move |c| m.column(c))
        }).collect();
        Ok(Span::from_vectors(self.field(), self.dim, vs).into_basis())
    }

    /// Multiplicity of each simple (by class representative) in the top `M/JM`.
    pub fn top_multiplicities(&self) -> Result<Vec<usize>> {
        let s = self.algebra.structure()?;
        let rad = Echelon::from_vectors(self.field(), self.dim, self.radical()?.iter());
        Ok(s.representatives()
            .into_iter()
            .map(|r| {
                let m = self.action_of(&s.idempotents[r]);
                let mut e = rad.clone();
                let before = e.rank();
                for c in 0..self.dim {
                    e.insert(m.column(c));
                }
                e.rank() - before
            })
            .collect())
    }

    /// Projective ⟺ the projective cover has the same dimension.
    pub fn is_projective(&self) -> Result<bool> {
        let s = self.algebra.structure()?;
        let tops = self.top_multiplicities()?;
        let cover: usize = s.representatives().iter().zip(&tops).map(|(&r, &m)| m * self.algebra.slice_basis(self.algebra.unit(), &s.idempotents[r]).len()).sum();
        Ok(cover == self.dim)
    }

    /// Injective ⟺ the dual is projective over the opposite algebra.
    pub fn is_injective(&self) -> Result<bool> {
        let op = Arc::new(self.algebra.opposite());
        self.dual(&op).is_projective()
    }

    /// The representation `A → End_k(M)` is injective.
    pub fn is_faithful(&self) -> bool {
        let f = self.field();
        let cols: Vec<Vector<F>> = self.action.iter().map(|m| m.data().to_vec()).collect();
        if cols.is_empty() {
            return true;
        }
        Matrix::from_columns(f, self.dim * self.dim, &cols).rank() == self.algebra.dim()
    }
}

/// Indecomposable projectives `Ae_r`, one per isomorphism class.
pub fn projectives<F: Field>(algebra: &Arc<Algebra<F>>) -> Result<Vec<(Vector<F>, Module<F>)>> {
    let s = algebra.structure()?;
    Ok(s.representatives().into_iter().map(|r| {
        let e = s.idempotents[r].clone();
        let m = Module::projective(algebra, &e);
        (e, m)
    }).collect())
}

/// A bimodule `_A M_B`: left action matrices for `A`, right action matrices
/// for `B` (`R_b : m ↦ m b`, so `R_{bb'} = R_{b'} R_b`).
#[derive(Clone, Debug)]
pub struct Bimodule<F: Field> {
    pub left: Arc<Algebra<F>>,
    pub right: Arc<Algebra<F>>,
    pub dim: usize,
    pub left_action: Vec<Matrix<F>>,
    pub right_action: Vec<Matrix<F>>,
}

impl<F: Field> Bimodule<F> {
    pub fn field(&self) -> &F {
        self.left.field()
    }

    pub fn left_of(&self, a: &[F::Elem]) -> Matrix<F> {
        Matrix::combination(self.field(), self.dim, self.dim, a, &self.left_action)
    }
    pub fn right_of(&self, b: &[F::Elem]) -> Matrix<F> {
        Matrix::combination(self.field(), self.dim, self.dim, b, &self.right_action)
    }

    /// Both module axioms plus commuting actions.
    pub fn check(&self) -> Result<()> {
        let (a, b) = (&self.left, &self.right);
        if !self.left_of(a.unit()).is_identity() || !self.right_of(b.unit()).is_identity() {
            return Err(Error::ModuleViolation("unit does not act as the identity".into()));
        }
        for i in 0..a.dim() {
            for j in 0..a.dim() {
                if self.left_of(&a.basis_product_vec(i, j)) != self.left_action[i].mul(&self.left_action[j]) {
                    return Err(Error::ModuleViolation("left action is not multiplicative".into()));
                }
            }
        }
        for i in 0..b.dim() {
            for j in 0..b.dim() {
                if self.right_of(&b.basis_product_vec(i, j)) != self.right_action[j].mul(&self.right_action[i]) {
                    return Err(Error::ModuleViolation("right action is not multiplicative".into()));
                }
            }
        }
        for l in &self.left_action {
            for r in &self.right_action {
                if l.mul(r) != r.mul(l) {
                    return Err(Error::ModuleViolation("left and right actions do not commute".into()));
                }
            }
        }
        Ok(())
    }

    /// The same data as a left module over `A ⊗ B^op`, with `a ⊗ b` acting as `L_a R_b`.
    pub fn to_module(&self, tensor: &Arc<Algebra<F>>) -> Result<Module<F>> {
        let m = self.right.dim();
        let action = (0..self.left.dim() * m).map(|x| self.left_action[x / m].mul(&self.right_action[x % m])).collect();
        Module::new(tensor, self.dim, action)
    }

    /// `Hom_k(M, k)` as a `B`-`A`-bimodule.
    pub fn dual(&self) -> Self {
        Bimodule {
            left: self.right.clone(),
            right: self.left.clone(),
            dim: self.dim,
            left_action: self.right_action.iter().map(|m| m.transpose()).collect(),
            right_action: self.left_action.iter().map(|m| m.transpose()).collect(),
        }
    }

    /// Constraint pairs for intertwiners, using generators on both sides.
    pub fn constraint_pairs(&self, other: &Self) -> Vec<(Matrix<F>, Matrix<F>)> {
        let mut out: Vec<_> = self.left.generator_indices().iter().map(|&g| (self.left_action[g].clone(), other.left_action[g].clone())).collect();
        out.extend(self.right.generator_indices().iter().map(|&g| (self.right_action[g].clone(), other.right_action[g].clone())));
        out
    }
}

/// The regular bimodule `_A A_A`.
pub fn regular_bimodule<F: Field>(algebra: &Arc<Algebra<F>>) -> Bimodule<F> {
    Bimodule {
        left: algebra.clone(),
        right: algebra.clone(),
        dim: algebra.dim(),
        left_action: (0..algebra.dim()).map(|i| algebra.left_basis_matrix(i)).collect(),
        right_action: (0..algebra.dim()).map(|i| algebra.right_basis_matrix(i)).collect(),
    }
}

/// Subbimodule of `_A A_B`-type data spanned by `basis` of a bimodule whose
/// actions preserve it.
pub fn sub_bimodule<F: Field>(m: &Bimodule<F>, basis: &[Vector<F>]) -> Bimodule<F> {
    let f = m.field();
    let span = Span::from_vectors(f, m.dim, basis.iter().cloned());
    let restrict = |mats: &[Matrix<F>]| -> Vec<Matrix<F>> {
        mats.iter()
            .map(|x| {
                let cols: Vec<Vector<F>> = span.basis().iter().map(|v| span.coords(&x.mul_vec(v)).expect("closed")).collect();
                Matrix::from_columns(f, span.len(), &cols)
            })
            .collect()
    };
    Bimodule { left: m.left.clone(), right: m.right.clone(), dim: span.len(), left_action: restrict(&m.left_action), right_action: restrict(&m.right_action) }
}

/// Restricts the actions of a bimodule to subalgebras given by bases of elements.
pub fn restrict_bimodule<F: Field>(m: &Bimodule<F>, left: &Arc<Algebra<F>>, left_images: &[Vector<F>], right: &Arc<Algebra<F>>, right_images: &[Vector<F>]) -> Bimodule<F> {
    Bimodule {
        left: left.clone(),
        right: right.clone(),
        dim: m.dim,
        left_action: left_images.iter().map(|x| m.left_of(x)).collect(),
        right_action: right_images.iter().map(|x| m.right_of(x)).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};

    #[test]
    fn regular_and_projective_modules() {
        let f = Rationals;
        let a = Arc::new(Algebra::truncated_polynomial(&f, 3));
        let r = Module::regular(&a);
        r.check().unwrap();
        assert!(r.is_projective().unwrap());
        assert!(r.is_injective().unwrap());
        assert!(r.is_faithful());
        let (simple, _) = r.quotient(&r.radical().unwrap());
        assert_eq!(simple.dim(), 1);
        simple.check().unwrap();
        assert!(!simple.is_projective().unwrap());
        assert!(!simple.is_faithful());
    }

    #[test]
    fn dual_of_simple() {
        let f = PrimeField::new(5).unwrap();
        let a = Arc::new(Algebra::truncated_polynomial(&f, 3));
        let op = Arc::new(a.opposite());
        let r = Module::regular(&a);
        let (s, _) = r.quotient(&r.radical().unwrap());
        let d = s.dual(&op);
        d.check().unwrap();
        assert_eq!(d.dim(), 1);
        assert_eq!(d.dual(&a), s);
    }

    #[test]
    fn semisimple_projectives() {
        let f = PrimeField::new(2).unwrap();
        let a = Arc::new(Algebra::split_semisimple(&f, 2));
        let ps = projectives(&a).unwrap();
        assert_eq!(ps.iter().map(|(_, m)| m.dim()).collect::<Vec<_>>(), vec![1, 1]);
    }

    #[test]
    fn regular_bimodule_checks() {
        let f = Rationals;
        let a = Arc::new(Algebra::matrix_algebra(&f, 2));
        let b = regular_bimodule(&a);
        b.check().unwrap();
        let env = Arc::new(a.enveloping());
        b.to_module(&env).unwrap().check().unwrap();
        b.dual().check().unwrap();
    }
}
