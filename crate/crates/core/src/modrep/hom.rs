//! Homomorphism spaces and endomorphism algebras.

use crate::algebra::{Algebra, Sparse};
use crate::exact::{Echelon, Matrix, Span, Vector};
use crate::field::Field;

use super::module::{Bimodule, Module};

/// Matrices `X` (`n_dim × m_dim`) with `X · M_g = N_g · X` for every pair `(M_g, N_g)`.
pub fn intertwiners<F: Field>(f: &F, m_dim: usize, n_dim: usize, pairs: &[(Matrix<F>, Matrix<F>)]) -> Vec<Matrix<F>> {
    let unknowns = n_dim * m_dim;
    let mut ech = Echelon::new(f, unknowns);
    'outer: for (mg, ng) in pairs {
        for r in 0..n_dim {
            for c in 0..m_dim {
                if ech.is_full() {
                    break 'outer;
                }
                let mut row = vec![f.zero(); unknowns];
                for k in 0..m_dim {
                    let x = mg.get(k, c);
                    if !f.is_zero(x) {
                        let i = r * m_dim + k;
                        row[i] = f.add(&row[i], x);
                    }
                }
                for k in 0..n_dim {
                    let x = ng.get(r, k);
                    if !f.is_zero(x) {
                        let i = k * m_dim + c;
                        row[i] = f.sub(&row[i], x);
                    }
                }
                ech.insert(row);
            }
        }
    }
    ech.kernel_basis().into_iter().map(|v| Matrix::new(f, n_dim, m_dim, v).expect("shape")).collect()
}

/// Basis of `Hom_A(M, N)`.
pub fn hom_basis<F: Field>(m: &Module<F>, n: &Module<F>) -> Vec<Matrix<F>> {
    let gens = m.algebra().generator_indices();
    let pairs: Vec<_> = gens.iter().map(|&g| (m.basis_action(g).clone(), n.basis_action(g).clone())).collect();
    intertwiners(m.field(), m.dim(), n.dim(), &pairs)
}

/// Basis of bimodule homomorphisms.
pub fn bimodule_hom_basis<F: Field>(m: &Bimodule<F>, n: &Bimodule<F>) -> Vec<Matrix<F>> {
    intertwiners(m.field(), m.dim, n.dim, &m.constraint_pairs(n))
}

pub fn is_module_hom<F: Field>(m: &Module<F>, n: &Module<F>, x: &Matrix<F>) -> bool {
    m.action().iter().zip(n.action()).all(|(a, b)| x.mul(a) == b.mul(x))
}

/// An algebra of maps with product "first, then second" (`f·g = G F`).
#[derive(Clone, Debug)]
pub struct MapAlgebra<F: Field> {
    pub algebra: Algebra<F>,
    pub maps: Vec<Matrix<F>>,
    span: Span<F>,
}

impl<F: Field> MapAlgebra<F> {
    /// `maps` must span a space closed under composition and containing the identity.
    pub fn new(f: &F, maps: Vec<Matrix<F>>, prefix: &str) -> Self {
        let (rows, cols) = maps.first().map_or((0, 0), |m| (m.rows(), m.cols()));
        let span = Span::from_vectors(f, rows * cols, maps.iter().map(|m| m.data().to_vec()));
        let maps: Vec<Matrix<F>> = span.basis().iter().map(|v| Matrix::new(f, rows, cols, v.clone()).unwrap()).collect();
        let d = maps.len();
        let mut table: Vec<Sparse<F>> = Vec::with_capacity(d * d);
        for x in &maps {
            for y in &maps {
                let c = span.coords(y.mul(x).data()).expect("closed under composition");
                table.push(c.into_iter().enumerate().filter(|(_, v)| !f.is_zero(v)).collect());
            }
        }
        let unit = if d == 0 { Vec::new() } else { span.coords(Matrix::identity(f, rows).data()).expect("identity in span") };
        let labels = (0..d).map(|i| format!("{prefix}{i}")).collect();
        MapAlgebra { algebra: Algebra::from_sparse(f, labels, table, unit), maps, span }
    }

    /// Coordinates of a map in the basis.
    pub fn coords(&self, m: &Matrix<F>) -> Option<Vector<F>> {
        self.span.coords(m.data())
    }

    pub fn map_of(&self, x: &[F::Elem]) -> Matrix<F> {
        let (r, c) = (self.maps[0].rows(), self.maps[0].cols());
        Matrix::combination(self.algebra.field(), r, c, x, &self.maps)
    }
}

/// `End_A(M)` with left-to-right composition.
pub fn end_algebra<F: Field>(m: &Module<F>) -> MapAlgebra<F> {
    MapAlgebra::new(m.field(), hom_basis(m, m), "h")
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::sync::Arc;
    use crate::field::Rationals;

    #[test]
    fn homs_over_truncated_polynomials() {
        let f = Rationals;
        let a = Arc::new(Algebra::truncated_polynomial(&f, 3));
        let reg = Module::regular(&a);
        let (x, _) = reg.quotient(&reg.radical().unwrap());
        let y_sub = vec![a.basis_element(2)];
        let (y, _) = reg.quotient(&y_sub);
        assert_eq!(hom_basis(&reg, &reg).len(), 3);
        assert_eq!(hom_basis(&reg, &x).len(), 1);
        assert_eq!(hom_basis(&y, &reg).len(), 2);
        for h in hom_basis(&y, &reg) {
            assert!(is_module_hom(&y, &reg, &h));
        }
    }

    #[test]
    fn end_of_regular_is_the_algebra() {
        let f = Rationals;
        let a = Arc::new(Algebra::truncated_polynomial(&f, 3));
        let e = end_algebra(&Module::regular(&a));
        e.algebra.check().unwrap();
        assert_eq!(e.algebra.dim(), 3);
        assert!(e.algebra.is_commutative());
    }
}
