//! Tensor products over an algebra as quotients of `M ⊗_k N`, the bimodule
//! `Ae ⊗_{eAe} eA`, and Tor.

use std::sync::Arc;

use crate::algebra::{Algebra, Corner};
use crate::error::Result;
use crate::exact::{vecops, Echelon, Matrix, Span, Vector};
use crate::field::Field;

use super::module::{Bimodule, Module};
use super::resolution::minimal_projective_resolution;

/// `M ⊗_Λ N = (M ⊗_k N) / span{ m·g ⊗ n − m ⊗ g·n }`. The basis of the
/// quotient is given by the pure tensors on the free columns.
#[derive(Clone, Debug)]
pub struct TensorQuotient<F: Field> {
    field: F,
    pub m_dim: usize,
    pub n_dim: usize,
    relations: Echelon<F>,
    free: Vec<usize>,
}

impl<F: Field> TensorQuotient<F> {
    /// `pairs[g] = (R_g on M, L_g on N)` for generators `g` of `Λ`.
    pub fn new(f: &F, m_dim: usize, n_dim: usize, pairs: &[(Matrix<F>, Matrix<F>)]) -> Self {
        let mut relations = Echelon::new(f, m_dim * n_dim);
        for (r, l) in pairs {
            for i in 0..m_dim {
                let ri = r.column(i);
                for j in 0..n_dim {
                    let mut v = kron(f, &ri, &vecops::unit(f, n_dim, j));
                    let w = kron(f, &vecops::unit(f, m_dim, i), &l.column(j));
                    for (a, b) in v.iter_mut().zip(&w) {
                        *a = f.sub(a, b);
                    }
                    relations.insert(v);
                }
            }
        }
        let free = relations.free_columns();
        TensorQuotient { field: f.clone(), m_dim, n_dim, relations, free }
    }

    pub fn dim(&self) -> usize {
        self.free.len()
    }

    /// `(i, j)` such that the `k`-th basis element is the class of `m_i ⊗ n_j`.
    pub fn basis_pairs(&self) -> Vec<(usize, usize)> {
        self.free.iter().map(|&c| (c / self.n_dim, c % self.n_dim)).collect()
    }

    pub fn class(&self, v: &[F::Elem]) -> Vector<F> {
        self.relations.quotient_coords(v)
    }

    pub fn pure(&self, x: &[F::Elem], y: &[F::Elem]) -> Vector<F> {
        self.class(&kron(&self.field, x, y))
    }

    /// Matrix of `φ ⊗ ψ` into `target`.
    pub fn induced(&self, target: &Self, phi: &Matrix<F>, psi: &Matrix<F>) -> Matrix<F> {
        let cols: Vec<Vector<F>> = self.basis_pairs().into_iter().map(|(i, j)| target.pure(&phi.column(i), &psi.column(j))).collect();
        Matrix::from_columns(&self.field, target.dim(), &cols)
    }
}

pub fn kron<F: Field>(f: &F, x: &[F::Elem], y: &[F::Elem]) -> Vector<F> {
    let mut out = Vec::with_capacity(x.len() * y.len());
    for a in x {
        for b in y {
            out.push(if f.is_zero(a) { f.zero() } else { f.mul(a, b) });
        }
    }
    out
}

/// `Δ₀ = Ae ⊗_Λ eA` with `Λ = eAe`, as an `A`-`A`-bimodule: `A` acts on the
/// left of the `Ae` slot and on the right of the `eA` slot.
#[derive(Clone, Debug)]
pub struct Delta<F: Field> {
    pub algebra: Arc<Algebra<F>>,
    pub e: Vector<F>,
    pub corner: Corner<F>,
    /// Basis of `Ae` inside `A`.
    pub ae: Vec<Vector<F>>,
    /// Basis of `eA` inside `A`.
    pub ea: Vec<Vector<F>>,
    ae_span: Span<F>,
    ea_span: Span<F>,
    pub tensor: TensorQuotient<F>,
    pub bimodule: Bimodule<F>,
}

impl<F: Field> Delta<F> {
    pub fn dim(&self) -> usize {
        self.tensor.dim()
    }

    /// Class of `x ⊗ y` for `x ∈ Ae`, `y ∈ eA`.
    pub fn pair(&self, x: &[F::Elem], y: &[F::Elem]) -> Vector<F> {
        let cx = self.ae_span.coords(x).expect("element of Ae");
        let cy = self.ea_span.coords(y).expect("element of eA");
        self.tensor.pure(&cx, &cy)
    }

    /// Representatives `(x, y)` of the quotient basis.
    pub fn basis_pairs(&self) -> Vec<(Vector<F>, Vector<F>)> {
        self.tensor.basis_pairs().into_iter().map(|(i, j)| (self.ae[i].clone(), self.ea[j].clone())).collect()
    }
}

/// Builds `Ae ⊗_{eAe} eA`.
pub fn tensor_over_corner<F: Field>(algebra: &Arc<Algebra<F>>, e: &[F::Elem]) -> Result<Delta<F>> {
    let a = algebra.as_ref();
    let f = a.field();
    let corner = a.corner(e)?;
    let ae_span = a.span_of(a.slice_basis(a.unit(), e));
    let ea_span = a.span_of(a.slice_basis(e, a.unit()));
    let ae = ae_span.basis().to_vec();
    let ea = ea_span.basis().to_vec();
    let on_ae = |g: &Vector<F>| {
        let cols: Vec<_> = ae.iter().map(|x| ae_span.coords(&a.multiply(x, g)).unwrap()).collect();
        Matrix::from_columns(f, ae.len(), &cols)
    };
    let on_ea = |g: &Vector<F>| {
        let cols: Vec<_> = ea.iter().map(|y| ea_span.coords(&a.multiply(g, y)).unwrap()).collect();
        Matrix::from_columns(f, ea.len(), &cols)
    };
    let pairs: Vec<_> = corner.algebra.generator_indices().iter().map(|&g| {
        let l = &corner.inclusion[g];
        (on_ae(l), on_ea(l))
    }).collect();
    let tensor = TensorQuotient::new(f, ae.len(), ea.len(), &pairs);
    let basis_pairs = tensor.basis_pairs();
    let left_action = (0..a.dim())
        .map(|k| {
            let b = a.basis_element(k);
            let cols: Vec<_> = basis_pairs.iter().map(|&(i, j)| tensor.pure(&ae_span.coords(&a.multiply(&b, &ae[i])).unwrap(), &vecops::unit(f, ea.len(), j))).collect();
            Matrix::from_columns(f, tensor.dim(), &cols)
        })
        .collect();
    let right_action = (0..a.dim())
        .map(|k| {
            let b = a.basis_element(k);
            let cols: Vec<_> = basis_pairs.iter().map(|&(i, j)| tensor.pure(&vecops::unit(f, ae.len(), i), &ea_span.coords(&a.multiply(&ea[j], &b)).unwrap())).collect();
            Matrix::from_columns(f, tensor.dim(), &cols)
        })
        .collect();
    let bimodule = Bimodule { left: algebra.clone(), right: algebra.clone(), dim: tensor.dim(), left_action, right_action };
    Ok(Delta { algebra: algebra.clone(), e: e.to_vec(), corner, ae, ea, ae_span, ea_span, tensor, bimodule })
}

/// `M ⊗_Λ N` for a right module `M` (a left module over `Λ^op`) and a left module `N`.
pub fn tensor_modules<F: Field>(m: &Module<F>, n: &Module<F>) -> TensorQuotient<F> {
    let gens = n.algebra().generator_indices();
    let pairs: Vec<_> = gens.iter().map(|&g| (m.basis_action(g).clone(), n.basis_action(g).clone())).collect();
    TensorQuotient::new(m.field(), m.dim(), n.dim(), &pairs)
}

/// `dim Tor_k^Λ(M, N)` for `k = 0..=nmax`, resolving the right module `M`
/// (given over `Λ^op`, sharing the basis of `Λ`).
pub fn tor_dims<F: Field>(m_right: &Module<F>, n_left: &Module<F>, nmax: usize) -> Result<Vec<usize>> {
    let f = n_left.field().clone();
    let res = minimal_projective_resolution(m_right, nmax + 1)?;
    let tensors: Vec<TensorQuotient<F>> = res.modules.iter().map(|p| tensor_modules(p, n_left)).collect();
    let id = Matrix::identity(&f, n_left.dim());
    // maps[k]: C_k → C_{k-1} for k ≥ 1
    let maps: Vec<Option<Matrix<F>>> = (0..tensors.len())
        .map(|k| (k >= 1).then(|| tensors[k].induced(&tensors[k - 1], &res.differentials[k - 1], &id)))
        .collect();
    Ok((0..=nmax)
        .map(|k| {
            if k >= tensors.len() {
                return 0;
            }
            let dim = tensors[k].dim();
            let kernel = match &maps[k] {
                Some(d) => dim - d.rank(),
                None => dim,
            };
            let image = maps.get(k + 1).and_then(|d| d.as_ref()).map_or(0, |d| d.rank());
            kernel - image
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};

    #[test]
    fn tensor_over_unit_is_algebra() {
        let f = Rationals;
        let a = Arc::new(Algebra::matrix_algebra(&f, 2));
        let d = tensor_over_corner(&a, a.unit()).unwrap();
        assert_eq!(d.dim(), 4);
        d.bimodule.check().unwrap();
        // x ⊗ y ↦ xy is an isomorphism onto A
        let prods: Vec<_> = d.basis_pairs().iter().map(|(x, y)| a.multiply(x, y)).collect();
        assert_eq!(a.span_of(prods).len(), 4);
    }

    #[test]
    fn tor_over_semisimple_vanishes() {
        let f = PrimeField::new(3).unwrap();
        let a = Arc::new(Algebra::split_semisimple(&f, 2));
        let op = Arc::new(a.opposite());
        let m = Module::regular(&op);
        let n = Module::regular(&a);
        assert_eq!(tor_dims(&m, &n, 3).unwrap(), vec![2, 0, 0, 0]);
    }

    #[test]
    fn tor_of_simples_over_truncated_polynomials() {
        let f = Rationals;
        let a = Arc::new(Algebra::truncated_polynomial(&f, 3));
        let op = Arc::new(a.opposite());
        let reg = Module::regular(&a);
        let (s, _) = reg.quotient(&reg.radical().unwrap());
        let regop = Module::regular(&op);
        let (sop, _) = regop.quotient(&regop.radical().unwrap());
        assert_eq!(tor_dims(&sop, &s, 4).unwrap(), vec![1, 1, 1, 1, 1]);
    }
}
