//! Symmetric algebra test.
//!
//! Associative forms are exactly `⟨a, b⟩ = t(ab)` for a linear functional `t`;
//! the form is symmetric iff `t` kills commutators. What remains is to find a
//! `t` in that linear space whose Gram matrix is invertible.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::Algebra;
use crate::exact::{Matrix, Vector};
use crate::field::Field;

const EXHAUSTIVE_LIMIT: u64 = 1 << 16;
const RANDOM_TRIALS: usize = 64;

#[derive(Clone, Debug, PartialEq)]
pub enum SymmetricVerdict<F: Field> {
    /// Gram matrix `⟨b_i, b_j⟩` of a nondegenerate symmetric associative form.
    Symmetric(Matrix<F>),
    /// Every associative symmetric form is degenerate (checked exhaustively).
    NotSymmetric,
    Inconclusive,
}

impl<F: Field> SymmetricVerdict<F> {
    pub fn is_symmetric(&self) -> bool {
        matches!(self, SymmetricVerdict::Symmetric(_))
    }
}

pub(super) fn is_symmetric<F: Field>(a: &Algebra<F>) -> SymmetricVerdict<F> {
    let f = a.field();
    let n = a.dim();
    let mut rows = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let c = a.commutator(&a.basis_element(i), &a.basis_element(j));
            if !a.is_zero(&c) {
                rows.push(c);
            }
        }
    }
    let functionals = if rows.is_empty() { a.basis() } else { Matrix::from_rows(f, &rows).expect("rectangular").kernel_basis() };
    let m = functionals.len();
    if m == 0 {
        return SymmetricVerdict::NotSymmetric;
    }
    let products: Vec<Vector<F>> = (0..n * n).map(|k| a.basis_product_vec(k / n, k % n)).collect();
    let gram = |coeffs: &[F::Elem]| {
        let mut t = a.zero();
        for (c, v) in coeffs.iter().zip(&functionals) {
            crate::exact::vecops::axpy(f, &mut t, c, v);
        }
        Matrix::from_fn(f, n, n, |i, j| {
            let mut acc = f.zero();
            for (x, y) in products[i * n + j].iter().zip(&t) {
                f.add_mul(&mut acc, x, y);
            }
            acc
        })
    };
    let mut rng = ChaCha8Rng::seed_from_u64(0xA1B2);
    // small side: grid of size q^m (F_q) or (n+1)^m (Q, exact since det has degree ≤ n per variable)
    let side = f.order().unwrap_or(n as u64 + 1);
    let grid = side.checked_pow(m as u32).filter(|&g| g <= EXHAUSTIVE_LIMIT);
    for _ in 0..RANDOM_TRIALS {
        let c: Vec<F::Elem> = (0..m).map(|_| f.random(&mut rng)).collect();
        let g = gram(&c);
        if g.is_invertible() {
            return SymmetricVerdict::Symmetric(g);
        }
    }
    let Some(total) = grid else {
        return SymmetricVerdict::Inconclusive;
    };
    for idx in 0..total {
        let mut k = idx;
        let c: Vec<F::Elem> = (0..m)
            .map(|_| {
                let d = k % side;
                k /= side;
                f.from_i64(d as i64)
            })
            .collect();
        let g = gram(&c);
        if g.is_invertible() {
            return SymmetricVerdict::Symmetric(g);
        }
    }
    SymmetricVerdict::NotSymmetric
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};

    #[test]
    fn truncated_polynomial_is_symmetric() {
        let f = Rationals;
        let a = Algebra::truncated_polynomial(&f, 3);
        let SymmetricVerdict::Symmetric(g) = a.is_symmetric() else { panic!("expected a form") };
        // the witness pairs x^i with x^j only when i + j ≤ 2 and is invertible
        assert!(g.is_invertible());
        assert!(f.is_zero(g.get(1, 2)) && f.is_zero(g.get(2, 2)));
    }

    #[test]
    fn matrix_algebra_is_symmetric() {
        let f = PrimeField::new(3).unwrap();
        assert!(Algebra::matrix_algebra(&f, 2).is_symmetric().is_symmetric());
    }
}
