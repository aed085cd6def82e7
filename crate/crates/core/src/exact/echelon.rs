//! Incrementally maintained row spaces.
//!
//! [`Echelon`] keeps a subspace of `F^n` as rows in fully reduced echelon form,
//! so membership, reduction and quotient coordinates are single passes.
//! [`Span`] additionally remembers a user-supplied basis and returns
//! coordinates with respect to it.

use super::matrix::{vecops, Vector};
use crate::field::Field;

#[derive(Clone, Debug)]
pub struct Echelon<F: Field> {
    field: F,
    cols: usize,
    rows: Vec<Vector<F>>,
    pivots: Vec<usize>,
    pivot_row: Vec<Option<usize>>,
}

impl<F: Field> Echelon<F> {
    pub fn new(field: &F, cols: usize) -> Self {
        Echelon { field: field.clone(), cols, rows: Vec::new(), pivots: Vec::new(), pivot_row: vec![None; cols] }
    }

    pub fn from_vectors<'a>(field: &F, cols: usize, vs: impl IntoIterator<Item = &'a Vector<F>>) -> Self
    where
        F: 'a,
    {
        let mut e = Self::new(field, cols);
        for v in vs {
            e.insert(v.clone());
        }
        e
    }

    pub fn cols(&self) -> usize {
        self.cols
    }
    pub fn rank(&self) -> usize {
        self.rows.len()
    }
    pub fn rows(&self) -> &[Vector<F>] {
        &self.rows
    }
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }
    pub fn is_full(&self) -> bool {
        self.rows.len() == self.cols
    }

    /// Subtracts pivot rows so that `v` vanishes at every pivot column.
    pub fn reduce(&self, v: &mut [F::Elem]) {
        let f = &self.field;
        for (row, &pc) in self.rows.iter().zip(&self.pivots) {
            if f.is_zero(&v[pc]) {
                continue;
            }
            let c = v[pc].clone();
            for (x, r) in v.iter_mut().zip(row) {
                if !f.is_zero(r) {
                    f.sub_mul(x, &c, r);
                }
            }
        }
    }

    pub fn contains(&self, v: &[F::Elem]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        vecops::is_zero(&self.field, &w)
    }

    /// Adds `v` to the space; returns `false` when it was already contained.
    pub fn insert(&mut self, mut v: Vector<F>) -> bool {
        assert_eq!(v.len(), self.cols, "vector length");
        self.reduce(&mut v);
        self.insert_reduced(v)
    }

    fn insert_reduced(&mut self, mut v: Vector<F>) -> bool {
        let f = self.field.clone();
        let Some(pc) = v.iter().position(|x| !f.is_zero(x)) else {
            return false;
        };
        let inv = f.inv(&v[pc]).expect("nonzero");
        for x in v.iter_mut() {
            if !f.is_zero(x) {
                *x = f.mul(x, &inv);
            }
        }
        for row in self.rows.iter_mut() {
            if f.is_zero(&row[pc]) {
                continue;
            }
            let c = row[pc].clone();
            for (x, r) in row.iter_mut().zip(&v) {
                if !f.is_zero(r) {
                    f.sub_mul(x, &c, r);
                }
            }
        }
        self.pivot_row[pc] = Some(self.rows.len());
        self.rows.push(v);
        self.pivots.push(pc);
        true
    }

    /// Coefficients expressing `v` in the echelon rows, if `v` lies in the span.
    pub fn row_coords(&self, v: &[F::Elem]) -> Option<Vector<F>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&pc| v[pc].clone()).collect())
    }

    /// Columns that carry no pivot; classes of the corresponding unit vectors
    /// form a basis of the quotient `F^n / self`.
    pub fn free_columns(&self) -> Vec<usize> {
        (0..self.cols).filter(|&c| self.pivot_row[c].is_none()).collect()
    }

    /// Basis of the orthogonal complement `{x : r·x = 0 for every row r}`,
    /// i.e. the kernel of the matrix whose rows span this space.
    pub fn kernel_basis(&self) -> Vec<Vector<F>> {
        let f = &self.field;
        self.free_columns()
            .into_iter()
            .map(|c| {
                let mut v = vecops::unit(f, self.cols, c);
                for (row, &pc) in self.rows.iter().zip(&self.pivots) {
                    v[pc] = f.neg(&row[c]);
                }
                v
            })
            .collect()
    }

    /// Coordinates of the class of `v` in `F^n / self`, with respect to the
    /// basis given by [`Echelon::free_columns`].
    pub fn quotient_coords(&self, v: &[F::Elem]) -> Vector<F> {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        self.free_columns().into_iter().map(|c| w[c].clone()).collect()
    }
}

/// A subspace with a distinguished (not necessarily echelon) basis.
#[derive(Clone, Debug)]
pub struct Span<F: Field> {
    field: F,
    dim: usize,
    basis: Vec<Vector<F>>,
    // Reduced rows; `combos[i]` expresses `rows[i]` in `basis`.
    rows: Vec<Vector<F>>,
    combos: Vec<Vector<F>>,
    pivots: Vec<usize>,
}

impl<F: Field> Span<F> {
    pub fn new(field: &F, dim: usize) -> Self {
        Span { field: field.clone(), dim, basis: Vec::new(), rows: Vec::new(), combos: Vec::new(), pivots: Vec::new() }
    }

    /// Builds a span from vectors, keeping only those independent of earlier ones.
    pub fn from_vectors(field: &F, dim: usize, vs: impl IntoIterator<Item = Vector<F>>) -> Self {
        let mut s = Self::new(field, dim);
        for v in vs {
            s.push(v);
        }
        s
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }
    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }
    pub fn basis(&self) -> &[Vector<F>] {
        &self.basis
    }
    pub fn into_basis(self) -> Vec<Vector<F>> {
        self.basis
    }
    pub fn ambient_dim(&self) -> usize {
        self.dim
    }
    pub fn echelon(&self) -> Echelon<F> {
        Echelon::from_vectors(&self.field, self.dim, self.basis.iter())
    }

    /// Reduces `v` against the rows; returns the remainder and the
    /// combination of basis vectors that was subtracted.
    fn reduce(&self, v: &[F::Elem]) -> (Vector<F>, Vector<F>) {
        let f = &self.field;
        let mut w = v.to_vec();
        let mut comb = vecops::zero(f, self.basis.len());
        for ((row, combo), &pc) in self.rows.iter().zip(&self.combos).zip(&self.pivots) {
            if f.is_zero(&w[pc]) {
                continue;
            }
            let c = w[pc].clone();
            for (x, r) in w.iter_mut().zip(row) {
                if !f.is_zero(r) {
                    f.sub_mul(x, &c, r);
                }
            }
            for (x, r) in comb.iter_mut().zip(combo) {
                if !f.is_zero(r) {
                    f.add_mul(x, &c, r);
                }
            }
        }
        (w, comb)
    }

    /// Appends `v` to the basis if independent; returns whether it was added.
    pub fn push(&mut self, v: Vector<F>) -> bool {
        assert_eq!(v.len(), self.dim, "vector length");
        let f = self.field.clone();
        let (mut w, sub) = self.reduce(&v);
        let Some(pc) = w.iter().position(|x| !f.is_zero(x)) else {
            return false;
        };
        let m = self.basis.len();
        for c in self.combos.iter_mut() {
            c.push(f.zero());
        }
        // w = v - Σ sub_k b_k
        let mut comb: Vector<F> = sub.iter().map(|x| f.neg(x)).collect();
        comb.push(f.one());
        let inv = f.inv(&w[pc]).expect("nonzero");
        for x in w.iter_mut() {
            *x = f.mul(x, &inv);
        }
        for x in comb.iter_mut() {
            *x = f.mul(x, &inv);
        }
        for (row, combo) in self.rows.iter_mut().zip(self.combos.iter_mut()) {
            if f.is_zero(&row[pc]) {
                continue;
            }
            let c = row[pc].clone();
            for (x, r) in row.iter_mut().zip(&w) {
                if !f.is_zero(r) {
                    f.sub_mul(x, &c, r);
                }
            }
            for (x, r) in combo.iter_mut().zip(&comb) {
                if !f.is_zero(r) {
                    f.sub_mul(x, &c, r);
                }
            }
        }
        debug_assert_eq!(comb.len(), m + 1);
        self.rows.push(w);
        self.combos.push(comb);
        self.pivots.push(pc);
        self.basis.push(v);
        true
    }

    pub fn contains(&self, v: &[F::Elem]) -> bool {
        vecops::is_zero(&self.field, &self.reduce(v).0)
    }

    /// Coordinates of `v` in the distinguished basis.
    pub fn coords(&self, v: &[F::Elem]) -> Option<Vector<F>> {
        let (w, comb) = self.reduce(v);
        vecops::is_zero(&self.field, &w).then_some(comb)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};

    #[test]
    fn span_coordinates_are_in_given_basis() {
        let f = Rationals;
        let v = |xs: &[i64]| xs.iter().map(|&x| f.from_i64(x)).collect::<Vec<_>>();
        let s = Span::from_vectors(&f, 3, vec![v(&[1, 1, 0]), v(&[0, 1, 1]), v(&[1, 2, 1])]);
        assert_eq!(s.len(), 2);
        assert_eq!(s.coords(&v(&[2, 5, 3])), Some(v(&[2, 3])));
        assert_eq!(s.coords(&v(&[1, 0, 0])), None);
    }

    #[test]
    fn quotient_coordinates() {
        let f = PrimeField::new(5).unwrap();
        let mut e = Echelon::new(&f, 3);
        e.insert(vec![1, 1, 0]);
        assert_eq!(e.free_columns(), vec![1, 2]);
        // (1,0,0) ≡ -(0,1,0) modulo (1,1,0)
        assert_eq!(e.quotient_coords(&[1, 0, 0]), vec![4, 0]);
        assert!(!e.insert(vec![2, 2, 0]));
        assert_eq!(e.rank(), 1);
        for k in e.kernel_basis() {
            assert_eq!((k[0] + k[1]) % 5, 0);
        }
        assert_eq!(e.kernel_basis().len(), 2);
    }
}
