//! Matrices with entries in an algebra, used as maps between direct sums of
//! indecomposable projectives. A row vector `x` maps to `x · M`, so "first
//! `M`, then `N`" is the product `M · N`.

use crate::algebra::Algebra;
use crate::exact::{vecops, Vector};
use crate::field::Field;

#[derive(Clone, Debug, PartialEq)]
pub struct AMatrix<F: Field> {
    pub rows: usize,
    pub cols: usize,
    /// Row-major entries, each a coordinate vector over the algebra.
    pub entries: Vec<Vector<F>>,
}

impl<F: Field> AMatrix<F> {
    pub fn zeros(a: &Algebra<F>, rows: usize, cols: usize) -> Self {
        AMatrix { rows, cols, entries: vec![a.zero(); rows * cols] }
    }

    pub fn get(&self, r: usize, c: usize) -> &Vector<F> {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Vector<F>) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn mul(&self, a: &Algebra<F>, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "shape mismatch in algebra matrix product");
        let f = a.field();
        let mut out = AMatrix::zeros(a, self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let x = self.get(r, k);
                if vecops::is_zero(f, x) {
                    continue;
                }
                for c in 0..other.cols {
                    let y = other.get(k, c);
                    if vecops::is_zero(f, y) {
                        continue;
                    }
                    let p = a.multiply(x, y);
                    let e = &mut out.entries[r * other.cols + c];
                    *e = vecops::add(f, e, &p);
                }
            }
        }
        out
    }

    pub fn add(&self, f: &F, other: &Self) -> Self {
        AMatrix { rows: self.rows, cols: self.cols, entries: self.entries.iter().zip(&other.entries).map(|(x, y)| vecops::add(f, x, y)).collect() }
    }

    pub fn sub(&self, f: &F, other: &Self) -> Self {
        AMatrix { rows: self.rows, cols: self.cols, entries: self.entries.iter().zip(&other.entries).map(|(x, y)| vecops::sub(f, x, y)).collect() }
    }

    pub fn scale(&self, f: &F, s: &F::Elem) -> Self {
        AMatrix { rows: self.rows, cols: self.cols, entries: self.entries.iter().map(|x| vecops::scale(f, s, x)).collect() }
    }

    pub fn neg(&self, f: &F) -> Self {
        AMatrix { rows: self.rows, cols: self.cols, entries: self.entries.iter().map(|x| vecops::neg(f, x)).collect() }
    }

    pub fn transpose(&self) -> Self {
        let entries = (0..self.cols * self.rows).map(|i| self.get(i % self.rows, i / self.rows).clone()).collect();
        AMatrix { rows: self.cols, cols: self.rows, entries }
    }

    pub fn is_zero(&self, f: &F) -> bool {
        self.entries.iter().all(|x| vecops::is_zero(f, x))
    }

    /// Block matrix from a grid of blocks with the given row and column sizes.
    pub fn from_blocks(a: &Algebra<F>, row_sizes: &[usize], col_sizes: &[usize], block: impl Fn(usize, usize) -> Option<Self>) -> Self {
        let rows: usize = row_sizes.iter().sum();
        let cols: usize = col_sizes.iter().sum();
        let mut out = AMatrix::zeros(a, rows, cols);
        let mut r0 = 0;
        for (bi, &rs) in row_sizes.iter().enumerate() {
            let mut c0 = 0;
            for (bj, &cs) in col_sizes.iter().enumerate() {
                if let Some(b) = block(bi, bj) {
                    assert_eq!((b.rows, b.cols), (rs, cs), "block shape");
                    for r in 0..rs {
                        for c in 0..cs {
                            out.set(r0 + r, c0 + c, b.get(r, c).clone());
                        }
                    }
                }
                c0 += cs;
            }
            r0 += rs;
        }
        out
    }

    /// The diagonal matrix with the given entries.
    pub fn diagonal(a: &Algebra<F>, diag: &[Vector<F>]) -> Self {
        let n = diag.len();
        let mut out = AMatrix::zeros(a, n, n);
        for (i, d) in diag.iter().enumerate() {
            out.set(i, i, d.clone());
        }
        out
    }

    /// Submatrix on the given row and column ranges.
    pub fn block(&self, r0: usize, rows: usize, c0: usize, cols: usize) -> Self {
        let entries = (0..rows * cols).map(|i| self.get(r0 + i / cols, c0 + i % cols).clone()).collect();
        AMatrix { rows, cols, entries }
    }
}
