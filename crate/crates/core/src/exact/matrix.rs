use std::fmt;

use crate::error::{Error, Result};
use crate::field::Field;

/// Dense column vector over a field.
pub type Vector<F> = Vec<<F as Field>::Elem>;

/// Dense row-major matrix over an exact field. Matrices act on column
/// vectors: `v ↦ M v`.
#[derive(Clone, PartialEq)]
pub struct Matrix<F: Field> {
    field: F,
    rows: usize,
    cols: usize,
    data: Vec<F::Elem>,
}

impl<F: Field> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over {}", self.rows, self.cols, self.field.name())?;
        for r in 0..self.rows {
            let row: Vec<String> = self
                .row(r)
                .iter()
                .map(|x| self.field.to_scalar(x).to_string())
                .collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl<F: Field> Matrix<F> {
    pub fn new(field: &F, rows: usize, cols: usize, data: Vec<F::Elem>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::ShapeMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(Matrix { field: field.clone(), rows, cols, data })
    }

    pub fn zeros(field: &F, rows: usize, cols: usize) -> Self {
        Matrix { field: field.clone(), rows, cols, data: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: &F, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = field.one();
        }
        m
    }

    pub fn from_fn(field: &F, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> F::Elem) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { field: field.clone(), rows, cols, data }
    }

    pub fn from_rows(field: &F, rows: &[Vector<F>]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::ShapeMismatch("ragged rows".into()));
        }
        let data = rows.iter().flat_map(|r| r.iter().cloned()).collect();
        Ok(Matrix { field: field.clone(), rows: rows.len(), cols, data })
    }

    /// Matrix whose columns are the given vectors, all of length `rows`.
    pub fn from_columns(field: &F, rows: usize, columns: &[Vector<F>]) -> Self {
        let cols = columns.len();
        let mut m = Self::zeros(field, rows, cols);
        for (c, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length");
            for (r, x) in col.iter().enumerate() {
                m.data[r * cols + c] = x.clone();
            }
        }
        m
    }

    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }
    pub fn data(&self) -> &[F::Elem] {
        &self.data
    }
    pub fn into_data(self) -> Vec<F::Elem> {
        self.data
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> &F::Elem {
        &self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: F::Elem) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[F::Elem] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vector<F> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vector<F>> {
        (0..self.cols).map(|c| self.column(c)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| self.field.is_zero(x))
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|r| {
                (0..self.cols).all(|c| {
                    let x = self.get(r, c);
                    if r == c {
                        self.field.is_one(x)
                    } else {
                        self.field.is_zero(x)
                    }
                })
            })
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(&self.field, self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "matrix product shape");
        let f = &self.field;
        let mut out = Self::zeros(f, self.rows, other.cols);
        let oc = other.cols;
        for r in 0..self.rows {
            let dst = &mut out.data[r * oc..(r + 1) * oc];
            for k in 0..self.cols {
                let a = &self.data[r * self.cols + k];
                if f.is_zero(a) {
                    continue;
                }
                let src = &other.data[k * oc..(k + 1) * oc];
                for (d, b) in dst.iter_mut().zip(src) {
                    if !f.is_zero(b) {
                        f.add_mul(d, a, b);
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[F::Elem]) -> Vector<F> {
        assert_eq!(self.cols, v.len(), "matrix-vector shape");
        let f = &self.field;
        (0..self.rows)
            .map(|r| {
                let mut acc = f.zero();
                for (a, b) in self.row(r).iter().zip(v) {
                    if !f.is_zero(a) && !f.is_zero(b) {
                        f.add_mul(&mut acc, a, b);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| self.field.add(a, b)).collect();
        Matrix { field: self.field.clone(), rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| self.field.sub(a, b)).collect();
        Matrix { field: self.field.clone(), rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, s: &F::Elem) -> Self {
        let data = self.data.iter().map(|a| self.field.mul(a, s)).collect();
        Matrix { field: self.field.clone(), rows: self.rows, cols: self.cols, data }
    }

    pub fn neg(&self) -> Self {
        let data = self.data.iter().map(|a| self.field.neg(a)).collect();
        Matrix { field: self.field.clone(), rows: self.rows, cols: self.cols, data }
    }

    /// `self += s * other`
    pub fn add_scaled(&mut self, s: &F::Elem, other: &Self) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        if self.field.is_zero(s) {
            return;
        }
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            if !self.field.is_zero(b) {
                self.field.add_mul(a, s, b);
            }
        }
    }

    /// Linear combination `Σ cᵢ Mᵢ` of equally shaped matrices.
    pub fn combination(field: &F, rows: usize, cols: usize, coeffs: &[F::Elem], mats: &[Self]) -> Self {
        let mut out = Self::zeros(field, rows, cols);
        for (c, m) in coeffs.iter().zip(mats) {
            out.add_scaled(c, m);
        }
        out
    }

    pub fn hstack(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows);
        Self::from_fn(&self.field, self.rows, self.cols + other.cols, |r, c| {
            if c < self.cols {
                self.get(r, c).clone()
            } else {
                other.get(r, c - self.cols).clone()
            }
        })
    }

    pub fn vstack(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Matrix { field: self.field.clone(), rows: self.rows + other.rows, cols: self.cols, data }
    }

    /// Block matrix from a grid of blocks; `row_sizes`/`col_sizes` fix the
    /// shape so missing (`None`) blocks are zero.
    pub fn from_blocks(field: &F, row_sizes: &[usize], col_sizes: &[usize], block: impl Fn(usize, usize) -> Option<Self>) -> Self {
        let rows: usize = row_sizes.iter().sum();
        let cols: usize = col_sizes.iter().sum();
        let mut out = Self::zeros(field, rows, cols);
        let mut r0 = 0;
        for (bi, &rs) in row_sizes.iter().enumerate() {
            let mut c0 = 0;
            for (bj, &cs) in col_sizes.iter().enumerate() {
                if let Some(b) = block(bi, bj) {
                    assert_eq!((b.rows, b.cols), (rs, cs), "block shape");
                    for r in 0..rs {
                        for c in 0..cs {
                            out.data[(r0 + r) * cols + c0 + c] = b.get(r, c).clone();
                        }
                    }
                }
                c0 += cs;
            }
            r0 += rs;
        }
        out
    }

    pub fn block_diag(field: &F, blocks: &[Self]) -> Self {
        let rs: Vec<usize> = blocks.iter().map(|b| b.rows).collect();
        let cs: Vec<usize> = blocks.iter().map(|b| b.cols).collect();
        Self::from_blocks(field, &rs, &cs, |i, j| if i == j { Some(blocks[i].clone()) } else { None })
    }

    pub fn submatrix(&self, r0: usize, rows: usize, c0: usize, cols: usize) -> Self {
        Self::from_fn(&self.field, rows, cols, |r, c| self.get(r0 + r, c0 + c).clone())
    }

    /// Reduced row echelon form. Pivots are chosen as the first nonzero entry
    /// of the lowest-indexed remaining row, scanning columns left to right.
    pub fn rref(&self) -> (Self, Vec<usize>, usize) {
        let f = &self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut prow = 0;
        for c in 0..m.cols {
            if prow == m.rows {
                break;
            }
            let Some(r) = (prow..m.rows).find(|&r| !f.is_zero(m.get(r, c))) else {
                continue;
            };
            m.swap_rows(prow, r);
            let inv = f.inv(m.get(prow, c)).expect("nonzero pivot");
            for j in c..m.cols {
                let v = f.mul(m.get(prow, j), &inv);
                m.set(prow, j, v);
            }
            let pivot_row: Vec<F::Elem> = m.row(prow).to_vec();
            for r2 in 0..m.rows {
                if r2 == prow {
                    continue;
                }
                let factor = m.get(r2, c).clone();
                if f.is_zero(&factor) {
                    continue;
                }
                let cols = m.cols;
                let row = &mut m.data[r2 * cols..(r2 + 1) * cols];
                for j in c..cols {
                    if !f.is_zero(&pivot_row[j]) {
                        f.sub_mul(&mut row[j], &factor, &pivot_row[j]);
                    }
                }
            }
            pivots.push(c);
            prow += 1;
        }
        let rank = pivots.len();
        (m, pivots, rank)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().2
    }

    /// Basis of the right null space `{x : M x = 0}`, one vector per free column.
    pub fn kernel_basis(&self) -> Vec<Vector<F>> {
        let f = &self.field;
        let (r, pivots, rank) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![f.zero(); self.cols];
            v[free] = f.one();
            for (row, &pc) in pivots.iter().enumerate().take(rank) {
                v[pc] = f.neg(r.get(row, free));
            }
            basis.push(v);
        }
        basis
    }

    /// Some solution of `M x = b` with free variables set to zero, or `None`.
    pub fn solve(&self, b: &[F::Elem]) -> Option<Vector<F>> {
        assert_eq!(b.len(), self.rows, "right-hand side length");
        let f = &self.field;
        let bcol = Matrix::from_columns(f, self.rows, &[b.to_vec()]);
        let aug = self.hstack(&bcol);
        let (r, pivots, _) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![f.zero(); self.cols];
        for (row, &pc) in pivots.iter().enumerate() {
            x[pc] = r.get(row, self.cols).clone();
        }
        Some(x)
    }

    pub fn det(&self) -> F::Elem {
        assert_eq!(self.rows, self.cols, "determinant of non-square matrix");
        let f = &self.field;
        let n = self.rows;
        let mut m = self.clone();
        let mut det = f.one();
        for c in 0..n {
            let Some(r) = (c..n).find(|&r| !f.is_zero(m.get(r, c))) else {
                return f.zero();
            };
            if r != c {
                m.swap_rows(r, c);
                det = f.neg(&det);
            }
            let piv = m.get(c, c).clone();
            det = f.mul(&det, &piv);
            let inv = f.inv(&piv).expect("nonzero pivot");
            for r2 in c + 1..n {
                let factor = f.mul(m.get(r2, c), &inv);
                if f.is_zero(&factor) {
                    continue;
                }
                for j in c..n {
                    let v = m.get(c, j).clone();
                    let mut x = m.get(r2, j).clone();
                    f.sub_mul(&mut x, &factor, &v);
                    m.set(r2, j, x);
                }
            }
        }
        det
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }

    pub fn inverse(&self) -> Option<Self> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let aug = self.hstack(&Self::identity(&self.field, n));
        let (r, pivots, _) = aug.rref();
        if pivots.len() < n || (n > 0 && pivots[n - 1] != n - 1) {
            return None;
        }
        Some(r.submatrix(0, n, n, n))
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::identity(&self.field, self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }
}

/// Small helpers on plain vectors.
pub mod vecops {
    use super::Vector;
    use crate::field::Field;

    pub fn zero<F: Field>(f: &F, n: usize) -> Vector<F> {
        vec![f.zero(); n]
    }

    pub fn unit<F: Field>(f: &F, n: usize, i: usize) -> Vector<F> {
        let mut v = vec![f.zero(); n];
        v[i] = f.one();
        v
    }

    pub fn is_zero<F: Field>(f: &F, v: &[F::Elem]) -> bool {
        v.iter().all(|x| f.is_zero(x))
    }

    pub fn add<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Vector<F> {
        a.iter().zip(b).map(|(x, y)| f.add(x, y)).collect()
    }

    pub fn sub<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Vector<F> {
        a.iter().zip(b).map(|(x, y)| f.sub(x, y)).collect()
    }

    pub fn scale<F: Field>(f: &F, s: &F::Elem, a: &[F::Elem]) -> Vector<F> {
        a.iter().map(|x| f.mul(s, x)).collect()
    }

    pub fn neg<F: Field>(f: &F, a: &[F::Elem]) -> Vector<F> {
        a.iter().map(|x| f.neg(x)).collect()
    }

    /// `acc += s * v`
    pub fn axpy<F: Field>(f: &F, acc: &mut [F::Elem], s: &F::Elem, v: &[F::Elem]) {
        if f.is_zero(s) {
            return;
        }
        for (a, x) in acc.iter_mut().zip(v) {
            if !f.is_zero(x) {
                f.add_mul(a, s, x);
            }
        }
    }

    pub fn combination<F: Field>(f: &F, n: usize, coeffs: &[F::Elem], vecs: &[Vector<F>]) -> Vector<F> {
        let mut out = zero(f, n);
        for (c, v) in coeffs.iter().zip(vecs) {
            axpy(f, &mut out, c, v);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};

    fn q(rows: &[&[i64]]) -> Matrix<Rationals> {
        let f = Rationals;
        let rows: Vec<Vec<_>> = rows.iter().map(|r| r.iter().map(|&x| f.from_i64(x)).collect()).collect();
        Matrix::from_rows(&f, &rows).unwrap()
    }

    #[test]
    fn rref_identity_is_fixed_point() {
        let id = Matrix::identity(&Rationals, 3);
        let (r, piv, rank) = id.rref();
        assert_eq!(r, id);
        assert_eq!(piv, vec![0, 1, 2]);
        assert_eq!(rank, 3);
    }

    #[test]
    fn rref_zero_and_proportional() {
        let z = Matrix::zeros(&Rationals, 2, 2);
        assert_eq!(z.rref().2, 0);
        assert_eq!(z.rref().0, z);
        let m = q(&[&[1, 2], &[2, 4]]);
        let (r, _, rank) = m.rref();
        assert_eq!(r, q(&[&[1, 2], &[0, 0]]));
        assert_eq!(rank, 1);
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(Matrix::zeros(&Rationals, 2, 2).kernel_basis().len(), 2);
        assert!(Matrix::identity(&Rationals, 3).kernel_basis().is_empty());
        let f2 = PrimeField::new(2).unwrap();
        let m = Matrix::from_rows(&f2, &[vec![1, 1]]).unwrap();
        assert_eq!(m.kernel_basis(), vec![vec![1, 1]]);
    }

    #[test]
    fn solve_examples() {
        let f = Rationals;
        let id = Matrix::identity(&f, 2);
        let b = vec![f.from_i64(3), f.from_i64(-1)];
        assert_eq!(id.solve(&b), Some(b.clone()));
        assert_eq!(Matrix::zeros(&f, 2, 2).solve(&b), None);
        let two = q(&[&[2]]);
        let x = two.solve(&[f.one()]).unwrap();
        assert_eq!(x[0], f.div(&f.one(), &f.from_i64(2)).unwrap());
    }

    #[test]
    fn det_and_inverse() {
        let m = q(&[&[3, 1], &[1, 1]]);
        assert_eq!(m.det(), Rationals.from_i64(2));
        let inv = m.inverse().unwrap();
        assert!(m.mul(&inv).is_identity());
        assert!(q(&[&[1, 2], &[2, 4]]).inverse().is_none());
    }
}
