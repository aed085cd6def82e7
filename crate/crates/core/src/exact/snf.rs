//! Integer matrices and Smith normal form.

use std::fmt;

use crate::error::{Error, Result};

/// Dense integer matrix, row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i128>,
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<&[i128]> = (0..self.rows).map(|r| self.row(r)).collect();
        write!(f, "{rows:?}")
    }
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i128>]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::ShapeMismatch("ragged integer matrix".into()));
        }
        Ok(IntMatrix { rows: rows.len(), cols, data: rows.concat() })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> i128) -> Self {
        let data = (0..rows * cols).map(|k| f(k / cols, k % cols)).collect();
        IntMatrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }
    pub fn get(&self, r: usize, c: usize) -> i128 {
        self.data[r * self.cols + c]
    }
    pub fn set(&mut self, r: usize, c: usize, v: i128) {
        self.data[r * self.cols + c] = v;
    }
    pub fn row(&self, r: usize) -> &[i128] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }
    pub fn to_rows(&self) -> Vec<Vec<i128>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self.get(c, r))
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "integer matrix product shape");
        Self::from_fn(self.rows, other.cols, |r, c| (0..self.cols).map(|k| self.get(r, k) * other.get(k, c)).sum())
    }

    pub fn mul_vec(&self, v: &[i128]) -> Vec<i128> {
        (0..self.rows).map(|r| self.row(r).iter().zip(v).map(|(a, b)| a * b).sum()).collect()
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> i128 {
        assert_eq!(self.rows, self.cols, "determinant of non-square matrix");
        let n = self.rows;
        let mut a = self.clone();
        let mut sign = 1;
        let mut prev = 1i128;
        for k in 0..n {
            if a.get(k, k) == 0 {
                let Some(p) = (k + 1..n).find(|&r| a.get(r, k) != 0) else {
                    return 0;
                };
                a.swap_rows(k, p);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (a.get(i, j) * a.get(k, k) - a.get(i, k) * a.get(k, j)) / prev;
                    a.set(i, j, v);
                }
            }
            prev = a.get(k, k);
        }
        if n == 0 {
            1
        } else {
            sign * a.get(n - 1, n - 1)
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }
    fn swap_cols(&mut self, a: usize, b: usize) {
        for r in 0..self.rows {
            self.data.swap(r * self.cols + a, r * self.cols + b);
        }
    }
    // row a += k * row b
    fn add_row(&mut self, a: usize, b: usize, k: i128) {
        for c in 0..self.cols {
            let v = self.get(a, c) + k * self.get(b, c);
            self.set(a, c, v);
        }
    }
    fn add_col(&mut self, a: usize, b: usize, k: i128) {
        for r in 0..self.rows {
            let v = self.get(r, a) + k * self.get(r, b);
            self.set(r, a, v);
        }
    }
    fn negate_row(&mut self, a: usize) {
        for c in 0..self.cols {
            let v = -self.get(a, c);
            self.set(a, c, v);
        }
    }
}

/// `left * m * right == diag` with `diagonal` the invariant factors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Smith {
    pub diagonal: Vec<i128>,
    pub left: IntMatrix,
    pub right: IntMatrix,
    pub normal: IntMatrix,
}

impl Smith {
    pub fn rank(&self) -> usize {
        self.diagonal.iter().filter(|&&d| d != 0).count()
    }

    /// Checks the factorisation and the divisibility chain.
    pub fn verify(&self, m: &IntMatrix) -> bool {
        let prod = self.left.mul(m).mul(&self.right);
        let chain = self.diagonal.windows(2).all(|w| w[0] >= 0 && (w[0] == 0 && w[1] == 0 || w[0] != 0 && w[1] % w[0] == 0));
        prod == self.normal && chain && self.left.det().abs() == 1 && self.right.det().abs() == 1
    }
}

pub fn smith_normal_form(m: &IntMatrix) -> Smith {
    let (rows, cols) = (m.rows, m.cols);
    let mut a = m.clone();
    let mut left = IntMatrix::identity(rows);
    let mut right = IntMatrix::identity(cols);
    let n = rows.min(cols);
    let mut t = 0;
    while t < n {
        // smallest nonzero entry in the trailing block as pivot
        let pivot = (t..rows)
            .flat_map(|r| (t..cols).map(move |c| (r, c)))
            .filter(|&(r, c)| a.get(r, c) != 0)
            .min_by_key(|&(r, c)| (a.get(r, c).abs(), r, c));
        let Some((pr, pc)) = pivot else { break };
        a.swap_rows(t, pr);
        left.swap_rows(t, pr);
        a.swap_cols(t, pc);
        right.swap_cols(t, pc);
        let mut clean = true;
        for r in t + 1..rows {
            let q = a.get(r, t).div_euclid(a.get(t, t));
            if q != 0 {
                a.add_row(r, t, -q);
                left.add_row(r, t, -q);
            }
            if a.get(r, t) != 0 {
                clean = false;
            }
        }
        for c in t + 1..cols {
            let q = a.get(t, c).div_euclid(a.get(t, t));
            if q != 0 {
                a.add_col(c, t, -q);
                right.add_col(c, t, -q);
            }
            if a.get(t, c) != 0 {
                clean = false;
            }
        }
        if !clean {
            continue;
        }
        // the pivot must divide the rest of the block
        let bad = (t + 1..rows).flat_map(|r| (t + 1..cols).map(move |c| (r, c))).find(|&(r, c)| a.get(r, c) % a.get(t, t) != 0);
        if let Some((r, _)) = bad {
            a.add_row(t, r, 1);
            left.add_row(t, r, 1);
            continue;
        }
        if a.get(t, t) < 0 {
            a.negate_row(t);
            left.negate_row(t);
        }
        t += 1;
    }
    let diagonal = (0..n).map(|i| a.get(i, i)).collect();
    Smith { diagonal, left, right, normal: a }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn snf(rows: &[Vec<i128>]) -> Vec<i128> {
        let m = IntMatrix::from_rows(rows).unwrap();
        let s = smith_normal_form(&m);
        assert!(s.verify(&m), "{s:?}");
        s.diagonal
    }

    #[test]
    fn small_examples() {
        assert_eq!(snf(&[vec![1, 0], vec![0, 1]]), vec![1, 1]);
        assert_eq!(snf(&[vec![2, 0], vec![0, 3]]), vec![1, 6]);
        assert_eq!(snf(&[vec![3, 1], vec![1, 1]]), vec![1, 2]);
        assert_eq!(snf(&[vec![0, 0], vec![0, 0]]), vec![0, 0]);
        assert_eq!(snf(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]), vec![2, 6, 12]);
    }

    #[test]
    fn rectangular() {
        assert_eq!(snf(&[vec![2, 4, 6]]), vec![2]);
        assert_eq!(snf(&[vec![4], vec![6]]), vec![2]);
    }

    #[test]
    fn det_bareiss() {
        let m = IntMatrix::from_rows(&[vec![3, 1], vec![1, 1]]).unwrap();
        assert_eq!(m.det(), 2);
        let m = IntMatrix::from_rows(&[vec![0, 1, 2], vec![1, 0, 3], vec![4, -3, 8]]).unwrap();
        assert_eq!(m.det(), -2);
    }
}
