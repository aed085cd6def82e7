//! Finite-dimensional unital algebras given by structure constants.

mod structure;
mod symmetric;

use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::exact::{smith_normal_form, vecops, Echelon, IntMatrix, Matrix, Smith, Span, Vector};
use crate::field::Field;

pub use structure::Structure;
pub use symmetric::SymmetricVerdict;

/// Sparse coordinate vector: `(basis index, coefficient)` with nonzero coefficients.
pub type Sparse<F> = Vec<(usize, <F as Field>::Elem)>;

#[derive(Clone)]
pub struct Algebra<F: Field> {
    field: F,
    labels: Vec<String>,
    table: Vec<Sparse<F>>,
    unit: Vector<F>,
    structure: OnceLock<Result<Arc<Structure<F>>>>,
    generators: OnceLock<Vec<usize>>,
}

impl<F: Field> fmt::Debug for Algebra<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Algebra").field("field", &self.field).field("dim", &self.dim()).field("labels", &self.labels).finish()
    }
}

impl<F: Field> PartialEq for Algebra<F> {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.table == other.table && self.unit == other.unit
    }
}

fn sparsify<F: Field>(f: &F, v: &[F::Elem]) -> Sparse<F> {
    v.iter().enumerate().filter(|(_, x)| !f.is_zero(x)).map(|(i, x)| (i, x.clone())).collect()
}

impl<F: Field> Algebra<F> {
    /// `products[i * dim + j]` holds the coordinates of `b_i b_j`.
    pub fn new(field: &F, labels: Vec<String>, products: Vec<Vector<F>>, unit: Vector<F>) -> Result<Self> {
        let n = labels.len();
        if products.len() != n * n || products.iter().any(|p| p.len() != n) || unit.len() != n {
            return Err(Error::ShapeMismatch(format!("structure constants for dimension {n}")));
        }
        let table = products.iter().map(|p| sparsify(field, p)).collect();
        Ok(Self::from_sparse(field, labels, table, unit))
    }

    pub fn from_sparse(field: &F, labels: Vec<String>, table: Vec<Sparse<F>>, unit: Vector<F>) -> Self {
        Algebra { field: field.clone(), labels, table, unit, structure: OnceLock::new(), generators: OnceLock::new() }
    }

    /// The ground field as a one-dimensional algebra.
    pub fn ground(field: &F) -> Self {
        Self::from_sparse(field, vec!["1".into()], vec![vec![(0, field.one())]], vec![field.one()])
    }

    /// `k[x]/(x^n)` with basis `1, x, …, x^{n-1}`.
    pub fn truncated_polynomial(field: &F, n: usize) -> Self {
        let labels = (0..n).map(|i| match i {
            0 => "1".to_string(),
            1 => "x".to_string(),
            _ => format!("x^{i}"),
        });
        let table = (0..n * n).map(|k| {
            let d = k / n + k % n;
            if d < n {
                vec![(d, field.one())]
            } else {
                vec![]
            }
        });
        Self::from_sparse(field, labels.collect(), table.collect(), vecops::unit(field, n, 0))
    }

    /// Full matrix algebra `M_n(k)` with basis `E_ij` (row-major).
    pub fn matrix_algebra(field: &F, n: usize) -> Self {
        let d = n * n;
        let labels = (0..d).map(|k| format!("E{}{}", k / n + 1, k % n + 1)).collect();
        let table = (0..d * d)
            .map(|k| {
                let (a, b) = (k / d, k % d);
                let (i, j) = (a / n, a % n);
                let (j2, l) = (b / n, b % n);
                if j == j2 {
                    vec![(i * n + l, field.one())]
                } else {
                    vec![]
                }
            })
            .collect();
        let mut unit = vecops::zero(field, d);
        for i in 0..n {
            unit[i * n + i] = field.one();
        }
        Self::from_sparse(field, labels, table, unit)
    }

    /// `k × k × …` (`n` copies).
    pub fn split_semisimple(field: &F, n: usize) -> Self {
        let labels = (0..n).map(|i| format!("e{}", i + 1)).collect();
        let table = (0..n * n).map(|k| if k / n == k % n { vec![(k / n, field.one())] } else { vec![] }).collect();
        Self::from_sparse(field, labels, table, vec![field.one(); n])
    }

    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn dim(&self) -> usize {
        self.labels.len()
    }
    pub fn labels(&self) -> &[String] {
        &self.labels
    }
    pub fn unit(&self) -> &Vector<F> {
        &self.unit
    }
    pub fn zero(&self) -> Vector<F> {
        vecops::zero(&self.field, self.dim())
    }
    pub fn basis_element(&self, i: usize) -> Vector<F> {
        vecops::unit(&self.field, self.dim(), i)
    }
    pub fn basis(&self) -> Vec<Vector<F>> {
        (0..self.dim()).map(|i| self.basis_element(i)).collect()
    }
    /// Sparse coordinates of `b_i b_j`.
    pub fn basis_product(&self, i: usize, j: usize) -> &[(usize, F::Elem)] {
        &self.table[i * self.dim() + j]
    }
    pub fn basis_product_vec(&self, i: usize, j: usize) -> Vector<F> {
        let mut v = self.zero();
        for (k, c) in self.basis_product(i, j) {
            v[*k] = c.clone();
        }
        v
    }

    pub fn multiply(&self, x: &[F::Elem], y: &[F::Elem]) -> Vector<F> {
        let f = &self.field;
        let n = self.dim();
        let mut out = self.zero();
        for (i, a) in x.iter().enumerate() {
            if f.is_zero(a) {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if f.is_zero(b) {
                    continue;
                }
                let ab = f.mul(a, b);
                for (k, c) in &self.table[i * n + j] {
                    f.add_mul(&mut out[*k], &ab, c);
                }
            }
        }
        out
    }

    pub fn power(&self, x: &[F::Elem], e: u64) -> Vector<F> {
        let mut acc = self.unit.clone();
        for _ in 0..e {
            acc = self.multiply(&acc, x);
        }
        acc
    }

    pub fn commutator(&self, x: &[F::Elem], y: &[F::Elem]) -> Vector<F> {
        vecops::sub(&self.field, &self.multiply(x, y), &self.multiply(y, x))
    }

    pub fn is_zero(&self, x: &[F::Elem]) -> bool {
        vecops::is_zero(&self.field, x)
    }

    /// Matrix of `y ↦ x y`.
    pub fn left_mult_matrix(&self, x: &[F::Elem]) -> Matrix<F> {
        let cols: Vec<_> = (0..self.dim()).map(|j| self.multiply(x, &self.basis_element(j))).collect();
        Matrix::from_columns(&self.field, self.dim(), &cols)
    }

    /// Matrix of `y ↦ y x`.
    pub fn right_mult_matrix(&self, x: &[F::Elem]) -> Matrix<F> {
        let cols: Vec<_> = (0..self.dim()).map(|j| self.multiply(&self.basis_element(j), x)).collect();
        Matrix::from_columns(&self.field, self.dim(), &cols)
    }

    /// Left multiplication by a basis element, read off the table.
    pub fn left_basis_matrix(&self, i: usize) -> Matrix<F> {
        let n = self.dim();
        let mut m = Matrix::zeros(&self.field, n, n);
        for j in 0..n {
            for (k, c) in self.basis_product(i, j) {
                m.set(*k, j, c.clone());
            }
        }
        m
    }

    pub fn right_basis_matrix(&self, i: usize) -> Matrix<F> {
        let n = self.dim();
        let mut m = Matrix::zeros(&self.field, n, n);
        for j in 0..n {
            for (k, c) in self.basis_product(j, i) {
                m.set(*k, j, c.clone());
            }
        }
        m
    }

    pub fn is_idempotent(&self, e: &[F::Elem]) -> bool {
        self.multiply(e, e) == e
    }

    /// Invertibility via the left multiplication matrix.
    pub fn is_unit(&self, x: &[F::Elem]) -> bool {
        self.left_mult_matrix(x).is_invertible()
    }

    pub fn inverse(&self, x: &[F::Elem]) -> Option<Vector<F>> {
        self.left_mult_matrix(x).solve(&self.unit)
    }

    /// `m` (columns are images of basis elements) is a unital algebra map to `target`.
    pub fn is_homomorphism(&self, target: &Self, m: &Matrix<F>) -> bool {
        let n = self.dim();
        if m.cols() != n || m.rows() != target.dim() || m.mul_vec(&self.unit) != target.unit {
            return false;
        }
        let images = m.columns();
        (0..n).all(|i| (0..n).all(|j| m.mul_vec(&self.basis_product_vec(i, j)) == target.multiply(&images[i], &images[j])))
    }

    /// Associativity on all basis triples and two-sided unit.
    pub fn check(&self) -> Result<()> {
        let n = self.dim();
        let f = &self.field;
        for i in 0..n {
            let bi = self.basis_element(i);
            if self.multiply(&self.unit, &bi) != bi || self.multiply(&bi, &self.unit) != bi {
                return Err(Error::AlgebraViolation(format!("unit fails on basis element {}", self.labels[i])));
            }
        }
        for i in 0..n {
            for j in 0..n {
                let bij = self.basis_product_vec(i, j);
                for k in 0..n {
                    let lhs = self.multiply(&bij, &self.basis_element(k));
                    let mut rhs = self.zero();
                    for (m, c) in self.basis_product(j, k) {
                        for (t, d) in self.basis_product(i, *m) {
                            f.add_mul(&mut rhs[*t], c, d);
                        }
                    }
                    if lhs != rhs {
                        return Err(Error::AlgebraViolation(format!(
                            "associativity fails at ({}, {}, {})",
                            self.labels[i], self.labels[j], self.labels[k]
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Basis of the centre.
    pub fn center_basis(&self) -> Vec<Vector<F>> {
        let n = self.dim();
        let f = &self.field;
        // rows: coefficient of b_k in [z, b_i]
        let mut rows = Vec::with_capacity(n * n);
        for i in 0..n {
            let c = self.left_basis_matrix(i).sub(&self.right_basis_matrix(i));
            for r in 0..n {
                rows.push(c.row(r).to_vec());
            }
        }
        if rows.is_empty() {
            return vec![];
        }
        let m = Matrix::from_rows(f, &rows).expect("rectangular");
        // [z, b_i] = R_{b_i} z - L_{b_i} z; the sign is irrelevant for the kernel
        m.kernel_basis()
    }

    pub fn is_central(&self, z: &[F::Elem]) -> bool {
        (0..self.dim()).all(|i| self.is_zero(&self.commutator(z, &self.basis_element(i))))
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.dim()).all(|i| (0..i).all(|j| self.basis_product(i, j) == self.basis_product(j, i)))
    }

    /// Image of a linear map given on basis elements, as a [`Span`].
    pub fn span_of(&self, vs: impl IntoIterator<Item = Vector<F>>) -> Span<F> {
        Span::from_vectors(&self.field, self.dim(), vs)
    }

    /// Basis of `x A y` obtained from the images `x b_i y`.
    pub fn slice_basis(&self, x: &[F::Elem], y: &[F::Elem]) -> Vec<Vector<F>> {
        let left: Vec<_> = (0..self.dim()).map(|i| self.multiply(x, &self.basis_element(i))).collect();
        self.span_of(left.iter().map(|v| self.multiply(v, y))).into_basis()
    }

    /// The corner algebra `eAe` with unit `e`.
    pub fn corner(&self, e: &[F::Elem]) -> Result<Corner<F>> {
        if !self.is_idempotent(e) {
            return Err(Error::NotIdempotent);
        }
        let span = self.span_of(self.slice_basis(e, e));
        let basis = span.basis().to_vec();
        let m = basis.len();
        let mut table = Vec::with_capacity(m * m);
        for a in &basis {
            for b in &basis {
                let c = span.coords(&self.multiply(a, b)).expect("corner closed under products");
                table.push(sparsify(&self.field, &c));
            }
        }
        let unit = span.coords(e).expect("unit in corner");
        let labels = basis.iter().map(|v| self.describe(v)).collect();
        let algebra = Algebra::from_sparse(&self.field, labels, table, unit);
        Ok(Corner { algebra, inclusion: basis, span })
    }

    /// Structure constants transposed: `b_i ∘ b_j := b_j b_i`.
    pub fn opposite(&self) -> Self {
        let n = self.dim();
        let table = (0..n * n).map(|k| self.table[(k % n) * n + k / n].clone()).collect();
        let labels = self.labels.clone();
        Algebra::from_sparse(&self.field, labels, table, self.unit.clone())
    }

    /// `A ⊗ B` with basis `a_i ⊗ b_j` at index `i * dim B + j`.
    pub fn tensor_product(&self, other: &Self) -> Result<Self> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        let f = &self.field;
        let (n, m) = (self.dim(), other.dim());
        let d = n * m;
        let mut table = Vec::with_capacity(d * d);
        for x in 0..d {
            let (i, j) = (x / m, x % m);
            for y in 0..d {
                let (k, l) = (y / m, y % m);
                let mut entry = Vec::new();
                for (p, c) in self.basis_product(i, k) {
                    for (q, c2) in other.basis_product(j, l) {
                        entry.push((p * m + q, f.mul(c, c2)));
                    }
                }
                entry.sort_by_key(|e| e.0);
                table.push(entry);
            }
        }
        let labels = (0..d).map(|x| format!("{}⊗{}", self.labels[x / m], other.labels[x % m])).collect();
        let unit = (0..d).map(|x| f.mul(&self.unit[x / m], &other.unit[x % m])).collect();
        Ok(Algebra::from_sparse(f, labels, table, unit))
    }

    /// `A ⊗ A^op`.
    pub fn enveloping(&self) -> Self {
        self.tensor_product(&self.opposite()).expect("same field")
    }

    /// Human readable linear combination of basis labels.
    pub fn describe(&self, v: &[F::Elem]) -> String {
        let f = &self.field;
        let terms: Vec<String> = v
            .iter()
            .enumerate()
            .filter(|(_, c)| !f.is_zero(c))
            .map(|(i, c)| if f.is_one(c) { self.labels[i].clone() } else { format!("{}*{}", f.to_scalar(c), self.labels[i]) })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }

    /// Radical, idempotents and isomorphism classes, computed once.
    pub fn structure(&self) -> Result<Arc<Structure<F>>> {
        self.structure.get_or_init(|| Structure::compute(self).map(Arc::new)).clone()
    }

    pub fn radical_basis(&self) -> Result<Vec<Vector<F>>> {
        Ok(self.structure()?.radical.clone())
    }

    pub fn primitive_idempotents(&self) -> Result<Vec<Vector<F>>> {
        Ok(self.structure()?.idempotents.clone())
    }

    pub fn num_simples(&self) -> Result<usize> {
        Ok(self.structure()?.representatives().len())
    }

    pub fn is_basic(&self) -> Result<bool> {
        let s = self.structure()?;
        Ok(s.representatives().len() == s.idempotents.len())
    }

    /// `c_ij = dim e_i A e_j` over representatives of the isomorphism classes.
    pub fn cartan_matrix(&self) -> Result<IntMatrix> {
        let s = self.structure()?;
        let reps = s.representatives();
        Ok(IntMatrix::from_fn(reps.len(), reps.len(), |i, j| {
            self.slice_basis(&s.idempotents[reps[i]], &s.idempotents[reps[j]]).len() as i128
        }))
    }

    pub fn cartan_snf(&self) -> Result<Smith> {
        Ok(smith_normal_form(&self.cartan_matrix()?))
    }

    pub fn echelon_of(&self, vs: &[Vector<F>]) -> Echelon<F> {
        Echelon::from_vectors(&self.field, self.dim(), vs.iter())
    }

    /// `e` is primitive iff `e(A/J)e` is one-dimensional (split case).
    pub fn is_primitive_idempotent(&self, e: &[F::Elem]) -> Result<bool> {
        let s = self.structure()?;
        Ok(self.is_idempotent(e) && structure::top_dim(self, &s.radical_echelon, e) == 1)
    }

    /// Basis of `J²`.
    pub fn radical_square(&self) -> Result<Vec<Vector<F>>> {
        let s = self.structure()?;
        let prods = s.radical.iter().flat_map(|x| s.radical.iter().map(move |y| self.multiply(x, y)));
        Ok(self.span_of(prods).into_basis())
    }

    /// Basis indices that generate the algebra, chosen greedily in basis order.
    pub fn generator_indices(&self) -> &[usize] {
        self.generators.get_or_init(|| {
            let mut chosen: Vec<usize> = Vec::new();
            let mut gens: Vec<Vector<F>> = Vec::new();
            let mut span = self.generated_subalgebra(&gens);
            for i in 0..self.dim() {
                if span.len() == self.dim() {
                    break;
                }
                let b = self.basis_element(i);
                if span.contains(&b) {
                    continue;
                }
                chosen.push(i);
                gens.push(b);
                span = self.generated_subalgebra(&gens);
            }
            chosen
        })
    }

    /// Smallest subalgebra containing the unit and `gens`, as a span.
    pub fn generated_subalgebra(&self, gens: &[Vector<F>]) -> Span<F> {
        let mut span = Span::new(&self.field, self.dim());
        let mut queue = vec![self.unit.clone()];
        queue.extend(gens.iter().cloned());
        while let Some(v) = queue.pop() {
            if span.push(v.clone()) {
                for g in gens {
                    queue.push(self.multiply(&v, g));
                }
            }
        }
        span
    }

    pub fn is_symmetric(&self) -> SymmetricVerdict<F> {
        symmetric::is_symmetric(self)
    }
}

/// `eAe` together with its basis inside `A`.
#[derive(Clone, Debug)]
pub struct Corner<F: Field> {
    pub algebra: Algebra<F>,
    pub inclusion: Vec<Vector<F>>,
    span: Span<F>,
}

impl<F: Field> Corner<F> {
    /// Element of `A` for corner coordinates.
    pub fn include(&self, x: &[F::Elem]) -> Vector<F> {
        let f = self.algebra.field();
        vecops::combination(f, self.span.ambient_dim(), x, &self.inclusion)
    }

    /// Corner coordinates of an element of `eAe`.
    pub fn restrict(&self, a: &[F::Elem]) -> Option<Vector<F>> {
        self.span.coords(a)
    }
}
