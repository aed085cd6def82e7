//! The mirror-reflective algebra `R(A, e, λ) = A ⊕ Δ₀` and idealized extensions.

use std::sync::Arc;

use crate::algebra::{Algebra, Sparse};
use crate::error::Result;
use crate::exact::{vecops, Matrix, Vector};
use crate::field::Field;
use crate::modrep::{tensor_over_corner, Delta};

use super::level::Level;
use super::omega::{omega_map, OmegaMap};

#[derive(Clone, Debug)]
pub struct MirrorAlgebra<F: Field> {
    /// Basis: the basis of `A`, then the quotient basis of `Δ₀`.
    pub algebra: Arc<Algebra<F>>,
    pub base: Arc<Algebra<F>>,
    pub delta: Delta<F>,
    pub level: Level<F>,
    pub omega: OmegaMap<F>,
}

impl<F: Field> MirrorAlgebra<F> {
    pub fn base_dim(&self) -> usize {
        self.base.dim()
    }
    pub fn ideal_dim(&self) -> usize {
        self.delta.dim()
    }

    /// `A → R`.
    pub fn embed(&self, a: &[F::Elem]) -> Vector<F> {
        let mut v = a.to_vec();
        v.extend(vecops::zero(self.base.field(), self.ideal_dim()));
        v
    }

    /// `Δ₀ → R`.
    pub fn embed_ideal(&self, x: &[F::Elem]) -> Vector<F> {
        let mut v = vecops::zero(self.base.field(), self.base_dim());
        v.extend_from_slice(x);
        v
    }

    /// The element `x ⊗ y` of `R`, for `x ∈ Ae`, `y ∈ eA`.
    pub fn tensor(&self, x: &[F::Elem], y: &[F::Elem]) -> Vector<F> {
        self.embed_ideal(&self.delta.pair(x, y))
    }

    pub fn ideal_basis(&self) -> Vec<Vector<F>> {
        (self.base_dim()..self.algebra.dim()).map(|i| self.algebra.basis_element(i)).collect()
    }

    /// `π : R → A`.
    pub fn projection(&self) -> Matrix<F> {
        let f = self.base.field();
        let n = self.base_dim();
        Matrix::from_fn(f, n, self.algebra.dim(), |r, c| if r == c { f.one() } else { f.zero() })
    }

    /// `(a + x⊗y) ∗ (a' + x'⊗y') = aa' + (ax'⊗y' + x⊗ya' + x(yx')⊗λy')`,
    /// evaluated directly on representatives rather than through `ω`.
    pub fn formula(&self, a: &[F::Elem], xy: (&[F::Elem], &[F::Elem]), a2: &[F::Elem], xy2: (&[F::Elem], &[F::Elem])) -> Vector<F> {
        let alg = &self.base;
        let f = alg.field();
        let (x, y) = xy;
        let (x2, y2) = xy2;
        let d = &self.delta;
        let mut ideal = d.pair(&alg.multiply(a, x2), y2);
        ideal = vecops::add(f, &ideal, &d.pair(x, &alg.multiply(y, a2)));
        let middle = alg.multiply(x, &alg.multiply(y, x2));
        ideal = vecops::add(f, &ideal, &d.pair(&middle, &alg.multiply(&self.level.element, y2)));
        let mut out = alg.multiply(a, a2);
        out.extend(ideal);
        out
    }

    /// Compares the structure constants with [`MirrorAlgebra::formula`] on all
    /// basis pairs; returns the first disagreeing pair.
    pub fn check_formula(&self) -> Option<(usize, usize)> {
        let f = self.base.field();
        let n = self.base_dim();
        let zero_a = vecops::zero(f, n);
        let pairs = self.delta.basis_pairs();
        let rep = |i: usize| -> (Vector<F>, Vector<F>, Vector<F>) {
            if i < n {
                (self.base.basis_element(i), zero_a.clone(), zero_a.clone())
            } else {
                let (x, y) = &pairs[i - n];
                (zero_a.clone(), x.clone(), y.clone())
            }
        };
        let r = &self.algebra;
        for i in 0..r.dim() {
            for j in 0..r.dim() {
                let (a, x, y) = rep(i);
                let (a2, x2, y2) = rep(j);
                if self.formula(&a, (&x, &y), &a2, (&x2, &y2)) != r.basis_product_vec(i, j) {
                    return Some((i, j));
                }
            }
        }
        None
    }
}

/// Structure constants: `A·A` from `A`, `A·Δ₀` and `Δ₀·A` from the bimodule
/// actions, `Δ₀·Δ₀` from `ω_λ`.
pub fn build_mirror<F: Field>(algebra: &Arc<Algebra<F>>, e: &[F::Elem], lambda: &[F::Elem]) -> Result<MirrorAlgebra<F>> {
    let delta = tensor_over_corner(algebra, e)?;
    let level = Level::new(algebra, &delta.corner, lambda)?;
    let omega = omega_map(&delta, &level);
    let a = algebra.as_ref();
    let f = a.field();
    let n = a.dim();
    let d = delta.dim();
    let shift = |v: Vector<F>, off: usize| -> Sparse<F> { v.into_iter().enumerate().filter(|(_, c)| !f.is_zero(c)).map(|(k, c)| (k + off, c)).collect() };
    let mut table: Vec<Sparse<F>> = Vec::with_capacity((n + d) * (n + d));
    for i in 0..n + d {
        for j in 0..n + d {
            let entry = match (i < n, j < n) {
                (true, true) => shift(a.basis_product_vec(i, j), 0),
                (true, false) => shift(delta.bimodule.left_action[i].column(j - n), n),
                (false, true) => shift(delta.bimodule.right_action[j].column(i - n), n),
                (false, false) => shift(omega.matrix.column((i - n) * d + (j - n)), n),
            };
            table.push(entry);
        }
    }
    let mut labels = a.labels().to_vec();
    labels.extend((0..d).map(|k| format!("d{k}")));
    let mut unit = a.unit().to_vec();
    unit.extend(vecops::zero(f, d));
    let r = Algebra::from_sparse(f, labels, table, unit);
    Ok(MirrorAlgebra { algebra: Arc::new(r), base: algebra.clone(), delta, level, omega })
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct IdealizedReport {
    pub failures: Vec<String>,
    /// `X·X = 0`, i.e. a trivial extension.
    pub square_zero: bool,
}

impl IdealizedReport {
    pub fn passes(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks that `r`, whose first `a.dim()` basis vectors span a copy of `a`
/// and whose remaining ones span `X`, is an idealized extension of `a` by `X`.
pub fn check_idealized<F: Field>(r: &Algebra<F>, a: &Algebra<F>) -> IdealizedReport {
    let f = r.field();
    let n = a.dim();
    let total = r.dim();
    let mut failures = Vec::new();
    if let Err(err) = r.check() {
        failures.push(format!("not an algebra: {err}"));
    }
    let in_a = |v: &[F::Elem]| v[n..].iter().all(|c| f.is_zero(c));
    let in_x = |v: &[F::Elem]| v[..n].iter().all(|c| f.is_zero(c));
    if r.unit()[..n] != *a.unit() || !in_a(r.unit()) {
        failures.push("A and R do not share the identity".into());
    }
    let mut square_zero = true;
    'scan: for i in 0..total {
        for j in 0..total {
            let p = r.basis_product_vec(i, j);
            let msg = match (i < n, j < n) {
                (true, true) if !in_a(&p) || p[..n] != a.basis_product_vec(i, j)[..] => Some(format!("A is not a subalgebra: {}·{}", r.labels()[i], r.labels()[j])),
                (true, false) | (false, true) if !in_x(&p) => Some(format!("X is not an ideal: {}·{}", r.labels()[i], r.labels()[j])),
                (false, false) if !in_x(&p) => Some(format!("X is not closed: {}·{}", r.labels()[i], r.labels()[j])),
                _ => None,
            };
            if !(i < n || j < n) && !vecops::is_zero(f, &p) {
                square_zero = false;
            }
            if let Some(m) = msg {
                failures.push(m);
                break 'scan;
            }
        }
    }
    // π(rs) = π(r)π(s), with kernel X and π∘ι = id
    if failures.is_empty() {
        let pi = Matrix::from_fn(f, n, total, |i, j| if i == j { f.one() } else { f.zero() });
        'hom: for i in 0..total {
            for j in 0..total {
                let lhs = pi.mul_vec(&r.basis_product_vec(i, j));
                let rhs = a.multiply(&pi.column(i), &pi.column(j));
                if lhs != rhs {
                    failures.push(format!("projection is not multiplicative at ({}, {})", r.labels()[i], r.labels()[j]));
                    break 'hom;
                }
            }
        }
        if pi.kernel_basis().len() != total - n {
            failures.push("kernel of the projection is not X".into());
        }
    }
    IdealizedReport { failures, square_zero }
}

pub fn check_idealized_extension<F: Field>(m: &MirrorAlgebra<F>) -> IdealizedReport {
    check_idealized(&m.algebra, &m.base)
}
