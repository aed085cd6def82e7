//! `ω_λ : Δ₀ ⊗_A Δ₀ → Δ₀` and `ρ_λ ∈ End_{A^e}(Δ₀)`.

use crate::algebra::Algebra;
use crate::error::Result;
use crate::exact::{vecops, Matrix, Vector};
use crate::field::Field;
use crate::modrep::{bimodule_hom_basis, Delta, TensorQuotient};

use super::level::Level;

/// Bilinear map on `Δ₀`: column `p·d + q` is the image of `(δ_p, δ_q)`.
#[derive(Clone, Debug, PartialEq)]
pub struct OmegaMap<F: Field> {
    pub dim: usize,
    pub matrix: Matrix<F>,
}

impl<F: Field> OmegaMap<F> {
    pub fn apply(&self, u: &[F::Elem], v: &[F::Elem]) -> Vector<F> {
        let f = self.matrix.field();
        let mut out = vecops::zero(f, self.dim);
        for (p, up) in u.iter().enumerate() {
            if f.is_zero(up) {
                continue;
            }
            for (q, vq) in v.iter().enumerate() {
                if f.is_zero(vq) {
                    continue;
                }
                let s = f.mul(up, vq);
                vecops::axpy(f, &mut out, &s, &self.matrix.column(p * self.dim + q));
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }
}

/// `(x ⊗ y, x' ⊗ y') ↦ x (y x') λ ⊗ y'` on the pairing basis.
pub fn omega_map<F: Field>(delta: &Delta<F>, level: &Level<F>) -> OmegaMap<F> {
    let a: &Algebra<F> = &delta.algebra;
    let pairs = delta.basis_pairs();
    let d = pairs.len();
    let mut cols = Vec::with_capacity(d * d);
    for (x, y) in &pairs {
        for (x2, y2) in &pairs {
            let left = a.multiply(&a.multiply(x, &a.multiply(y, x2)), &level.element);
            cols.push(delta.pair(&left, y2));
        }
    }
    OmegaMap { dim: d, matrix: Matrix::from_columns(a.field(), d, &cols) }
}

/// `ω` on `Δ₀ ⊗_A Δ₀`: the matrix on the quotient basis, or `None` if `ω`
/// is not balanced over `A`.
pub fn omega_on_tensor<F: Field>(delta: &Delta<F>, omega: &OmegaMap<F>) -> Option<Matrix<F>> {
    let a: &Algebra<F> = &delta.algebra;
    let f = a.field();
    let m = &delta.bimodule;
    let d = m.dim;
    for &g in a.generator_indices() {
        for p in 0..d {
            for q in 0..d {
                let u = vecops::unit(f, d, p);
                let v = vecops::unit(f, d, q);
                let lhs = omega.apply(&m.right_action[g].mul_vec(&u), &v);
                let rhs = omega.apply(&u, &m.left_action[g].mul_vec(&v));
                if lhs != rhs {
                    return None;
                }
            }
        }
    }
    let pairs: Vec<_> = a.generator_indices().iter().map(|&g| (m.right_action[g].clone(), m.left_action[g].clone())).collect();
    let t = TensorQuotient::new(f, d, d, &pairs);
    let cols: Vec<_> = t.basis_pairs().into_iter().map(|(p, q)| omega.apply(&vecops::unit(f, d, p), &vecops::unit(f, d, q))).collect();
    Some(Matrix::from_columns(f, d, &cols))
}

/// `ρ_λ : x ⊗ y ↦ xλ ⊗ y`.
pub fn rho_endo<F: Field>(delta: &Delta<F>, level: &Level<F>) -> Matrix<F> {
    let a: &Algebra<F> = &delta.algebra;
    let cols: Vec<_> = delta.basis_pairs().iter().map(|(x, y)| delta.pair(&a.multiply(x, &level.element), y)).collect();
    Matrix::from_columns(a.field(), delta.dim(), &cols)
}

fn compose_after<F: Field>(rho: &Matrix<F>, omega: &OmegaMap<F>) -> Matrix<F> {
    rho.mul(&omega.matrix)
}

#[derive(Clone, Debug)]
pub struct RhoReport {
    pub center_dim: usize,
    pub end_dim: usize,
    pub bimodule_maps: bool,
    pub linear: bool,
    pub unital: bool,
    pub multiplicative: bool,
    pub injective: bool,
    pub surjective: bool,
    /// `ω_λ` equals `ω_e` followed by `ρ_λ` for every `λ` in a basis of `Z(Λ)`.
    pub omega_factors: bool,
}

impl RhoReport {
    pub fn passes(&self) -> bool {
        self.bimodule_maps && self.linear && self.unital && self.multiplicative && self.injective && self.surjective && self.omega_factors
    }
}

/// Checks that `λ ↦ ρ_λ` is an algebra isomorphism `Z(Λ) → End_{A^e}(Δ₀)`.
pub fn rho_iso_check<F: Field>(delta: &Delta<F>) -> Result<RhoReport> {
    let a: &Algebra<F> = &delta.algebra;
    let f = a.field();
    let corner = &delta.corner;
    let lam = &corner.algebra;
    let center: Vec<Vector<F>> = lam.center_basis();
    let levels: Vec<Level<F>> = center.iter().map(|z| Level::new(a, corner, &corner.include(z))).collect::<Result<_>>()?;
    let rhos: Vec<Matrix<F>> = levels.iter().map(|l| rho_endo(delta, l)).collect();
    let end = bimodule_hom_basis(&delta.bimodule, &delta.bimodule);
    let d = delta.dim();
    let end_span = crate::exact::Span::from_vectors(f, d * d, end.iter().map(|m| m.data().to_vec()));
    let bimodule_maps = rhos.iter().all(|r| end_span.contains(r.data()));

    // linearity on the sum of the basis
    let sum = center.iter().fold(vecops::zero(f, lam.dim()), |acc, z| vecops::add(f, &acc, z));
    let linear = center.is_empty() || {
        let l = Level::new(a, corner, &corner.include(&sum))?;
        let total = rhos.iter().fold(Matrix::zeros(f, d, d), |acc, r| acc.add(r));
        rho_endo(delta, &l) == total
    };
    let unital = lam.dim() == 0 || rho_endo(delta, &Level::new(a, corner, &delta.e)?).is_identity();
    let mut multiplicative = true;
    for (i, zi) in center.iter().enumerate() {
        for (j, zj) in center.iter().enumerate() {
            let prod = Level::new(a, corner, &corner.include(&lam.multiply(zi, zj)))?;
            if rho_endo(delta, &prod) != rhos[j].mul(&rhos[i]) {
                multiplicative = false;
            }
        }
    }
    let rho_span = crate::exact::Span::from_vectors(f, d * d, rhos.iter().map(|m| m.data().to_vec()));
    let injective = rho_span.len() == center.len();
    let surjective = rho_span.len() == end_span.len() && bimodule_maps;

    let mut omega_factors = true;
    if lam.dim() > 0 {
        let omega_e = omega_map(delta, &Level::new(a, corner, &delta.e)?);
        for (l, r) in levels.iter().zip(&rhos) {
            if omega_map(delta, l).matrix != compose_after(r, &omega_e) {
                omega_factors = false;
            }
        }
    }
    Ok(RhoReport { center_dim: center.len(), end_dim: end_span.len(), bimodule_maps, linear, unital, multiplicative, injective, surjective, omega_factors })
}
