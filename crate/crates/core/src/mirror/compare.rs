//! Comparing `R(A, e, λ)` with `R(A, e, λμ)` for a central unit `μ`.

use crate::error::{Error, Result};
use crate::exact::Matrix;
use crate::field::Field;
use crate::invariants::Fingerprint;
use crate::quiver::gabriel_skeleton;

use super::build::MirrorAlgebra;
use super::level::Level;
use super::omega::rho_endo;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MirrorComparison {
    pub same_skeleton: bool,
    pub same_fingerprint: bool,
    /// `id_A ⊕ ρ_ν` is an algebra isomorphism `R₁ → R₂`.
    pub isomorphism: bool,
}

impl MirrorComparison {
    pub fn matches(&self) -> bool {
        self.same_skeleton && self.same_fingerprint && self.isomorphism
    }
}

/// `id_A ⊕ ρ_ν` as a matrix on the bases of two mirrors over the same `(A, e)`.
pub fn level_change_map<F: Field>(r: &MirrorAlgebra<F>, nu: &[F::Elem]) -> Result<Matrix<F>> {
    let f = r.base.field();
    let level = Level::new(&r.base, &r.delta.corner, nu)?;
    let n = r.base_dim();
    Ok(Matrix::block_diag(f, &[Matrix::identity(f, n), rho_endo(&r.delta, &level)]))
}

/// `r2` is expected to have level `λμ` where `r1` has `λ`; the map
/// `id_A ⊕ ρ_{μ⁻¹}` must be an isomorphism lifting the identity of `A`.
pub fn compare_mirrors<F: Field>(r1: &MirrorAlgebra<F>, r2: &MirrorAlgebra<F>, mu: &[F::Elem]) -> Result<MirrorComparison> {
    let corner = &r1.delta.corner;
    let mu_coords = corner.restrict(mu).ok_or_else(|| Error::LevelNotCentral("μ does not lie in eAe".into()))?;
    let inv = corner.algebra.inverse(&mu_coords).ok_or_else(|| Error::LevelNotCentral("μ is not a unit of eAe".into()))?;
    let phi = level_change_map(r1, &corner.include(&inv))?;
    let isomorphism = r1.ideal_dim() == r2.ideal_dim() && phi.is_invertible() && r1.algebra.is_homomorphism(&r2.algebra, &phi);
    let (q1, q2) = (gabriel_skeleton(&r1.algebra)?, gabriel_skeleton(&r2.algebra)?);
    let same_skeleton = q1.vertices == q2.vertices && q1.arrow_count() == q2.arrow_count();
    let same_fingerprint = Fingerprint::of(&r1.algebra)? == Fingerprint::of(&r2.algebra)?;
    Ok(MirrorComparison { same_skeleton, same_fingerprint, isomorphism })
}
