//! Deciding whether two levels differ by a central unit.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::Corner;
use crate::error::{Error, Result};
use crate::exact::{vecops, Matrix, Vector};
use crate::field::Field;

use super::level::Level;

#[derive(Clone, Debug, PartialEq)]
pub enum LevelRelation<F: Field> {
    /// `λ₁ = λ₂ μ` with `μ` a unit of `Z(Λ)`, in `Λ` coordinates.
    Equivalent(Vector<F>),
    NotEquivalent(String),
}

impl<F: Field> LevelRelation<F> {
    pub fn is_equivalent(&self) -> bool {
        matches!(self, LevelRelation::Equivalent(_))
    }
}

/// Solves `λ₂ μ = λ₁` over `μ ∈ Z(Λ)` and searches the affine solution
/// space for a unit. The determinant of left multiplication by `μ` is a
/// polynomial of degree at most `dim Λ` in the free parameters, so a grid
/// with `dim Λ + 1` values per parameter decides whether it vanishes
/// identically. `budget` caps the number of grid points.
pub fn levels_isomorphic<F: Field>(corner: &Corner<F>, l1: &Level<F>, l2: &Level<F>, budget: u64) -> Result<LevelRelation<F>> {
    let lam = &corner.algebra;
    let f = lam.field();
    let n = lam.dim();
    let center = lam.center_basis();
    if center.is_empty() {
        return Ok(LevelRelation::Equivalent(Vec::new()));
    }
    let cols: Vec<Vector<F>> = center.iter().map(|z| lam.multiply(&l2.coords, z)).collect();
    let m = Matrix::from_columns(f, n, &cols);
    let Some(particular) = m.solve(&l1.coords) else {
        return Ok(LevelRelation::NotEquivalent("no central μ with λ₂μ = λ₁".into()));
    };
    let kernel = m.kernel_basis();
    let to_mu = |t: &[F::Elem]| -> Vector<F> {
        let mut c = particular.clone();
        for (ti, k) in t.iter().zip(&kernel) {
            vecops::axpy(f, &mut c, ti, k);
        }
        vecops::combination(f, n, &c, &center)
    };
    let values: Vec<F::Elem> = match f.order() {
        Some(q) if q <= n as u64 + 1 => (0..q).map(|i| f.element(i)).collect(),
        _ => (0..=n as i64).map(|i| f.from_i64(i)).collect(),
    };
    let per = values.len() as u64;
    let points = per.checked_pow(kernel.len() as u32);
    match points {
        Some(total) if total <= budget => {
            for index in 0..total {
                let mut rest = index;
                let t: Vec<F::Elem> = (0..kernel.len())
                    .map(|_| {
                        let v = values[(rest % per) as usize].clone();
                        rest /= per;
                        v
                    })
                    .collect();
                let mu = to_mu(&t);
                if lam.is_unit(&mu) {
                    return Ok(LevelRelation::Equivalent(mu));
                }
            }
            Ok(LevelRelation::NotEquivalent("no central solution of λ₂μ = λ₁ is a unit".into()))
        }
        _ => {
            let mut rng = ChaCha8Rng::seed_from_u64(0xA1B2);
            for _ in 0..64 {
                let t: Vec<F::Elem> = (0..kernel.len()).map(|_| f.random(&mut rng)).collect();
                let mu = to_mu(&t);
                if lam.is_unit(&mu) {
                    return Ok(LevelRelation::Equivalent(mu));
                }
            }
            Err(Error::SearchBudgetExceeded(budget))
        }
    }
}
