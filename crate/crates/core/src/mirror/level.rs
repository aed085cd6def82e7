//! Levels: central elements of the corner algebra `Λ = eAe`.

use crate::algebra::{Algebra, Corner};
use crate::error::{Error, Result};
use crate::exact::Vector;
use crate::field::Field;

#[derive(Clone, Debug, PartialEq)]
pub struct Level<F: Field> {
    /// `λ` as an element of `A`.
    pub element: Vector<F>,
    /// `λ` in the basis of `Λ`.
    pub coords: Vector<F>,
}

impl<F: Field> Level<F> {
    /// Checks `λ ∈ eAe` and that `λ` commutes with a basis of `Λ`.
    pub fn new(a: &Algebra<F>, corner: &Corner<F>, lambda: &[F::Elem]) -> Result<Self> {
        let coords = corner.restrict(lambda).ok_or_else(|| Error::LevelNotCentral("level does not lie in eAe".into()))?;
        if !corner.algebra.is_central(&coords) {
            return Err(Error::LevelNotCentral(format!("{} does not commute with eAe", a.describe(lambda))));
        }
        Ok(Level { element: lambda.to_vec(), coords })
    }

    pub fn is_unit(&self, corner: &Corner<F>) -> bool {
        corner.algebra.dim() > 0 && corner.algebra.is_unit(&self.coords)
    }
}
