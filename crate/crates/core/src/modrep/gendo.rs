//! Gendo-symmetric certificates and faithful projective-injective idempotents.

use std::sync::Arc;

use crate::algebra::{Algebra, Corner};
use crate::error::{Error, Result};
use crate::exact::{vecops, Matrix, Span, Vector};
use crate::field::Field;

use super::iso::{bimodule_isomorphic, IsoOptions, IsoVerdict};
use super::module::{Bimodule, Module};
use super::resolution::{dominant_dimension, DomDim};

/// `Ae` as an `A`-`Λ`-bimodule and `eA` as a `Λ`-`A`-bimodule, `Λ = eAe`.
#[derive(Clone, Debug)]
pub struct CornerBimodules<F: Field> {
    pub corner: Corner<F>,
    pub lambda: Arc<Algebra<F>>,
    pub ae: Bimodule<F>,
    pub ea: Bimodule<F>,
}

fn action_on<F: Field>(a: &Algebra<F>, span: &Span<F>, op: impl Fn(&Vector<F>) -> Vector<F>) -> Matrix<F> {
    let cols: Vec<_> = span.basis().iter().map(|x| span.coords(&op(x)).expect("closed")).collect();
    Matrix::from_columns(a.field(), span.len(), &cols)
}

pub fn corner_bimodules<F: Field>(algebra: &Arc<Algebra<F>>, e: &[F::Elem]) -> Result<CornerBimodules<F>> {
    let a = algebra.as_ref();
    let corner = a.corner(e)?;
    let lambda = Arc::new(corner.algebra.clone());
    let ae = a.span_of(a.slice_basis(a.unit(), e));
    let ea = a.span_of(a.slice_basis(e, a.unit()));
    let basis = a.basis();
    let ae_b = Bimodule {
        left: algebra.clone(),
        right: lambda.clone(),
        dim: ae.len(),
        left_action: basis.iter().map(|b| action_on(a, &ae, |x| a.multiply(b, x))).collect(),
        right_action: corner.inclusion.iter().map(|l| action_on(a, &ae, |x| a.multiply(x, l))).collect(),
    };
    let ea_b = Bimodule {
        left: lambda.clone(),
        right: algebra.clone(),
        dim: ea.len(),
        left_action: corner.inclusion.iter().map(|l| action_on(a, &ea, |y| a.multiply(l, y))).collect(),
        right_action: basis.iter().map(|b| action_on(a, &ea, |y| a.multiply(y, b))).collect(),
    };
    Ok(CornerBimodules { corner, lambda, ae: ae_b, ea: ea_b })
}

#[derive(Clone, Debug)]
pub struct GendoCertificate<F: Field> {
    pub e: Vector<F>,
    pub faithful: bool,
    pub projective: bool,
    pub injective: bool,
    pub dominant: DomDim,
    /// `D(Ae) ≅ eA` as `Λ`-`A`-bimodules.
    pub duality: IsoVerdict<F>,
}

impl<F: Field> GendoCertificate<F> {
    pub fn ae_ok(&self) -> bool {
        self.faithful && self.projective && self.injective
    }
    pub fn dominant_ok(&self) -> bool {
        self.dominant.at_least(2)
    }
    pub fn passes(&self) -> bool {
        self.ae_ok() && self.dominant_ok() && self.duality.is_isomorphic()
    }
}

pub fn is_gendo_symmetric<F: Field>(algebra: &Arc<Algebra<F>>, e: &[F::Elem], opts: &IsoOptions) -> Result<GendoCertificate<F>> {
    let ae = Module::projective(algebra, e);
    if !algebra.is_idempotent(e) {
        return Err(Error::NotIdempotent);
    }
    let cb = corner_bimodules(algebra, e)?;
    Ok(GendoCertificate {
        e: e.to_vec(),
        faithful: ae.is_faithful(),
        projective: ae.is_projective()?,
        injective: ae.is_injective()?,
        dominant: dominant_dimension(algebra, 2)?,
        duality: bimodule_isomorphic(&cb.ae.dual(), &cb.ea, opts),
    })
}

/// Sum of one primitive idempotent per class whose projective is injective.
pub fn proj_inj_idempotent<F: Field>(algebra: &Arc<Algebra<F>>) -> Result<Vector<F>> {
    let s = algebra.structure()?;
    let f = algebra.field();
    let mut e = vecops::zero(f, algebra.dim());
    let mut any = false;
    for r in s.representatives() {
        let ei = &s.idempotents[r];
        if Module::projective(algebra, ei).is_injective()? {
            e = vecops::add(f, &e, ei);
            any = true;
        }
    }
    if !any {
        return Err(Error::NoFaithfulProjInj("no indecomposable projective is injective".into()));
    }
    if !Module::projective(algebra, &e).is_faithful() {
        return Err(Error::NoFaithfulProjInj("the projective-injective summands are not faithful".into()));
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};

    #[test]
    fn symmetric_algebra_uses_the_unit() {
        let f = PrimeField::new(3).unwrap();
        let a = Arc::new(Algebra::truncated_polynomial(&f, 3));
        let e = proj_inj_idempotent(&a).unwrap();
        assert_eq!(&e, a.unit());
        assert!(is_gendo_symmetric(&a, &e, &IsoOptions::default()).unwrap().passes());
    }

    #[test]
    fn corner_bimodules_are_bimodules() {
        let f = Rationals;
        let a = Arc::new(Algebra::matrix_algebra(&f, 2));
        let e = a.basis_element(0);
        let cb = corner_bimodules(&a, &e).unwrap();
        cb.ae.check().unwrap();
        cb.ea.check().unwrap();
        cb.ae.dual().check().unwrap();
        assert_eq!((cb.ae.dim, cb.ea.dim, cb.lambda.dim()), (2, 2, 1));
    }
}
