//! Projective covers, minimal projective resolutions and dominant dimension.

use std::fmt;
use std::sync::Arc;

use crate::algebra::Algebra;
use crate::error::Result;
use crate::exact::{Echelon, Matrix, Vector};
use crate::field::Field;

use super::module::Module;

/// A projective module `⊕ (Ae_r)^{m_r}` with the summand data.
#[derive(Clone, Debug)]
pub struct Cover<F: Field> {
    pub module: Module<F>,
    /// `(class representative index, multiplicity)`.
    pub multiplicities: Vec<usize>,
    /// `P → M`.
    pub map: Matrix<F>,
}

/// Projective cover from lifts of a basis of the top.
pub fn projective_cover<F: Field>(m: &Module<F>) -> Result<Cover<F>> {
    let a = m.algebra();
    let f = m.field();
    let s = a.structure()?;
    let rad = Echelon::from_vectors(f, m.dim(), m.radical()?.iter());
    let mut parts = Vec::new();
    let mut columns: Vec<Vector<F>> = Vec::new();
    let mut multiplicities = Vec::new();
    let mut ech = rad.clone();
    for r in s.representatives() {
        let e = &s.idempotents[r];
        let act = m.action_of(e);
        let basis = a.slice_basis(a.unit(), e);
        let mut count = 0;
        for c in 0..m.dim() {
            let v = act.column(c);
            if ech.insert(v.clone()) {
                count += 1;
                parts.push(Module::regular(a).submodule(&basis));
                for x in &basis {
                    columns.push(m.act(x, &v));
                }
            }
        }
        multiplicities.push(count);
    }
    let module = Module::direct_sum_all(a, &parts);
    let map = Matrix::from_columns(f, m.dim(), &columns);
    Ok(Cover { module, multiplicities, map })
}

#[derive(Clone, Debug)]
pub struct Resolution<F: Field> {
    /// `P_0, P_1, …`
    pub modules: Vec<Module<F>>,
    pub multiplicities: Vec<Vec<usize>>,
    /// `differentials[k] : P_{k+1} → P_k`.
    pub differentials: Vec<Matrix<F>>,
    /// `P_0 → M`.
    pub augmentation: Matrix<F>,
    /// The last kernel was zero.
    pub complete: bool,
}

impl<F: Field> Resolution<F> {
    /// Every differential lands in the radical of its target.
    pub fn is_minimal(&self) -> Result<bool> {
        for (k, d) in self.differentials.iter().enumerate() {
            let rad = Echelon::from_vectors(d.field(), d.rows(), self.modules[k].radical()?.iter());
            if (0..d.cols()).any(|c| !rad.contains(&d.column(c))) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn betti(&self) -> Vec<usize> {
        self.multiplicities.iter().map(|m| m.iter().sum()).collect()
    }
}

/// Terms `P_0 … P_length` of a minimal projective resolution.
pub fn minimal_projective_resolution<F: Field>(m: &Module<F>, length: usize) -> Result<Resolution<F>> {
    let f = m.field().clone();
    let cover = projective_cover(m)?;
    let mut modules = vec![cover.module.clone()];
    let mut multiplicities = vec![cover.multiplicities.clone()];
    let mut differentials = Vec::new();
    let augmentation = cover.map.clone();
    let mut prev_map = cover.map;
    let mut complete = false;
    for _ in 0..length {
        let p = modules.last().unwrap();
        let kernel = prev_map.kernel_basis();
        if kernel.is_empty() {
            complete = true;
            break;
        }
        let k = p.submodule(&kernel);
        let incl = Matrix::from_columns(&f, p.dim(), &kernel);
        let c = projective_cover(&k)?;
        let d = incl.mul(&c.map);
        differentials.push(d.clone());
        modules.push(c.module);
        multiplicities.push(c.multiplicities);
        prev_map = d;
    }
    if !complete && prev_map.kernel_basis().is_empty() {
        complete = true;
    }
    Ok(Resolution { modules, multiplicities, differentials, augmentation, complete })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DomDim {
    Exact(usize),
    AtLeast(usize),
}

impl DomDim {
    pub fn at_least(&self, k: usize) -> bool {
        match *self {
            DomDim::Exact(d) => d >= k,
            DomDim::AtLeast(d) => d >= k,
        }
    }
}

impl fmt::Display for DomDim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DomDim::Exact(d) => write!(f, "{d}"),
            DomDim::AtLeast(d) => write!(f, ">={d}"),
        }
    }
}

/// Leading projective terms of the minimal injective coresolution of `A`,
/// read off the minimal projective resolution of `D(A)` over `A^op`.
pub fn dominant_dimension<F: Field>(algebra: &Arc<Algebra<F>>, bound: usize) -> Result<DomDim> {
    let op = Arc::new(algebra.opposite());
    let da = Module::regular(algebra).dual(&op);
    let res = minimal_projective_resolution(&da, bound.saturating_sub(1))?;
    let s = op.structure()?;
    // is the injective D(A^op e_r) projective over A?
    let proj_inj: Vec<bool> = s
        .representatives()
        .into_iter()
        .map(|r| Module::projective(&op, &s.idempotents[r]).dual(algebra).is_projective())
        .collect::<Result<_>>()?;
    for k in 0..bound {
        let Some(mult) = res.multiplicities.get(k) else {
            return Ok(DomDim::AtLeast(bound));
        };
        if mult.iter().zip(&proj_inj).any(|(&m, &pi)| m > 0 && !pi) {
            return Ok(DomDim::Exact(k));
        }
    }
    Ok(DomDim::AtLeast(bound))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};

    #[test]
    fn resolution_of_simple_is_periodic() {
        let f = Rationals;
        let a = Arc::new(Algebra::truncated_polynomial(&f, 3));
        let reg = Module::regular(&a);
        let (s, _) = reg.quotient(&reg.radical().unwrap());
        let res = minimal_projective_resolution(&s, 3).unwrap();
        assert_eq!(res.betti(), vec![1, 1, 1, 1]);
        assert!(res.is_minimal().unwrap());
        // differentials alternate between rank 2 (x) and rank 1 (x^2)
        let ranks: Vec<usize> = res.differentials.iter().map(|d| d.rank()).collect();
        assert_eq!(ranks, vec![2, 1, 2]);
    }

    #[test]
    fn projective_resolution_is_trivial() {
        let f = PrimeField::new(2).unwrap();
        let a = Arc::new(Algebra::truncated_polynomial(&f, 3));
        let res = minimal_projective_resolution(&Module::regular(&a), 3).unwrap();
        assert_eq!(res.modules.len(), 1);
        assert!(res.complete);
    }

    #[test]
    fn self_injective_dominant_dimension() {
        let f = PrimeField::new(2).unwrap();
        let a = Arc::new(Algebra::truncated_polynomial(&f, 3));
        assert_eq!(dominant_dimension(&a, 4).unwrap(), DomDim::AtLeast(4));
    }
}
