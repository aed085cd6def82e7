//! Isomorphism testing by searching a Hom space for an invertible element.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::exact::Matrix;
use crate::field::Field;

use super::hom::{bimodule_hom_basis, hom_basis};
use super::module::{Bimodule, Module};

#[derive(Clone, Debug, PartialEq)]
pub enum IsoVerdict<F: Field> {
    Isomorphic(Matrix<F>),
    NotIsomorphic(String),
    Inconclusive(String),
}

impl<F: Field> IsoVerdict<F> {
    pub fn is_isomorphic(&self) -> bool {
        matches!(self, IsoVerdict::Isomorphic(_))
    }
    pub fn witness(&self) -> Option<&Matrix<F>> {
        match self {
            IsoVerdict::Isomorphic(m) => Some(m),
            _ => None,
        }
    }
}

#[derive(Clone, Debug)]
pub struct IsoOptions {
    pub seed: u64,
    pub trials: usize,
    /// Largest `|F|^dim Hom` enumerated exhaustively.
    pub budget: u64,
    /// Strategy names, tried in order.
    pub strategies: Vec<String>,
}

impl Default for IsoOptions {
    fn default() -> Self {
        IsoOptions { seed: 0xA1B2, trials: 64, budget: 1 << 16, strategies: vec!["random".into(), "exhaustive".into()] }
    }
}

/// One way of looking for an invertible element of a Hom space. `None`
/// means the strategy had nothing to say.
pub trait IsoStrategy<F: Field>: Send + Sync {
    fn name(&self) -> &'static str;
    fn search(&self, f: &F, hom: &[Matrix<F>], opts: &IsoOptions) -> Option<IsoVerdict<F>>;
}

pub struct RandomTrials;
pub struct Exhaustive;

impl<F: Field> IsoStrategy<F> for RandomTrials {
    fn name(&self) -> &'static str {
        "random"
    }
    fn search(&self, f: &F, hom: &[Matrix<F>], opts: &IsoOptions) -> Option<IsoVerdict<F>> {
        let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
        let (r, c) = (hom[0].rows(), hom[0].cols());
        for _ in 0..opts.trials {
            let coeffs: Vec<F::Elem> = (0..hom.len()).map(|_| f.random(&mut rng)).collect();
            let x = Matrix::combination(f, r, c, &coeffs, hom);
            if x.is_invertible() {
                return Some(IsoVerdict::Isomorphic(x));
            }
        }
        None
    }
}

impl<F: Field> IsoStrategy<F> for Exhaustive {
    fn name(&self) -> &'static str {
        "exhaustive"
    }
    fn search(&self, f: &F, hom: &[Matrix<F>], opts: &IsoOptions) -> Option<IsoVerdict<F>> {
        let q = f.order()?;
        let total = q.checked_pow(hom.len() as u32).filter(|&t| t <= opts.budget)?;
        let (r, c) = (hom[0].rows(), hom[0].cols());
        for index in 1..total {
            let mut rest = index;
            let coeffs: Vec<F::Elem> = (0..hom.len())
                .map(|_| {
                    let d = rest % q;
                    rest /= q;
                    f.element(d)
                })
                .collect();
            let x = Matrix::combination(f, r, c, &coeffs, hom);
            if x.is_invertible() {
                return Some(IsoVerdict::Isomorphic(x));
            }
        }
        Some(IsoVerdict::NotIsomorphic(format!("none of the {total} homomorphisms is invertible")))
    }
}

/// Looks a strategy up by name.
pub fn strategy<F: Field>(name: &str) -> Option<Box<dyn IsoStrategy<F>>> {
    match name {
        "random" => Some(Box::new(RandomTrials)),
        "exhaustive" => Some(Box::new(Exhaustive)),
        _ => None,
    }
}

pub fn strategy_names() -> &'static [&'static str] {
    &["random", "exhaustive"]
}

/// Searches the span of `hom` (maps of shape `n_dim × m_dim`) for an isomorphism.
pub fn iso_in_hom<F: Field>(f: &F, m_dim: usize, n_dim: usize, hom: &[Matrix<F>], opts: &IsoOptions) -> IsoVerdict<F> {
    if m_dim != n_dim {
        return IsoVerdict::NotIsomorphic(format!("dimensions {m_dim} and {n_dim} differ"));
    }
    if m_dim == 0 {
        return IsoVerdict::Isomorphic(Matrix::zeros(f, 0, 0));
    }
    if hom.is_empty() {
        return IsoVerdict::NotIsomorphic("no nonzero homomorphisms".into());
    }
    for name in &opts.strategies {
        let Some(s) = strategy::<F>(name) else { continue };
        if let Some(v) = s.search(f, hom, opts) {
            return v;
        }
    }
    IsoVerdict::Inconclusive(format!("no invertible map found in a {}-dimensional Hom space", hom.len()))
}

pub fn module_isomorphic<F: Field>(m: &Module<F>, n: &Module<F>, opts: &IsoOptions) -> IsoVerdict<F> {
    if m.dim() != n.dim() {
        return IsoVerdict::NotIsomorphic(format!("dimensions {} and {} differ", m.dim(), n.dim()));
    }
    let hom = hom_basis(m, n);
    let (em, en) = (hom_basis(m, m).len(), hom_basis(n, n).len());
    if hom.len() != em || hom.len() != en {
        return IsoVerdict::NotIsomorphic(format!("dim Hom(M,N) = {}, dim End(M) = {em}, dim End(N) = {en}", hom.len()));
    }
    iso_in_hom(m.field(), m.dim(), n.dim(), &hom, opts)
}

pub fn bimodule_isomorphic<F: Field>(m: &Bimodule<F>, n: &Bimodule<F>, opts: &IsoOptions) -> IsoVerdict<F> {
    if m.dim != n.dim {
        return IsoVerdict::NotIsomorphic(format!("dimensions {} and {} differ", m.dim, n.dim));
    }
    let hom = bimodule_hom_basis(m, n);
    iso_in_hom(m.field(), m.dim, n.dim, &hom, opts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::sync::Arc;
    use crate::algebra::Algebra;
    use crate::field::{PrimeField, Rationals};

    #[test]
    fn module_is_isomorphic_to_itself() {
        let f = Rationals;
        let a = Arc::new(Algebra::truncated_polynomial(&f, 3));
        let r = Module::regular(&a);
        let v = module_isomorphic(&r, &r, &IsoOptions::default());
        assert!(v.witness().unwrap().is_invertible());
    }

    #[test]
    fn distinct_simples_are_not_isomorphic() {
        let f = PrimeField::new(2).unwrap();
        let a = Arc::new(Algebra::split_semisimple(&f, 2));
        let ps = super::super::projectives(&a).unwrap();
        let v = module_isomorphic(&ps[0].1, &ps[1].1, &IsoOptions::default());
        assert!(matches!(v, IsoVerdict::NotIsomorphic(_)));
    }

    #[test]
    fn exhaustive_alone_is_exact_over_small_fields() {
        let f = PrimeField::new(2).unwrap();
        let a = Arc::new(Algebra::truncated_polynomial(&f, 2));
        let r = Module::regular(&a);
        let opts = IsoOptions { strategies: vec!["exhaustive".into()], ..Default::default() };
        assert!(module_isomorphic(&r, &r, &opts).is_isomorphic());
        // k[x]/(x²) against k ⊕ k with x acting by zero
        let z = Matrix::zeros(&f, 2, 2);
        let split = Module::new(&a, 2, vec![Matrix::identity(&f, 2), z]).unwrap();
        assert!(matches!(module_isomorphic(&r, &split, &opts), IsoVerdict::NotIsomorphic(_)));
    }

    #[test]
    fn unknown_strategy_is_skipped() {
        assert!(strategy::<Rationals>("annealing").is_none());
        let f = Rationals;
        let opts = IsoOptions { strategies: vec!["annealing".into()], ..Default::default() };
        let v = iso_in_hom(&f, 1, 1, &[Matrix::identity(&f, 1)], &opts);
        assert!(matches!(v, IsoVerdict::Inconclusive(_)));
    }
}
