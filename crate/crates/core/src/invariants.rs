//! Invariants of algebras, looked up by name, with canonical string values.

use std::collections::BTreeMap;
use std::fmt;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::exact::IntMatrix;
use crate::field::Field;

pub type InvariantFn<F> = fn(&Algebra<F>) -> Result<String>;

fn list(xs: &[i128]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

/// Rows separated by `;`.
pub fn format_int_matrix(m: &IntMatrix) -> String {
    (0..m.rows()).map(|r| list(m.row(r))).collect::<Vec<_>>().join(";")
}

fn dim<F: Field>(a: &Algebra<F>) -> Result<String> {
    Ok(a.dim().to_string())
}
fn radical_dim<F: Field>(a: &Algebra<F>) -> Result<String> {
    Ok(a.radical_basis()?.len().to_string())
}
fn simples<F: Field>(a: &Algebra<F>) -> Result<String> {
    Ok(a.num_simples()?.to_string())
}
fn center_dim<F: Field>(a: &Algebra<F>) -> Result<String> {
    Ok(a.center_basis().len().to_string())
}
fn cartan_matrix<F: Field>(a: &Algebra<F>) -> Result<String> {
    Ok(format_int_matrix(&a.cartan_matrix()?))
}
fn cartan_det<F: Field>(a: &Algebra<F>) -> Result<String> {
    Ok(a.cartan_matrix()?.det().to_string())
}
fn cartan_snf<F: Field>(a: &Algebra<F>) -> Result<String> {
    Ok(list(&a.cartan_snf()?.diagonal))
}

/// All invariants, sorted by name.
pub fn registry<F: Field>() -> Vec<(&'static str, InvariantFn<F>)> {
    vec![
        ("cartan_det", cartan_det::<F>),
        ("cartan_matrix", cartan_matrix::<F>),
        ("cartan_snf", cartan_snf::<F>),
        ("center_dim", center_dim::<F>),
        ("dim", dim::<F>),
        ("radical_dim", radical_dim::<F>),
        ("simples", simples::<F>),
    ]
}

pub fn invariant_names() -> Vec<&'static str> {
    registry::<crate::field::Rationals>().into_iter().map(|(n, _)| n).collect()
}

pub fn invariant<F: Field>(name: &str, a: &Algebra<F>) -> Result<String> {
    let (_, f) = registry::<F>().into_iter().find(|(n, _)| *n == name).ok_or_else(|| Error::Parse(format!("unknown invariant `{name}`")))?;
    f(a)
}

pub fn all_invariants<F: Field>(a: &Algebra<F>) -> Result<BTreeMap<String, String>> {
    registry::<F>().into_iter().map(|(n, f)| Ok((n.to_string(), f(a)?))).collect()
}

/// `(dim, center dim, Cartan SNF, simples)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Fingerprint {
    pub dim: usize,
    pub center_dim: usize,
    pub cartan_snf: Vec<i128>,
    pub simples: usize,
}

impl Fingerprint {
    pub fn of<F: Field>(a: &Algebra<F>) -> Result<Self> {
        Ok(Fingerprint { dim: a.dim(), center_dim: a.center_basis().len(), cartan_snf: a.cartan_snf()?.diagonal, simples: a.num_simples()? })
    }
}

impl fmt::Display for Fingerprint {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(out, "dim={} center_dim={} cartan_snf={} simples={}", self.dim, self.center_dim, list(&self.cartan_snf), self.simples)
    }
}
