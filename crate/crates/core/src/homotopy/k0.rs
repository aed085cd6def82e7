//! Indecomposable summands of complexes and their classes in `K₀`.

use crate::error::Result;
use crate::exact::{smith_normal_form, IntMatrix, Matrix, Vector};
use crate::field::Field;

use super::complex::{ChainMap, ProjComplex};
use super::hom::strict_end_algebra;

/// Primitive idempotents of the algebra of chain maps `X → X`. They split
/// `X` on the nose into indecomposable complexes.
pub fn summand_idempotents<F: Field>(x: &ProjComplex<F>) -> Result<Vec<ChainMap<F>>> {
    if x.is_zero() {
        return Ok(Vec::new());
    }
    let (alg, maps) = strict_end_algebra(x)?;
    let f = x.ctx.field();
    Ok(alg
        .primitive_idempotents()?
        .iter()
        .map(|c| {
            let mut out = ChainMap::zero(x, x);
            for (ci, m) in c.iter().zip(&maps) {
                if !f.is_zero(ci) {
                    out = out.add(f, &m.scale(f, ci));
                }
            }
            out
        })
        .collect())
}

/// `Σ (-1)^d [im ε^d]`, counted by the top of each image module, indexed by
/// the isomorphism classes of simple modules.
pub fn k0_class_of<F: Field>(x: &ProjComplex<F>, eps: &ChainMap<F>) -> Result<Vec<i128>> {
    let ctx = &x.ctx;
    let a = &ctx.algebra;
    let n = a.num_simples()?;
    let mut class = vec![0i128; n];
    for d in x.lo..=x.hi() {
        let t = x.term(d);
        let m = ctx.module(t);
        let e: Matrix<F> = ctx.module_map(t, t, &eps.block(a, d, t.len(), t.len()));
        let image: Vec<Vector<F>> = e.columns();
        let sub = m.submodule(&image);
        let sign = if d % 2 == 0 { 1 } else { -1 };
        for (c, k) in class.iter_mut().zip(sub.top_multiplicities()?) {
            *c += sign * k as i128;
        }
    }
    Ok(class)
}

/// Class of the whole complex.
pub fn k0_class<F: Field>(x: &ProjComplex<F>) -> Result<Vec<i128>> {
    if x.is_zero() {
        return Ok(vec![0; x.ctx.algebra.num_simples()?]);
    }
    k0_class_of(x, &x.identity())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct K0Check {
    /// Columns: classes of the indecomposable summands of `P`.
    pub summands: IntMatrix,
    /// Columns: classes of the targets.
    pub targets: IntMatrix,
    /// Invariant factors of the summand matrix.
    pub invariant_factors: Vec<i128>,
    pub pass: bool,
}

/// Pass iff every target class is an integer combination of summand classes.
pub fn k0_generation_check<F: Field>(p: &ProjComplex<F>, targets: &[ProjComplex<F>]) -> Result<K0Check> {
    let n = p.ctx.algebra.num_simples()?;
    let cols: Vec<Vec<i128>> = summand_idempotents(p)?.iter().map(|e| k0_class_of(p, e)).collect::<Result<_>>()?;
    let tcols: Vec<Vec<i128>> = targets.iter().map(k0_class).collect::<Result<_>>()?;
    let summands = IntMatrix::from_fn(n, cols.len(), |r, c| cols[c][r]);
    let targets = IntMatrix::from_fn(n, tcols.len(), |r, c| tcols[c][r]);
    let smith = smith_normal_form(&summands);
    let pass = tcols.iter().all(|t| integer_solvable(&smith.left, &smith.diagonal, t));
    Ok(K0Check { summands, targets, invariant_factors: smith.diagonal, pass })
}

/// `M c = t` over `Z` given `L M R = diag(d)`: `d_i y_i = (L t)_i`.
fn integer_solvable(left: &IntMatrix, diagonal: &[i128], t: &[i128]) -> bool {
    let lt = left.mul_vec(t);
    lt.iter().enumerate().all(|(i, &v)| match diagonal.get(i) {
        Some(&d) if d != 0 => v % d == 0,
        _ => v == 0,
    })
}

/// The classes of the summands form a basis of `Z^n`.
pub fn is_unimodular_basis(check: &K0Check) -> bool {
    let n = check.summands.rows();
    let nonzero: Vec<i128> = check.invariant_factors.iter().copied().filter(|&d| d != 0).collect();
    nonzero.len() == n && nonzero.iter().all(|d| d.abs() == 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn solvability_over_integers() {
        let m = IntMatrix::from_rows(&[vec![2, 0], vec![0, 1]]).unwrap();
        let s = smith_normal_form(&m);
        assert!(integer_solvable(&s.left, &s.diagonal, &[4, 3]));
        assert!(!integer_solvable(&s.left, &s.diagonal, &[1, 0]));
    }
}
