//! Jacobson radical, primitive idempotents and their isomorphism classes.
//!
//! The radical is the kernel of the trace form in characteristic 0 or `p > dim`;
//! for small `p` the iterated trace functionals of Cohen, Ivanyos and Wales are
//! used. Idempotents are cut out of commutative subalgebras `k[s]` by the
//! Chinese remainder theorem, so they are exact and need no lifting.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::Algebra;
use crate::error::{Error, Result};
use crate::exact::{vecops, Echelon, Matrix, Poly, Span, Vector};
use crate::field::Field;

const SPLIT_TRIES: usize = 256;

#[derive(Clone, Debug)]
pub struct Structure<F: Field> {
    pub radical: Vec<Vector<F>>,
    pub radical_echelon: Echelon<F>,
    /// Complete set of orthogonal primitive idempotents.
    pub idempotents: Vec<Vector<F>>,
    /// Isomorphism class of each idempotent, numbered by first occurrence.
    pub classes: Vec<usize>,
}

impl<F: Field> Structure<F> {
    pub(super) fn compute(a: &Algebra<F>) -> Result<Self> {
        let radical = radical(a)?;
        verify_radical(a, &radical)?;
        let radical_echelon = a.echelon_of(&radical);
        let mut rng = ChaCha8Rng::seed_from_u64(0xA1B2);
        let mut idempotents = Vec::new();
        if a.dim() > 0 {
            split(a, &radical_echelon, a.unit().clone(), &mut rng, &mut idempotents)?;
        }
        idempotents.sort_by_key(|e| e.iter().position(|x| !a.field().is_zero(x)));
        let n = idempotents.len();
        let mut classes = vec![usize::MAX; n];
        let mut next = 0;
        for i in 0..n {
            if classes[i] != usize::MAX {
                continue;
            }
            classes[i] = next;
            for j in i + 1..n {
                if classes[j] == usize::MAX && linked(a, &radical_echelon, &idempotents[i], &idempotents[j]) {
                    classes[j] = next;
                }
            }
            next += 1;
        }
        // Wedderburn: A/J ≅ ∏ M_{n_c}(k)
        let semisimple_dim: usize = (0..next).map(|c| classes.iter().filter(|&&x| x == c).count().pow(2)).sum();
        if semisimple_dim != a.dim() - radical.len() {
            return Err(Error::AlgebraViolation(format!(
                "semisimple quotient has dimension {} but idempotents account for {semisimple_dim}",
                a.dim() - radical.len()
            )));
        }
        Ok(Structure { radical, radical_echelon, idempotents, classes })
    }

    /// Index of the first idempotent in each class.
    pub fn representatives(&self) -> Vec<usize> {
        let k = self.classes.iter().max().map_or(0, |m| m + 1);
        (0..k).map(|c| self.classes.iter().position(|&x| x == c).unwrap()).collect()
    }

    pub fn in_radical(&self, x: &[F::Elem]) -> bool {
        self.radical_echelon.contains(x)
    }
}

fn linked<F: Field>(a: &Algebra<F>, rad: &Echelon<F>, e: &[F::Elem], f: &[F::Elem]) -> bool {
    a.slice_basis(e, f).iter().any(|x| !rad.contains(x))
}

fn radical<F: Field>(a: &Algebra<F>) -> Result<Vec<Vector<F>>> {
    let f = a.field();
    let n = a.dim();
    let p = f.characteristic();
    if p == 0 || p as usize > n {
        let traces: Vec<F::Elem> = (0..n).map(|k| trace(f, &a.left_basis_matrix(k))).collect();
        let g = Matrix::from_fn(f, n, n, |j, i| {
            let mut acc = f.zero();
            for (k, c) in a.basis_product(i, j) {
                f.add_mul(&mut acc, c, &traces[*k]);
            }
            acc
        });
        return Ok(g.kernel_basis());
    }
    // I_{-1} = A;  I_i = { a ∈ I_{i-1} : g_i(ab) = 0 for all b }
    let mut ideal = a.basis();
    let mut pi = 1u128;
    let mut i = 0u32;
    while pi <= n as u128 {
        let modulus = pi * p as u128;
        let cols: Vec<Vec<F::Elem>> = ideal
            .iter()
            .map(|x| {
                (0..n)
                    .map(|j| {
                        let xb = a.multiply(x, &a.basis_element(j));
                        let t = lifted_power_trace(f, &a.left_mult_matrix(&xb), i, modulus);
                        f.from_i64(((t / pi) % p as u128) as i64)
                    })
                    .collect()
            })
            .collect();
        if cols.is_empty() {
            break;
        }
        let g = Matrix::from_columns(f, n, &cols);
        ideal = g.kernel_basis().iter().map(|c| vecops::combination(f, n, c, &ideal)).collect();
        pi *= p as u128;
        i += 1;
    }
    Ok(ideal)
}

fn trace<F: Field>(f: &F, m: &Matrix<F>) -> F::Elem {
    let mut acc = f.zero();
    for i in 0..m.rows() {
        acc = f.add(&acc, m.get(i, i));
    }
    acc
}

/// Trace of `M^(p^i)` for the integer lift of `M`, reduced mod `modulus`.
fn lifted_power_trace<F: Field>(f: &F, m: &Matrix<F>, i: u32, modulus: u128) -> u128 {
    let n = m.rows();
    let p = f.characteristic() as u128;
    let mut cur: Vec<u128> = m.data().iter().map(|x| f.residue(x).unwrap() as u128).collect();
    for _ in 0..i {
        // raise to the p-th power
        let base = cur.clone();
        let mut acc = cur.clone();
        for _ in 1..p {
            acc = int_mul(&acc, &base, n, modulus);
        }
        cur = acc;
    }
    (0..n).map(|k| cur[k * n + k]).sum::<u128>() % modulus
}

fn int_mul(a: &[u128], b: &[u128], n: usize, modulus: u128) -> Vec<u128> {
    let mut out = vec![0u128; n * n];
    for r in 0..n {
        for k in 0..n {
            let x = a[r * n + k];
            if x == 0 {
                continue;
            }
            for c in 0..n {
                out[r * n + c] = (out[r * n + c] + x * b[k * n + c]) % modulus;
            }
        }
    }
    out
}

fn verify_radical<F: Field>(a: &Algebra<F>, rad: &[Vector<F>]) -> Result<()> {
    let e = a.echelon_of(rad);
    for x in rad {
        for j in 0..a.dim() {
            let b = a.basis_element(j);
            if !e.contains(&a.multiply(x, &b)) || !e.contains(&a.multiply(&b, x)) {
                return Err(Error::AlgebraViolation("computed radical is not an ideal".into()));
            }
        }
    }
    let mut power = rad.to_vec();
    for _ in 0..=a.dim() {
        if power.is_empty() {
            return Ok(());
        }
        let prods = power.iter().flat_map(|x| rad.iter().map(move |y| a.multiply(x, y)));
        power = a.span_of(prods).into_basis();
    }
    Err(Error::AlgebraViolation("computed radical is not nilpotent".into()))
}

/// Dimension of `u(A/J)u`.
pub(super) fn top_dim<F: Field>(a: &Algebra<F>, rad: &Echelon<F>, u: &[F::Elem]) -> usize {
    let corner = a.slice_basis(u, u);
    let mut e = rad.clone();
    let before = e.rank();
    for v in corner {
        e.insert(v);
    }
    e.rank() - before
}

fn split<F: Field>(a: &Algebra<F>, rad: &Echelon<F>, u: Vector<F>, rng: &mut ChaCha8Rng, out: &mut Vec<Vector<F>>) -> Result<()> {
    let f = a.field();
    match top_dim(a, rad, &u) {
        0 => return Err(Error::AlgebraViolation("nonzero idempotent inside the radical".into())),
        1 => {
            out.push(u);
            return Ok(());
        }
        _ => {}
    }
    let n = a.dim();
    for t in 0..n + SPLIT_TRIES {
        let s = if t < n { a.basis_element(t) } else { (0..n).map(|_| f.random(rng)).collect() };
        let s = a.multiply(&a.multiply(&u, &s), &u);
        if let Some(e) = crt_idempotent(a, &u, &s, rng) {
            let rest = vecops::sub(f, &u, &e);
            split(a, rad, e, rng, out)?;
            return split(a, rad, rest, rng, out);
        }
    }
    Err(Error::NonSplit)
}

/// Minimal polynomial of `s` in the algebra `uAu`.
pub(crate) fn minimal_polynomial<F: Field>(a: &Algebra<F>, u: &[F::Elem], s: &[F::Elem]) -> Poly<F> {
    let f = a.field();
    let mut span = Span::new(f, a.dim());
    let mut cur = u.to_vec();
    loop {
        match span.coords(&cur) {
            Some(c) => {
                let mut coeffs: Vec<F::Elem> = c.iter().map(|x| f.neg(x)).collect();
                coeffs.push(f.one());
                return Poly::new(f, coeffs);
            }
            None => {
                span.push(cur.clone());
                cur = a.multiply(&cur, s);
            }
        }
    }
}

/// `p(s)` with `u` as the unit.
pub(crate) fn eval_poly<F: Field>(a: &Algebra<F>, u: &[F::Elem], p: &Poly<F>, s: &[F::Elem]) -> Vector<F> {
    let f = a.field();
    let mut acc = a.zero();
    for c in p.coeffs().iter().rev() {
        acc = a.multiply(&acc, s);
        vecops::axpy(f, &mut acc, c, u);
    }
    acc
}

fn crt_idempotent<F: Field>(a: &Algebra<F>, u: &[F::Elem], s: &[F::Elem], rng: &mut ChaCha8Rng) -> Option<Vector<F>> {
    let f = a.field();
    let m = minimal_polynomial(a, u, s);
    let deg = m.degree()?;
    for r in m.roots(f, rng) {
        let k = m.root_multiplicity(f, &r);
        if k == deg {
            continue;
        }
        let lin = Poly::linear_power(f, &r, k);
        let (g, _) = m.div_rem(f, &lin);
        let (_, _, t) = Poly::xgcd(f, &lin, &g);
        let e = eval_poly(a, u, &t.mul(f, &g).rem(f, &m), s);
        debug_assert!(a.is_idempotent(&e));
        return Some(e);
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};

    #[test]
    fn radicals_of_small_algebras() {
        let f = Rationals;
        assert!(Algebra::matrix_algebra(&f, 2).radical_basis().unwrap().is_empty());
        let t = Algebra::truncated_polynomial(&f, 3);
        let r = t.radical_basis().unwrap();
        assert_eq!(r.len(), 2);
        let e = t.echelon_of(&r);
        assert!(e.contains(&t.basis_element(1)) && e.contains(&t.basis_element(2)));
    }

    #[test]
    fn small_characteristic_radical() {
        // dim 3 > p = 2: trace form alone would see x^2 = 0 and 1 as degenerate
        for p in [2, 3] {
            let f = PrimeField::new(p).unwrap();
            let t = Algebra::truncated_polynomial(&f, 3);
            assert_eq!(t.radical_basis().unwrap().len(), 2, "p = {p}");
            let m = Algebra::matrix_algebra(&f, 2);
            assert!(m.radical_basis().unwrap().is_empty(), "p = {p}");
            let s = Algebra::split_semisimple(&f, 3);
            assert!(s.radical_basis().unwrap().is_empty(), "p = {p}");
        }
    }

    #[test]
    fn idempotents_of_small_algebras() {
        let f = PrimeField::new(2).unwrap();
        let t = Algebra::truncated_polynomial(&f, 3);
        assert_eq!(t.primitive_idempotents().unwrap(), vec![t.unit().clone()]);
        let s = Algebra::split_semisimple(&f, 2);
        assert_eq!(s.primitive_idempotents().unwrap(), vec![vec![1, 0], vec![0, 1]]);
        let m = Algebra::matrix_algebra(&f, 2);
        let idem = m.primitive_idempotents().unwrap();
        assert_eq!(idem.len(), 2);
        assert_eq!(m.num_simples().unwrap(), 1);
        assert!(!m.is_basic().unwrap());
        assert_eq!(vecops::add(&f, &idem[0], &idem[1]), *m.unit());
        assert!(m.is_zero(&m.multiply(&idem[0], &idem[1])));
    }

    #[test]
    fn non_split_over_rationals() {
        // Q[x]/(x^2 + 1) is a field, not split
        let f = Rationals;
        let one = f.one();
        let table = vec![vec![(0, one.clone())], vec![(1, one.clone())], vec![(1, one.clone())], vec![(0, f.neg(&one))]];
        let a = Algebra::from_sparse(&f, vec!["1".into(), "i".into()], table, vec![f.one(), f.zero()]);
        a.check().unwrap();
        assert_eq!(a.primitive_idempotents(), Err(Error::NonSplit));
    }
}
