//! Dense univariate polynomials over a field.

use rand::Rng;

use crate::field::Field;

/// Coefficients in increasing degree; no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly<F: Field> {
    coeffs: Vec<F::Elem>,
}

impl<F: Field> Poly<F> {
    pub fn new(f: &F, mut coeffs: Vec<F::Elem>) -> Self {
        while coeffs.last().is_some_and(|c| f.is_zero(c)) {
            coeffs.pop();
        }
        Poly { coeffs }
    }
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }
    pub fn constant(f: &F, c: F::Elem) -> Self {
        Self::new(f, vec![c])
    }
    pub fn x(f: &F) -> Self {
        Poly { coeffs: vec![f.zero(), f.one()] }
    }
    /// `x - r`
    pub fn linear(f: &F, r: &F::Elem) -> Self {
        Poly { coeffs: vec![f.neg(r), f.one()] }
    }
    pub fn coeffs(&self) -> &[F::Elem] {
        &self.coeffs
    }
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }
    pub fn lead(&self) -> Option<&F::Elem> {
        self.coeffs.last()
    }

    pub fn add(&self, f: &F, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        let z = f.zero();
        let c = (0..n).map(|i| f.add(self.coeffs.get(i).unwrap_or(&z), o.coeffs.get(i).unwrap_or(&z))).collect();
        Self::new(f, c)
    }
    pub fn sub(&self, f: &F, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        let z = f.zero();
        let c = (0..n).map(|i| f.sub(self.coeffs.get(i).unwrap_or(&z), o.coeffs.get(i).unwrap_or(&z))).collect();
        Self::new(f, c)
    }
    pub fn scale(&self, f: &F, s: &F::Elem) -> Self {
        Self::new(f, self.coeffs.iter().map(|c| f.mul(c, s)).collect())
    }
    pub fn mul(&self, f: &F, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let mut c = vec![f.zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if f.is_zero(a) {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                f.add_mul(&mut c[i + j], a, b);
            }
        }
        Self::new(f, c)
    }

    /// Quotient and remainder; panics on division by zero.
    pub fn div_rem(&self, f: &F, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by zero polynomial");
        let inv = f.inv(d.lead().unwrap()).unwrap();
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut q = vec![f.zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let c = f.mul(&r[k + dd], &inv);
            if f.is_zero(&c) {
                continue;
            }
            for (j, b) in d.coeffs.iter().enumerate() {
                f.sub_mul(&mut r[k + j], &c, b);
            }
            q[k] = c;
        }
        r.truncate(dd);
        (Self::new(f, q), Self::new(f, r))
    }
    pub fn rem(&self, f: &F, d: &Self) -> Self {
        self.div_rem(f, d).1
    }

    pub fn monic(&self, f: &F) -> Self {
        match self.lead() {
            None => Self::zero(),
            Some(l) => self.scale(f, &f.inv(l).unwrap()),
        }
    }

    pub fn gcd(f: &F, a: &Self, b: &Self) -> Self {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.is_zero() {
            let r = a.rem(f, &b);
            a = b;
            b = r;
        }
        a.monic(f)
    }

    pub fn eval(&self, f: &F, x: &F::Elem) -> F::Elem {
        let mut acc = f.zero();
        for c in self.coeffs.iter().rev() {
            acc = f.add(&f.mul(&acc, x), c);
        }
        acc
    }

    pub fn derivative(&self, f: &F) -> Self {
        let c = self.coeffs.iter().enumerate().skip(1).map(|(i, c)| f.mul(c, &f.from_i64(i as i64))).collect();
        Self::new(f, c)
    }

    /// Returns `(g, s, t)` with `g = s*a + t*b` monic.
    pub fn xgcd(f: &F, a: &Self, b: &Self) -> (Self, Self, Self) {
        let one = Self::constant(f, f.one());
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (one.clone(), Self::zero());
        let (mut t0, mut t1) = (Self::zero(), one);
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(f, &r1);
            let s = s0.sub(f, &q.mul(f, &s1));
            let t = t0.sub(f, &q.mul(f, &t1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
            t0 = std::mem::replace(&mut t1, t);
        }
        match r0.lead().cloned() {
            None => (r0, s0, t0),
            Some(l) => {
                let inv = f.inv(&l).unwrap();
                (r0.scale(f, &inv), s0.scale(f, &inv), t0.scale(f, &inv))
            }
        }
    }

    /// `(x - r)^k`
    pub fn linear_power(f: &F, r: &F::Elem, k: usize) -> Self {
        let l = Self::linear(f, r);
        (0..k).fold(Self::constant(f, f.one()), |acc, _| acc.mul(f, &l))
    }

    /// Multiplicity of `r` as a root.
    pub fn root_multiplicity(&self, f: &F, r: &F::Elem) -> usize {
        let l = Self::linear(f, r);
        let mut p = self.clone();
        let mut k = 0;
        while !p.is_zero() {
            let (q, rem) = p.div_rem(f, &l);
            if !rem.is_zero() {
                break;
            }
            p = q;
            k += 1;
        }
        k
    }

    /// `self^e mod m`
    pub fn pow_mod(&self, f: &F, mut e: u64, m: &Self) -> Self {
        let mut base = self.rem(f, m);
        let mut acc = Self::constant(f, f.one()).rem(f, m);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(f, &base).rem(f, m);
            }
            base = base.mul(f, &base).rem(f, m);
            e >>= 1;
        }
        acc
    }

    /// Distinct roots in the ground field, sorted by field enumeration order
    /// for finite fields. Over Q only rational roots are found.
    pub fn roots<R: Rng + ?Sized>(&self, f: &F, rng: &mut R) -> Vec<F::Elem> {
        if self.degree().unwrap_or(0) == 0 {
            return Vec::new();
        }
        match f.order() {
            Some(q) if q <= 1 << 12 => (0..q).map(|i| f.element(i)).filter(|x| f.is_zero(&self.eval(f, x))).collect(),
            Some(q) => {
                // split off the product of linear factors, then Cantor-Zassenhaus
                let x = Self::x(f);
                let xq = x.pow_mod(f, q, self);
                let g = Self::gcd(f, self, &xq.sub(f, &x));
                let mut out = Vec::new();
                split_linear(f, &g, q, rng, &mut out);
                out.sort_by_key(|r| f.residue(r));
                out
            }
            None => rational_roots(f, self),
        }
    }
}

fn split_linear<F: Field, R: Rng + ?Sized>(f: &F, g: &Poly<F>, q: u64, rng: &mut R, out: &mut Vec<F::Elem>) {
    match g.degree() {
        None | Some(0) => {}
        Some(1) => {
            let m = g.monic(f);
            out.push(f.neg(&m.coeffs[0]));
        }
        Some(_) => loop {
            let a = f.random(rng);
            let shifted = Poly::new(f, vec![a, f.one()]);
            let h = if q % 2 == 1 {
                shifted.pow_mod(f, (q - 1) / 2, g).sub(f, &Poly::constant(f, f.one()))
            } else {
                shifted
            };
            let d = Poly::gcd(f, g, &h);
            let dd = d.degree().unwrap_or(0);
            if dd > 0 && dd < g.degree().unwrap() {
                let (other, _) = g.div_rem(f, &d);
                split_linear(f, &d, q, rng, out);
                split_linear(f, &other, q, rng, out);
                return;
            }
        },
    }
}

// Rational root test on the primitive integer multiple.
fn rational_roots<F: Field>(f: &F, p: &Poly<F>) -> Vec<F::Elem> {
    use num_bigint::BigInt;
    use num_integer::Integer;
    use num_traits::{One, Signed, Zero};
    let sc: Vec<_> = p.coeffs.iter().map(|c| f.to_scalar(c)).collect();
    let mut lcm = BigInt::one();
    let mut fr = Vec::new();
    for s in &sc {
        match s {
            crate::field::Scalar::Rational(r) => {
                lcm = lcm.lcm(r.denom());
                fr.push(r.clone());
            }
            _ => return Vec::new(),
        }
    }
    let mut ints: Vec<BigInt> = fr.iter().map(|r| (r * num_rational::BigRational::from_integer(lcm.clone())).to_integer()).collect();
    // strip x factors
    let mut roots = Vec::new();
    let zeros = ints.iter().take_while(|c| c.is_zero()).count();
    if zeros > 0 {
        roots.push(f.zero());
        ints.drain(..zeros);
    }
    let a0 = ints[0].abs();
    let an = ints.last().unwrap().abs();
    if ints.len() > 1 && a0.bits() <= 40 && an.bits() <= 40 {
        let divs = |n: &BigInt| -> Vec<BigInt> {
            let n: u64 = n.try_into().unwrap();
            (1..=n).filter(|d| n % d == 0).map(BigInt::from).collect()
        };
        let (ps, qs) = (divs(&a0), divs(&an));
        if ps.len() * qs.len() <= 1 << 16 {
            let mut seen = std::collections::HashSet::new();
            for pp in &ps {
                for qq in &qs {
                    for s in [1, -1] {
                        let r = num_rational::BigRational::new(pp * s, qq.clone());
                        if !seen.insert(r.clone()) {
                            continue;
                        }
                        let x = f.from_bigint(r.numer());
                        let x = f.div(&x, &f.from_bigint(r.denom())).unwrap();
                        if f.is_zero(&p.eval(f, &x)) {
                            roots.push(x);
                        }
                    }
                }
            }
        }
    }
    roots
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};
    use rand::SeedableRng;

    #[test]
    fn division_and_gcd() {
        let f = PrimeField::new(7).unwrap();
        let a = Poly::new(&f, vec![6, 0, 1]); // x^2 - 1
        let b = Poly::new(&f, vec![1, 1]); // x + 1
        let (q, r) = a.div_rem(&f, &b);
        assert!(r.is_zero());
        assert_eq!(q, Poly::new(&f, vec![6, 1]));
        assert_eq!(Poly::gcd(&f, &a, &Poly::new(&f, vec![6, 1])), Poly::new(&f, vec![6, 1]));
    }

    #[test]
    fn extended_gcd_identity() {
        let f = PrimeField::new(7).unwrap();
        let a = Poly::linear_power(&f, &2, 2);
        let b = Poly::linear(&f, &5).mul(&f, &Poly::new(&f, vec![1, 0, 1]));
        let (g, s, t) = Poly::xgcd(&f, &a, &b);
        assert_eq!(g, Poly::constant(&f, 1));
        assert_eq!(s.mul(&f, &a).add(&f, &t.mul(&f, &b)), g);
        assert_eq!(a.mul(&f, &b).root_multiplicity(&f, &2), 2);
    }

    #[test]
    fn roots_small_and_large_fields() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1);
        let f = PrimeField::new(5).unwrap();
        let p = Poly::linear(&f, &2).mul(&f, &Poly::linear(&f, &3)).mul(&f, &Poly::new(&f, vec![2, 0, 1]));
        assert_eq!(p.roots(&f, &mut rng), vec![2, 3]);
        let f = PrimeField::new(1_000_003).unwrap();
        let p = Poly::linear(&f, &17).mul(&f, &Poly::linear(&f, &999_999)).mul(&f, &Poly::linear(&f, &4));
        assert_eq!(p.roots(&f, &mut rng), vec![4, 17, 999_999]);
    }

    #[test]
    fn rational_roots_found() {
        let f = Rationals;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1);
        let half = f.div(&f.one(), &f.from_i64(2)).unwrap();
        let p = Poly::linear(&f, &half).mul(&f, &Poly::linear(&f, &f.from_i64(-3))).mul(&f, &Poly::new(&f, vec![f.from_i64(2), f.zero(), f.one()]));
        let mut r = p.roots(&f, &mut rng);
        r.sort();
        assert_eq!(r, vec![f.from_i64(-3), half]);
    }
}
