//! Homotopy classes of chain maps between complexes of projectives.

use crate::algebra::{Algebra, Sparse};
use crate::error::{Error, Result};
use crate::exact::{vecops, Matrix, Span, Vector};
use crate::field::Field;

use super::amatrix::AMatrix;
use super::complex::{ChainMap, ProjComplex};

/// Coordinates of degreewise maps `X^d → Y^d` in the slice bases.
#[derive(Clone, Debug)]
struct Layout {
    /// `(degree, row, column, source idempotent, target idempotent, offset, len)`
    entries: Vec<(i32, usize, usize, usize, usize, usize, usize)>,
    dim: usize,
}

impl Layout {
    fn new<F: Field>(x: &ProjComplex<F>, y: &ProjComplex<F>) -> Self {
        let mut entries = Vec::new();
        let mut off = 0;
        if !x.is_zero() {
            for d in x.lo..=x.hi() {
                for (k, &s) in x.term(d).iter().enumerate() {
                    for (l, &t) in y.term(d).iter().enumerate() {
                        let len = x.ctx.slice(s, t).len();
                        if len > 0 {
                            entries.push((d, k, l, s, t, off, len));
                            off += len;
                        }
                    }
                }
            }
        }
        Layout { entries, dim: off }
    }

    fn unflatten<F: Field>(&self, c: &[F::Elem], x: &ProjComplex<F>, y: &ProjComplex<F>) -> ChainMap<F> {
        let a = &x.ctx.algebra;
        let f = a.field();
        let mut m = ChainMap::zero(x, y);
        for &(d, k, l, s, t, off, len) in &self.entries {
            let slice = x.ctx.slice(s, t);
            let v = vecops::combination(f, a.dim(), &c[off..off + len], slice.basis());
            m.blocks[(d - x.lo) as usize].set(k, l, v);
        }
        m
    }

    fn flatten<F: Field>(&self, m: &ChainMap<F>, x: &ProjComplex<F>, y: &ProjComplex<F>) -> Option<Vector<F>> {
        let a = &x.ctx.algebra;
        let f = a.field();
        let mut out = vecops::zero(f, self.dim);
        for &(d, k, l, s, t, off, len) in &self.entries {
            let b = m.block(a, d, x.term(d).len(), y.term(d).len());
            let c = x.ctx.slice(s, t).coords(b.get(k, l))?;
            out[off..off + len].clone_from_slice(&c);
        }
        Some(out)
    }
}

/// `Hom_{K(A)}(X, Y)`: chain maps modulo null-homotopic ones.
#[derive(Clone, Debug)]
pub struct HomSpace<F: Field> {
    pub source: ProjComplex<F>,
    pub target: ProjComplex<F>,
    layout: Layout,
    /// Basis of the chain maps, in layout coordinates.
    pub cycles: Vec<Vector<F>>,
    pub boundary_dim: usize,
    /// Null-homotopic maps followed by class representatives.
    quotient: Span<F>,
    cycle_span: Span<F>,
    pub classes: Vec<ChainMap<F>>,
}

impl<F: Field> HomSpace<F> {
    pub fn dim(&self) -> usize {
        self.classes.len()
    }

    /// Chain maps of `X → Y` (all, not up to homotopy).
    pub fn chain_maps(&self) -> Vec<ChainMap<F>> {
        self.cycles.iter().map(|c| self.layout.unflatten(c, &self.source, &self.target)).collect()
    }

    /// Coordinates of the class of a chain map; `None` if `f` is not a chain map.
    pub fn class_of(&self, f: &ChainMap<F>) -> Option<Vector<F>> {
        let c = self.layout.flatten(f, &self.source, &self.target)?;
        let q = self.quotient.coords(&c)?;
        Some(q[self.boundary_dim..].to_vec())
    }

    /// Coordinates of a chain map in the basis of all chain maps.
    pub fn cycle_coords(&self, f: &ChainMap<F>) -> Option<Vector<F>> {
        let c = self.layout.flatten(f, &self.source, &self.target)?;
        self.cycle_span.coords(&c)
    }

    pub fn map_of(&self, c: &[F::Elem]) -> ChainMap<F> {
        let f = self.source.ctx.field();
        let mut out = ChainMap::zero(&self.source, &self.target);
        for (ci, m) in c.iter().zip(&self.classes) {
            if !f.is_zero(ci) {
                out = out.add(f, &m.scale(f, ci));
            }
        }
        out
    }

    pub fn is_null_homotopic(&self, f: &ChainMap<F>) -> bool {
        let fd = self.source.ctx.field();
        self.class_of(f).is_some_and(|c| vecops::is_zero(fd, &c))
    }
}

/// Degree-0 homotopy classes `X → Y`.
pub fn hom_complexes<F: Field>(x: &ProjComplex<F>, y: &ProjComplex<F>) -> Result<HomSpace<F>> {
    if !x.ctx.same(&y.ctx) {
        return Err(Error::DifferentialMismatch("complexes over different projective sets".into()));
    }
    let a = x.ctx.algebra.as_ref();
    let f = a.field();
    let n = a.dim();
    let layout = Layout::new(x, y);
    let (lo, hi) = (x.lo - 1, x.hi() + 1);
    let dx: Vec<AMatrix<F>> = (lo..=hi).map(|d| x.diff(d)).collect();
    let dy: Vec<AMatrix<F>> = (lo - 1..=hi).map(|d| y.diff(d)).collect();
    let dx_at = |d: i32| &dx[(d - lo) as usize];
    let dy_at = |d: i32| &dy[(d - lo + 1) as usize];

    // chain condition: (d_X f - f d_Y)^d = 0 with entries indexed by X^d × Y^{d+1}
    let mut res_off = std::collections::HashMap::new();
    let mut rows = 0;
    if !x.is_zero() {
        for d in x.lo - 1..=x.hi() {
            res_off.insert(d, rows);
            rows += x.term(d).len() * y.term(d + 1).len() * n;
        }
    }
    let mut columns: Vec<Vector<F>> = Vec::with_capacity(layout.dim);
    for &(e, k0, l0, s, t, _, _) in &layout.entries {
        for b in x.ctx.slice(s, t).basis() {
            let mut col = vecops::zero(f, rows);
            // d_X^{e-1} f^e: entry (k, l0) in degree e - 1
            let (w, base) = (y.term(e).len(), res_off[&(e - 1)]);
            for k in 0..x.term(e - 1).len() {
                let c = dx_at(e - 1).get(k, k0);
                if !vecops::is_zero(f, c) {
                    let p = a.multiply(c, b);
                    let o = base + (k * w + l0) * n;
                    for (z, v) in col[o..o + n].iter_mut().zip(&p) {
                        *z = f.add(z, v);
                    }
                }
            }
            // f^e d_Y^e: entry (k0, l) in degree e
            let (w, base) = (y.term(e + 1).len(), res_off[&e]);
            for l in 0..w {
                let c = dy_at(e).get(l0, l);
                if !vecops::is_zero(f, c) {
                    let p = a.multiply(b, c);
                    let o = base + (k0 * w + l) * n;
                    for (z, v) in col[o..o + n].iter_mut().zip(&p) {
                        *z = f.sub(z, v);
                    }
                }
            }
            columns.push(col);
        }
    }
    let cycles = dense_kernel(f, layout.dim, &columns);

    // null-homotopic maps: f^d = d_X^d h^{d+1} + h^d d_Y^{d-1}, h^d : X^d → Y^{d-1}
    let index: std::collections::HashMap<(i32, usize, usize), usize> = layout.entries.iter().enumerate().map(|(i, &(d, k, l, ..))| ((d, k, l), i)).collect();
    let mut boundaries = Span::new(f, layout.dim);
    if !x.is_zero() {
        for e in x.lo..=x.hi() {
            for (k0, &s) in x.term(e).iter().enumerate() {
                for (l0, &t) in y.term(e - 1).iter().enumerate() {
                    for b in x.ctx.slice(s, t).basis() {
                        let mut entries: Vec<(usize, Vector<F>)> = Vec::new();
                        for k in 0..x.term(e - 1).len() {
                            let c = dx_at(e - 1).get(k, k0);
                            if !vecops::is_zero(f, c) {
                                entries.push((index[&(e - 1, k, l0)], a.multiply(c, b)));
                            }
                        }
                        for l in 0..y.term(e).len() {
                            let c = dy_at(e - 1).get(l0, l);
                            if !vecops::is_zero(f, c) {
                                entries.push((index[&(e, k0, l)], a.multiply(b, c)));
                            }
                        }
                        let mut v = vecops::zero(f, layout.dim);
                        for (i, p) in entries {
                            let (.., s2, t2, off, len) = layout.entries[i];
                            let c = x.ctx.slice(s2, t2).coords(&p).expect("null-homotopic map lies in the slices");
                            for (z, w) in v[off..off + len].iter_mut().zip(&c) {
                                *z = f.add(z, w);
                            }
                        }
                        boundaries.push(v);
                    }
                }
            }
        }
    }
    let boundary_dim = boundaries.len();
    let mut quotient = boundaries;
    let mut reps = Vec::new();
    for z in &cycles {
        if quotient.push(z.clone()) {
            reps.push(z.clone());
        }
    }
    let cycle_span = Span::from_vectors(f, layout.dim, cycles.iter().cloned());
    let classes = reps.iter().map(|c| layout.unflatten(c, x, y)).collect();
    Ok(HomSpace { source: x.clone(), target: y.clone(), layout, cycles, boundary_dim, quotient, cycle_span, classes })
}

/// `Hom_{K(A)}(X, Y[n])`.
pub fn hom_homotopy<F: Field>(x: &ProjComplex<F>, y: &ProjComplex<F>, n: i32) -> Result<HomSpace<F>> {
    hom_complexes(x, &y.shift(n))
}

/// `Hom(X, X[n]) = 0` for all `n ≠ 0`; returns the first failing `n`.
pub fn selforthogonality_failure<F: Field>(x: &ProjComplex<F>) -> Result<Option<i32>> {
    if x.is_zero() {
        return Ok(None);
    }
    let span = x.hi() - x.lo;
    for m in 1..=span {
        for n in [m, -m] {
            if hom_homotopy(x, x, n)?.dim() > 0 {
                return Ok(Some(n));
            }
        }
    }
    Ok(None)
}

pub fn is_selforthogonal<F: Field>(x: &ProjComplex<F>) -> Result<bool> {
    Ok(selforthogonality_failure(x)?.is_none())
}

/// An algebra of chain-map classes with product "first, then second".
#[derive(Clone, Debug)]
pub struct ComplexEnd<F: Field> {
    pub algebra: Algebra<F>,
    pub hom: HomSpace<F>,
}

/// `End_{K(A)}(X)` with left-to-right composition.
pub fn end_algebra_complex<F: Field>(x: &ProjComplex<F>) -> Result<ComplexEnd<F>> {
    let hom = hom_complexes(x, x)?;
    let f = x.ctx.field();
    let d = hom.dim();
    let mut table: Vec<Sparse<F>> = Vec::with_capacity(d * d);
    for p in &hom.classes {
        for q in &hom.classes {
            let c = hom.class_of(&p.then(q, x, x, x)).expect("composite of chain maps");
            table.push(c.into_iter().enumerate().filter(|(_, v)| !f.is_zero(v)).collect());
        }
    }
    let unit = if d == 0 { Vec::new() } else { hom.class_of(&x.identity()).expect("identity") };
    let labels = (0..d).map(|i| format!("c{i}")).collect();
    Ok(ComplexEnd { algebra: Algebra::from_sparse(f, labels, table, unit), hom })
}

/// The algebra of all chain maps `X → X` (no homotopy quotient).
pub fn strict_end_algebra<F: Field>(x: &ProjComplex<F>) -> Result<(Algebra<F>, Vec<ChainMap<F>>)> {
    let hom = hom_complexes(x, x)?;
    let f = x.ctx.field();
    let maps = hom.chain_maps();
    let d = maps.len();
    let mut table: Vec<Sparse<F>> = Vec::with_capacity(d * d);
    for p in &maps {
        for q in &maps {
            let c = hom.cycle_coords(&p.then(q, x, x, x)).expect("composite of chain maps");
            table.push(c.into_iter().enumerate().filter(|(_, v)| !f.is_zero(v)).collect());
        }
    }
    let unit = if d == 0 { Vec::new() } else { hom.cycle_coords(&x.identity()).expect("identity") };
    let labels = (0..d).map(|i| format!("z{i}")).collect();
    Ok((Algebra::from_sparse(f, labels, table, unit), maps))
}

pub(crate) fn dense_kernel<F: Field>(f: &F, n: usize, columns: &[Vector<F>]) -> Vec<Vector<F>> {
    if columns.is_empty() || columns[0].is_empty() {
        return (0..n).map(|i| vecops::unit(f, n, i)).collect();
    }
    Matrix::from_columns(f, columns[0].len(), columns).kernel_basis()
}
