//! Compilation of a presentation to structure constants.
//!
//! Works in `kQ / (I + kQ_{≥N})` for growing `N`, one block per pair of
//! endpoints. Columns are ordered longest path first so that reduction
//! eliminates long paths and the surviving basis consists of short ones.
//! Compilation stops once every path of length `N-1` lies in the ideal.

use std::collections::HashMap;

use super::{NcPoly, Path, Presentation};
use crate::algebra::{Algebra, Sparse};
use crate::error::{Error, Result};
use crate::exact::{vecops, Echelon, Vector};
use crate::field::Field;

pub const DEFAULT_LENGTH_BOUND: usize = 30;

#[derive(Clone, Debug)]
struct Block<F: Field> {
    columns: Vec<Path>,
    index: HashMap<Path, usize>,
    ideal: Echelon<F>,
    /// For each free column, its position in the global basis.
    free: Vec<(usize, usize)>,
}

#[derive(Clone, Debug)]
pub struct PathAlgebra<F: Field> {
    pub presentation: Presentation,
    pub algebra: Algebra<F>,
    /// Path represented by each basis element.
    pub basis_paths: Vec<Path>,
    /// Paths of this length or longer vanish.
    pub nilpotency_bound: usize,
    blocks: HashMap<(usize, usize), Block<F>>,
}

impl<F: Field> PathAlgebra<F> {
    pub fn build(field: &F, pres: &Presentation, length_bound: usize) -> Result<Self> {
        for r in &pres.relations {
            if let Some(l) = r.min_length() {
                if l < 2 {
                    return Err(Error::NotAdmissible(format!("relation `{}` has a term of length {l}", pres.poly_label(r))));
                }
            }
        }
        for n in 1..=length_bound + 1 {
            let blocks = ideal_blocks(field, pres, n);
            let saturated = blocks.values().all(|b| b.columns.iter().filter(|p| p.len() == n - 1).all(|p| b.ideal.contains(&vecops::unit(field, b.columns.len(), b.index[p]))));
            if saturated {
                return Ok(Self::assemble(field, pres, blocks, n));
            }
        }
        Err(Error::NotFiniteDimensional(length_bound))
    }

    fn assemble(field: &F, pres: &Presentation, mut blocks: HashMap<(usize, usize), Block<F>>, n: usize) -> Self {
        let mut basis_paths: Vec<Path> = blocks.values().flat_map(|b| b.ideal.free_columns().into_iter().map(|c| b.columns[c].clone())).collect();
        basis_paths.sort_by(|a, b| (a.len(), &a.arrows, a.source).cmp(&(b.len(), &b.arrows, b.source)));
        let position: HashMap<&Path, usize> = basis_paths.iter().enumerate().map(|(i, p)| (p, i)).collect();
        for b in blocks.values_mut() {
            b.free = b.ideal.free_columns().into_iter().map(|c| (c, position[&b.columns[c]])).collect();
        }
        let mut pa = PathAlgebra {
            presentation: pres.clone(),
            algebra: Algebra::ground(field),
            basis_paths: basis_paths.clone(),
            nilpotency_bound: n,
            blocks,
        };
        let d = basis_paths.len();
        let mut table: Vec<Sparse<F>> = Vec::with_capacity(d * d);
        for p in &basis_paths {
            for q in &basis_paths {
                table.push(match p.then(q) {
                    Some(pq) => pa.reduce_sparse(&pq),
                    None => Vec::new(),
                });
            }
        }
        let labels = basis_paths.iter().map(|p| pres.path_label(p)).collect();
        let mut unit = vecops::zero(field, d);
        for v in 0..pres.vertices.len() {
            unit[position[&Path::trivial(v)]] = field.one();
        }
        pa.algebra = Algebra::from_sparse(field, labels, table, unit);
        pa
    }

    pub fn field(&self) -> &F {
        self.algebra.field()
    }

    fn reduce_sparse(&self, p: &Path) -> Sparse<F> {
        let f = self.field();
        if p.len() >= self.nilpotency_bound {
            return Vec::new();
        }
        let b = &self.blocks[&(p.source, p.target)];
        let coords = b.ideal.quotient_coords(&vecops::unit(f, b.columns.len(), b.index[p]));
        let mut out: Sparse<F> = b.free.iter().zip(coords).filter(|(_, c)| !f.is_zero(c)).map(|(&(_, g), c)| (g, c)).collect();
        out.sort_by_key(|e| e.0);
        out
    }

    /// Class of a path in the algebra.
    pub fn path_element(&self, p: &Path) -> Vector<F> {
        let mut v = self.algebra.zero();
        for (i, c) in self.reduce_sparse(p) {
            v[i] = c;
        }
        v
    }

    pub fn element(&self, r: &NcPoly) -> Vector<F> {
        let f = self.field();
        let mut v = self.algebra.zero();
        for (c, p) in &r.terms {
            vecops::axpy(f, &mut v, &f.from_i64(*c), &self.path_element(p));
        }
        v
    }

    pub fn vertex(&self, v: usize) -> Vector<F> {
        self.path_element(&Path::trivial(v))
    }

    pub fn arrow(&self, a: usize) -> Vector<F> {
        let ar = &self.presentation.arrows[a];
        self.path_element(&Path { source: ar.source, target: ar.target, arrows: vec![a] })
    }

    pub fn vertex_idempotents(&self) -> Vec<Vector<F>> {
        (0..self.presentation.vertices.len()).map(|v| self.vertex(v)).collect()
    }

    pub fn arrow_elements(&self) -> Vec<Vector<F>> {
        (0..self.presentation.arrows.len()).map(|a| self.arrow(a)).collect()
    }

    /// `dim e_v A e_w` for all vertex pairs.
    pub fn vertex_cartan(&self) -> Vec<Vec<usize>> {
        let n = self.presentation.vertices.len();
        (0..n).map(|v| (0..n).map(|w| self.basis_paths.iter().filter(|p| p.source == v && p.target == w).count()).collect()).collect()
    }

    /// Parses a relation-style expression (vertex names allowed) into an element.
    pub fn parse_element(&self, text: &str) -> Result<Vector<F>> {
        let poly = super::parse_poly(text, &self.presentation, 1, 1)?;
        Ok(self.element(&poly))
    }
}

fn paths_below(pres: &Presentation, n: usize) -> Vec<Path> {
    let mut out: Vec<Path> = (0..pres.vertices.len()).map(Path::trivial).collect();
    let mut frontier = out.clone();
    for _ in 1..n {
        let mut next = Vec::new();
        for p in &frontier {
            for (a, ar) in pres.arrows.iter().enumerate() {
                if ar.source == p.target {
                    let mut arrows = p.arrows.clone();
                    arrows.push(a);
                    next.push(Path { source: p.source, target: ar.target, arrows });
                }
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

type SparsePaths<F> = Vec<(Path, <F as Field>::Elem)>;

fn ideal_blocks<F: Field>(field: &F, pres: &Presentation, n: usize) -> HashMap<(usize, usize), Block<F>> {
    let mut blocks: HashMap<(usize, usize), Block<F>> = HashMap::new();
    let mut grouped: HashMap<(usize, usize), Vec<Path>> = HashMap::new();
    for p in paths_below(pres, n) {
        grouped.entry((p.source, p.target)).or_default().push(p);
    }
    for (key, mut cols) in grouped {
        cols.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.arrows.cmp(&b.arrows)));
        let index = cols.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();
        let len = cols.len();
        blocks.insert(key, Block { columns: cols, index, ideal: Echelon::new(field, len), free: Vec::new() });
    }
    let to_dense = |blocks: &HashMap<(usize, usize), Block<F>>, key: (usize, usize), v: &SparsePaths<F>| {
        let b = &blocks[&key];
        let mut d = vecops::zero(field, b.columns.len());
        for (p, c) in v {
            let i = b.index[p];
            d[i] = field.add(&d[i], c);
        }
        d
    };
    let mut queue: Vec<((usize, usize), SparsePaths<F>)> = Vec::new();
    for r in &pres.relations {
        let Some(key) = r.endpoints() else { continue };
        let v: SparsePaths<F> = r.terms.iter().filter(|(_, p)| p.len() < n).map(|(c, p)| (p.clone(), field.from_i64(*c))).collect();
        queue.push((key, v));
    }
    while let Some((key, v)) = queue.pop() {
        if v.is_empty() {
            continue;
        }
        let dense = to_dense(&blocks, key, &v);
        if vecops::is_zero(field, &dense) || !blocks.get_mut(&key).unwrap().ideal.insert(dense) {
            continue;
        }
        for (a, ar) in pres.arrows.iter().enumerate() {
            if ar.target == key.0 {
                let w: SparsePaths<F> = v
                    .iter()
                    .filter(|(p, _)| p.len() + 1 < n)
                    .map(|(p, c)| {
                        let mut arrows = vec![a];
                        arrows.extend(&p.arrows);
                        (Path { source: ar.source, target: p.target, arrows }, c.clone())
                    })
                    .collect();
                queue.push(((ar.source, key.1), w));
            }
            if ar.source == key.1 {
                let w: SparsePaths<F> = v
                    .iter()
                    .filter(|(p, _)| p.len() + 1 < n)
                    .map(|(p, c)| {
                        let mut arrows = p.arrows.clone();
                        arrows.push(a);
                        (Path { source: p.source, target: ar.target, arrows }, c.clone())
                    })
                    .collect();
                queue.push(((key.0, ar.target), w));
            }
        }
    }
    blocks
}
