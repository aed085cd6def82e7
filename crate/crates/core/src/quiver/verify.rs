//! Matching an algebra against a presentation, and Gabriel quivers.

use super::{NcPoly, PathAlgebra, Presentation};
use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::exact::{vecops, Echelon, Vector};
use crate::field::Field;

/// Images of vertices (idempotents) and arrows.
#[derive(Clone, Debug, PartialEq)]
pub struct Assignment<F: Field> {
    pub vertices: Vec<Vector<F>>,
    pub arrows: Vec<Vector<F>>,
}

#[derive(Clone, Debug, PartialEq)]
pub enum PresentationMatch<F: Field> {
    Match(Assignment<F>),
    NoMatch(String),
}

impl<F: Field> PresentationMatch<F> {
    pub fn is_match(&self) -> bool {
        matches!(self, PresentationMatch::Match(_))
    }
}

#[derive(Clone, Copy, Debug)]
pub struct SearchOptions {
    /// Maximum number of arrow candidates tried.
    pub budget: u64,
    /// Coefficient range `-grid..=grid` over the rationals.
    pub grid: i64,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { budget: 1_000_000, grid: 2 }
    }
}

fn eval_poly<F: Field>(a: &Algebra<F>, asg: &Assignment<F>, r: &NcPoly) -> Vector<F> {
    let f = a.field();
    let mut out = a.zero();
    for (c, p) in &r.terms {
        let mut v = asg.vertices[p.source].clone();
        for &ar in &p.arrows {
            v = a.multiply(&v, &asg.arrows[ar]);
        }
        vecops::axpy(f, &mut out, &f.from_i64(*c), &v);
    }
    out
}

/// Checks an assignment. Relations holding plus generation give a surjection
/// from the presented algebra; equal dimensions make it an isomorphism.
fn check_assignment<F: Field>(a: &Algebra<F>, pres: &Presentation, presented_dim: usize, asg: &Assignment<F>) -> Result<Option<String>> {
    let f = a.field();
    if presented_dim != a.dim() {
        return Ok(Some(format!("dimension mismatch: presentation {presented_dim}, algebra {}", a.dim())));
    }
    if asg.vertices.len() != pres.vertices.len() || asg.arrows.len() != pres.arrows.len() {
        return Ok(Some("assignment has the wrong number of entries".into()));
    }
    let mut sum = a.zero();
    for (i, e) in asg.vertices.iter().enumerate() {
        if !a.is_primitive_idempotent(e)? {
            return Ok(Some(format!("vertex {} is not a primitive idempotent", pres.vertices[i])));
        }
        for (j, e2) in asg.vertices.iter().enumerate() {
            if i != j && !a.is_zero(&a.multiply(e, e2)) {
                return Ok(Some(format!("vertices {} and {} are not orthogonal", pres.vertices[i], pres.vertices[j])));
            }
        }
        sum = vecops::add(f, &sum, e);
    }
    if sum != *a.unit() {
        return Ok(Some("vertex idempotents do not sum to 1".into()));
    }
    let s = a.structure()?;
    let rad2 = a.echelon_of(&a.radical_square()?);
    for (k, ar) in pres.arrows.iter().enumerate() {
        let x = &asg.arrows[k];
        let sliced = a.multiply(&a.multiply(&asg.vertices[ar.source], x), &asg.vertices[ar.target]);
        if sliced != *x {
            return Ok(Some(format!("arrow {} does not lie in its vertex slice", ar.name)));
        }
        if !s.in_radical(x) || rad2.contains(x) {
            return Ok(Some(format!("arrow {} does not lie in rad \\ rad²", ar.name)));
        }
    }
    for r in &pres.relations {
        if !a.is_zero(&eval_poly(a, asg, r)) {
            return Ok(Some(format!("relation `{}` does not vanish", pres.poly_label(r))));
        }
    }
    let mut gens = asg.vertices.clone();
    gens.extend(asg.arrows.iter().cloned());
    if a.generated_subalgebra(&gens).len() != a.dim() {
        return Ok(Some("assigned elements do not generate the algebra".into()));
    }
    Ok(None)
}

/// Complement of `e_i J² e_j` in `e_i J e_j`, for all pairs of primitive idempotents.
pub fn arrow_slices<F: Field>(a: &Algebra<F>, idempotents: &[Vector<F>]) -> Result<Vec<Vec<Vec<Vector<F>>>>> {
    let s = a.structure()?;
    let rad2 = a.radical_square()?;
    let mut out = Vec::new();
    for e in idempotents {
        let mut row = Vec::new();
        for e2 in idempotents {
            let cut = |v: &Vector<F>| a.multiply(&a.multiply(e, v), e2);
            let mut ech = Echelon::from_vectors(a.field(), a.dim(), rad2.iter().map(cut).collect::<Vec<_>>().iter());
            let mut comp = Vec::new();
            for v in a.slice_basis(e, e2) {
                if s.in_radical(&v) && ech.insert(v.clone()) {
                    comp.push(v);
                }
            }
            row.push(comp);
        }
        out.push(row);
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GabrielQuiver {
    pub vertices: usize,
    /// `arrows[i][j]`: number of arrows `i → j`.
    pub arrows: Vec<Vec<usize>>,
}

impl GabrielQuiver {
    pub fn arrow_count(&self) -> usize {
        self.arrows.iter().flatten().sum()
    }
}

/// Vertices are the primitive idempotents; arrows `i → j` count
/// `dim e_i (J/J²) e_j` (paths compose left to right).
pub fn gabriel_skeleton<F: Field>(a: &Algebra<F>) -> Result<GabrielQuiver> {
    if !a.is_basic()? {
        return Err(Error::NotBasic);
    }
    let idem = a.primitive_idempotents()?;
    let slices = arrow_slices(a, &idem)?;
    Ok(GabrielQuiver { vertices: idem.len(), arrows: slices.iter().map(|r| r.iter().map(|c| c.len()).collect()).collect() })
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..n {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out.sort();
    out
}

/// Verifies `pres` against `a`, searching for an assignment when none is given.
pub fn verify_presentation<F: Field>(a: &Algebra<F>, pres: &Presentation, assignment: Option<&Assignment<F>>, opts: &SearchOptions) -> Result<PresentationMatch<F>> {
    let f = a.field();
    let pa = PathAlgebra::build(f, pres, super::DEFAULT_LENGTH_BOUND)?;
    if let Some(asg) = assignment {
        return Ok(match check_assignment(a, pres, pa.algebra.dim(), asg)? {
            None => PresentationMatch::Match(asg.clone()),
            Some(reason) => PresentationMatch::NoMatch(reason),
        });
    }
    if pa.algebra.dim() != a.dim() {
        return Ok(PresentationMatch::NoMatch(format!("dimension mismatch: presentation {}, algebra {}", pa.algebra.dim(), a.dim())));
    }
    let idem = a.primitive_idempotents()?;
    let nv = pres.vertices.len();
    if idem.len() != nv || !a.is_basic()? {
        return Ok(PresentationMatch::NoMatch(format!("{} vertices but {} primitive idempotents (basic: {})", nv, idem.len(), a.is_basic()?)));
    }
    let qc = pa.vertex_cartan();
    let ac: Vec<Vec<usize>> = idem.iter().map(|e| idem.iter().map(|e2| a.slice_basis(e, e2).len()).collect()).collect();
    let slices = arrow_slices(a, &idem)?;
    // relations become checkable once their largest arrow is assigned
    let mut due: Vec<Vec<usize>> = vec![Vec::new(); pres.arrows.len() + 1];
    for (k, r) in pres.relations.iter().enumerate() {
        let last = r.terms.iter().flat_map(|(_, p)| p.arrows.iter().map(|&x| x + 1)).max().unwrap_or(0);
        due[last].push(k);
    }
    let side = f.order().map_or(2 * opts.grid as u64 + 1, |q| q);
    let coeff = |d: u64| -> F::Elem {
        match f.order() {
            Some(_) => f.element(d),
            None => f.from_i64(d as i64 - opts.grid),
        }
    };
    let mut budget = opts.budget;
    let mut examined = 0u64;
    for perm in permutations(nv) {
        if (0..nv).any(|v| (0..nv).any(|w| ac[perm[v]][perm[w]] != qc[v][w])) {
            continue;
        }
        let vertices: Vec<Vector<F>> = perm.iter().map(|&i| idem[i].clone()).collect();
        let bases: Vec<&Vec<Vector<F>>> = pres.arrows.iter().map(|ar| &slices[perm[ar.source]][perm[ar.target]]).collect();
        if bases.iter().any(|b| b.is_empty()) {
            continue;
        }
        let mut asg = Assignment { vertices, arrows: Vec::new() };
        let found = search(a, pres, &pa, &bases, &due, side, &coeff, &mut asg, &mut budget, &mut examined)?;
        if found {
            return Ok(PresentationMatch::Match(asg));
        }
    }
    Ok(PresentationMatch::NoMatch("no assignment satisfies the relations".into()))
}

#[allow(clippy::too_many_arguments)]
fn search<F: Field>(
    a: &Algebra<F>,
    pres: &Presentation,
    pa: &PathAlgebra<F>,
    bases: &[&Vec<Vector<F>>],
    due: &[Vec<usize>],
    side: u64,
    coeff: &dyn Fn(u64) -> F::Elem,
    asg: &mut Assignment<F>,
    budget: &mut u64,
    examined: &mut u64,
) -> Result<bool> {
    let depth = asg.arrows.len();
    if depth == pres.arrows.len() {
        return Ok(check_assignment(a, pres, pa.algebra.dim(), asg)?.is_none());
    }
    let basis = bases[depth];
    let d = basis.len() as u32;
    let total = side.checked_pow(d).unwrap_or(u64::MAX);
    for idx in 0..total {
        let mut k = idx;
        let cs: Vec<F::Elem> = (0..d)
            .map(|_| {
                let c = coeff(k % side);
                k /= side;
                c
            })
            .collect();
        if cs.iter().all(|c| a.field().is_zero(c)) {
            continue;
        }
        if *budget == 0 {
            return Err(Error::SearchBudgetExceeded(*examined));
        }
        *budget -= 1;
        *examined += 1;
        let x = vecops::combination(a.field(), a.dim(), &cs, basis);
        asg.arrows.push(x);
        let ok = due[depth + 1].iter().all(|&r| a.is_zero(&eval_poly(a, asg, &pres.relations[r])));
        if ok && search(a, pres, pa, bases, due, side, coeff, asg, budget, examined)? {
            return Ok(true);
        }
        asg.arrows.pop();
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};
    use crate::quiver::parse_presentation;

    const TWO_CYCLE: &str = "field Q\nvertex a\nvertex b\narrow s a b\narrow t b a\nrelations\ns*t*s\nt*s*t\nend";

    #[test]
    fn own_presentation_round_trips() {
        let f = PrimeField::new(3).unwrap();
        let p = parse_presentation(TWO_CYCLE).unwrap();
        let pa = PathAlgebra::build(&f, &p, 30).unwrap();
        let asg = Assignment { vertices: pa.vertex_idempotents(), arrows: pa.arrow_elements() };
        let opts = SearchOptions::default();
        assert!(verify_presentation(&pa.algebra, &p, Some(&asg), &opts).unwrap().is_match());
        assert!(verify_presentation(&pa.algebra, &p, None, &opts).unwrap().is_match());
    }

    #[test]
    fn dimension_mismatch_is_no_match() {
        let f = Rationals;
        let p = parse_presentation(TWO_CYCLE).unwrap();
        let t = Algebra::truncated_polynomial(&f, 3);
        let m = verify_presentation(&t, &p, None, &SearchOptions::default()).unwrap();
        assert!(matches!(m, PresentationMatch::NoMatch(r) if r.starts_with("dimension mismatch")));
    }

    #[test]
    fn gabriel_quivers() {
        let f = PrimeField::new(5).unwrap();
        let t = Algebra::truncated_polynomial(&f, 3);
        assert_eq!(gabriel_skeleton(&t).unwrap(), GabrielQuiver { vertices: 1, arrows: vec![vec![1]] });
        let p = parse_presentation(TWO_CYCLE).unwrap();
        let pa = PathAlgebra::build(&f, &p, 30).unwrap();
        assert_eq!(gabriel_skeleton(&pa.algebra).unwrap().arrows, vec![vec![0, 1], vec![1, 0]]);
        assert_eq!(gabriel_skeleton(&Algebra::matrix_algebra(&f, 2)), Err(Error::NotBasic));
    }

    #[test]
    fn budget_is_enforced() {
        let f = PrimeField::new(7).unwrap();
        let p = parse_presentation(TWO_CYCLE).unwrap();
        let pa = PathAlgebra::build(&f, &p, 30).unwrap();
        let opts = SearchOptions { budget: 1, grid: 2 };
        // the first candidate for `s` is accepted, then `t` needs another
        assert_eq!(verify_presentation(&pa.algebra, &p, None, &opts), Err(Error::SearchBudgetExceeded(1)));
    }
}
