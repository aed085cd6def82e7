//! The worked example `Λ = k[x]/(x³)`, `A = End(Λ ⊕ X)`, `B = End(Λ ⊕ Y)`,
//! run end to end over one field.

use std::fmt;
use std::sync::Arc;

use crate::algebra::Algebra;
use crate::error::Error;
use crate::examples::{self, presentation};
use crate::exact::vecops;
use crate::field::{Field, FieldSpec};
use crate::homotopy::{tilting_search, ProjContext, SearchOptions, TiltingVerdict};
use crate::invariants::Fingerprint;
use crate::mirror::{build_mirror, check_idealized_extension, compare_mirrors, levels_isomorphic, omega_map, omega_on_tensor, rho_endo, rho_iso_check, Level};
use crate::modrep::{end_algebra, is_gendo_symmetric, tensor_over_corner, IsoOptions, Module};
use crate::quiver::{verify_presentation, PathAlgebra, SearchOptions as MatchOptions, DEFAULT_LENGTH_BOUND};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ItemStatus {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for ItemStatus {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        out.write_str(match self {
            ItemStatus::Pass => "PASS",
            ItemStatus::Fail => "FAIL",
            ItemStatus::Skipped => "SKIPPED",
        })
    }
}

#[derive(Clone, Debug)]
pub struct SuiteItem {
    pub number: usize,
    pub name: &'static str,
    pub status: ItemStatus,
    pub detail: String,
}

enum Outcome {
    Fail(String),
    Skip(String),
}

impl From<Error> for Outcome {
    fn from(e: Error) -> Self {
        Outcome::Fail(e.to_string())
    }
}

type Step<T> = Result<T, Outcome>;

fn ensure(cond: bool, msg: impl Into<String>) -> Step<()> {
    if cond { Ok(()) } else { Err(Outcome::Fail(msg.into())) }
}

struct Example<F: Field> {
    a: (PathAlgebra<F>, Arc<Algebra<F>>),
    b: (PathAlgebra<F>, Arc<Algebra<F>>),
}

fn build<F: Field>(f: &F, text: &str) -> Step<(PathAlgebra<F>, Arc<Algebra<F>>)> {
    let pa = PathAlgebra::build(f, &presentation(text, FieldSpec::Rationals), DEFAULT_LENGTH_BOUND)?;
    let a = Arc::new(pa.algebra.clone());
    Ok((pa, a))
}

impl<F: Field> Example<F> {
    fn both(&self) -> [(&'static str, &PathAlgebra<F>, &Arc<Algebra<F>>, &'static str); 2] {
        [("A", &self.a.0, &self.a.1, examples::R_A), ("B", &self.b.0, &self.b.1, examples::R_B)]
    }
}

fn dimensions<F: Field>(f: &F, ex: &Example<F>) -> Step<String> {
    let lambda = Arc::new(Algebra::truncated_polynomial(f, 3));
    let reg = Module::regular(&lambda);
    let (x, _) = reg.quotient(&reg.radical()?);
    let (y, _) = reg.quotient(&[lambda.basis_element(2)]);
    let ends = [end_algebra(&reg.direct_sum(&x)).algebra.dim(), end_algebra(&reg.direct_sum(&y)).algebra.dim()];
    let mut dims = Vec::new();
    for ((name, pa, a, printed), end) in ex.both().into_iter().zip(ends) {
        ensure(end == a.dim(), format!("{name}: End has dim {end}, quiver algebra {}", a.dim()))?;
        let r = build_mirror(a, &pa.vertex(0), &pa.vertex(0))?;
        let (_, rq) = build(f, printed)?;
        ensure(r.algebra.dim() == rq.dim(), format!("R({name}): built {}, presented {}", r.algebra.dim(), rq.dim()))?;
        dims.push((a.dim(), r.ideal_dim(), r.algebra.dim()));
    }
    ensure(dims == [(6, 6, 12), (9, 9, 18)], format!("dimensions {dims:?}"))?;
    Ok("A 6, B 9, Δ₀ 6, Θ₀ 9, R(A,e) 12, R(B,f) 18".into())
}

fn corners<F: Field>(ex: &Example<F>) -> Step<String> {
    let lam = presentation(examples::LAMBDA, FieldSpec::Rationals);
    for (name, pa, a, _) in ex.both() {
        let c = a.corner(&pa.vertex(0))?;
        ensure(verify_presentation(&c.algebra, &lam, None, &MatchOptions::default())?.is_match(), format!("corner of {name} is not k[x]/(x³)"))?;
    }
    Ok("eAe ≅ fBf ≅ k[x]/(x³)".into())
}

fn gendo<F: Field>(ex: &Example<F>, seed: u64) -> Step<String> {
    let opts = IsoOptions { seed, ..IsoOptions::default() };
    for (name, pa, a, _) in ex.both() {
        ensure(is_gendo_symmetric(a, &pa.vertex(0), &opts)?.passes(), format!("{name} is not gendo-symmetric at vertex 1"))?;
    }
    Ok("A and B".into())
}

fn presentations<F: Field>(ex: &Example<F>, spec: &FieldSpec) -> Step<String> {
    for (name, pa, a, printed) in ex.both() {
        let r = build_mirror(a, &pa.vertex(0), &pa.vertex(0))?;
        let m = verify_presentation(&r.algebra, &presentation(printed, spec.clone()), None, &MatchOptions::default())?;
        ensure(m.is_match(), format!("R({name}) does not match its presentation"))?;
    }
    Ok("R(A,e) and R(B,f)".into())
}

/// A basis of the center of `eAe` plus `e`, and a central unit.
fn levels<F: Field>(pa: &PathAlgebra<F>, a: &Algebra<F>) -> Step<(Vec<Vec<F::Elem>>, Vec<F::Elem>)> {
    let e = pa.vertex(0);
    let corner = a.corner(&e)?;
    let mut ls: Vec<Vec<F::Elem>> = corner.algebra.center_basis().iter().map(|z| corner.include(z)).collect();
    ls.push(e.clone());
    let mu = vecops::add(a.field(), &e, &ls[0]);
    let mu = if corner.algebra.is_unit(&corner.restrict(&mu).expect("in eAe")) { mu } else { e.clone() };
    Ok((ls, mu))
}

fn rho_omega<F: Field>(ex: &Example<F>) -> Step<String> {
    for (name, pa, a, _) in ex.both() {
        let e = pa.vertex(0);
        let d = tensor_over_corner(a, &e)?;
        let rep = rho_iso_check(&d)?;
        ensure(rep.passes(), format!("{name}: {rep:?}"))?;
        let omega_e = omega_map(&d, &Level::new(a, &d.corner, &e)?);
        for l in levels(pa, a)?.0 {
            let level = Level::new(a, &d.corner, &l)?;
            ensure(omega_map(&d, &level).matrix == rho_endo(&d, &level).mul(&omega_e.matrix), format!("{name}: ω_λ ≠ ω_e ρ_λ"))?;
        }
    }
    Ok("ρ bijective, ω_λ = ω_e ρ_λ".into())
}

fn invertibility<F: Field>(ex: &Example<F>) -> Step<String> {
    let mut checked = 0;
    for (name, pa, a, _) in ex.both() {
        let d = tensor_over_corner(a, &pa.vertex(0))?;
        for l in levels(pa, a)?.0 {
            let level = Level::new(a, &d.corner, &l)?;
            let omega = omega_on_tensor(&d, &omega_map(&d, &level)).ok_or_else(|| Outcome::Fail(format!("{name}: ω not balanced")))?;
            let unit = level.is_unit(&d.corner);
            let (wi, ri) = (omega.rows() == omega.cols() && omega.is_invertible(), rho_endo(&d, &level).is_invertible());
            ensure(wi == unit && ri == unit, format!("{name}: ω {wi}, ρ {ri}, unit {unit}"))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} levels"))
}

fn associativity<F: Field>(ex: &Example<F>) -> Step<String> {
    for (name, pa, a, _) in ex.both() {
        let e = pa.vertex(0);
        for l in levels(pa, a)?.0 {
            let r = build_mirror(a, &e, &l)?;
            r.algebra.check()?;
            let rep = check_idealized_extension(&r);
            ensure(rep.passes(), format!("{name}: {rep:?}"))?;
        }
        let r0 = build_mirror(a, &e, &vecops::zero(a.field(), a.dim()))?;
        ensure(check_idealized_extension(&r0).square_zero, format!("{name}: R(A,e,0) is not a trivial extension"))?;
    }
    Ok("associative, R(·,·,0) trivial extension".into())
}

fn rescaling<F: Field>(ex: &Example<F>) -> Step<String> {
    for (name, pa, a, _) in ex.both() {
        let e = pa.vertex(0);
        let d = tensor_over_corner(a, &e)?;
        let (ls, mu) = levels(pa, a)?;
        for l in ls {
            let lm = a.multiply(&l, &mu);
            let (l1, l2) = (Level::new(a, &d.corner, &l)?, Level::new(a, &d.corner, &lm)?);
            ensure(levels_isomorphic(&d.corner, &l1, &l2, 1 << 20)?.is_equivalent(), format!("{name}: λ ≁ λμ"))?;
            let c = compare_mirrors(&build_mirror(a, &e, &l)?, &build_mirror(a, &e, &lm)?, &mu)?;
            ensure(c.matches(), format!("{name}: {c:?}"))?;
        }
        let zero = Level::new(a, &d.corner, &vecops::zero(a.field(), a.dim()))?;
        let one = Level::new(a, &d.corner, &e)?;
        ensure(!levels_isomorphic(&d.corner, &zero, &one, 1 << 20)?.is_equivalent(), format!("{name}: 0 ~ e"))?;
    }
    Ok("λ ~ λμ, 0 ≁ e".into())
}

fn tilting<F: Field>(ex: &Example<F>, seed: u64) -> Step<String> {
    let (pa, a) = &ex.a;
    if a.field().order().is_none() {
        return Err(Outcome::Skip("search needs a finite field".into()));
    }
    let target = Fingerprint::of(&ex.b.1)?;
    let ctx = ProjContext::from_path_algebra(pa, a)?;
    let r = tilting_search(&ctx, &SearchOptions { seed, ..SearchOptions::default() })?;
    let hit = r.entries.iter().find(|e| {
        matches!(e.verdict, TiltingVerdict::Verified | TiltingVerdict::K0PassUnverified)
            && e.fingerprint.dim == 9
            && e.fingerprint.simples == 2
            && e.fingerprint.center_dim == target.center_dim
            && e.fingerprint.cartan_snf == target.cartan_snf
    });
    let hit = hit.ok_or_else(|| Outcome::Fail("no candidate with the invariants of B".into()))?;
    Ok(format!("{} with End dim 9", hit.verdict))
}

/// Items 1 to 9 over the field `f`.
pub fn run_example_suite<F: Field>(f: &F, spec: &FieldSpec, seed: u64) -> Vec<SuiteItem> {
    let ex = match (build(f, examples::A), build(f, examples::B)) {
        (Ok(a), Ok(b)) => Example { a, b },
        (Err(e), _) | (_, Err(e)) => {
            let detail = match e {
                Outcome::Fail(s) | Outcome::Skip(s) => s,
            };
            return vec![SuiteItem { number: 1, name: "example dimensions", status: ItemStatus::Fail, detail }];
        }
    };
    let items: [(&'static str, Box<dyn Fn() -> Step<String> + '_>); 9] = [
        ("example dimensions", Box::new(|| dimensions(f, &ex))),
        ("corners", Box::new(|| corners(&ex))),
        ("gendo-symmetric", Box::new(|| gendo(&ex, seed))),
        ("mirror presentations", Box::new(|| presentations(&ex, spec))),
        ("rho and omega", Box::new(|| rho_omega(&ex))),
        ("omega invertibility", Box::new(|| invertibility(&ex))),
        ("associativity", Box::new(|| associativity(&ex))),
        ("unit-rescaled levels", Box::new(|| rescaling(&ex))),
        ("tilting evidence", Box::new(|| tilting(&ex, seed))),
    ];
    items
        .iter()
        .enumerate()
        .map(|(i, (name, run))| {
            let (status, detail) = match run() {
                Ok(s) => (ItemStatus::Pass, s),
                Err(Outcome::Fail(s)) => (ItemStatus::Fail, s),
                Err(Outcome::Skip(s)) => (ItemStatus::Skipped, s),
            };
            SuiteItem { number: i + 1, name, status, detail }
        })
        .collect()
}
