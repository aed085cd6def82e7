use std::fs;
use std::path::Path;
use std::sync::Arc;

use mirrorsmith::algebra::Algebra;
use mirrorsmith::example_suite::{run_example_suite, ItemStatus, SuiteItem};
use mirrorsmith::exact::{vecops, Vector};
use mirrorsmith::homotopy::{end_algebra_complex, format_element, is_tilting_seeded, parse_complex, tilting_search, ProjContext, SearchOptions, SearchShape, TiltingVerdict};
use mirrorsmith::invariants::all_invariants;
use mirrorsmith::mirror::{build_mirror, check_idealized_extension};
use mirrorsmith::modrep::{is_gendo_symmetric, proj_inj_idempotent, tensor_over_corner, IsoOptions};
use mirrorsmith::quiver::{parse_presentation, verify_presentation, PathAlgebra, Presentation, PresentationMatch, SearchOptions as MatchOptions, DEFAULT_LENGTH_BOUND};
use mirrorsmith::{Error, Field, FieldSpec};

use crate::report::{list, Report};

#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    pub fn input(message: impl Into<String>) -> Self {
        CliError { code: 2, message: message.into() }
    }
}

/// Variant name of a library error, e.g. `LevelNotCentral`.
fn kind(e: &Error) -> String {
    format!("{e:?}").chars().take_while(char::is_ascii_alphanumeric).collect()
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse(_)
            | Error::Syntax { .. }
            | Error::UnknownName { .. }
            | Error::NonComposable { .. }
            | Error::Inhomogeneous { .. }
            | Error::NotAdmissible(_)
            | Error::NotFiniteDimensional(_)
            | Error::DifferentialMismatch(_)
            | Error::NonProjectiveTerm(_) => 2,
            _ => 1,
        };
        CliError { code, message: format!("{}: {e}", kind(&e)) }
    }
}

pub type CmdResult = Result<Outcome, CliError>;

/// What a command prints on stdout, and whether it counts as success.
pub struct Outcome {
    pub text: String,
    pub ok: bool,
}

impl Outcome {
    fn report(r: Report, ok: bool) -> Self {
        Outcome { text: r.to_string(), ok }
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::input(format!("cannot read {}: {e}", path.display())))
}

/// Reads a presentation, optionally moving it to another field.
pub fn load_presentation(path: &Path, field: Option<FieldSpec>) -> Result<Presentation, CliError> {
    let pres = parse_presentation(&read(path)?).map_err(|e| {
        let mut err = CliError::from(e);
        err.message = format!("{}: {}", path.display(), err.message);
        err
    })?;
    Ok(match field {
        Some(spec) => pres.with_field(spec),
        None => pres,
    })
}

fn compile<F: Field>(f: &F, pres: &Presentation) -> Result<(PathAlgebra<F>, Arc<Algebra<F>>), CliError> {
    let pa = PathAlgebra::build(f, pres, DEFAULT_LENGTH_BOUND)?;
    let a = Arc::new(pa.algebra.clone());
    Ok((pa, a))
}

/// `auto` or a comma-separated list of vertex names.
fn idempotent<F: Field>(pa: &PathAlgebra<F>, a: &Arc<Algebra<F>>, spec: &str) -> Result<Vector<F>, CliError> {
    if spec.trim() == "auto" {
        return Ok(proj_inj_idempotent(a)?);
    }
    let mut seen = Vec::new();
    let mut e = vecops::zero(pa.field(), a.dim());
    for name in spec.split(',').map(str::trim) {
        let v = pa.presentation.vertex_index(name).ok_or_else(|| CliError::input(format!("unknown vertex `{name}` in --idempotent")))?;
        if seen.contains(&v) {
            return Err(CliError::input(format!("vertex `{name}` listed twice in --idempotent")));
        }
        seen.push(v);
        e = vecops::add(pa.field(), &e, &pa.vertex(v));
    }
    Ok(e)
}

fn show<F: Field>(pa: &PathAlgebra<F>, a: &Algebra<F>, x: &[F::Elem]) -> String {
    format_element(pa, x).unwrap_or_else(|_| a.describe(x))
}

fn invariant_report<F: Field>(a: &Algebra<F>, keys: &[&str]) -> Result<Report, CliError> {
    let inv = all_invariants(a)?;
    let mut r = Report::new();
    for k in keys {
        r.set(*k, &inv[*k]);
    }
    Ok(r)
}

pub fn check<F: Field>(f: &F, pres: &Presentation) -> CmdResult {
    let (pa, a) = compile(f, pres)?;
    a.check()?;
    let mut r = invariant_report(&a, &["cartan_det", "cartan_matrix", "center_dim", "dim", "radical_dim", "simples"])?;
    r.set("vertices", pa.presentation.vertices.len());
    r.set("arrows", pa.presentation.arrows.len());
    Ok(Outcome::report(r, true))
}

pub fn mirror<F: Field>(f: &F, pres: &Presentation, idem: &str, level: &str, expect: Option<&Presentation>, seed: u64) -> CmdResult {
    let (pa, a) = compile(f, pres)?;
    let e = idempotent(&pa, &a, idem)?;
    let uses_e = level.trim() == "e" && pres.vertex_index("e").is_none() && pres.arrow_index("e").is_none();
    let lambda = if uses_e { e.clone() } else { pa.parse_element(level)? };
    let m = build_mirror(&a, &e, &lambda)?;
    let mut r = Report::new();
    r.set("dim", m.algebra.dim());
    r.set("delta0_dim", m.ideal_dim());
    r.set("idempotent", show(&pa, &a, &e));
    r.set("level", show(&pa, &a, &lambda));
    let idealized = check_idealized_extension(&m);
    r.set("idealized_extension", if idealized.passes() { "pass" } else { "fail" });
    if !idealized.passes() {
        r.set("idealized_failures", idealized.failures.join("; "));
    }
    let gendo = is_gendo_symmetric(&a, &e, &IsoOptions { seed, ..IsoOptions::default() })?;
    r.set("gendo_source", if gendo.passes() { "pass" } else { "fail" });
    let mut ok = idealized.passes();
    if let Some(exp) = expect {
        match verify_presentation(&m.algebra, exp, None, &MatchOptions::default())? {
            PresentationMatch::Match(w) => {
                r.set("presentation_match", true);
                for (name, v) in exp.vertices.iter().zip(&w.vertices) {
                    r.set(format!("witness.vertex.{name}"), m.algebra.describe(v));
                }
                for (arrow, v) in exp.arrows.iter().zip(&w.arrows) {
                    r.set(format!("witness.arrow.{}", arrow.name), m.algebra.describe(v));
                }
            }
            PresentationMatch::NoMatch(why) => {
                r.set("presentation_match", false);
                r.set("witness", why);
                ok = false;
            }
        }
    }
    Ok(Outcome::report(r, ok))
}

pub fn gendo<F: Field>(f: &F, pres: &Presentation, idem: &str, seed: u64) -> CmdResult {
    let (pa, a) = compile(f, pres)?;
    let mut r = Report::new();
    let e = match idempotent(&pa, &a, idem) {
        Ok(e) => e,
        Err(err) if err.code == 1 => {
            r.set("idempotent", "none");
            r.set("gendo_symmetric", false);
            r.set("reason", err.message);
            return Ok(Outcome::report(r, false));
        }
        Err(err) => return Err(err),
    };
    let c = is_gendo_symmetric(&a, &e, &IsoOptions { seed, ..IsoOptions::default() })?;
    r.set("idempotent", show(&pa, &a, &e));
    r.set("faithful", c.faithful);
    r.set("projective", c.projective);
    r.set("injective", c.injective);
    r.set("dominant_dim", c.dominant);
    r.set("domdim_ge2", c.dominant_ok());
    r.set("duality_iso", c.duality.is_isomorphic());
    r.set("gendo_symmetric", c.passes());
    Ok(Outcome::report(r, c.passes()))
}

fn end_keys<F: Field>(r: &mut Report, prefix: &str, end: &Algebra<F>) -> Result<(), CliError> {
    r.set(format!("{prefix}end_dim"), end.dim());
    r.set(format!("{prefix}end_center_dim"), end.center_basis().len());
    r.set(format!("{prefix}end_cartan_snf"), list(&end.cartan_snf()?.diagonal));
    Ok(())
}

pub fn tilt_complex<F: Field>(f: &F, pres: &Presentation, complex: &Path, budget: usize, seed: u64) -> CmdResult {
    let (pa, a) = compile(f, pres)?;
    let ctx = ProjContext::from_path_algebra(&pa, &a)?;
    let p = parse_complex(&read(complex)?, &pa, &ctx)?;
    let t = is_tilting_seeded(&p, budget, seed)?;
    let mut r = Report::new();
    r.set("complex", &p);
    r.set("verdict", &t.verdict);
    r.set("selforthogonal", t.selforthogonal);
    match &t.k0 {
        Some(k) => {
            r.set("k0", if k.pass { "pass" } else { "fail" });
            r.set("k0_invariant_factors", list(&k.invariant_factors));
        }
        None => r.set("k0", "not_run"),
    }
    match &t.witness {
        Some(w) => r.set("witness", format!("{} steps", w.steps.len())),
        None => r.set("witness", "none"),
    }
    if t.selforthogonal {
        end_keys(&mut r, "", &end_algebra_complex(&p)?.algebra)?;
    }
    let ok = !matches!(t.verdict, TiltingVerdict::Fail(_));
    Ok(Outcome::report(r, ok))
}

pub fn tilt_search<F: Field>(f: &F, pres: &Presentation, shape: SearchShape, budget: u64, seed: u64) -> CmdResult {
    if f.order().is_none() {
        return Err(CliError::input("--search needs a prime field (use --field F<p>)"));
    }
    let (pa, a) = compile(f, pres)?;
    let ctx = ProjContext::from_path_algebra(&pa, &a)?;
    let res = tilting_search(&ctx, &SearchOptions { shape, seed, budget, ..SearchOptions::default() })?;
    let mut r = Report::new();
    let width = res.entries.len().to_string().len().max(2);
    for (i, entry) in res.entries.iter().enumerate() {
        let p = format!("candidate.{:0width$}.", i + 1);
        r.set(format!("{p}complex"), &entry.complex);
        r.set(format!("{p}verdict"), &entry.verdict);
        r.set(format!("{p}selforthogonal"), true);
        r.set(format!("{p}candidates"), entry.candidates);
        r.set(format!("{p}end_dim"), entry.fingerprint.dim);
        r.set(format!("{p}end_center_dim"), entry.fingerprint.center_dim);
        r.set(format!("{p}end_cartan_snf"), list(&entry.fingerprint.cartan_snf));
        r.set(format!("{p}end_simples"), entry.fingerprint.simples);
    }
    r.set("examined", res.examined);
    r.set("total", res.total);
    r.set("selforthogonal", res.selforthogonal);
    r.set("budget_exceeded", res.budget_exceeded);
    Ok(Outcome::report(r, true))
}

pub fn worked_example<F: Field>(f: &F, spec: &FieldSpec, seed: u64) -> Vec<SuiteItem> {
    run_example_suite(f, spec, seed)
}

pub fn suite_outcome(spec: &FieldSpec, items: &[SuiteItem]) -> Outcome {
    let mut text = String::new();
    for it in items {
        text.push_str(&format!("{} {} {} [{spec}]: {}\n", it.status, it.number, it.name, it.detail));
    }
    let ok = items.iter().all(|it| it.status != ItemStatus::Fail);
    Outcome { text, ok }
}

/// Invariants of one algebra, with the `eAe`-tensor dimension when an
/// idempotent is given.
pub fn side<F: Field>(f: &F, pres: &Presentation, idem: Option<&str>, tensor_key: &str) -> Result<Report, CliError> {
    let (pa, a) = compile(f, pres)?;
    let mut r = invariant_report(&a, &["cartan_det", "cartan_snf", "center_dim", "dim", "simples"])?;
    if let Some(spec) = idem {
        let e = idempotent(&pa, &a, spec)?;
        r.set(tensor_key, tensor_over_corner(&a, &e)?.dim());
    }
    Ok(r)
}

pub fn compare(a: Report, b: Report) -> Outcome {
    let mut r = Report::new();
    for k in ["cartan_det", "cartan_snf", "center_dim", "dim", "simples"] {
        r.set(format!("agree.{k}"), a.get(k) == b.get(k));
    }
    r.nest("a", a);
    r.nest("b", b);
    Outcome::report(r, true)
}
