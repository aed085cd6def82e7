//! Acceptance criteria, one PASS/FAIL line each. Runs without the test
//! harness so the lines show up in `cargo test` output.

use std::panic::{self, AssertUnwindSafe};
use std::process::ExitCode;
use std::sync::Arc;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use mirrorsmith::algebra::Algebra;
use mirrorsmith::corpus::{corpus, CorpusOptions, Instance};
use mirrorsmith::examples::{self, presentation};
use mirrorsmith::exact::vecops;
use mirrorsmith::field::{Field, FieldSpec, PrimeField, Rationals};
use mirrorsmith::homotopy::random::random_complex;
use mirrorsmith::homotopy::{
    end_algebra_complex, hom_homotopy, is_selforthogonal, tilting_search, xi_map, ModComplex, ProjComplex, ProjContext, SearchOptions, TiltingVerdict,
};
use mirrorsmith::invariants::{all_invariants, Fingerprint};
use mirrorsmith::mirror::{build_mirror, check_idealized_extension, compare_mirrors, levels_isomorphic, omega_map, omega_on_tensor, rho_endo, rho_iso_check, Level};
use mirrorsmith::modrep::{corner_bimodules, end_algebra, is_gendo_symmetric, tensor_over_corner, tor_dims, IsoOptions, Module};
use mirrorsmith::quiver::{verify_presentation, PathAlgebra, SearchOptions as MatchOptions};

const CORPUS_SIZE: usize = 200;
const CORPUS_SEED: u64 = 0x5EED_2024;
const RANDOM_COMPLEXES: usize = 120;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond { Ok(()) } else { Err(msg.into()) }
}

fn build<F: Field>(f: &F, text: &str) -> (PathAlgebra<F>, Arc<Algebra<F>>) {
    let pa = PathAlgebra::build(f, &presentation(text, FieldSpec::Rationals), 30).unwrap();
    let a = Arc::new(pa.algebra.clone());
    (pa, a)
}

fn within(start: Instant, limit: Duration) -> Result<(), String> {
    let t = start.elapsed();
    ensure(t < limit, format!("took {t:?}, limit {limit:?}"))
}

fn example_dimensions() -> Outcome {
    let start = Instant::now();
    let f = Rationals;
    let lambda = Arc::new(Algebra::truncated_polynomial(&f, 3));
    let reg = Module::regular(&lambda);
    let (x, _) = reg.quotient(&reg.radical().unwrap());
    let (y, _) = reg.quotient(&[lambda.basis_element(2)]);
    let a_end = end_algebra(&reg.direct_sum(&x)).algebra.dim();
    let b_end = end_algebra(&reg.direct_sum(&y)).algebra.dim();
    let (pa, a) = build(&f, examples::A);
    let (pb, b) = build(&f, examples::B);
    ensure((a_end, a.dim()) == (6, 6), format!("A: End {a_end}, quiver {}", a.dim()))?;
    ensure((b_end, b.dim()) == (9, 9), format!("B: End {b_end}, quiver {}", b.dim()))?;
    let ra = build_mirror(&a, &pa.vertex(0), &pa.vertex(0)).unwrap();
    let rb = build_mirror(&b, &pb.vertex(0), &pb.vertex(0)).unwrap();
    let (_, ra_q) = build(&f, examples::R_A);
    let (_, rb_q) = build(&f, examples::R_B);
    ensure((ra.ideal_dim(), ra_q.dim() - a.dim()) == (6, 6), format!("Δ₀: tensor {}, presentation {}", ra.ideal_dim(), ra_q.dim() - a.dim()))?;
    ensure((rb.ideal_dim(), rb_q.dim() - b.dim()) == (9, 9), format!("Θ₀: tensor {}, presentation {}", rb.ideal_dim(), rb_q.dim() - b.dim()))?;
    ensure((ra.algebra.dim(), ra_q.dim()) == (12, 12), "R(A,e) dimension")?;
    ensure((rb.algebra.dim(), rb_q.dim()) == (18, 18), "R(B,f) dimension")?;
    within(start, Duration::from_secs(5))?;
    Ok("6 9 6 9 12 18".into())
}

fn corners_are_truncated_polynomials() -> Outcome {
    let f = Rationals;
    let lam = presentation(examples::LAMBDA, FieldSpec::Rationals);
    for text in [examples::A, examples::B] {
        let (pa, a) = build(&f, text);
        let c = a.corner(&pa.vertex(0)).unwrap();
        let m = verify_presentation(&c.algebra, &lam, None, &MatchOptions::default()).unwrap();
        ensure(m.is_match(), "corner does not match k[x]/(x³)")?;
    }
    Ok("eAe ≅ fBf ≅ k[x]/(x³)".into())
}

fn gendo_symmetric_certificates() -> Outcome {
    for (name, text) in [("A", examples::A), ("B", examples::B)] {
        let (pa, a) = build(&Rationals, text);
        let c = is_gendo_symmetric(&a, &pa.vertex(0), &IsoOptions::default()).unwrap();
        ensure(c.passes(), format!("{name}: {c:?}"))?;
    }
    Ok("A and B".into())
}

fn mirrors_match_printed_presentations() -> Outcome {
    let start = Instant::now();
    for p in [2u64, 7] {
        let f = PrimeField::new(p).unwrap();
        for (name, base, printed) in [("R(A,e)", examples::A, examples::R_A), ("R(B,f)", examples::B, examples::R_B)] {
            let (pa, a) = build(&f, base);
            let r = build_mirror(&a, &pa.vertex(0), &pa.vertex(0)).unwrap();
            let pres = presentation(printed, FieldSpec::Prime(p));
            let m = verify_presentation(&r.algebra, &pres, None, &MatchOptions::default()).unwrap();
            ensure(m.is_match(), format!("{name} over F{p}"))?;
        }
    }
    within(start, Duration::from_secs(30))?;
    Ok("F2 and F7".into())
}

fn f5_corpus() -> Vec<Instance<PrimeField>> {
    let f = PrimeField::new(5).unwrap();
    corpus(&f, FieldSpec::Prime(5), CORPUS_SEED, CORPUS_SIZE, &CorpusOptions::default()).unwrap()
}

/// `(A, e, levels)` for the example and the corpus.
fn cases(corpus: &[Instance<PrimeField>]) -> Vec<(Arc<Algebra<PrimeField>>, Vec<u64>, Vec<Vec<u64>>, Vec<u64>)> {
    let f = PrimeField::new(5).unwrap();
    let (pa, a) = build(&f, examples::A);
    let mut out = vec![(a.clone(), pa.vertex(0), vec![pa.parse_element("gamma").unwrap(), pa.vertex(0)], pa.parse_element("v1 + gamma").unwrap())];
    for inst in corpus {
        out.push((inst.algebra.clone(), inst.e.clone(), vec![inst.lambda.clone()], inst.mu.clone()));
    }
    out
}

fn rho_and_omega(corpus: &[Instance<PrimeField>]) -> Outcome {
    for (i, (a, e, levels, _)) in cases(corpus).into_iter().enumerate() {
        let d = tensor_over_corner(&a, &e).unwrap();
        let rep = rho_iso_check(&d).unwrap();
        ensure(rep.passes(), format!("case {i}: {rep:?}"))?;
        let omega_e = omega_map(&d, &Level::new(&a, &d.corner, &e).unwrap());
        for l in levels {
            let level = Level::new(&a, &d.corner, &l).unwrap();
            let lhs = omega_map(&d, &level).matrix;
            ensure(lhs == rho_endo(&d, &level).mul(&omega_e.matrix), format!("case {i}: ω_λ ≠ ω_e ρ_λ"))?;
        }
    }
    Ok(format!("example + {} instances", corpus.len()))
}

fn omega_invertibility(corpus: &[Instance<PrimeField>]) -> Outcome {
    let (mut units, mut non_units) = (0, 0);
    for (i, (a, e, mut levels, mu)) in cases(corpus).into_iter().enumerate() {
        let d = tensor_over_corner(&a, &e).unwrap();
        levels.push(mu);
        levels.extend(d.corner.algebra.center_basis().iter().map(|z| d.corner.include(z)));
        for l in levels {
            let level = Level::new(&a, &d.corner, &l).unwrap();
            let omega = omega_on_tensor(&d, &omega_map(&d, &level)).ok_or(format!("case {i}: ω not balanced"))?;
            let omega_inv = omega.rows() == omega.cols() && omega.is_invertible();
            let rho_inv = rho_endo(&d, &level).is_invertible();
            let unit = level.is_unit(&d.corner);
            ensure(omega_inv == unit && rho_inv == unit, format!("case {i}: ω {omega_inv}, ρ {rho_inv}, unit {unit}"))?;
            if unit { units += 1 } else { non_units += 1 }
        }
    }
    Ok(format!("{units} unit and {non_units} non-unit levels"))
}

fn mirrors_are_associative(corpus: &[Instance<PrimeField>]) -> Outcome {
    for (i, (a, e, levels, _)) in cases(corpus).into_iter().enumerate() {
        for l in levels {
            let r = build_mirror(&a, &e, &l).unwrap();
            r.algebra.check().map_err(|err| format!("case {i}: {err}"))?;
            let rep = check_idealized_extension(&r);
            ensure(rep.passes(), format!("case {i}: {rep:?}"))?;
        }
        let zero = vecops::zero(a.field(), a.dim());
        let r0 = build_mirror(&a, &e, &zero).unwrap();
        r0.algebra.check().map_err(|err| format!("case {i}: {err}"))?;
        ensure(check_idealized_extension(&r0).square_zero, format!("case {i}: R(A,e,0) has X∗X ≠ 0"))?;
    }
    Ok(format!("example + {} instances", corpus.len()))
}

fn unit_rescaled_levels(corpus: &[Instance<PrimeField>]) -> Outcome {
    for (i, (a, e, levels, mu)) in cases(corpus).into_iter().enumerate() {
        let d = tensor_over_corner(&a, &e).unwrap();
        for l in levels {
            let lm = a.multiply(&l, &mu);
            let (l1, l2) = (Level::new(&a, &d.corner, &l).unwrap(), Level::new(&a, &d.corner, &lm).unwrap());
            ensure(levels_isomorphic(&d.corner, &l1, &l2, 1 << 20).unwrap().is_equivalent(), format!("case {i}: λ and λμ not equivalent"))?;
            let (r1, r2) = (build_mirror(&a, &e, &l).unwrap(), build_mirror(&a, &e, &lm).unwrap());
            let c = compare_mirrors(&r1, &r2, &mu).unwrap();
            ensure(c.matches(), format!("case {i}: {c:?}"))?;
        }
        if d.dim() > 0 {
            let zero = Level::new(&a, &d.corner, &vecops::zero(a.field(), a.dim())).unwrap();
            let one = Level::new(&a, &d.corner, &e).unwrap();
            ensure(!levels_isomorphic(&d.corner, &zero, &one, 1 << 20).unwrap().is_equivalent(), format!("case {i}: 0 ~ e"))?;
        }
    }
    Ok(format!("example + {} instances", corpus.len()))
}

fn tilting_evidence() -> Outcome {
    let start = Instant::now();
    let f = PrimeField::new(2).unwrap();
    let (pa, a) = build(&f, examples::A);
    let (_, b) = build(&f, examples::B);
    let target = Fingerprint::of(&b).unwrap();
    let ctx = ProjContext::from_path_algebra(&pa, &a).unwrap();
    let opts = SearchOptions { budget: 1_000_000, ..SearchOptions::default() };
    let r = tilting_search(&ctx, &opts).unwrap();
    let hit = r.entries.iter().find(|e| {
        matches!(e.verdict, TiltingVerdict::Verified | TiltingVerdict::K0PassUnverified)
            && e.fingerprint.dim == 9
            && e.fingerprint.simples == 2
            && e.fingerprint.center_dim == target.center_dim
            && e.fingerprint.cartan_snf == target.cartan_snf
    });
    within(start, Duration::from_secs(600))?;
    let hit = hit.ok_or(format!("no complex with End ≅ B invariants among {} fingerprints", r.entries.len()))?;
    Ok(format!("{:?} with {}, {} candidates in {:?}", hit.verdict, hit.fingerprint, r.examined, start.elapsed()))
}

fn mirror_invariants_agree() -> Outcome {
    let f = Rationals;
    let (pa, a) = build(&f, examples::A);
    let (pb, b) = build(&f, examples::B);
    let ra = build_mirror(&a, &pa.vertex(0), &pa.vertex(0)).unwrap();
    let rb = build_mirror(&b, &pb.vertex(0), &pb.vertex(0)).unwrap();
    let (ia, ib) = (all_invariants(&ra.algebra).unwrap(), all_invariants(&rb.algebra).unwrap());
    ensure(ia["simples"] == "3" && ib["simples"] == "3", format!("simples {} {}", ia["simples"], ib["simples"]))?;
    for key in ["cartan_det", "center_dim"] {
        ensure(ia[key] == ib[key], format!("{key}: {} vs {}", ia[key], ib[key]))?;
    }
    Ok(format!("simples 3, cartan_det {}, center_dim {}", ia["cartan_det"], ia["center_dim"]))
}

fn homotopy_battery() -> Outcome {
    let start = Instant::now();
    let f = PrimeField::new(3).unwrap();
    let (pa, a) = build(&f, examples::A);
    let ctx = ProjContext::from_path_algebra(&pa, &a).unwrap();
    let op = ctx.opposite().unwrap();
    let opop = op.opposite().unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(0xA1B2);
    for i in 0..RANDOM_COMPLEXES {
        let p = random_complex(&ctx, -rng.gen_range(2..=4), 3, 2, &mut rng);
        let cone = ProjComplex::cone(&p, &p, &p.identity());
        ensure((-3..=3).all(|n| hom_homotopy(&cone, &cone, n).unwrap().dim() == 0), format!("complex {i}: cone of identity not contractible"))?;
        let terms: Vec<usize> = p.terms.iter().flatten().copied().collect();
        ensure(is_selforthogonal(&ProjComplex::stalk(&ctx, terms, 0)).unwrap(), format!("complex {i}: stalk not self-orthogonal"))?;
        let end = Fingerprint::of(&end_algebra_complex(&p).unwrap().algebra).unwrap();
        let dd = p.dualize(&op).dualize(&opop);
        ensure(end == Fingerprint::of(&end_algebra_complex(&dd).unwrap().algebra).unwrap(), format!("complex {i}: P** changes End"))?;
        let xi = xi_map(&ModComplex::from_proj(&p)).map_err(|e| format!("complex {i}: {e}"))?;
        ensure(xi.h0.is_invertible(), format!("complex {i}: ξ not an automorphism of H⁰"))?;
    }
    within(start, Duration::from_secs(60))?;
    Ok(format!("{RANDOM_COMPLEXES} complexes in {:?}", start.elapsed()))
}

fn tor_route() -> Outcome {
    let f = Rationals;
    let tor = |text: &str| -> Vec<usize> {
        let (pa, a) = build(&f, text);
        let cb = corner_bimodules(&a, &pa.vertex(0)).unwrap();
        let lop = Arc::new(cb.lambda.opposite());
        let right = Module::new(&lop, cb.ae.dim, cb.ae.right_action.clone()).unwrap();
        let left = Module::new(&cb.lambda, cb.ea.dim, cb.ea.left_action.clone()).unwrap();
        tor_dims(&right, &left, 3).unwrap()
    };
    let semisimple = tor(examples::LINE);
    ensure(semisimple[1..].iter().all(|&d| d == 0), format!("semisimple corner: {semisimple:?}"))?;
    let ex = tor(examples::A);
    ensure(ex[1] != 0, format!("example: {ex:?}"))?;
    Ok(format!("semisimple {semisimple:?}, example {ex:?}"))
}

fn run(n: usize, name: &str, f: impl FnOnce() -> Outcome) -> bool {
    let start = Instant::now();
    let outcome = panic::catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|e| {
        Err(e.downcast_ref::<String>().cloned().or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_else(|| "panic".into()))
    });
    let t = start.elapsed();
    match outcome {
        Ok(detail) => {
            println!("criterion {n:>2} PASS  {name}: {detail} [{t:.2?}]");
            true
        }
        Err(why) => {
            println!("criterion {n:>2} FAIL  {name}: {why} [{t:.2?}]");
            false
        }
    }
}

fn main() -> ExitCode {
    if std::env::args().any(|a| a == "--list") {
        return ExitCode::SUCCESS;
    }
    let corpus = f5_corpus();
    let results = [
        run(1, "example dimensions", example_dimensions),
        run(2, "corners", corners_are_truncated_polynomials),
        run(3, "gendo-symmetric certificates", gendo_symmetric_certificates),
        run(4, "mirror presentations", mirrors_match_printed_presentations),
        run(5, "rho and omega factorization", || rho_and_omega(&corpus)),
        run(6, "omega invertibility", || omega_invertibility(&corpus)),
        run(7, "associativity and trivial extension", || mirrors_are_associative(&corpus)),
        run(8, "unit-rescaled levels", || unit_rescaled_levels(&corpus)),
        run(9, "tilting evidence", tilting_evidence),
        run(10, "mirror invariants", mirror_invariants_agree),
        run(11, "homotopy battery", homotopy_battery),
        run(12, "Tor route", tor_route),
    ];
    let failed = results.iter().filter(|ok| !**ok).count();
    println!("acceptance: {} passed, {failed} failed", results.len() - failed);
    if failed == 0 { ExitCode::SUCCESS } else { ExitCode::FAILURE }
}
