use std::path::PathBuf;
use std::process::{Command, Output};

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name).display().to_string()
}

fn run(args: &[&str]) -> Output {
    run_with_seed(args, None)
}

fn run_with_seed(args: &[&str], seed: Option<&str>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_mirrorsmith"));
    cmd.args(args).env_remove("MIRRORSMITH_SEED");
    if let Some(s) = seed {
        cmd.env("MIRRORSMITH_SEED", s);
    }
    cmd.output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn value<'a>(out: &'a str, key: &str) -> Option<&'a str> {
    out.lines().find_map(|l| l.strip_prefix(key)?.strip_prefix(": "))
}

#[test]
fn check_lambda() {
    let o = run(&["check", &data("lambda.quiver")]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(value(&out, "dim"), Some("3"));
    assert_eq!(value(&out, "center_dim"), Some("3"));
}

#[test]
fn check_a_has_every_key_in_order() {
    let o = run(&["check", &data("a.quiver")]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let keys: Vec<&str> = out.lines().map(|l| l.split(": ").next().unwrap()).collect();
    assert_eq!(keys, ["arrows", "cartan_det", "cartan_matrix", "center_dim", "dim", "radical_dim", "simples", "vertices"]);
    assert_eq!(value(&out, "dim"), Some("6"));
    assert_eq!(value(&out, "simples"), Some("2"));
    assert_eq!(value(&out, "cartan_det"), Some("2"));
    assert_eq!(value(&out, "cartan_matrix"), Some("3,1;1,1"));
}

#[test]
fn malformed_file_exits_2_with_position() {
    let o = run(&["check", &data("malformed.quiver")]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 5, column 6"), "{}", stderr(&o));
}

#[test]
fn missing_file_and_bad_arguments_exit_2() {
    assert_eq!(run(&["check", &data("nope.quiver")]).status.code(), Some(2));
    assert_eq!(run(&["check", &data("a.quiver"), "--field", "F6"]).status.code(), Some(2));
    assert_eq!(run(&["gendo", &data("a.quiver"), "--idempotent", "v9"]).status.code(), Some(2));
    assert_eq!(run(&["tilt", &data("a.quiver")]).status.code(), Some(2));
}

#[test]
fn bad_seed_exits_2() {
    let o = run_with_seed(&["check", &data("a.quiver")], Some("0xZZ"));
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("MIRRORSMITH_SEED"));
    assert_eq!(run_with_seed(&["check", &data("a.quiver")], Some("17")).status.code(), Some(0));
}

#[test]
fn mirror_of_a_matches_its_presentation() {
    let o = run(&["mirror", &data("a.quiver"), "--idempotent", "v1", "--level", "e", "--expect", &data("r_a.quiver")]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let out = stdout(&o);
    assert_eq!(value(&out, "dim"), Some("12"));
    assert_eq!(value(&out, "delta0_dim"), Some("6"));
    assert_eq!(value(&out, "idealized_extension"), Some("pass"));
    assert_eq!(value(&out, "gendo_source"), Some("pass"));
    assert_eq!(value(&out, "presentation_match"), Some("true"));
    assert!(value(&out, "witness.arrow.gammab").is_some());
}

#[test]
fn mirror_of_b_matches_its_presentation() {
    let o = run(&["mirror", &data("b.quiver"), "--idempotent", "v1", "--level", "v1", "--expect", &data("r_b.quiver")]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let out = stdout(&o);
    assert_eq!(value(&out, "dim"), Some("18"));
    assert_eq!(value(&out, "delta0_dim"), Some("9"));
    assert_eq!(value(&out, "presentation_match"), Some("true"));
}

#[test]
fn mirror_mismatch_exits_1() {
    let o = run(&["mirror", &data("a.quiver"), "--idempotent", "v1", "--level", "e", "--expect", &data("r_b.quiver")]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(value(&stdout(&o), "presentation_match"), Some("false"));
}

#[test]
fn noncentral_level_exits_1() {
    let o = run(&["mirror", &data("a.quiver"), "--idempotent", "v1", "--level", "beta"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("LevelNotCentral"), "{}", stderr(&o));
}

#[test]
fn gendo_certificates() {
    for file in ["a.quiver", "b.quiver"] {
        let o = run(&["gendo", &data(file)]);
        assert_eq!(o.status.code(), Some(0), "{file}");
        let out = stdout(&o);
        assert_eq!(value(&out, "gendo_symmetric"), Some("true"));
        assert_eq!(value(&out, "idempotent"), Some("v1"));
    }
    let o = run(&["gendo", &data("a2.quiver"), "--idempotent", "auto"]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert_eq!(value(&out, "gendo_symmetric"), Some("false"));
    assert_eq!(value(&out, "domdim_ge2"), Some("false"));
}

#[test]
fn tilt_regular_stalk_is_verified() {
    let o = run(&["tilt", &data("a.quiver"), "--complex", &data("regular.complex")]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(value(&out, "verdict"), Some("Verified"));
    assert_eq!(value(&out, "end_dim"), Some("6"));
    assert_eq!(value(&out, "k0"), Some("pass"));
}

#[test]
fn tilt_overlapping_complex_fails() {
    let o = run(&["tilt", &data("a.quiver"), "--complex", &data("overlap.complex")]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert!(value(&out, "verdict").unwrap().starts_with("Fail(self-orthogonality"));
    assert_eq!(value(&out, "selforthogonal"), Some("false"));
}

#[test]
fn tilt_search_over_f2_finds_end_dim_9() {
    let o = run(&["tilt", &data("a.quiver"), "--search"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let out = stdout(&o);
    assert!(out.lines().any(|l| l.starts_with("candidate.") && l.ends_with(".end_dim: 9")), "{out}");
    assert_eq!(value(&out, "budget_exceeded"), Some("false"));
    assert_eq!(run(&["tilt", &data("a.quiver"), "--search", "--field", "Q"]).status.code(), Some(2));
}

#[test]
fn invariants_side_by_side() {
    let o = run(&["invariants", &data("a.quiver"), &data("b.quiver"), "--idempotent-a", "v1", "--idempotent-b", "v1"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    for k in ["simples", "cartan_det", "center_dim", "cartan_snf"] {
        assert_eq!(value(&out, &format!("agree.{k}")), Some("true"), "{k}");
    }
    assert_eq!(value(&out, "a.delta0_dim"), Some("6"));
    assert_eq!(value(&out, "b.theta0_dim"), Some("9"));

    let o = run(&["invariants", &data("r_a.quiver"), &data("r_b.quiver")]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(value(&out, "a.simples"), Some("3"));
    for k in ["simples", "cartan_det", "center_dim"] {
        assert_eq!(value(&out, &format!("agree.{k}")), Some("true"), "{k}");
    }

    let o = run(&["invariants", &data("a.quiver"), &data("kxk.quiver")]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(value(&out, "agree.cartan_det"), Some("false"));
    assert_eq!(value(&out, "agree.center_dim"), Some("false"));
}

#[test]
fn reports_are_reproducible() {
    let args = ["mirror", &data("a.quiver"), "--idempotent", "v1", "--level", "gamma+v1", "--expect", &data("r_a.quiver")];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn worked_example_over_q_skips_the_search() {
    let o = run(&["paper-example", "--field", "Q"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(out.lines().filter(|l| l.starts_with("PASS ")).count(), 8);
    assert!(out.lines().any(|l| l.starts_with("SKIPPED 9 ")));
}

#[test]
fn worked_example_default_field_passes() {
    let o = run(&["paper-example"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let out = stdout(&o);
    assert_eq!(out.lines().filter(|l| l.starts_with("PASS ")).count(), 9, "{out}");
    assert!(out.contains("[F2]"));
}

#[test]
fn worked_example_over_f7_passes() {
    let o = run(&["paper-example", "--field", "F7"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert_eq!(stdout(&o).lines().filter(|l| l.starts_with("PASS ")).count(), 9);
}
