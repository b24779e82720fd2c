//! End-to-end tests of the installed binary: real process spawns checking
//! exit codes, stream separation, and the POLYLRS_SEED environment fallback.

use std::path::PathBuf;
use std::process::{Command, Output};
use std::sync::atomic::{AtomicUsize, Ordering};

use polylrs::fixtures;
use polylrs::io;
use polylrs::model::hrep_equivalent;
use polylrs::numerics::{Rat, Scalar};

fn bin() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_polylrs"));
    // Tests control the seed explicitly; an ambient value must not leak in.
    cmd.env_remove("POLYLRS_SEED");
    cmd
}

fn temp_file(content: &str) -> PathBuf {
    static COUNTER: AtomicUsize = AtomicUsize::new(0);
    let n = COUNTER.fetch_add(1, Ordering::Relaxed);
    let path =
        std::env::temp_dir().join(format!("polylrs-proc-test-{}-{n}.txt", std::process::id()));
    std::fs::write(&path, content).expect("write temp input");
    path
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("stdout is UTF-8")
}

fn stderr_of(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("stderr is UTF-8")
}

#[test]
fn htovr_writes_the_chimney_generators_and_exits_zero() {
    let path = temp_file(&io::serialize_hrep(&fixtures::chimney()));
    let out = bin().args(["htovr"]).arg(&path).output().unwrap();
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr_of(&out));
    let rep = io::parse_vrep::<Rat>(&stdout_of(&out)).unwrap();
    assert_eq!(rep.vertices.len(), 5);
    assert_eq!(
        rep.rays,
        vec![vec![Rat::from_int(0), Rat::from_int(0), Rat::from_int(1)]]
    );
}

#[test]
fn minimal_hrep_example_parses_to_the_documented_system() {
    let path = temp_file("hrep\n2 1\n-1 0\n1 1\nend\n");
    let out = bin().args(["htovr"]).arg(&path).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    // {x : -x <= 0, x <= 1} = [0, 1].
    let rep = io::parse_vrep::<Rat>(&stdout_of(&out)).unwrap();
    let mut xs = rep.vertices.clone();
    xs.sort();
    assert_eq!(xs, vec![vec![Rat::from_int(0)], vec![Rat::from_int(1)]]);
}

#[test]
fn vrtoh_on_a_flat_segment_exits_three_with_the_expected_message() {
    let path = temp_file("vrep\n2 0\nv 0 0\nv 1 0\nend\n");
    let out = bin().args(["vrtoh"]).arg(&path).output().unwrap();
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr_of(&out).contains("VR-representation is not full dimensional"));
    assert_eq!(stdout_of(&out), "");
}

#[test]
fn vrtoh_round_trips_htovr_output_through_real_processes() {
    let hrep_path = temp_file(&io::serialize_hrep(&fixtures::cube3()));
    let out = bin().args(["htovr"]).arg(&hrep_path).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let vrep_path = temp_file(&stdout_of(&out));
    let back = bin().args(["vrtoh"]).arg(&vrep_path).output().unwrap();
    assert_eq!(back.status.code(), Some(0));
    let q = io::parse_hrep::<Rat>(&stdout_of(&back)).unwrap();
    assert!(hrep_equivalent(&fixtures::cube3(), &q).unwrap());
}

#[test]
fn lp_unbounded_prints_on_both_streams_and_exits_zero() {
    let path = temp_file(&io::serialize_hrep(&fixtures::chimney()));
    let out = bin()
        .args(["lp"])
        .arg(&path)
        .args(["--objective", "0 0 1"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_of(&out), "unbounded\n");
    assert!(stderr_of(&out).contains("The problem is unbounded"));
}

#[test]
fn lp_optimum_uses_the_fixed_output_format() {
    let path = temp_file(&io::serialize_hrep(&fixtures::cube3()));
    let out = bin()
        .args(["lp"])
        .arg(&path)
        .args(["--objective", "1 1 1"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_of(&out), "optimal\nx: 1 1 1\nmax: 3\n");
}

#[test]
fn exit_codes_distinguish_empty_no_vertex_parse_and_internal() {
    let empty = temp_file("hrep\n2 1\n1 -1\n-1 0\nend\n");
    let out = bin().args(["htovr"]).arg(&empty).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr_of(&out).contains("polyhedron Hx<=b is empty"));

    let unpointed = temp_file("hrep\n1 2\n1 1 1\nend\n");
    let out = bin().args(["htovr"]).arg(&unpointed).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_of(&out).contains("polyhedron Hx<=b has no vertex"));

    let malformed = temp_file("hrep\n1 1\n1\nend\n");
    let out = bin().args(["htovr"]).arg(&malformed).output().unwrap();
    assert_eq!(out.status.code(), Some(4));
    assert!(stderr_of(&out).contains("line 3"));

    let out = bin()
        .args(["htovr", "/nonexistent/path.hrep"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn help_exits_zero_and_usage_errors_exit_four() {
    let out = bin().args(["--help"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout_of(&out).contains("htovr"));

    let out = bin().args(["frobnicate"]).output().unwrap();
    assert_eq!(out.status.code(), Some(4));
    assert!(!stderr_of(&out).is_empty());
}

#[test]
fn seed_env_var_is_the_fallback_and_must_be_an_integer() {
    let path = temp_file(&io::serialize_hrep(&fixtures::cube3()));

    let with_env = bin()
        .args(["htovr"])
        .arg(&path)
        .env("POLYLRS_SEED", "12345")
        .output()
        .unwrap();
    assert_eq!(with_env.status.code(), Some(0));

    let with_flag = bin()
        .args(["htovr"])
        .arg(&path)
        .args(["--seed", "12345"])
        .output()
        .unwrap();
    assert_eq!(with_flag.status.code(), Some(0));
    assert_eq!(stdout_of(&with_env), stdout_of(&with_flag));

    // The explicit flag wins over the environment.
    let flag_wins = bin()
        .args(["htovr"])
        .arg(&path)
        .args(["--seed", "12345"])
        .env("POLYLRS_SEED", "not-a-number")
        .output()
        .unwrap();
    assert_eq!(flag_wins.status.code(), Some(0));

    let bad_env = bin()
        .args(["htovr"])
        .arg(&path)
        .env("POLYLRS_SEED", "not-a-number")
        .output()
        .unwrap();
    assert_eq!(bad_env.status.code(), Some(4));
    assert!(stderr_of(&bad_env).contains("POLYLRS_SEED"));
}

#[test]
fn float_mode_runs_with_custom_tolerances() {
    let path = temp_file(&io::serialize_hrep(&fixtures::cube3()));
    let out = bin()
        .args(["htovr"])
        .arg(&path)
        .args([
            "--mode",
            "float",
            "--tol-zero",
            "1e-10",
            "--tol-feas",
            "1e-9",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr_of(&out));
    assert!(stdout_of(&out).starts_with("vrep\n8 0\n"));
}

#[test]
fn oracle_subcommand_runs_all_three_kinds() {
    let hpath = temp_file(&io::serialize_hrep(&fixtures::chimney()));
    let out = bin()
        .args(["oracle", "vertices"])
        .arg(&hpath)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_of(&out).lines().count(), 5);

    let out = bin().args(["oracle", "rays"]).arg(&hpath).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_of(&out), "0 0 1\n");

    let vpath = temp_file("vrep\n3 0\nv 0 0\nv 1 0\nv 0 1\nend\n");
    let out = bin()
        .args(["oracle", "facets"])
        .arg(&vpath)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_of(&out), "-1 0 0\n0 -1 0\n1 1 1\n");
}

#[test]
fn cli_output_matches_the_library_serialization_byte_for_byte() {
    use polylrs::transforms::{h_to_vr, HToVrOutcome};
    use polylrs::vertex_search::VertexSearchConfig;

    let p = fixtures::square_pyramid();
    let path = temp_file(&io::serialize_hrep(&p));
    let out = bin()
        .args(["htovr"])
        .arg(&path)
        .args(["--with-origins", "--seed", "0"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));

    let rep = match h_to_vr(
        &p,
        &VertexSearchConfig {
            rng_seed: 0,
            ..VertexSearchConfig::default()
        },
        polylrs::numerics::TolerancePolicy::<Rat>::exact(),
    )
    .unwrap()
    {
        HToVrOutcome::Representation(rep) => rep,
        other => panic!("expected representation, got {other:?}"),
    };
    assert_eq!(stdout_of(&out), io::serialize_vrep(&rep, true));
}
