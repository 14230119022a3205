//! End-to-end runs of the `mzvlab` binary.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_mzvlab"));
    cmd.env_remove("MZVLAB_CUTOFF");
    cmd.current_dir(std::env::temp_dir());
    cmd
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn scratch_dir(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("mzvlab-cli-{name}-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn reduce_prints_polynomial_and_statement() {
    let o = run(&["reduce", "--w1", "x", "--w2", ""]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "y\nf(yx, x) = f(y, yx)\n");
    let o = run(&["reduce", "--w1", "x", "--w2", "1"]);
    assert_eq!(stdout(&o).lines().next(), Some("y"));
}

#[test]
fn products_and_maps() {
    let o = run(&["product", "--op", "diamond", "y", "y"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "yy - yx");
    let o = run(&["product", "--op", "harmonic", "3/2*y", "1"]);
    assert_eq!(stdout(&o).trim(), "3/2*y");
    let o = run(&["map", "--name", "phi", "y z x"]);
    assert_eq!(o.status.code(), Some(0));
    let o = run(&["map", "--name", "smap", "x"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn span_reports_dimension_and_pivots() {
    let o = run(&["span", "--set", "A2", "--weight", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "A2 weight 3: dim 1 (1 generators)\npivots: yyx\n");
    let o = run(&["span", "--set", "A4", "--weight", "5", "--json"]);
    let text = stdout(&o);
    assert!(text.ends_with('\n') && text.lines().count() == 1);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["dim"], 5);
    assert_eq!(v["weight"], 5);
}

#[test]
fn checks_succeed() {
    let o = run(&["check", "equality", "--max-weight", "5"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("weight 5: A1=5 A2=5 A3=5 A4=5 equal"));
    assert_eq!(run(&["check", "duality", "--weight", "5"]).status.code(), Some(0));
    assert_eq!(run(&["check", "derivation", "--weight", "4", "--l", "2"]).status.code(), Some(0));
    let o = run(&["check", "duality", "--weight", "4", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 4);
    assert!(v[0]["certificate"]["coordinates"].is_array());
}

#[test]
fn zeta_report_json() {
    let o = run(&["zeta", "--index", "1,2", "--cutoff", "65536", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!((v["value"].as_f64().unwrap() - 1.202_056_903_159_594).abs() < 1e-9);
    assert_eq!(v["cutoff"], 65536);
    assert_eq!(v["converged"], true);
    assert_eq!(run(&["zeta", "--index", "2,1"]).status.code(), Some(2));
}

#[test]
fn verification_exit_codes() {
    let o = run(&["verify", "kawashima", "--max-weight", "5", "--cutoff", "1048576", "--tol", "1e-4"]);
    assert_eq!(o.status.code(), Some(0));
    // an impossible tolerance makes the same table fail
    let o = run(&["verify", "kawashima", "--max-weight", "4", "--cutoff", "64", "--tol", "1e-30"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL"));
    let o = run(&["verify", "interpolation", "--index", "2", "--smax", "2", "--cutoff", "65536"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let o = run(&["verify", "c2", "--max-weight", "3", "--max-N", "10"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("70 of 70 checks exact"));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        vec!["bogus"],
        vec!["span", "--set", "A9", "--weight", "3"],
        vec!["span", "--set", "A1", "--weight", "3", "--frob"],
        vec!["product", "--op", "diamond", "x^^2", "y"],
        vec!["product", "--op", "diamond", "1/0*x", "y"],
        vec!["check"],
    ] {
        let o = run(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!o.stderr.is_empty());
    }
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn config_file_and_environment() {
    let dir = scratch_dir("config");
    std::fs::write(dir.join("mzvlab.conf"), "cutoff = 4096\n").unwrap();
    let cutoff_of = |o: Output| -> u64 {
        let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
        v["cutoff"].as_u64().unwrap()
    };
    let mut cmd = bin();
    cmd.current_dir(&dir).args(["zeta", "--index", "2", "--json"]);
    assert_eq!(cutoff_of(cmd.output().unwrap()), 4096);

    let mut cmd = bin();
    cmd.current_dir(&dir).env("MZVLAB_CUTOFF", "2048").args(["zeta", "--index", "2", "--json"]);
    assert_eq!(cutoff_of(cmd.output().unwrap()), 2048);

    let mut cmd = bin();
    cmd.current_dir(&dir)
        .env("MZVLAB_CUTOFF", "2048")
        .args(["zeta", "--index", "2", "--cutoff", "1024", "--json"]);
    assert_eq!(cutoff_of(cmd.output().unwrap()), 1024);

    let other = dir.join("alt.conf");
    std::fs::write(&other, "cutoff = 512\n").unwrap();
    let mut cmd = bin();
    cmd.current_dir(&dir).args(["--config", other.to_str().unwrap(), "zeta", "--index", "2", "--json"]);
    assert_eq!(cutoff_of(cmd.output().unwrap()), 512);

    std::fs::write(dir.join("mzvlab.conf"), "cutof = 1\n").unwrap();
    let mut cmd = bin();
    cmd.current_dir(&dir).args(["zeta", "--index", "2"]);
    assert_eq!(cmd.output().unwrap().status.code(), Some(2));
    std::fs::remove_dir_all(&dir).ok();
}
