use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use torus_spp::series::superpoly;
use torus_spp::Semigroup;
use torus_spp_cli::cache::{Cache, CacheEntry};
use torus_spp_cli::format::poly_from_json;

fn run(cache: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_torus-spp"))
        .env_remove("SUPERPOLY_CACHE_DIR")
        .arg("--cache-dir")
        .arg(cache)
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn trefoil_text() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(dir.path(), &["superpoly", "--n", "2", "--k", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "q^-2 + q^2*t^2 + a^2*q^-2*t + a^2*t^3 + a^2*q^2*t^3 + a^4*t^4");
}

#[test]
fn methods_print_the_same_thing() {
    let dir = tempfile::tempdir().unwrap();
    let a = run(dir.path(), &["--no-cache", "superpoly", "--n", "3", "--k", "7", "--method", "cells"]);
    for m in ["beta", "localization", "diagrams", "closed"] {
        let b = run(dir.path(), &["--no-cache", "superpoly", "--n", "3", "--k", "7", "--method", m]);
        assert_eq!(b.status.code(), Some(0), "{m}");
        assert_eq!(stdout(&a), stdout(&b), "{m}");
    }
}

#[test]
fn usage_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(dir.path(), &["superpoly", "--n", "4", "--k", "6"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("coprime"));
    let o = run(dir.path(), &["superpoly", "--n", "4", "--k", "7", "--method", "closed"]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(dir.path(), &["superpoly", "--n", "3"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn catalan_and_stable() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(dir.path(), &["catalan", "--n", "3"]);
    assert_eq!(stdout(&o).trim(), "q^3 + q^2*t + q*t^2 + q*t + t^3");
    let o = run(dir.path(), &["stable", "--n", "1", "--order", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).trim().ends_with("+ O(q^4)"));
}

#[test]
fn json_goes_through_the_cache_reader() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(dir.path(), &["superpoly", "--n", "3", "--k", "5", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let terms: Vec<(i32, i32, i32, String)> = serde_json::from_value(v["spp"].clone()).unwrap();
    let expect = superpoly(3, 5).unwrap().spp;
    assert_eq!(poly_from_json(&terms).unwrap(), expect);

    let sg = Semigroup::new(3, 5).unwrap();
    let entry: CacheEntry = Cache::new(dir.path()).load(&sg).unwrap().unwrap();
    assert_eq!(entry.poly().unwrap(), expect);
    assert!(entry.has_method("cells"));
}

#[test]
fn warm_cache_is_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["superpoly", "--n", "4", "--k", "5", "--format", "json"];
    let cold = run(dir.path(), &args);
    let file = dir.path().join("spp_4_5.json");
    let stored = fs::read(&file).unwrap();
    let warm = run(dir.path(), &args);
    assert_eq!(cold.stdout, warm.stdout);
    assert_eq!(fs::read(&file).unwrap(), stored);
}

#[test]
fn second_method_is_recorded() {
    let dir = tempfile::tempdir().unwrap();
    run(dir.path(), &["superpoly", "--n", "2", "--k", "5"]);
    run(dir.path(), &["superpoly", "--n", "2", "--k", "5", "--method", "beta"]);
    let sg = Semigroup::new(2, 5).unwrap();
    let entry = Cache::new(dir.path()).load(&sg).unwrap().unwrap();
    assert_eq!(entry.methods_checked, ["beta", "cells"]);
}

#[test]
fn tampered_cache_is_recomputed() {
    let dir = tempfile::tempdir().unwrap();
    let good = run(dir.path(), &["superpoly", "--n", "2", "--k", "3"]);
    let file = dir.path().join("spp_2_3.json");
    let text = fs::read_to_string(&file).unwrap();
    fs::write(&file, text.replacen("\"1\"", "\"5\"", 1)).unwrap();
    let again = run(dir.path(), &["superpoly", "--n", "2", "--k", "3"]);
    assert_eq!(again.status.code(), Some(0));
    assert_eq!(good.stdout, again.stdout);
    assert!(String::from_utf8_lossy(&again.stderr).contains("warning"));
}

#[test]
fn verify_trefoil() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(dir.path(), &["verify", "--n", "2", "--k", "3"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("all checks passed"));
    let o = run(dir.path(), &["verify", "--n", "3", "--k", "4", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["passed"], true);
}

#[test]
fn table_lists_coprime_pairs() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(dir.path(), &["table", "--n", "2..3", "--k", "3..5"]);
    assert_eq!(o.status.code(), Some(0));
    let lines: Vec<String> = stdout(&o).lines().map(|l| l.split_whitespace().collect::<Vec<_>>().join(" ")).collect();
    assert_eq!(lines[0], "n k delta mu terms semimodules");
    assert_eq!(&lines[1..], ["2 3 1 2 6 2", "2 5 2 4 10 3", "3 4 3 6 21 5", "3 5 4 8 30 7"]);
}
