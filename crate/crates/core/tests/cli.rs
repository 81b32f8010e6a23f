//! The `lspin` binary: exit codes, table snapshots, verification output.

use std::path::PathBuf;
use std::process::{Command, Output};

fn lspin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lspin"))
        .args(args)
        .env_remove("LSPIN_CORPUS_DIR")
        .output()
        .expect("binary runs")
}

fn session(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("sessions").join(name).to_string_lossy().into_owned()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn eval_exit_codes() {
    let ok = lspin(&["eval", &session("iva.lspin")]);
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(stdout(&ok).lines().next(), Some("lfactor(P, r) = L(s, nu^{3/2}*sigma)"));
    for bad in ["vd.lspin", "iib_inadmissible.lspin"] {
        let o = lspin(&["eval", &session(bad)]);
        assert_eq!(o.status.code(), Some(1), "{bad}");
        assert!(stdout(&o).contains("NoBesselModel"), "{bad}");
    }
    assert_eq!(lspin(&["eval", "/nonexistent.lspin"]).status.code(), Some(2));
    assert_eq!(lspin(&["eval", &session("iva.lspin"), "--numeric", "q=1"]).status.code(), Some(2));
}

#[test]
fn eval_json_and_numeric() {
    let o = lspin(&["eval", &session("type_i.lspin"), "--json", "--numeric", "q=3", "seed=42"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["queries"][0]["numeric"]["agree"], true);
}

#[test]
fn tables_match_their_snapshots() {
    for t in ["sreg", "total", "zeta"] {
        let o = lspin(&["table", t, "--diff"]);
        assert_eq!(o.status.code(), Some(0), "{t}: {}", String::from_utf8_lossy(&o.stderr));
        assert!(stdout(&o).starts_with("== "));
    }
    assert_eq!(lspin(&["table", "nonsense"]).status.code(), Some(2));
}

#[test]
fn verify_filters_and_json() {
    let o = lspin(&["verify", "--case", "IIIb", "--jobs", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.lines().all(|l| !l.starts_with("FAIL")));
    assert!(out.contains("IIIb:chi1=nu"));
    assert!(!out.contains("IVa:"));

    let o = lspin(&["verify", "delta", "--case", "VIc", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["failed"], 0);
    assert!(v["reports"].as_array().unwrap().iter().all(|r| r["check"] == "delta"));

    assert_eq!(lspin(&["verify", "frobnicate"]).status.code(), Some(2));
    assert_eq!(lspin(&["verify", "--case", "XIII"]).status.code(), Some(2));
}

#[test]
fn verify_reads_extra_sessions() {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("sessions");
    let o = Command::new(env!("CARGO_BIN_EXE_lspin"))
        .args(["verify", "correspondence", "--case", "iva"])
        .env("LSPIN_CORPUS_DIR", &dir)
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("PASS correspondence iva:P"));
}
