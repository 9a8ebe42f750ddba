use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn homlab(args: &[&str], threads: Option<&str>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_homlab"));
    cmd.args(args);
    if let Some(t) = threads {
        cmd.env("HOMLAB_THREADS", t);
    }
    cmd.output().expect("binary runs")
}

fn scratch(name: &str) -> PathBuf {
    let dir = Path::new(env!("CARGO_TARGET_TMPDIR")).join("cli");
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn gen(args: &[&str], name: &str) -> String {
    let path = scratch(name);
    let p = path.to_str().unwrap().to_string();
    let mut all = vec!["gen"];
    all.extend_from_slice(args);
    all.extend_from_slice(&["--out", &p]);
    let out = homlab(&all, None);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    p
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("json output")
}

#[test]
fn hom_and_check_roundtrip() {
    let h3 = gen(&["hdelta", "--delta", "3", "--format", "json"], "h3.json");
    let gr = gen(&["named", "--name", "grotzsch"], "grotzsch.col");
    let out = homlab(&["solve", "hom", "--g", &gr, "--h", &h3], None);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["status"], "FOUND");
    let w = scratch("grotzsch-h3.json");
    std::fs::write(&w, &out.stdout).unwrap();
    let check = homlab(&["check", "hom", "--g", &gr, "--h", &h3, "--witness", w.to_str().unwrap()], None);
    assert_eq!(check.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&check.stdout).starts_with("VALID"));

    let k3 = gen(&["kn", "--n", "3"], "k3.col");
    let k2 = gen(&["kn", "--n", "2"], "k2.col");
    let none = homlab(&["solve", "hom", "--g", &k3, "--h", &k2], None);
    assert_eq!(json(&none)["status"], "NONE");
}

#[test]
fn chromatic_number_and_size_guard() {
    let h4 = gen(&["hdelta", "--delta", "4"], "h4.col");
    let out = homlab(&["solve", "chrom", "--graph", &h4], None);
    assert_eq!(json(&out)["witness"]["chi"], 6);

    let k70 = gen(&["kn", "--n", "70"], "k70.col");
    let out = homlab(&["solve", "chrom", "--graph", &k70], None);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("size guard"));
}

#[test]
fn labeled_g0_reaches_homgraph() {
    let g0 = gen(&["g0", "--delta", "3", "--depth", "8", "--seed", "3", "--dense"], "g0.col");
    let text = std::fs::read_to_string(&g0).unwrap();
    assert!(text.contains("c delta 3"));
    let out = homlab(
        &["solve", "homgraph", "--graph", &g0, "--delta", "3", "--depth", "2", "--labeled"],
        None,
    );
    assert_eq!(out.status.code(), Some(0));
    let w = &json(&out)["witness"];
    assert_eq!(w["label_preserving"], true);
    assert_eq!(w["root_map_edge_preserving"], true);
    assert!(w["vertices"].as_u64().unwrap() > 0);
}

#[test]
fn output_is_identical_across_thread_counts() {
    let pet = gen(&["named", "--name", "petersen"], "petersen.col");
    let runs: Vec<Output> = ["1", "4"]
        .iter()
        .map(|t| homlab(&["solve", "deltastar", "--graph", &pet, "--delta", "3"], Some(t)))
        .collect();
    assert!(runs[0].status.success());
    assert_eq!(runs[0].stdout, runs[1].stdout);

    let verify: Vec<Output> = ["1", "3"]
        .iter()
        .map(|t| homlab(&["verify", "hedetniemi", "--seed", "5", "--format", "json"], Some(t)))
        .collect();
    assert_eq!(verify[0].status.code(), Some(0));
    assert_eq!(verify[0].stdout, verify[1].stdout);
    let report = json(&verify[0]);
    assert_eq!(report["passed"], true);
    assert!(report["prng"].as_str().unwrap().contains("ChaCha8"));
}

#[test]
fn failed_claims_exit_nonzero() {
    let out = homlab(&["verify", "homgraph", "--seed", "0"], None);
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("PASS root-map-edge-preserving"));
    assert_eq!(out.status.code(), Some(if text.contains("FAIL") { 1 } else { 0 }));
}
