use std::process::Command;

fn tlhom(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_tlhom")).args(args).output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn ok(args: &[&str]) -> String {
    let (code, out, err) = tlhom(args);
    assert_eq!(code, 0, "{args:?}: {err}");
    out.trim_end().to_string()
}

fn json(args: &[&str]) -> serde_json::Value {
    let mut a = args.to_vec();
    a.push("--json");
    serde_json::from_str(&ok(&a)).unwrap()
}

#[test]
fn multiplication() {
    assert_eq!(ok(&["mul", "--n", "5", "--ring", "Z", "--a", "7", "U2 U1 U4 U2 U3", "1"]), "1*(U4)(U2 U3)");
    assert_eq!(ok(&["mul", "--n", "2", "--ring", "Z", "--a", "2", "U1", "U1"]), "2*(U1)");
    assert_eq!(ok(&["mul", "--n", "2", "--ring", "Q", "--a", "2", "U1", "1"]), "1*(U1)");
    assert_eq!(ok(&["mul", "--n", "3", "--ring", "Fp:3", "--a", "-1", "U1", "U1"]), "2*(U1)");
}

#[test]
fn planar_injective_words() {
    let w = json(&["wn", "--n", "3", "--ring", "Q", "--v", "1"]);
    assert_eq!(w["dims"], serde_json::json!([1, 3, 5, 5]));
    assert_eq!(w["top_rank"], 2);
    let h = w["homology"].as_array().unwrap();
    assert!(h[..3].iter().all(|x| x["group"]["rank"] == 0));
    let w = json(&["wn", "--n", "2", "--ring", "Z", "--v", "1"]);
    assert_eq!(w["homology"][2]["group"], serde_json::json!({ "rank": 1, "torsion": [] }));
    let w = json(&["wn", "--n", "1", "--ring", "Q", "--v", "1"]);
    assert!(w["homology"].as_array().unwrap().iter().all(|x| x["group"]["rank"] == 0));
}

#[test]
fn tor_tables() {
    assert_eq!(ok(&["tor", "--n", "2", "--ring", "Z", "--a", "2", "--max-degree", "4"]), "Z, Z/2, 0, Z/2");
    assert_eq!(ok(&["tor", "--n", "3", "--ring", "Fp:2", "--v", "1", "--max-degree", "4"]), "F_2, 0, 0, 0");
    let t = json(&["tor", "--n", "4", "--ring", "Fp:5", "--v", "2", "--max-degree", "4"]);
    assert_eq!(t["nonzero_positive_degrees"], serde_json::json!([3]));
    assert_eq!(ok(&["tor", "--n", "2", "--ring", "Z", "--a", "2", "--max-degree", "4", "--ext"]), "Z, 0, Z/2, 0");
    assert_eq!(ok(&["tor", "--n", "3", "--ring", "Z", "--v", "1", "--module", "induced:1", "--max-degree", "3"]), "Z, 0, 0");
}

#[test]
fn sequences_and_binomials() {
    assert_eq!(ok(&["qbc", "--n", "4", "--delta-zero"]), "1 0 2 0 1");
    assert!(ok(&["qbc", "--n", "3"]).contains("[3 1] = -1 + 1*d^2"));
    assert!(ok(&["seq", "jacobsthal", "--upto", "4"]).ends_with(", 5"));
    assert_eq!(ok(&["seq", "catalan", "--upto", "5"]), "1, 1, 2, 5, 14, 42");
    assert_eq!(ok(&["seq", "fine", "--upto", "5"]), "1, 0, 1, 2, 6, 18");
}

#[test]
fn verdicts() {
    let out = ok(&["verify", "acyclicity", "--complex", "d", "--n", "3", "--m", "2", "--ring", "Z", "--a", "2", "--length", "8"]);
    assert!(out.starts_with("PASS"));
    assert!(ok(&["verify", "tor-sequence", "--n", "2", "--ring", "Z", "--v", "1"]).starts_with("PASS"));
    assert!(ok(&["verify", "shifted-iso", "--n", "2", "--ring", "Fp:2", "--v", "1"]).starts_with("PASS"));
}

#[test]
fn projectors() {
    assert_eq!(ok(&["jw", "--n", "2", "--ring", "Q", "--a", "2"]), "1*1 + -1/2*(U1)");
    assert_eq!(ok(&["jw", "--n", "2", "--ring", "Fp:2", "--a", "0"]), "none");
    let f = json(&["fineberg", "--n", "3", "--ring", "Q", "--v", "1"]);
    assert_eq!(f["rank"], 2);
    assert_eq!(json(&["resolve", "--n", "2", "--ring", "Z", "--a", "2"])["ranks"], serde_json::json!([1, 1, 1, 1, 1]));
}

#[test]
fn saved_complex_reloads() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().to_str().unwrap();
    let direct = json(&["wn", "--n", "3", "--ring", "Z", "--v", "1", "--save", path]);
    let manifest: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("complex.json")).unwrap()).unwrap();
    assert_eq!(manifest["dims"], direct["dims"]);
    assert!(dir.path().join("d_2.tlmat").exists());
}

#[test]
fn exit_codes() {
    assert_eq!(tlhom(&["mul", "--n", "2", "--ring", "Z", "--a", "2", "U5", "U1"]).0, 1);
    assert_eq!(tlhom(&["mul", "--n", "2", "--ring", "Z", "--a", "2", "--v", "1", "U1", "U1"]).0, 1);
    assert_eq!(tlhom(&["bogus"]).0, 1);
    assert_eq!(tlhom(&["wn", "--n", "2", "--ring", "Z", "--a", "2"]).0, 1);
    assert_eq!(tlhom(&["jw", "--n", "2", "--ring", "Z", "--a", "2"]).0, 2);
    assert_eq!(tlhom(&["mul", "--n", "2", "--ring", "Fp:4", "--a", "2", "U1", "U1"]).0, 2);
    assert_eq!(tlhom(&["--help"]).0, 0);
}
