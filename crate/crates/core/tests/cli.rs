use std::process::Command;

use relstab::cli;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = cli::run(std::iter::once("relstab").chain(args.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn higman_trivial_c2_is_obstructed() {
    let (code, out, _) = run(&["higman", "--ring", "Z", "--group", "C2", "--module", "trivial"]);
    assert_eq!(out, "NOT weakly projective; obstruction: 2·x = 1 unsolvable over Z\n");
    assert_eq!(code, 1);
}

#[test]
fn ext_trivial_c2_table() {
    let (code, out, _) = run(&[
        "ext", "--ring", "Z", "--group", "C2", "--source", "trivial", "--target", "trivial", "--max-degree", "4",
    ]);
    assert_eq!(out, "0: Z | 1: 0 | 2: Z/2 | 3: 0 | 4: Z/2\n");
    assert_eq!(code, 0);
}

#[test]
fn dn_zmod4_is_not_in_d1() {
    let (code, out, _) = run(&["dn", "--group", "C2", "--p", "2", "--n", "1", "--module", "Zmod4"]);
    assert_eq!(out, "NOT in D_1: unit Z/4 → Z/2 is not a stable isomorphism\n");
    assert_eq!(code, 1);
}

#[test]
fn dn_positive_when_p_is_invertible() {
    let (code, out, _) = run(&["dn", "--group", "C3", "--p", "2", "--n", "1", "--module", "Zmod4"]);
    assert!(out.starts_with("in D_1:"), "{out}");
    assert_eq!(code, 0);
}

#[test]
fn records_format() {
    let (code, out, _) = run(&[
        "ext", "--group", "C2", "--source", "trivial", "--target", "trivial", "--max-degree", "2", "--format", "records",
    ]);
    assert_eq!(code, 0);
    assert_eq!(out, "ext=Z degree=0\next=0 degree=1\next=Z/2 degree=2\n");
}

#[test]
fn parse_errors_exit_two() {
    let (code, out, err) = run(&["higman", "--group", "C2", "--module", "bogus("]);
    assert_eq!(code, 2);
    assert!(out.is_empty());
    assert!(err.starts_with("error: "), "{err}");
    assert_eq!(run(&["frobnicate"]).0, 2);
    assert_eq!(run(&["higman", "--group", "C0", "--module", "trivial"]).0, 2);
    assert_eq!(run(&["ext", "--ring", "Z/1", "--source", "trivial", "--target", "trivial"]).0, 2);
}

#[test]
fn help_exits_zero() {
    let (code, out, _) = run(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("higman"));
}

#[test]
fn max_dim_guard() {
    let bin = env!("CARGO_BIN_EXE_relstab");
    let o = Command::new(bin)
        .args(["higman", "--group", "S3", "--module", "regular"])
        .env("RELSTAB_MAX_DIM", "10")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("RELSTAB_MAX_DIM"));
}

#[test]
fn emitted_certificates_check() {
    let dir = std::env::temp_dir().join(format!("relstab-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("cert.json");
    let p = path.to_str().unwrap();
    let (code, out, _) = run(&["higman", "--group", "S3", "--module", "regular", "--emit-cert", p]);
    assert_eq!(code, 0);
    assert!(out.starts_with("weakly projective; certificate θ = "));
    let (code, out, _) = run(&["checkcert", p]);
    assert_eq!(code, 0, "{out}");
    assert_eq!(out, "certificate 1 (regular is weakly projective): valid\n");

    let text = std::fs::read_to_string(&path).unwrap();
    let mut v: serde_json::Value = serde_json::from_str(&text).unwrap();
    v["certificates"][0]["theta"][0][0] = serde_json::Value::String("5".into());
    std::fs::write(&path, v.to_string()).unwrap();
    let (code, out, _) = run(&["checkcert", p]);
    assert_eq!(code, 1);
    assert!(out.contains("INVALID"), "{out}");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn document_modules_and_maps() {
    let dir = std::env::temp_dir().join(format!("relstab-doc-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("ws.json");
    let doc = r#"{
      "ring": "Z",
      "group": {"family": "cyclic", "params": {"order": 2}},
      "modules": {
        "Zsign": {"gens": 1, "relations": [], "action": [[["-1"]]]},
        "R": {"gens": 2, "relations": [], "action": [[["0", "1"], ["1", "0"]]]}
      },
      "maps": {
        "double": {"source": "trivial", "target": "trivial", "matrix": [["2"]]},
        "triple": {"source": "trivial", "target": "trivial", "matrix": [["3"]]}
      }
    }"#;
    std::fs::write(&path, doc).unwrap();
    let p = path.to_str().unwrap();
    let (code, out, _) = run(&["--doc", p, "higman", "--module", "R"]);
    assert_eq!(code, 0, "{out}");
    let (code, out, _) = run(&["--doc", p, "stableiso", "--map", "triple"]);
    assert_eq!((code, out.as_str()), (0, "stable isomorphism; the cone is weakly projective\n"));
    let (code, _, _) = run(&["--doc", p, "stableiso", "--map", "double"]);
    assert_eq!(code, 1);
    let (code, out, _) = run(&["--doc", p, "cohomology", "--module", "Zsign", "--max-degree", "3"]);
    assert_eq!((code, out.as_str()), (0, "0: 0 | 1: Z/2 | 2: 0 | 3: Z/2\n"));
    let (code, out, _) = run(&["--doc", p, "validate"]);
    assert_eq!(code, 0);
    assert_eq!(out, "R: valid\nZsign: valid\n");

    let bad = doc.replace(r#"[[["-1"]]]"#, r#"[[["2"]]]"#);
    std::fs::write(&path, bad).unwrap();
    let (code, out, _) = run(&["--doc", p, "validate", "--module", "Zsign"]);
    assert_eq!(code, 1);
    assert!(out.starts_with("Zsign: invalid"), "{out}");
    assert_eq!(run(&["--doc", p, "higman", "--module", "Zsign"]).0, 2);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn reports_for_each_subcommand() {
    let cases: &[(&[&str], i32, &str)] = &[
        (&["stablehom", "--group", "S3", "--source", "trivial", "--target", "trivial"], 0, "stable Hom(trivial, trivial) = Z/6\n"),
        (&["stableiso", "--group", "C2", "--source", "trivial", "--scalar", "3"], 0, "stable isomorphism; the cone is weakly projective\n"),
        (&["induce", "--group", "C2", "--module", "sign"], 0, "sign↑G: 2 generators, underlying Z^2\nι = [[1], [-1]]\nπ = [[1, -1]]\n"),
        (&["localcheck", "--group", "C2", "--source", "trivial", "--target", "trivial", "--n", "2"], 0, "Z: Z/2 | Z_(2): Z/2 | |G| divides n: yes | agree\n"),
        (&["relasgc", "--group", "C3", "--source", "trivial", "--target", "Zmod(3)", "--max-degree", "2"], 0, "Ext: 0: Z/3 | 1: Z/3 | 2: Z/3\nH*(G, Hom_k): 0: Z/3 | 1: Z/3 | 2: Z/3\nagree\n"),
        (&["support", "--group", "C2", "--module", "trivial", "--max-degree", "2"], 0, "degreewise supports of Ext^d(trivial, trivial); a proxy for the support variety\n1: {} | 2: {(2)}\n"),
    ];
    for (args, code, expected) in cases {
        let (c, out, err) = run(args);
        assert_eq!((c, out.as_str()), (*code, *expected), "{args:?}: {err}");
    }
}

#[test]
fn verify_single_suite() {
    let (code, out, _) = run(&["verify", "maschke"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("[PASS]"), "{out}");
    assert_eq!(run(&["verify", "nonsense"]).0, 2);
}
