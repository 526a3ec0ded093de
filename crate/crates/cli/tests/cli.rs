use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn corpus(rel: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../corpus")
        .join(rel)
        .display()
        .to_string()
}

fn repscheme(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_repscheme"))
        .args(args)
        .env_remove("REPSCHEME_SEED")
        .output()
        .unwrap()
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut all = args.to_vec();
    all.push("--json");
    let out = repscheme(&all);
    let code = out.status.code().unwrap();
    (code, serde_json::from_slice(&out.stdout).unwrap_or(Value::Null))
}

#[test]
fn tangent_at_commuting_origin() {
    let (code, report) = json(&["tangent", &corpus("comm2.alg"), &corpus("points/comm2_origin.pt")]);
    assert_eq!(code, 0);
    assert_eq!(report["result"]["tangent_dim"], 8);
    assert_eq!(report["command"], "tangent");
}

#[test]
fn text_report_lists_fields() {
    let out = repscheme(&["tangent", &corpus("comm2.alg"), &corpus("points/comm2_origin.pt")]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("command: tangent\nversion: "));
    assert!(text.contains("\ntangent_dim: 8\n"));
}

#[test]
fn hilb_dim_free2() {
    let (code, report) = json(&[
        "hilb-dim",
        &corpus("free2.alg"),
        &corpus("points/free2_generic.pt"),
        &corpus("vectors/v11.vec"),
    ]);
    assert_eq!(code, 0);
    assert_eq!(report["result"]["dimension"], 6);
}

#[test]
fn abelianized_weyl_contains_the_unit() {
    use repscheme_core::format::parse_algebra;
    use repscheme_core::ncalg::NcPolynomial;

    let (code, report) = json(&["abelianize", &corpus("weyl.alg")]);
    assert_eq!(code, 0);
    let p = parse_algebra(report["result"]["algebra"].as_str().unwrap()).unwrap();
    let rels = p.relations();
    assert_eq!(rels[1].sub(&rels[0]), NcPolynomial::one());
}

#[test]
fn invalid_point_exits_one() {
    let (code, report) = json(&["check", &corpus("comm2.alg"), &corpus("points/comm2_nonvalid.pt")]);
    assert_eq!(code, 1);
    assert_eq!(report["result"]["valid"], false);
    assert_eq!(report["result"]["violations"][0]["value"], "1");

    let out = repscheme(&["tangent", &corpus("comm2.alg"), &corpus("points/comm2_nonvalid.pt")]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn parse_and_usage_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.alg");
    std::fs::write(&bad, "relations\n x\nend\n").unwrap();
    let out = repscheme(&["check", bad.to_str().unwrap(), &corpus("points/free1_scalar.pt")]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("generators section missing"));

    assert_eq!(repscheme(&["tangent"]).status.code(), Some(2));
    assert_eq!(repscheme(&["bogus"]).status.code(), Some(2));
    let mismatch = repscheme(&["tangent", &corpus("comm2.alg"), &corpus("points/free1_scalar.pt")]);
    assert_eq!(mismatch.status.code(), Some(2));
}

#[test]
fn obstructed_deformation_exits_one() {
    let (code, report) = json(&[
        "deform",
        &corpus("dualnum.alg"),
        &corpus("points/dualnum_zero.pt"),
        &corpus("directions/dualnum_one.dir"),
    ]);
    assert_eq!(code, 1);
    assert_eq!(report["result"]["outcome"], "obstructed");
    assert_eq!(report["result"]["obstruction_order"], 2);
}

#[test]
fn commuting_deformation_lifts() {
    let (code, report) = json(&[
        "deform",
        &corpus("comm2.alg"),
        &corpus("points/comm2_origin.pt"),
        &corpus("directions/comm2_offdiag_y.dir"),
        "--order",
        "4",
    ]);
    assert_eq!(code, 0, "{report}");
    assert_eq!(report["result"]["outcome"], "lifted");
    assert_eq!(report["result"]["series"]["x"].as_array().unwrap().len(), 4);
}

#[test]
fn scan_reads_family_relative_paths() {
    let (code, report) = json(&["scan", &corpus("comm2.alg"), &corpus("families/comm2_diag.fam")]);
    assert_eq!(code, 0);
    let dims: Vec<u64> = report["result"]["rows"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["tangent_dim"].as_u64().unwrap())
        .collect();
    assert_eq!(dims, [6, 6, 6, 8]);
}

#[test]
fn resolution_certifies_quiver_point() {
    let (code, report) = json(&[
        "smooth-cert",
        &corpus("a2quiver.alg"),
        &corpus("points/a2quiver_path.pt"),
        "--assume-coherent",
        "--resolution",
        &corpus("a2quiver.res"),
    ]);
    assert_eq!(code, 0);
    assert_eq!(report["result"]["verdict"], "certified-smooth");

    let (_, report) = json(&["smooth-cert", &corpus("a2quiver.alg"), &corpus("points/a2quiver_path.pt")]);
    assert_eq!(report["result"]["reason"], "coherence-not-asserted");
}

#[test]
fn ext_reports_upper_bound_without_resolution() {
    let (_, report) = json(&["ext", &corpus("dualnum.alg"), &corpus("points/dualnum_zero.pt")]);
    assert_eq!(report["result"]["ext2"], 1);
    assert_eq!(report["result"]["ext2_exact"], false);
}

#[test]
fn ideal_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("comm2.ideal");
    let (code, report) = json(&["ideal", &corpus("comm2.alg"), "-n", "2", "-o", out.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(report["result"]["count"], 4);
    let text = std::fs::read_to_string(out).unwrap();
    assert!(text.starts_with("# relation 0, entry (1,1)\n"));
    assert!(text.contains("xi[x,1,2]"));
}

#[test]
fn hilb_canon_and_cyclic() {
    let (code, report) = json(&[
        "hilb-canon",
        &corpus("free2.alg"),
        &corpus("points/free2_cyclic.pt"),
        &corpus("vectors/v11.vec"),
    ]);
    assert_eq!(code, 0);
    assert_eq!(report["result"]["vector"], serde_json::json!(["1", "0"]));

    let (code, report) = json(&[
        "cyclic",
        &corpus("free1.alg"),
        &corpus("points/free1_diag113.pt"),
        &corpus("vectors/e1_3.vec"),
    ]);
    assert_eq!(code, 0);
    assert_eq!(report["result"]["cyclic"], false);

    let (code, _) = json(&[
        "hilb-dim",
        &corpus("free1.alg"),
        &corpus("points/free1_diag113.pt"),
        &corpus("vectors/e1_3.vec"),
    ]);
    assert_eq!(code, 1);
}

#[test]
fn seed_precedence() {
    let args = [
        "iso",
        &corpus("free1.alg"),
        &corpus("points/free1_diag12.pt"),
        &corpus("points/free1_diag12.pt"),
        "--json",
    ];
    let seed = |out: Output| -> Value {
        serde_json::from_slice::<Value>(&out.stdout).unwrap()["seed"].clone()
    };
    assert_eq!(seed(repscheme(&args)), 0);
    let bin = env!("CARGO_BIN_EXE_repscheme");
    let env_only = Command::new(bin).args(args).env("REPSCHEME_SEED", "9").output().unwrap();
    assert_eq!(seed(env_only), 9);
    let both = Command::new(bin)
        .args(args)
        .args(["--seed", "4"])
        .env("REPSCHEME_SEED", "9")
        .output()
        .unwrap();
    assert_eq!(seed(both), 4);
}

#[test]
fn reports_are_deterministic() {
    let args = [
        "iso",
        &corpus("free1.alg"),
        &corpus("points/free1_diag12.pt"),
        &corpus("points/free1_jordan.pt"),
        "--seed",
        "5",
    ];
    assert_eq!(repscheme(&args).stdout, repscheme(&args).stdout);
}

#[test]
fn high_degree_relation_warns() {
    let dir = tempfile::tempdir().unwrap();
    let alg = dir.path().join("high.alg");
    std::fs::write(&alg, "generators x\nrelations\n  x^9\nend\n").unwrap();
    let out = repscheme(&["ideal", alg.to_str().unwrap(), "-n", "1"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stderr).contains("degree 9"));
}
