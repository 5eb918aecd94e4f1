use std::path::PathBuf;
use std::process::Command;

use ribbonlink::catalog;
use ribbonlink::cli::run;
use serde_json::Value;

fn repo(path: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../..").join(path)
}

fn schema(name: &str) -> jsonschema::Validator {
    let text = std::fs::read_to_string(repo(&format!("schemas/{name}.schema.json"))).unwrap();
    jsonschema::validator_for(&serde_json::from_str(&text).unwrap()).unwrap()
}

fn valid(name: &str, json: &str) {
    let v: Value = serde_json::from_str(json).unwrap();
    let s = schema(name);
    let errors: Vec<String> = s.iter_errors(&v).map(|e| e.to_string()).collect();
    assert!(errors.is_empty(), "{name}: {errors:?}");
}

fn cli(args: &[&str]) -> ribbonlink::cli::Output {
    run(std::iter::once("ribbonlink").chain(args.iter().copied()))
}

#[test]
fn exit_codes_from_binary() {
    let bin = env!("CARGO_BIN_EXE_ribbonlink");
    let status = |args: &[&str]| Command::new(bin).args(args).output().unwrap().status.code();
    let data = |f: &str| repo(&format!("data/{f}")).to_string_lossy().into_owned();
    assert_eq!(status(&["invariants", &data("trefoil.pd")]), Some(0));
    assert_eq!(status(&["invariants", &data("malformed.pd")]), Some(2));
    assert_eq!(status(&["reconstruct", &data("bridge-c.json")]), Some(3));
    assert_eq!(status(&["no-such-command"]), Some(2));
}

#[test]
fn malformed_input_has_diagnostic() {
    let out = cli(&["invariants", repo("data/malformed.pd").to_str().unwrap()]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("crossing has 3 arcs"));
}

#[test]
fn kink_tait_rows() {
    let out = cli(&["invariants", "--format", "json", "@kink"]);
    let v: Value = serde_json::from_str(&out.stdout).unwrap();
    let row = |i: usize| (v["rows"][i]["v"].as_u64().unwrap(), v["rows"][i]["e"].as_u64().unwrap());
    // A loop on one vertex and a bridge between two.
    assert_eq!(row(0), (1, 1));
    assert_eq!(row(1), (2, 1));
}

#[test]
fn seifert_check_passes_on_catalog() {
    for (n, _) in catalog::ENTRIES {
        let out = cli(&["seifert-check", "--format", "json", &format!("@{n}")]);
        assert_eq!(out.code, 0, "{n}");
        valid("seifert-check", &out.stdout);
    }
}

#[test]
fn reconstruct_triangle() {
    let out = cli(&["reconstruct", "--format", "json", repo("data/triangle-c.json").to_str().unwrap()]);
    assert_eq!(out.code, 0);
    valid("reconstruct", &out.stdout);
    let v: Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["round_trip"], Value::Bool(true));
    assert_eq!(v["crossings"], 3);
    let bad = cli(&["reconstruct", repo("data/bridge-c.json").to_str().unwrap()]);
    assert_eq!(bad.code, 3);
    assert!(bad.stderr.contains("vertices [1 2]"));
}

#[test]
fn parallel_report() {
    let out = cli(&["parallel", "--format", "json", "@trefoil", "-r", "2", "--state", "AAA"]);
    assert_eq!(out.code, 0);
    valid("parallel", &out.stdout);
    let v: Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["report"]["closed_form"], "ca4_iterated");
    assert_eq!(v["report"]["records"][1]["oracle_genus"], 7);
    assert_eq!(v["report"]["records"][1]["ca1_value"], 10);
    assert_eq!(v["turaev_bound"], 10);
    assert_eq!(cli(&["parallel", "@trefoil", "-r", "0"]).code, 2);
    assert_eq!(cli(&["parallel", "@trefoil", "--state", "AB"]).code, 2);
    let csv = cli(&["parallel", "--format", "csv", "@trefoil", "-r", "2"]).stdout;
    assert!(csv.lines().any(|l| l.starts_with("3,15,27,14,15,27,14,")), "{csv}");
}

#[test]
fn outputs_match_schemas() {
    for (n, _) in catalog::ENTRIES {
        let d = format!("@{n}");
        valid("invariants", &cli(&["invariants", "--format", "json", &d]).stdout);
        valid("parallel", &cli(&["parallel", "--format", "json", &d, "-r", "1", "--state", "seifert"]).stdout);
    }
    valid("selftest", &cli(&["selftest", "--format", "json", "--suite", "2", "--suite", "8"]).stdout);
    for f in ["triangle-c.json", "bridge-c.json"] {
        valid("map", &std::fs::read_to_string(repo(&format!("data/{f}"))).unwrap());
    }
    let map = ribbonlink::states::tait_graph(&catalog::get("nonalt6").unwrap(), &catalog::get("nonalt6").unwrap().checkerboard().0);
    valid("map", &serde_json::to_string(&map.to_json()).unwrap());
}

#[test]
fn output_is_deterministic() {
    for args in [["invariants", "--format", "csv", "@nonalt6"], ["seifert-check", "--format", "text", "@hopf"]] {
        assert_eq!(cli(&args), cli(&args));
    }
    let dot = cli(&["seifert-check", "--format", "dot", "@trefoil"]).stdout;
    assert!(dot.starts_with("graph seifert {"));
}
