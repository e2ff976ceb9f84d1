use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::{json, Value};

fn lscat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lscat"))
        .args(args)
        .env_remove("LSCAT_FIELDS")
        .output()
        .expect("binary runs")
}

fn json_of(args: &[&str]) -> Value {
    let out = lscat(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

fn invariants(expr: &str) -> Value {
    json_of(&["invariants", expr, "--json"])
}

fn golden(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name)
}

/// Compares against a checked-in file; `LSCAT_BLESS=1` rewrites it.
fn assert_golden(name: &str, actual: &Value) {
    let path = golden(name);
    if std::env::var_os("LSCAT_BLESS").is_some() {
        std::fs::write(&path, serde_json::to_string_pretty(actual).unwrap() + "\n").unwrap();
        return;
    }
    let text = std::fs::read_to_string(&path)
        .unwrap_or_else(|e| panic!("{}: {e}; run with LSCAT_BLESS=1", path.display()));
    let expected: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(&expected, actual, "golden {name} differs");
}

const HEADLINE_EXPRS: &[&str] = &[
    "pt",
    "S4",
    "S5",
    "RP3",
    "F(S1 x R^1, 2)",
    "F(S1 x R^2, 2)",
    "F(S1 x R^3, 2)",
    "F(RP3 x R^1, 2)",
    "F(RP3 x R^3, 2)",
    "F(SO(3) x R^2, 2)",
    "(S1 x R^2) x (S1 x R^2)",
    "(RP3 x R^3) x (RP3 x R^3)",
    "wedge(RP3, S5)",
    "wedge(S1, S3)",
    "wedge(S2, S4)",
    "wedge(S1, S2, S5)",
];

#[test]
fn headline_numbers_match_golden() {
    let mut table = serde_json::Map::new();
    for e in HEADLINE_EXPRS {
        let v = invariants(e);
        let fields: Vec<Value> = v["fields"]
            .as_array()
            .unwrap()
            .iter()
            .map(|f| json!([f["field"], f["cup_length"], f["zcl"]]))
            .collect();
        table.insert(
            e.to_string(),
            json!({
                "cat": v["cat"]["exact"],
                "tc": v["tc"]["exact"],
                "tcm": v["tcm"]["exact"],
                "field_cup_zcl": fields,
            }),
        );
    }
    assert_golden("headlines.json", &Value::Object(table));
}

#[test]
fn point_has_trivial_invariants() {
    let v = invariants("pt");
    assert_eq!(v["schema"], "lscat.invariants");
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["cat"]["exact"], 1);
    assert_eq!(v["tc"]["exact"], 1);
}

fn tc_upper_rules(v: &Value) -> Vec<String> {
    v["certificates"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["invariant"] == "TC" && c["side"] == "upper")
        .map(|c| c["rule"].as_str().unwrap().to_string())
        .collect()
}

#[test]
fn cylinder_configuration_tc_is_certified_by_the_product_rule() {
    let v = invariants("F(S1 x R^2, 2)");
    assert_eq!(v["tc"]["exact"], 4);
    assert_eq!(v["cat"]["exact"], 3);
    assert_eq!(v["normalized"], "S1 x wedge(S1, S2)");
    assert!(!v["rewrites"].as_array().unwrap().is_empty());
    assert_eq!(tc_upper_rules(&v).last().map(String::as_str), Some("R12"));
}

#[test]
fn rp3_wedge_s5_uses_the_sphere_wedge_rule() {
    let v = invariants("wedge(RP3, S5)");
    assert_eq!(v["tc"]["exact"], 5);
    let certs = v["certificates"].as_array().unwrap();
    assert!(certs.iter().any(|c| c["rule"] == "R11"
        && c["invariant"] == "TC"
        && c["side"] == "upper"
        && c["value"] == 5));
}

#[test]
fn text_output_names_the_exact_values() {
    let out = lscat(&["invariants", "F(RP3 x R^1, 2)"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("TC = 8 (exact)"), "{text}");
    assert!(text.contains("cat = 7 (exact)"), "{text}");
}

#[test]
fn fields_follow_the_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_lscat"))
        .args(["invariants", "RP3", "--json"])
        .env("LSCAT_FIELDS", "Z2")
        .output()
        .unwrap();
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    let fields = v["fields"].as_array().unwrap();
    assert_eq!(fields.len(), 1);
    assert_eq!(fields[0]["cup_length"], 3);
}

#[test]
fn ring_reads_presentations_and_spaces() {
    let v = json_of(&["ring", "S1 x S2", "--fields", "Q", "--json"]);
    let r = &v["rings"][0];
    assert_eq!(r["betti"], json!([1, 1, 1, 1]));
    assert_eq!(r["cup_length"], 2);
    assert_eq!(r["valid"], true);

    let v = json_of(&["ring", "exterior(x:1, y:3)", "--fields", "Q", "--json"]);
    assert_eq!(v["rings"][0]["dimension"], 4);
    assert_eq!(v["rings"][0]["zcl"], 2);

    let v = json_of(&["ring", "trunc(a:1, h=4)@Z2", "--json"]);
    let rings = v["rings"].as_array().unwrap();
    assert_eq!(rings.len(), 1);
    assert_eq!(rings[0]["cup_length"], 3);
}

#[test]
fn circle_plan_is_a_quarter_turn() {
    let v = json_of(&["plan", "circle", "0", "90", "--resolution", "4"]);
    assert_eq!(v["schema"], "lscat.path");
    assert_eq!(v["rule"], 0);
    let samples = v["samples"].as_array().unwrap();
    assert_eq!(samples.len(), 5);
    assert_eq!(samples[0]["point"], json!([1.0, 0.0]));
    let last = samples[4]["point"].as_array().unwrap();
    assert!((last[0].as_f64().unwrap()).abs() < 1e-12);
    assert!((last[1].as_f64().unwrap() - 1.0).abs() < 1e-12);
}

#[test]
fn configuration_swap_stays_collision_free() {
    let v = json_of(&[
        "plan",
        "cylinder-config:1",
        "(0,-1),(180,1)",
        "(180,1),(0,-1)",
        "--resolution",
        "256",
    ]);
    assert!(v["min_collision_margin"].as_f64().unwrap() > 0.0);
    assert_eq!(v["planner"], "cylinder-config:1");
}

#[test]
fn wedge_points_accept_lobe_shorthand() {
    let v = json_of(&["plan", "wedge:2", "x:90", "y:0,0,1"]);
    let samples = v["samples"].as_array().unwrap();
    assert_eq!(samples[0]["point"].as_array().unwrap().len(), 5);
}

#[test]
fn usage_errors_exit_with_two() {
    for args in [
        &["plan", "torus:9", "0", "0"][..],
        &["verify", "bogus"],
        &["verify", "odd-sphere:2"],
        &["invariants", "S1 x"],
        &["invariants", "F(S1, 2)"],
        &["invariants", "pt", "--fields", "Q,Z4"],
        &["plan", "sphere:2", "1,0", "0,1,0"],
        &["plan", "cylinder-config:1", "(0,0),(0,0)", "(90,0),(180,0)"],
        &["plan", "sphere:2", "2,0,0", "0,1,0"],
    ] {
        let out = lscat(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn verification_passes_and_exits_zero() {
    for space in ["sphere:2", "cylinder-config:1", "odd-sphere:3"] {
        let out = lscat(&["verify", space, "--samples", "400", "--seed", "3"]);
        assert_eq!(out.status.code(), Some(0), "{space}");
        let v: Value = serde_json::from_slice(&out.stdout).unwrap();
        assert_eq!(v["schema"], "lscat.verification");
        assert_eq!(v["report"]["passed"], true);
        assert_eq!(v["report"]["coverage_fraction"], 1.0);
    }
}

#[test]
fn verification_is_reproducible() {
    let a = lscat(&["verify", "wedge:1", "--samples", "300", "--seed", "11"]);
    let b = lscat(&["verify", "wedge:1", "--samples", "300", "--seed", "11"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn catalog_lists_every_planner() {
    let v = json_of(&["catalog", "--json"]);
    let planners = v["planners"].as_array().unwrap();
    let counts: Vec<(String, u64)> = planners
        .iter()
        .map(|p| {
            (
                p["name"].as_str().unwrap().into(),
                p["rules"].as_u64().unwrap(),
            )
        })
        .collect();
    assert!(counts.contains(&("cylinder-config:1".into(), 4)));
    assert!(counts.contains(&("odd-sphere:3".into(), 2)));
    assert_eq!(v["rings"].as_array().unwrap().len(), 7);
}
