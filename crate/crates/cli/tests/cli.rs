use std::process::{Command, Output};

use serde_json::Value;

fn constacode(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_constacode"))
        .args(args)
        .env_remove("CONSTACODE_CAP")
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    assert_eq!(out.status.code(), Some(0), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

#[test]
fn construct_cprime() {
    let v = json(&constacode(&["construct", "cprime:q=3,m=4,r=2,ell=1"]));
    assert_eq!(v["n"], 40);
    assert_eq!(v["k"], 36);
    assert_eq!(v["spec"], "cprime:q=3,m=4,r=2,ell=1");
}

#[test]
fn construct_c() {
    let v = json(&constacode(&["construct", "c:q=4,m=2,r=3,ell=2"]));
    assert_eq!((v["n"].as_u64(), v["k"].as_u64()), (Some(5), Some(3)));
}

#[test]
fn construct_evaluation_code() {
    let v = json(&constacode(&["construct", "ngrm:q=3,m=4,r=2,h=1"]));
    assert_eq!((v["n"].as_u64(), v["k"].as_u64()), (Some(40), Some(11)));
}

#[test]
fn construct_is_byte_stable() {
    let a = constacode(&["construct", "c:q=5,m=2,r=2,ell=3"]);
    let b = constacode(&["construct", "c:q=5,m=2,r=2,ell=3"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn malformed_spec_is_usage_error() {
    for spec in ["bogus", "cprime:q=3,m=4", "cprime:q=3,m=4,r=2,ell=x", "nope:q=3,m=4,r=2,ell=1"] {
        assert_eq!(constacode(&["construct", spec]).status.code(), Some(2), "{spec}");
    }
}

#[test]
fn invalid_parameters_are_construction_errors() {
    // r must divide q - 1
    assert_eq!(constacode(&["construct", "cprime:q=5,m=2,r=3,ell=1"]).status.code(), Some(3));
    // 6 is not a prime power
    assert_eq!(constacode(&["construct", "c:q=6,m=2,r=5,ell=1"]).status.code(), Some(3));
}

#[test]
fn unknown_suite_is_usage_error() {
    assert_eq!(constacode(&["verify", "nope"]).status.code(), Some(2));
    assert_eq!(constacode(&["verify", "theorems", "--format", "xml"]).status.code(), Some(2));
}

#[test]
fn missing_subcommand_is_usage_error() {
    assert_eq!(constacode(&[]).status.code(), Some(2));
    assert_eq!(constacode(&["--help"]).status.code(), Some(0));
}

#[test]
fn zero_code_distance_is_null() {
    let v = json(&constacode(&["analyze", "cprime:q=3,m=2,r=2,ell=2", "--distance"]));
    assert_eq!(v["k"], 0);
    assert_eq!(v["distance"]["d"], Value::Null);
    assert_eq!(v["distance"]["kind"], "undefined");
}

#[test]
fn analyze_distance() {
    let v = json(&constacode(&["analyze", "cprime:q=5,m=3,r=2,ell=1", "--distance"]));
    assert_eq!(v["distance"]["kind"], "exact");
    assert_eq!(v["distance"]["d"], 4);
    assert_eq!(v["sphere_packing"]["distance_optimal"], true);
}

#[test]
fn analyze_weights() {
    let v = json(&constacode(&["analyze", "c:q=4,m=4,r=3,ell=2", "--weights"]));
    assert_eq!(v["weights"]["enumerator"], "1+10710z^48+411264z^60+257295z^64+362880z^68+6426z^80");
}

#[test]
fn analyze_dual_weights() {
    let v = json(&constacode(&["analyze", "cprime:q=5,m=2,r=2,ell=1", "--weights", "--dual"]));
    assert_eq!(v["k"], 4);
    assert_eq!(v["weights"]["enumerator"], "1+8z^6+144z^8+144z^9+168z^10+96z^11+64z^12");
}

#[test]
fn analyze_reads_construct_output() {
    let dir = std::env::temp_dir().join(format!("constacode-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("code.json");
    let built = constacode(&["construct", "cprime:q=3,m=4,r=2,ell=1"]);
    std::fs::write(&path, &built.stdout).unwrap();
    let v = json(&constacode(&["analyze", path.to_str().unwrap(), "--distance"]));
    assert_eq!(v["distance"]["d"], 3);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn enumeration_beyond_cap_is_incomplete() {
    let out = constacode(&["--cap", "10", "analyze", "cprime:q=3,m=4,r=2,ell=2", "--weights"]);
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn table_rows() {
    let out = constacode(&["table", "cprime", "q=3", "m=4", "r=2", "ell=1..3", "--format", "json"]);
    let v = json(&out);
    let rows = v.as_array().unwrap();
    let params: Vec<_> = rows
        .iter()
        .map(|r| (r["n"].as_u64().unwrap(), r["k"].as_u64().unwrap(), r["d"].as_u64().unwrap()))
        .collect();
    assert_eq!(params, vec![(40, 36, 3), (40, 24, 8), (40, 8, 21)]);
    assert_eq!(rows[0]["perfect"], true);
}

#[test]
fn empty_range_gives_header_only() {
    let out = constacode(&["table", "cprime", "q=3", "m=4", "r=2", "ell=3..1", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 1);
    assert!(text.starts_with("family,q,m,r,ell,n,k,d"));
}

#[test]
fn bad_range_is_construction_error() {
    assert_eq!(constacode(&["table", "cprime", "q=3", "m=4", "r=2", "ell=a..b"]).status.code(), Some(3));
}

#[test]
fn inspect_cosets() {
    let v = json(&constacode(&["inspect", "cosets", "3", "8", "--r", "2"]));
    assert_eq!(v["count"], 5);
    assert_eq!(v["cosets"][1]["members"], serde_json::json!([1, 3]));
    assert_eq!(v["gamma_one"], serde_json::json!([1, 5]));
}

#[test]
fn verify_rejects_field_override() {
    let out = constacode(&["--field", "3^2:2,1,1", "verify", "paper-examples"]);
    assert_eq!(out.status.code(), Some(2));
}
