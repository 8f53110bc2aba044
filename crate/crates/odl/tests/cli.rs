use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use odl::cli::{compute, parse_config, to_json, to_toml, CliError};
use odl::Rat;

fn odl(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_odl")).args(args).output().expect("binary runs")
}

fn configs() -> Vec<PathBuf> {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("configs");
    let mut v: Vec<PathBuf> = std::fs::read_dir(dir)
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|e| e == "toml"))
        .collect();
    v.sort();
    v
}

fn tmp(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("odl-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

const T1: &str = r#"
[variety]
ambient = "grassmannian(2,7)"
cuts = ["O(1)", "O(1)"]

[bundle]
E = "dual(U)+4*O"

[locus]
kind = "forms-y2"
"#;

#[test]
fn t1_config_is_valid() {
    let cfg = parse_config(T1).unwrap();
    assert_eq!(cfg.variety.cuts.len(), 2);
    assert!(cfg.build(T1).is_ok());
}

#[test]
fn q_plus_o_has_rank_six() {
    let text = T1.replace("dual(U)+4*O", "Q+O");
    assert!(parse_config(&text).unwrap().build(&text).is_ok());
}

#[test]
fn rank_five_is_a_positioned_config_error() {
    let text = T1.replace("dual(U)+4*O", "dual(U)+3*O");
    let err = parse_config(&text).unwrap().build(&text).err().unwrap();
    match err {
        CliError::Config(m) => assert!(m.starts_with("7:6:"), "{m}"),
        other => panic!("{other:?}"),
    }
}

#[test]
fn syntax_errors_carry_line_and_column() {
    let text = T1.replace("dual(U)+4*O", "dual(U+4*O");
    let Err(CliError::Config(m)) = parse_config(&text).unwrap().build(&text) else { panic!() };
    assert!(m.starts_with("7:"), "{m}");
    let Err(CliError::Config(m)) = parse_config("[variety]\nambient = \n") else { panic!() };
    assert!(m.starts_with("2:"), "{m}");
}

#[test]
fn unknown_keys_are_rejected() {
    let text = T1.replace("[locus]", "[locus]\norbits = 3");
    assert!(matches!(parse_config(&text), Err(CliError::Config(_))));
    let text = format!("{T1}\n[extra]\nx = 1\n");
    assert!(matches!(parse_config(&text), Err(CliError::Config(_))));
}

#[test]
fn unknown_tautological_bundle() {
    let text = T1.replace("grassmannian(2,7)", "P(9)");
    assert!(matches!(parse_config(&text).unwrap().build(&text), Err(CliError::Config(_))));
}

#[test]
fn f1_report() {
    let text = "[variety]\nambient = \"P(9)\"\n[bundle]\nE = \"2*O(1) + 4*O\"\n[locus]\nkind = \"forms-y2\"\n";
    let r = compute(text, false).unwrap();
    assert_eq!(r.locus.chi_o, Rat::int(2));
    assert_eq!(r.locus.dim, 4);
}

#[test]
fn round_trip() {
    for p in configs() {
        let text = std::fs::read_to_string(&p).unwrap();
        let cfg = parse_config(&text).unwrap();
        let again = parse_config(&to_toml(&cfg)).unwrap();
        assert_eq!(cfg, again, "{}", p.display());
    }
}

fn assert_no_floats(v: &serde_json::Value) {
    match v {
        serde_json::Value::Number(n) => assert!(n.is_i64() || n.is_u64(), "float {n}"),
        serde_json::Value::Array(a) => a.iter().for_each(assert_no_floats),
        serde_json::Value::Object(o) => o.values().for_each(assert_no_floats),
        _ => {}
    }
}

#[test]
fn reports_are_deterministic_and_exact() {
    for p in configs() {
        let text = std::fs::read_to_string(&p).unwrap();
        let a = to_json(&compute(&text, false).unwrap());
        let b = to_json(&compute(&text, false).unwrap());
        assert_eq!(a, b, "{}", p.display());
        assert_no_floats(&serde_json::from_str(&a).unwrap());
    }
}

#[test]
fn binary_json_is_byte_identical() {
    let cfg = configs().into_iter().find(|p| p.ends_with("t1.toml")).unwrap();
    let (a, b) = (tmp("a.json"), tmp("b.json"));
    for out in [&a, &b] {
        let o = odl(&["compute", cfg.to_str().unwrap(), "--json", out.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0));
    }
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    let v: serde_json::Value = serde_json::from_slice(&std::fs::read(&a).unwrap()).unwrap();
    assert_eq!(v["locus"]["hodge"]["candidates"], serde_json::json!([[2, 49]]));
}

#[test]
fn exit_codes() {
    let bad = tmp("bad.toml");
    std::fs::write(&bad, T1.replace("dual(U)+4*O", "dual(U)+3*O")).unwrap();
    let o = odl(&["compute", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains(":7:6:"));

    // a threefold base is too small for a fivefold-codimensional locus
    let small = tmp("small.toml");
    std::fs::write(&small, "[variety]\nambient = \"P3\"\n[bundle]\nE = \"6*O\"\n[locus]\nkind = \"forms-y2\"\n")
        .unwrap();
    assert_eq!(odl(&["compute", small.to_str().unwrap()]).status.code(), Some(1));

    assert_eq!(odl(&["compute", "/nonexistent.toml"]).status.code(), Some(2));
    assert_eq!(odl(&["verify", "table9"]).status.code(), Some(2));
    assert_eq!(odl(&["verify", "table4-data"]).status.code(), Some(0));
    assert_eq!(odl(&["bott", "P5", "1,2"]).status.code(), Some(2));
    assert_eq!(odl(&["class"]).status.code(), Some(2));
    assert_eq!(odl(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn bott_command() {
    let o = odl(&["bott", "P5", "-6|0,0,0,0,0"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&o.stdout).contains("H^5"));
    let o = odl(&["bott", "Gr(2,5)", "sym(Q,2)"]);
    assert!(String::from_utf8_lossy(&o.stdout).contains("h^0 = 15"));
}

#[test]
fn generic_class_command() {
    let o = odl(&["class", "--generic"]);
    let s = String::from_utf8_lossy(&o.stdout);
    assert!(s.contains("e1*e2^2"));
    assert!(s.contains("s(4) + 3s(3,1) + 3s(2,2) + 6s(2,1,1)"));
    assert!(s.contains("601/180*e1^3*e6"));
}
