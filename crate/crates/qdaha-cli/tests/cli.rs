use std::path::PathBuf;
use std::process::{Command, Output};

fn qdaha(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qdaha"))
        .args(args)
        .env_remove("QTORUS_SEED")
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn scratch(name: &str, body: &str) -> PathBuf {
    let p = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::write(&p, body).unwrap();
    p
}

#[test]
fn relations_check_a2() {
    let out = qdaha(&[
        "relations",
        "check",
        "--root-system",
        "A2",
        "--v",
        "symbolic",
        "--json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(r["schema"], "qdaha.relations/1");
    assert_eq!(r["config"]["v"], "symbolic");
    let checks = r["checks"].as_array().unwrap();
    // Three quadratic relations (nodes 0, 1, 2) and three braid pairs.
    assert_eq!(checks.len(), 6);
    assert!(checks.iter().all(|c| c["holds"] == true));
}

#[test]
fn d4_isotropy_has_order_two() {
    let out = qdaha(&[
        "module",
        "isotropy",
        "--root-system",
        "D4",
        "--lambda",
        "(-1,q^1/2,-1,-q^1/2)",
        "--json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(r["order"], 2);
    assert_eq!(r["centralizer_roots"], 0);
    assert_eq!(r["component_order"], 2);
}

#[test]
fn normal_form_of_normal_input_is_unchanged() {
    // h = q^{1/2}·[[1, 3], [0, 1]], already of the form s·b.
    let root_q = r#"{"0":{"num":[{"qexp":"1/2","coeff":"1"}]}}"#;
    let corner = r#"{"0":{"num":[{"qexp":"1/2","coeff":"3"}]}}"#;
    let input = format!(
        r#"{{"schema":"qdaha.loop.matrix/1","n":2,"entries":[[{root_q},{corner}],[{{}},{root_q}]]}}"#
    );
    let path = scratch("normal.json", &input);
    let out = qdaha(&[
        "loop",
        "nf",
        "--matrix",
        &format!("@{}", path.display()),
        "--json",
    ]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let r = json(&out);
    assert_eq!(r["s"], serde_json::json!(["q^1/2", "q^1/2"]));
    assert_eq!(r["verified"], true);
    let b = &r["b"]["entries"];
    assert_eq!(b[0][1]["0"]["num"][0]["coeff"], "3");
    assert_eq!(b[0][1]["0"]["num"][0]["qexp"], "0");
    let f = &r["f"]["entries"];
    assert_eq!(f[0][0]["0"]["num"][0]["coeff"], "1");
    assert_eq!(f[1][1]["0"]["num"][0]["coeff"], "1");
    assert_eq!(f[0][1], serde_json::json!({}));
    assert_eq!(f[1][0], serde_json::json!({}));
}

#[test]
fn exit_codes() {
    assert_eq!(qdaha(&["nonsense"]).status.code(), Some(2));
    assert_eq!(
        qdaha(&["relations", "check", "--root-system", "E9"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        qdaha(&["module", "isotropy", "--lambda", "(1,2,3)"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        qdaha(&["daha", "op", "--word", "T1 +"]).status.code(),
        Some(2)
    );
    // A non-spherical operator is a failed check.
    let out = qdaha(&["spherical", "check", "--lattice", "root", "--word", "X(1)"]);
    assert_eq!(out.status.code(), Some(1));
    let out = qdaha(&[
        "spherical",
        "check",
        "--lattice",
        "root",
        "--word",
        "X(1) + X(-1)",
        "--sandwich",
    ]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn same_seed_gives_identical_json() {
    let args = ["suite", "--criteria", "1,6", "--json", "--seed", "7"];
    let a = qdaha(&args);
    let b = qdaha(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let env = Command::new(env!("CARGO_BIN_EXE_qdaha"))
        .args(["suite", "--criteria", "1,6", "--json"])
        .env("QTORUS_SEED", "7")
        .output()
        .unwrap();
    assert_eq!(env.stdout, a.stdout);
    assert_eq!(json(&a)["seed"], 7);
}

#[test]
fn numeric_v_is_echoed() {
    let out = qdaha(&[
        "daha",
        "op",
        "--lattice",
        "root",
        "--word",
        "T1",
        "--v",
        "1",
        "--json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(r["schema"], "qdaha.daha.operator/1");
    assert_eq!(r["config"]["v"], "1");
}

#[test]
fn clifford_commands() {
    let out = qdaha(&["clifford", "table", "--group", "S4", "--json"]);
    assert_eq!(json(&out)["degrees"], serde_json::json!([1, 1, 2, 3, 3]));
    let out = qdaha(&[
        "clifford",
        "count",
        "--group",
        "S3",
        "--normal",
        r#"{"generators":[[1,2,0]]}"#,
        "--json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(r["count"]["predicted"], 3);
    assert_eq!(r["semidirect"]["split"], true);
    let out = qdaha(&[
        "clifford",
        "count",
        "--root-system",
        "D4",
        "--lambda",
        "(-1,q^1/2,-1,-q^1/2)",
        "--json",
    ]);
    assert_eq!(json(&out)["count"]["predicted"], 2);
}

#[test]
fn torus_and_module_commands() {
    let out = qdaha(&[
        "qtorus",
        "mul",
        "--a",
        r#"[{"x":[0],"y":[1],"coeff":"1"}]"#,
        "--b",
        r#"[{"x":[1],"y":[0],"coeff":"1"}]"#,
        "--json",
    ]);
    let r = json(&out);
    assert_eq!(r["terms"][0]["x"], serde_json::json!([1]));
    assert_eq!(r["terms"][0]["y"], serde_json::json!([1]));
    let out = qdaha(&[
        "qtorus",
        "witness",
        "--h",
        r#"[{"x":[1],"y":[0],"coeff":"1"},{"x":[0],"y":[1],"coeff":"1"}]"#,
        "--json",
    ]);
    assert_eq!(json(&out)["verified"], true);
    let out = qdaha(&[
        "module", "act", "--lambda", "(q^1/2)", "--at", "(0)", "--y", "(1)", "--json",
    ]);
    let r = json(&out);
    assert_eq!(r["result"][0]["y"], serde_json::json!([1]));
    assert_eq!(r["result"][0]["comp"], 0);
}
