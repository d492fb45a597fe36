use std::process::{Command, Output};

fn gl3cg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gl3cg")).args(args).env_remove("GL3_CACHE_DIR").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

const SYM: [&str; 15] = [
    "threej", "--v", "1,0,0", "--w", "1,0,0", "--u", "2,0,0", "--pv", "1,0,1", "--pw", "1,0,1", "--pu", "2,0,2",
    "--label-index", "0",
];

#[test]
fn single_value() {
    let o = gl3cg(&SYM);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "2\n");
}

#[test]
fn json_output() {
    let mut args = SYM.to_vec();
    args.extend(["--format", "json"]);
    let o = gl3cg(&args);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["value"], "2");
    assert_eq!(v["method"], "formula");
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["label"], serde_json::json!([1, 1, 0, 0, 0, 0, 0, 0]));
    assert_eq!(v["varpi"], "e[a1c23]+e[b1c23]");
    assert!(v.get("timings").is_none());
}

#[test]
fn selection_violation_is_zero() {
    let mut args = SYM.to_vec();
    args[12] = "2,0,0";
    assert_eq!(stdout(&gl3cg(&args)), "0\n");
}

#[test]
fn bad_input_exits_2() {
    let mut args = SYM.to_vec();
    args[12] = "2,0,9";
    assert_eq!(gl3cg(&args).status.code(), Some(2));
    assert_eq!(gl3cg(&["threej", "--v", "1,0"]).status.code(), Some(2));
    let mut args = SYM.to_vec();
    args[14] = "5";
    assert_eq!(gl3cg(&args).status.code(), Some(2));
}

#[test]
fn query_document() {
    let doc = r#"{"weights":{"v":[1,0,0],"w":[1,0,0],"u":[1,1,0]},
                  "patterns":{"v":[1,0,0],"w":[1,0,1],"u":[1,1,1]},
                  "label":[0,0,0,0,1,0,0,0],"method":"both"}"#;
    let o = gl3cg(&["threej", "--query", doc]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(stdout(&o), "-1\n");
}

#[test]
fn table_rows() {
    let o = gl3cg(&["table", "--v", "1,0,0", "--w", "1,0,0", "--u", "1,1,0"]);
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("v_pattern,w_pattern,u_pattern,label,value"));
    assert_eq!(lines.count(), 27);
    let o = gl3cg(&["table", "--v", "1,0,0", "--w", "1,0,0", "--u", "1,1,0", "--nonzero-only", "--method", "both"]);
    let text = stdout(&o);
    assert_eq!(text.lines().next(), Some("v_pattern,w_pattern,u_pattern,label,value,agree"));
    let rows: Vec<&str> = text.lines().skip(1).collect();
    assert_eq!(rows.len(), 6);
    assert!(rows.iter().all(|r| r.ends_with(",true")));
    let ones = rows.iter().filter(|r| r.ends_with(",1,true")).count();
    assert_eq!(ones, 3);
}

#[test]
fn table_deterministic_across_jobs() {
    let base = ["table", "--v", "2,1,0", "--w", "1,1,0", "--u", "2,2,1", "--format", "json"];
    let one = gl3cg(&[&base[..], &["--jobs", "1"]].concat());
    let four = gl3cg(&[&base[..], &["--jobs", "4"]].concat());
    assert!(one.status.success());
    assert_eq!(one.stdout, four.stdout);
}

#[test]
fn cache_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let run = || Command::new(env!("CARGO_BIN_EXE_gl3cg")).args(SYM).env("GL3_CACHE_DIR", dir.path()).output().unwrap();
    let first = run();
    assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 1);
    let second = run();
    assert_eq!(first.stdout, second.stdout);
    assert_eq!(stdout(&second), "2\n");
}

#[test]
fn verify_single_suite() {
    let o = gl3cg(&["verify", "--suite", "lattice"]);
    assert!(o.status.success());
    assert!(stdout(&o).ends_with("result: PASS (9 checks in 1 suites)\n"));
}
