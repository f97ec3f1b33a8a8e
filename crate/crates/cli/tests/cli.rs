use std::io::Write;
use std::process::{Command, Output, Stdio};

fn jet(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_jet")).args(args).output().unwrap()
}

fn jet_env(args: &[&str], key: &str, val: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_jet"))
        .args(args)
        .env(key, val)
        .output()
        .unwrap()
}

fn jet_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_jet"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

const CONE: [&str; 4] = ["--vars", "x,y,z", "--ideal", "x^2+y^2+z^2"];

#[test]
fn compute_lists_one_equation_per_weight() {
    let o = jet(&["compute", "--vars", "x,y", "--ideal", "x*y", "--m", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "[0] x_0*y_0\n[1] y_0*x_1 + x_0*y_1\n[2] x_1*y_1 + y_0*x_2 + x_0*y_2\n"
    );
}

#[test]
fn order_zero_renames() {
    let o = jet(&["compute", "--vars", "x,y", "--ideal", "x^2 - y", "--m", "0"]);
    assert_eq!(stdout(&o), "[0] x_0^2 - y_0\n");
}

#[test]
fn double_star_is_a_syntax_error() {
    let o = jet(&["compute", "--vars", "x,y", "--ideal", "x**y", "--m", "1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("syntax error at column 2"), "{}", stderr(&o));
    assert!(o.stdout.is_empty());
}

#[test]
fn cone_dimensions() {
    let mut args = vec!["dim"];
    args.extend(CONE);
    args.extend(["--m", "1"]);
    assert_eq!(stdout(&jet(&args)), "4\n");

    let mut args = vec!["fiber", "--point", "0,0,0"];
    args.extend(CONE);
    args.extend(["--m", "1"]);
    assert_eq!(stdout(&jet(&args)), "3\n");
}

#[test]
fn point_off_the_scheme_is_a_precondition_error() {
    let mut args = vec!["fiber", "--point", "1,0,0"];
    args.extend(CONE);
    args.extend(["--m", "1"]);
    let o = jet(&args);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("does not lie"));
}

#[test]
fn wrong_point_length_is_an_input_error() {
    let mut args = vec!["fiber", "--point", "0,0"];
    args.extend(CONE);
    assert_eq!(jet(&args).status.code(), Some(2));
}

#[test]
fn member_with_square() {
    let base = [
        "member", "--f", "x_0*y_1", "--vars", "x,y", "--ideal", "x*y", "--m", "2",
    ];
    let o = jet(&[&base[..], &["--with-square"]].concat());
    assert_eq!(stdout(&o), "not a member; square is a member\n");
    assert_eq!(stdout(&jet(&base)), "not a member\n");
    let o = jet(&["member", "--f", "x_1", "--vars", "x,y", "--ideal", "x", "--m", "1"]);
    assert_eq!(stdout(&o), "member\n");
}

#[test]
fn jet_suffixed_names_are_rejected() {
    let o = jet(&["dim", "--vars", "x_1,y", "--ideal", "y"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("x_1"));
}

#[test]
fn spec_from_stdin_matches_flags() {
    let spec = r#"{"ring":{"vars":["x","y"],"order":"grevlex","modulus":null},"generators":["x*y"],"m":2}"#;
    let from_stdin = jet_stdin(&["compute", "--spec", "-"], spec);
    assert_eq!(from_stdin.status.code(), Some(0));
    let from_flags = jet(&["compute", "--vars", "x,y", "--ideal", "x*y", "--m", "2"]);
    assert_eq!(from_stdin.stdout, from_flags.stdout);
}

#[test]
fn malformed_spec_is_an_input_error() {
    let o = jet_stdin(&["compute", "--spec", "-"], "{\"ring\":");
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn json_compute_schema() {
    let o = jet(&["--json", "compute", "--vars", "x,y", "--ideal", "x*y", "--m", "1"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["weights"], serde_json::json!([0, 1]));
    assert_eq!(v["equations"][1], "y_0*x_1 + x_0*y_1");
}

#[test]
fn json_and_text_agree() {
    let mut args = vec!["sing"];
    args.extend(CONE);
    args.extend(["--m", "1"]);
    let text = stdout(&jet(&args));
    let json: serde_json::Value = serde_json::from_slice(&jet(&[&["--json"], &args[..]].concat()).stdout).unwrap();
    assert!(text.starts_with(&format!("dim {}\n", json["dim"])));
    assert_eq!(json["dim"], 3);
    for g in json["generators"].as_array().unwrap() {
        assert!(text.contains(g.as_str().unwrap()));
    }
}

#[test]
fn output_is_reproducible_and_untimed() {
    let args = [
        "main-component",
        "--vars",
        "x,y,z",
        "--ideal",
        "x^3-y^2,x^2-z^3",
        "--m",
        "1",
    ];
    let a = jet(&args);
    let b = jet(&args);
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout(&a).starts_with("dim 2\n"));
    assert!(!stdout(&a).contains("ms"));
    let v = jet(&[&args[..], &["--verbose"]].concat());
    assert!(stdout(&v).contains("elapsed: "));
}

#[test]
fn exhausted_budget_exits_four() {
    let mut args = vec!["dim"];
    args.extend(CONE);
    args.extend(["--m", "2"]);
    let o = jet_env(&args, "JET_BUDGET_MS", "0");
    assert_eq!(o.status.code(), Some(4));
    assert_eq!(jet_env(&args, "JET_BUDGET_MS", "soon").status.code(), Some(2));
}

#[test]
fn paper_examples_filter() {
    let o = jet(&["paper-examples", "--filter", "ex3.1"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let ids: Vec<&str> = out.lines().filter_map(|l| l.split_whitespace().next()).collect();
    assert_eq!(ids, ["ex3.1-m1", "ex3.1-m2", "ex3.1-m3", "ex3.1-control", "4"]);
    assert!(out.lines().take(4).all(|l| l.contains(" PASS ")));
    assert!(!out.contains("char p"));
    assert_eq!(jet(&["paper-examples", "--filter", "nope"]).status.code(), Some(2));
}

#[test]
fn paper_examples_over_a_prime() {
    let args = ["paper-examples", "--filter", "ex3.1,ex3.5", "--field", "prime:32003"];
    let o = jet(&args);
    assert_eq!(o.status.code(), Some(0));
    let rows: Vec<String> = stdout(&o).lines().map(String::from).collect();
    assert_eq!(rows.len(), 8);
    assert!(rows[..7].iter().all(|l| l.contains("char p")));
    // same verdicts as over the rationals
    let q = jet(&["paper-examples", "--filter", "ex3.1,ex3.5"]);
    let q_rows: Vec<String> = stdout(&q).lines().map(String::from).collect();
    for (a, b) in rows.iter().zip(&q_rows) {
        assert_eq!(a.replace("  char p", ""), *b);
    }
    assert_eq!(jet(&args).stdout, o.stdout);
}

#[test]
fn paper_examples_json_rows() {
    let o = jet(&["--json", "paper-examples", "--filter", "ex3.12-n3"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let row = &v["rows"][0];
    assert_eq!(row["status"], "PASS");
    assert_eq!(row["computed"]["dim_X_1"], 4);
    assert_eq!(row["char_p"], false);
    assert!(row.get("elapsed_ms").is_none());
}

#[test]
fn bad_field_is_rejected() {
    let o = jet(&["paper-examples", "--field", "prime:32004"]);
    assert_eq!(o.status.code(), Some(2));
}
