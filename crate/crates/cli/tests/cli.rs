use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_maxgenus"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn json_of(args: &[&str]) -> Value {
    serde_json::from_str(&stdout(args)).unwrap()
}

#[test]
fn bound_reports_parameters_and_flag() {
    let text = stdout(&["bound", "--d", "96", "--s", "9"]);
    assert!(text.contains("m=10 epsilon=5 w=2 v=2 k=2"));
    assert!(text.contains("G=529"));
    assert!(text.contains("outside-theorem-range"));
    let v = json_of(&["bound", "--d", "99", "--s", "9", "--format", "json"]);
    assert_eq!(v["genus"], 562);
    assert_eq!(v["delta_h"].as_array().unwrap().len(), 14);
    assert_eq!(v["outside_theorem_range"], true);
    let v = json_of(&["bound", "--d", "200000", "--s", "9", "--format", "json"]);
    assert_eq!(v["outside_theorem_range"], false);
}

#[test]
fn scroll_queries() {
    assert_eq!(
        stdout(&["intersect", "--scroll", "s003", "--d1", "4R", "--d2", "4R"]),
        "6\n"
    );
    assert_eq!(
        stdout(&["intersect", "--scroll", "s003", "--d1", "5R", "--d2", "5R"]),
        "8\n"
    );
    assert_eq!(
        stdout(&["intersect", "--scroll", "s003", "--d1", "4R", "--d2", "R~"]),
        "2\n"
    );
    assert_eq!(
        stdout(&["intersect", "--scroll", "s111", "--d1", "H+R", "--d2", "H+R"]),
        "5\n"
    );
    assert_eq!(
        stdout(&[
            "intersect",
            "--scroll",
            "s111",
            "--d1",
            "H-R",
            "--d2",
            "H-R",
            "--d3",
            "H"
        ]),
        "1\n"
    );
    assert_eq!(stdout(&["h0", "--scroll", "s111", "--class", "H-2R"]), "0\n");
    assert_eq!(stdout(&["h0", "--scroll", "S(0,1,2)", "--class", "H-2R"]), "1\n");
    assert_eq!(stdout(&["multiplicity", "--d1", "10H~+3R~", "--d2", "2H~+3R~"]), "3\n");
    let v = json_of(&["h0", "--scroll", "s003", "--class", "2R", "--format", "json"]);
    assert_eq!(v["h0"], 3);
}

#[test]
fn classify_reports() {
    let v = json_of(&["classify", "--d", "147", "--s", "14", "--scroll", "s111"]);
    assert_eq!(v["nonexistent"], true);
    let v = json_of(&["classify", "--d", "93", "--s", "9", "--scroll", "s111", "--class", "3H"]);
    assert_eq!(
        v["fine"]["alternatives"][0]["components"][0]["curve_type"],
        serde_json::json!([3, 3])
    );
    let v = json_of(&["classify", "--d", "104", "--s", "10", "--scroll", "s012"]);
    assert_eq!(v.as_array().unwrap().len(), 2);
}

#[test]
fn classify_needs_force_below_nine() {
    let out = run(&["classify", "--d", "60", "--s", "8", "--scroll", "s111"]);
    assert_eq!(out.status.code(), Some(2));
    let v = json_of(&["classify", "--d", "60", "--s", "8", "--scroll", "s111", "--force"]);
    assert!(v["notes"][0].as_str().unwrap().starts_with("forced"));
}

#[test]
fn construct_reproduces_genus() {
    let v = json_of(&["construct", "--d", "114", "--s", "11"]);
    assert_eq!(v["genus_liaison"], 648);
    assert_eq!(v["genus_profile"], 648);
    assert_eq!(v["recipe"]["required_scroll"], "s012");
    let text = stdout(&["construct", "--d", "91", "--s", "9", "--format", "text"]);
    assert!(text.contains("genus via liaison=475 via h-vector=475"));
}

#[test]
fn sweep_tables() {
    let csv = stdout(&["sweep", "--s-min", "9", "--s-max", "12", "--m", "w+5"]);
    let mut lines = csv.lines();
    assert_eq!(
        lines.next(),
        Some("d,s,m,epsilon,w,v,k,delta,e,genus,case,residual_degree,status")
    );
    assert_eq!(lines.count(), 42);
    assert!(!csv.contains('\r'));
    let v = json_of(&["sweep", "--s-min", "9", "--s-max", "9", "--m", "10", "--format", "json"]);
    let genera: Vec<i64> = v
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["genus_profile"].as_i64().unwrap())
        .collect();
    assert_eq!(genera.len(), 9);
    for g in [475, 496, 529, 562] {
        assert!(genera.contains(&g));
    }
}

#[test]
fn verify_grid_and_discrepancies() {
    let out = run(&["verify", "--s-min", "9", "--s-max", "30", "--m", "w+5"]);
    assert_eq!(out.status.code(), Some(0));
    let csv = stdout(&["verify", "--s-min", "9", "--s-max", "9", "--m", "10", "--format", "csv"]);
    assert!(csv.starts_with("s,epsilon,m,d,k,v,scroll,genus_profile,genus_liaison,status\n"));
    let v = json_of(&[
        "verify",
        "--s-min",
        "9",
        "--s-max",
        "9",
        "--m",
        "10",
        "--discrepancy",
        "--format",
        "json",
    ]);
    assert_eq!(v["p4_rows"][0]["closed_form"], 4);
    assert_eq!(v["p4_rows"][0]["capped_profile"], 7);
}

#[test]
fn output_is_deterministic_and_can_go_to_a_file() {
    let args = ["sweep", "--s-min", "9", "--s-max", "15", "--format", "json"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("rows.csv");
    let out = run(&[
        "sweep",
        "--s-min",
        "9",
        "--s-max",
        "9",
        "--m",
        "10",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap().lines().count(), 10);
}

#[test]
fn bad_input_exits_with_two() {
    for args in [
        &["bound", "--d", "96", "--s", "3"][..],
        &["h0", "--scroll", "s111", "--class", "2X"],
        &["intersect", "--scroll", "s003", "--d1", "4R", "--d2", "4R", "--d3", "R"],
        &["intersect", "--scroll", "s003", "--d1", "-R", "--d2", "H"],
        &["bound", "--d", "abc", "--s", "9"],
        &["classify", "--d", "96", "--s", "9", "--scroll", "s001"],
        &["sweep", "--m", "q"],
        &["construct", "--d", "110", "--s", "10"],
    ] {
        assert_eq!(run(args).status.code(), Some(2), "{args:?}");
    }
}
