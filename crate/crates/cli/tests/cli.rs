use serde_json::Value;
use std::io::Write;
use std::process::{Command, Output, Stdio};

fn recolor(args: &[&str]) -> Output {
    recolor_with(args, None, &[])
}

fn recolor_with(args: &[&str], stdin: Option<&str>, env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_recolor"));
    cmd.args(args)
        .env_remove("RECOLOR_BUDGET_NODES")
        .env_remove("RECOLOR_BUDGET_SECS")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped());
    for (k, v) in env {
        cmd.env(k, v);
    }
    let mut child = cmd.spawn().expect("binary runs");
    if let Some(text) = stdin {
        child.stdin.take().unwrap().write_all(text.as_bytes()).unwrap();
    }
    drop(child.stdin.take());
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_str(&stdout(o)).unwrap_or_else(|e| panic!("{e}: {}", stdout(o)))
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

#[test]
fn compute_cycle_numbers() {
    let o = recolor(&["compute", "--family", "cycle:5", "--k", "3"]);
    assert_eq!(code(&o), 0);
    let r = json(&o);
    assert_eq!((r["g"].as_u64(), r["h"].as_u64()), (Some(2), Some(2)));
    assert_eq!(r["colorings"], 30);
    assert_eq!(r["undecided"], false);
}

#[test]
fn compute_lm_is_disconnected_exactly_at_m_colors() {
    let at = |k: &str| json(&recolor(&["compute", "--family", "Lm:3", "--k", k, "--j", "1"]))["levels"][0]["connected"].clone();
    assert_eq!(at("3"), false);
    assert_eq!(at("4"), true);
}

#[test]
fn compute_single_level_of_the_three_path() {
    let r = json(&recolor(&["compute", "--family", "path:3", "--k", "3", "--j", "1"]));
    assert_eq!(r["colorings"], 12);
    let level = &r["levels"][0];
    assert_eq!(level["connected"], true);
    assert_eq!(level["hamiltonian"], "not-hamiltonian");
    assert_eq!(level["spanning_tree"].as_array().unwrap().len(), 12);
}

#[test]
fn compute_thresholds_and_graph6_lines() {
    let o = recolor_with(&["compute", "--graph6", "-", "--k", "3", "--thresholds"], Some("Bg\nCl\n"), &[]);
    assert_eq!(code(&o), 0);
    let rows: Vec<Value> = stdout(&o).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(rows.len(), 2);
    // P_3 and C_4: h_3 = 2 for both, thresholds from the degeneracy bounds
    assert_eq!((rows[0]["h"].as_u64(), rows[1]["h"].as_u64()), (Some(2), Some(2)));
    assert_eq!((rows[1]["k1"].as_u64(), rows[1]["k0"].as_u64()), (Some(3), Some(4)));
}

#[test]
fn compute_dot_export() {
    let o = recolor(&["compute", "--family", "cycle:4", "--k", "3", "--j", "2", "--dot"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    assert!(text.starts_with("graph "));
    assert_eq!(text.matches("[label=").count(), 18);
}

#[test]
fn graycode_multipartite_with_a_spare_color() {
    let o = recolor(&["graycode", "--family", "multipartite:1,3", "--colors", "3", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let r = json(&o);
    assert_eq!((r["length"].as_u64(), r["j"].as_u64()), (Some(24), Some(1)));
}

#[test]
fn graycode_fixture_is_verbatim() {
    let o = recolor(&["graycode", "--fixture", "c4-h3"]);
    assert_eq!(code(&o), 0);
    let expected = "1312 1212 1232 1213 1313 1323 2123 2323 2313 2321 2121 2131 3231 3131 3121 3132 3232 3212";
    assert_eq!(stdout(&o).split_whitespace().collect::<Vec<_>>().join(" "), expected);
}

#[test]
fn graycode_complete_graph_at_two() {
    let r = json(&recolor(&["graycode", "--family", "complete:4", "--colors", "4", "--format", "json"]));
    assert_eq!((r["length"].as_u64(), r["j"].as_u64()), (Some(24), Some(2)));
}

#[test]
fn graycode_from_subdivided_multigraphs() {
    let loop3 = recolor_with(&["graycode", "--multigraph", "-", "--colors", "3"], Some("1\n0 0 x3\n"), &[]);
    assert_eq!(code(&loop3), 0);
    assert_eq!(stdout(&loop3).lines().count(), 18);
    let double = recolor_with(&["graycode", "--multigraph", "-", "--colors", "4", "--format", "json"], Some("2; 0 1 x2; 0 1 x2"), &[]);
    assert_eq!(code(&double), 0);
    assert_eq!(json(&double)["j"], 1);
}

#[test]
fn graycode_precondition_is_a_usage_error() {
    let o = recolor(&["graycode", "--family", "cycle:5", "--colors", "3", "--constructor", "degeneracy"]);
    assert_eq!(code(&o), 3);
    assert!(String::from_utf8_lossy(&o.stderr).contains("precondition"));
}

#[test]
fn verify_suites_pass() {
    for suite in ["trees-cycles", "construction-L", "fixture", "lm"] {
        let o = recolor(&["verify", "--suite", suite]);
        assert_eq!(code(&o), 0, "{suite}: {}", stdout(&o));
        assert!(stdout(&o).lines().all(|l| !l.starts_with("FAIL")));
    }
}

#[test]
fn verify_multipartite_reports_the_refuted_case_only() {
    let o = recolor(&["verify", "--suite", "multipartite", "--json"]);
    assert_eq!(code(&o), 1);
    let failed: Vec<String> = stdout(&o)
        .lines()
        .map(|l| serde_json::from_str::<Value>(l).unwrap())
        .filter(|c| c["outcome"] == "fail")
        .map(|c| c["name"].as_str().unwrap().to_string())
        .collect();
    assert_eq!(failed, vec!["one-spare-all-odd"]);
}

#[test]
fn hunt_small_graphs_finds_nothing() {
    let o = recolor(&["hunt", "--max-n", "5", "--k-min", "3", "--k-max", "4"]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    assert!(stdout(&o).is_empty());
}

#[test]
fn hunt_once_subdivided_k4_meets_the_bounds() {
    let table = std::env::temp_dir().join(format!("recolor-hunt-{}.jsonl", std::process::id()));
    let o = recolor_with(
        &["hunt", "--graph6", "-", "--predicate", "subdivision", "--table", table.to_str().unwrap()],
        Some("C~\n"),
        &[],
    );
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).is_empty());
    let rows: Vec<Value> = std::fs::read_to_string(&table)
        .unwrap()
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    std::fs::remove_file(&table).ok();
    let verdicts: Vec<(u64, u64, u64, bool)> = rows
        .iter()
        .map(|r| {
            (r["n"].as_u64().unwrap(), r["k"].as_u64().unwrap(), r["tested_j"].as_u64().unwrap(), r["hamiltonian"].as_bool().unwrap())
        })
        .collect();
    assert_eq!(verdicts, vec![(10, 3, 2, true), (10, 4, 1, true)]);
}

#[test]
fn exit_codes_for_usage_and_budget() {
    assert_eq!(code(&recolor(&["compute", "--family", "torus:3", "--k", "3"])), 3);
    assert_eq!(code(&recolor(&["compute", "--k", "3"])), 3);
    assert_eq!(code(&recolor(&["compute", "--family", "cycle:5"])), 3);
    assert_eq!(code(&recolor(&["compute", "--family", "cycle:5", "--k", "2"])), 3);
    assert_eq!(code(&recolor(&["frobnicate"])), 3);
    assert_eq!(code(&recolor(&["--help"])), 0);
    let bad_env = recolor_with(&["compute", "--family", "cycle:5", "--k", "3"], None, &[("RECOLOR_BUDGET_SECS", "soon")]);
    assert_eq!(code(&bad_env), 3);
    let starved = recolor_with(&["compute", "--family", "cycle:5", "--k", "3"], None, &[("RECOLOR_BUDGET_NODES", "10")]);
    assert_eq!(code(&starved), 2);
    let flag = recolor(&["compute", "--family", "cycle:5", "--k", "3", "--budget-nodes", "10"]);
    assert_eq!(code(&flag), 2);
}
