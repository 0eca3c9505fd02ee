use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn hermsym(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hermsym")).args(args).output().expect("binary runs")
}

fn hermsym_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_hermsym"))
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

fn json_lines(o: &Output) -> Vec<Value> {
    stdout(o).lines().filter(|l| l.starts_with('{')).map(|l| serde_json::from_str(l).unwrap()).collect()
}

const CYCLE: &str = "3 3\n0 1\n1 2\n2 0\n";
const TRANSITIVE: &str = "3 3\n0 1\n0 2\n1 2\n";

#[test]
fn spectrum_of_directed_triangle() {
    let o = hermsym(&["spectrum", CYCLE]);
    assert!(o.status.success());
    let r = &json_lines(&o)[0];
    assert_eq!(r["char_poly_text"], "x^3 - 3x + 2");
    assert_eq!(r["char_poly"], serde_json::json!(["1", "0", "-3", "2"]));
    assert_eq!(r["odd_traces"], serde_json::json!(["0", "-6"]));
    assert_eq!(r["schema_version"], 1);
}

#[test]
fn spectrum_of_single_arc_and_other_angles() {
    let r = &json_lines(&hermsym(&["spectrum", "2 1\n0 1\n"]))[0];
    let ev: Vec<f64> = r["eigenvalues"].as_array().unwrap().iter().map(|v| v.as_f64().unwrap()).collect();
    assert!((ev[0] - 1.0).abs() < 1e-12 && (ev[1] + 1.0).abs() < 1e-12);
    let r = &json_lines(&hermsym(&["spectrum", TRANSITIVE, "--theta", "1/2"]))[0];
    assert_eq!(r["symmetric"], true);
    assert!(r.get("char_poly").is_none());
    // digons vanish at pi/2; a round-off spectrum still pairs up
    let r = &json_lines(&hermsym(&["spectrum", "Bw", "--theta", "1/2"]))[0];
    assert_eq!(r["symmetric"], true);
    let o = hermsym(&["spectrum", CYCLE, "--theta", "1/2", "--exact"]);
    assert_eq!(o.status.code(), Some(1));
    let r = &json_lines(&hermsym(&["spectrum", CYCLE, "--exact"]))[0];
    assert_eq!((r["exact"].clone(), r["symmetric"].clone()), (Value::Bool(true), Value::Bool(false)));
}

#[test]
fn check_sym_witnesses() {
    let r = &json_lines(&hermsym(&["check-sym", CYCLE]))[0];
    assert_eq!(r["symmetric"], false);
    assert_eq!(r["witness"]["r"], 3);
    assert_eq!(r["witness"]["trace"], "-6");
    let r = &json_lines(&hermsym(&["check-sym", TRANSITIVE]))[0];
    assert_eq!(r["witness"]["trace"], "3");
    let r = &json_lines(&hermsym(&["check-sym", "4 4\n0 1\n2 1\n2 3\n0 3\n"]))[0];
    assert_eq!(r["symmetric"], true);
    assert!(r["witness"].is_null());
}

#[test]
fn parse_errors_exit_1_with_position() {
    let o = hermsym(&["check-sym", "3 2\n0 1\n1 q\n"]);
    assert_eq!(o.status.code(), Some(1));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("line 3, column 3"), "{err}");
    assert_eq!(hermsym(&["no-such-command"]).status.code(), Some(1));
    assert_eq!(hermsym(&["search"]).status.code(), Some(1));
    assert_eq!(hermsym(&["--help"]).status.code(), Some(0));
}

#[test]
fn overflow_exits_2() {
    // bipartite so every odd trace is zero and all even powers must be formed
    let a: Vec<String> = (0..40).flat_map(|u| (40..80).map(move |v| format!("{u} {v}"))).collect();
    let input = format!("80 1600\n{}\n", a.join("\n"));
    let o = hermsym_stdin(&["check-sym", "-"], &input);
    assert_eq!(o.status.code(), Some(2), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(String::from_utf8_lossy(&o.stderr).contains("overflow"));
}

#[test]
fn search_single_graphs() {
    let r = &json_lines(&hermsym(&["search", "3 3\n0 1\n1 2\n0 2\n"]))[0];
    assert_eq!(r["symmetric_orientations"], 0);
    let o = hermsym(&["search", "DF{"]);
    assert!(o.status.success());
    let r = &json_lines(&o)[0];
    assert_eq!(r["classes"].as_array().unwrap().len(), 2);
    assert!(r["classes"][0]["representative"].is_string());
    let o = hermsym(&["search", "G~~~~{", "--edge-cap", "20"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn search_catalogs_and_determinism() {
    let dir = std::env::temp_dir().join(format!("hermsym-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let cat = dir.join("graphs.g6");
    std::fs::write(&cat, "DF{\n\nBw\nnot-a-graph\nG~~~~{\n").unwrap();
    let out = dir.join("out.jsonl");
    let o = hermsym(&["search", "--catalog", cat.to_str().unwrap(), "--out", out.to_str().unwrap(), "--jobs", "2"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let text = std::fs::read_to_string(&out).unwrap();
    let lines: Vec<Value> = text.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines.len(), 4);
    assert_eq!(lines[0]["classes"].as_array().unwrap().len(), 2);
    assert_eq!(lines[2]["status"], "error");
    assert!(lines[3]["error"].as_str().unwrap().contains("cap"));

    let strip = |o: &Output| {
        json_lines(o)
            .into_iter()
            .map(|mut v| {
                v.as_object_mut().unwrap().remove("wall_time_ms");
                v
            })
            .collect::<Vec<_>>()
    };
    let a = hermsym(&["search", "--all-graphs", "5"]);
    let b = hermsym(&["search", "--all-graphs", "5", "--jobs", "3"]);
    assert_eq!(strip(&a), strip(&b));
    let positive = strip(&a).iter().filter(|r| r["symmetric_orientations"] != 0).count();
    assert_eq!(positive, 1);
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn construct_blowup_and_one_sum() {
    let piece = "&DA?FF?";
    let r = &json_lines(&hermsym(&["check-sym", piece]))[0];
    assert_eq!(r["symmetric"], true, "test piece must be symmetric");
    let o = hermsym(&["construct", "blowup", piece, "--l", "2"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.lines().next().unwrap().starts_with('&'));
    let v = &json_lines(&o)[0];
    assert_eq!(v["symmetric"], true);
    assert_eq!(v["limit_density"], v["source_limit_density"]);

    let o = hermsym(&["construct", "one-sum", piece, piece, "--at", "4,3"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let v = &json_lines(&o)[0];
    assert_eq!((v["n"].clone(), v["symmetric"].clone()), (Value::from(9), Value::Bool(true)));

    let o = hermsym(&["construct", "one-sum", piece, piece, "--at", "0,3"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("vertex 0"));
    let o = hermsym(&["construct", "one-sum", piece, piece, "--at", "0,3", "--require-odd-dominating", "off"]);
    assert!(o.status.success());
    assert!(json_lines(&o)[0]["symmetric"].is_boolean());
}

#[test]
fn construct_linegraph_of_k19() {
    let edges: Vec<String> = (0..19).flat_map(|u| (u + 1..19).map(move |v| format!("{u} {v}"))).collect();
    let input = format!("19 171\n{}\n", edges.join("\n"));
    let o = hermsym_stdin(&["construct", "linegraph", "-"], &input);
    assert!(o.status.success());
    let v = &json_lines(&o)[0];
    assert_eq!(v["edges"], 2907);
    assert_eq!(v["triangles"], 16473);
    assert_eq!(v["bounds"]["passed"], true);
}

#[test]
fn export_dot_is_deterministic() {
    let o = hermsym(&["export-dot", "2 1\n0 1\n"]);
    let dot = stdout(&o);
    assert!(dot.contains("0 -> 1"));
    assert_eq!(dot.matches("->").count(), 1);
    let o = hermsym(&["export-dot", CYCLE]);
    assert_eq!(stdout(&o).matches("->").count(), 3);
    assert_eq!(stdout(&o), stdout(&hermsym(&["export-dot", CYCLE])));
}

#[test]
fn tournaments_and_feasibility() {
    let o = hermsym(&["tournaments", "--n", "5"]);
    assert_eq!(stdout(&o).lines().count(), 12);
    let v = &json_lines(&hermsym(&["tournaments", "--n", "6", "--summary"]))[0];
    assert_eq!((v["classes"].clone(), v["symmetric"].clone()), (Value::from(56), Value::from(0)));
    assert_eq!(hermsym(&["tournaments", "--n", "8"]).status.code(), Some(1));

    let rows = json_lines(&hermsym(&["feasibility"]));
    let feasible: Vec<u64> = rows.iter().filter(|r| r["feasible"] == true).map(|r| r["n"].as_u64().unwrap()).collect();
    assert_eq!(feasible, [9, 10, 11]);
    assert_eq!(rows.len(), 28);
}

#[test]
fn tournament_survey_reports_bad_lines() {
    let dir = std::env::temp_dir().join(format!("hermsym-ts-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let cat = dir.join("t4.d6");
    let mut text = stdout(&hermsym(&["tournaments", "--n", "4"]));
    text.push_str("garbage\n&B??\n");
    std::fs::write(&cat, &text).unwrap();
    let o = hermsym(&["tournament-survey", "--catalog", cat.to_str().unwrap(), "--degree-filter", "none"]);
    assert!(o.status.success());
    let s = &json_lines(&o)[0];
    assert_eq!(s["tournaments"], 4);
    assert_eq!(s["symmetric"], 0);
    assert_eq!(s["errors"].as_array().unwrap().len(), 2);
    assert_eq!(s["errors"][1]["message"], "not a tournament");
    let o = hermsym(&["tournament-survey", "--catalog", cat.to_str().unwrap()]);
    assert_eq!(json_lines(&o)[0]["candidates"], 0);
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn verify_walks_matches_traces() {
    let o = hermsym(&["verify-walks", CYCLE, "--r-max", "5"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let v = &json_lines(&o)[0];
    assert_eq!(v["closed_walks"][2]["trace"], "-6");
    assert_eq!(v["consistent"], true);
    let o = hermsym(&["verify-walks", CYCLE, "--r-max", "12"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn graphs_listing() {
    let o = hermsym(&["graphs", "--n", "5", "--nonbipartite"]);
    assert_eq!(stdout(&o).lines().count(), 21);
    let o = hermsym(&["graphs", "--n", "6", "--nonbipartite", "--no-isolated"]);
    assert_eq!(stdout(&o).lines().count(), 100);
}
