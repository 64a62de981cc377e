use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn gzono(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gzono"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn gzono_stdin(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_gzono"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone())
        .unwrap()
        .trim_end()
        .to_string()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("valid JSON on stdout")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

const PAW: &str = "4 4;1 2;1 3;2 3;3 4";

fn strings(v: &Value) -> Vec<String> {
    v.as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_str().unwrap().to_string())
        .collect()
}

#[test]
fn paw_psiq_text() {
    let o = gzono(&["psiq", "--inline", PAW]);
    assert_eq!(code(&o), 0);
    assert_eq!(
        stdout(&o),
        "24*m[1,1,1,1] + (4+8q)*m[2,1,1] + (4q+2q^2)*m[2,2] + (q+3q^2)*m[3,1] + q^3*m[4]"
    );
}

#[test]
fn paw_psiq_json_matches_text() {
    let o = gzono(&["--json", "psiq", "--inline", PAW]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    let terms = &v["psi_q"];
    assert_eq!(terms.as_object().unwrap().len(), 5);
    assert_eq!(strings(&terms["[1,1,1,1]"]), ["24"]);
    assert_eq!(strings(&terms["[2,1,1]"]), ["4", "8"]);
    assert_eq!(strings(&terms["[2,2]"]), ["0", "4", "2"]);
    assert_eq!(strings(&terms["[3,1]"]), ["0", "1", "3"]);
    assert_eq!(strings(&terms["[4]"]), ["0", "0", "0", "1"]);
}

#[test]
fn fpoly_routes_text_and_json_agree() {
    for route in ["flats", "main"] {
        let t = gzono(&["fpoly", "--route", route, "--inline", PAW]);
        assert_eq!(code(&t), 0);
        assert_eq!(stdout(&t), "12 + 18q + 8q^2 + q^3");
        let j = gzono(&["--json", "fpoly", "--route", route, "--inline", PAW]);
        assert_eq!(strings(&json(&j)["f_polynomial"]), ["12", "18", "8", "1"]);
    }
}

#[test]
fn input_sources_agree() {
    let dir = std::env::temp_dir().join(format!("gzono-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let text_path = dir.join("paw.txt");
    std::fs::write(&text_path, "4 4\n1 2\n1 3\n2 3\n3 4\n").unwrap();
    let json_path = dir.join("paw.json");
    std::fs::write(
        &json_path,
        r#"{"n": 4, "edges": [[1,2],[1,3],[2,3],[3,4]]}"#,
    )
    .unwrap();

    let expected = "[12, 18, 8, 1]";
    for o in [
        gzono(&["fvector", text_path.to_str().unwrap()]),
        gzono(&["fvector", json_path.to_str().unwrap()]),
        gzono(&["fvector", "--inline", PAW]),
        gzono(&[
            "fvector",
            "--inline",
            r#"{"n":4,"edges":[[1,2],[1,3],[2,3],[3,4]]}"#,
        ]),
        gzono_stdin(&["fvector", "-"], "4 4\n1 2\n1 3\n2 3\n3 4\n"),
    ] {
        assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
        assert_eq!(stdout(&o), expected);
    }
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn family_output_reparses_to_same_graph() {
    let printed = gzono(&["family", "--family", "cycle", "-n", "4"]);
    assert_eq!(code(&printed), 0);
    let text = stdout(&printed);
    let again = gzono_stdin(&["--json", "family", "-"], &text);
    let from_family = gzono(&["--json", "family", "--family", "cycle", "-n", "4"]);
    assert_eq!(json(&again), json(&from_family));
    assert_eq!(json(&from_family)["n"], 4);
}

#[test]
fn single_vertex_graph() {
    let o = gzono(&["verify", "--inline", "1 0"]);
    assert_eq!(code(&o), 0);
    let j = json(&gzono(&["--json", "verify", "--inline", "1 0"]));
    assert_eq!(j["agree"], true);
    assert_eq!(strings(&j["f_flats"]), ["1"]);
}

#[test]
fn verify_cycle_json_fields() {
    let o = gzono(&["--json", "verify", "--family", "cycle", "-n", "4"]);
    assert_eq!(code(&o), 0);
    let j = json(&o);
    let expected = ["14", "24", "12", "1"];
    assert_eq!(strings(&j["f_flats"]), expected);
    assert_eq!(strings(&j["f_main"]), expected);
    assert_eq!(strings(&j["f_oracle"]), expected);
    assert_eq!(j["agree"], true);
}

#[test]
fn verify_random_is_seeded() {
    let args = [
        "--json", "--seed", "11", "verify", "--random", "--count", "4", "-n", "5",
    ];
    let a = gzono(&args);
    let b = gzono(&args);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    let j = json(&a);
    assert_eq!(j["seed"], 11);
    let reports = j["reports"].as_array().unwrap();
    assert_eq!(reports.len(), 4);
    assert!(reports.iter().all(|r| r["agree"] == true));

    let other = gzono(&[
        "--json", "--seed", "12", "verify", "--random", "--count", "4", "-n", "5",
    ]);
    assert_ne!(a.stdout, other.stdout);
}

#[test]
fn oracle_over_budget_in_verify_is_skipped() {
    let o = gzono(&["--json", "verify", "--family", "complete", "-n", "8"]);
    assert_eq!(code(&o), 0);
    let j = json(&o);
    assert!(j["f_oracle"].is_null());
    assert_eq!(j["agree"], true);
}

#[test]
fn budget_exceeded_exits_3() {
    let o = gzono(&["oracle", "--family", "complete", "-n", "8"]);
    assert_eq!(code(&o), 3);
    assert!(String::from_utf8_lossy(&o.stderr).contains("budget"));
    let o = gzono(&["psiq", "--family", "path", "-n", "12"]);
    assert_eq!(code(&o), 3);
}

#[test]
fn budget_override_lifts_limit() {
    let o = gzono(&["--budget", "9", "psiq", "--family", "path", "-n", "9"]);
    assert_eq!(code(&o), 0);
    assert!(String::from_utf8_lossy(&o.stderr).contains("ordered set partitions"));
}

#[test]
fn malformed_input_exits_2() {
    for args in [
        vec!["fpoly", "--inline", "3 1;1 4"],
        vec!["fpoly", "--inline", "3 2;1 2"],
        vec!["fpoly", "--inline", "2 1;1 1"],
        vec!["fpoly", "--inline", "not a graph"],
        vec!["fpoly", "--inline", r#"{"n": 2, "edges": [[1, 3]]}"#],
        vec!["fpoly", "--family", "cycle", "-n", "2"],
        vec!["fpoly"],
        vec!["fpoly", "--inline", PAW, "--family", "path", "-n", "3"],
        vec!["fpoly", "/nonexistent/graph.txt"],
        vec!["no-such-subcommand"],
    ] {
        let o = gzono(&args);
        assert_eq!(code(&o), 2, "args {args:?}");
        assert!(o.stdout.is_empty(), "args {args:?}");
    }
}

#[test]
fn parse_error_reports_line() {
    let o = gzono(&["fpoly", "--inline", "3 2;1 2;2 x"]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3"));
}

#[test]
fn twist_on_path() {
    let o = gzono(&[
        "twist",
        "--inline",
        "4 3;1 2;2 3;3 4",
        "--u",
        "2",
        "--v",
        "3",
        "--side",
        "1",
    ]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("f-polynomials match: true"));
}

#[test]
fn twist_on_cycle() {
    let o = gzono(&[
        "twist", "--family", "cycle", "-n", "4", "--u", "1", "--v", "3", "--side", "2",
    ]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    assert!(text.contains("f-polynomials match: true"));
    assert!(text.contains("m[3,1] coefficient"));
}

#[test]
fn twist_pair_separates_psi_q() {
    let g = "6 8;1 2;1 3;1 5;1 6;2 4;2 6;3 4;3 5";
    let o = gzono(&[
        "--json", "twist", "--inline", g, "--u", "1", "--v", "4", "--side", "3,5",
    ]);
    assert_eq!(code(&o), 0);
    let j = json(&o);
    assert_eq!(j["f_match"], true);
    assert_eq!(j["m3_partition"], "m[3,1,1,1]");
    assert_eq!(strings(&j["m3_original"]), ["6", "48", "66"]);
    assert_eq!(strings(&j["m3_twisted"]), ["0", "60", "60"]);
    assert_eq!(
        j["twisted"]["edges"],
        serde_json::json!([
            [1, 2],
            [1, 3],
            [1, 6],
            [2, 4],
            [2, 6],
            [3, 4],
            [3, 5],
            [4, 5]
        ])
    );
}

#[test]
fn twist_rejects_bad_separation() {
    let o = gzono(&[
        "twist", "--family", "complete", "-n", "4", "--u", "1", "--v", "2", "--side", "3",
    ]);
    assert_eq!(code(&o), 2);
}

#[test]
fn oracle_dump_golden_triangle() {
    let o = gzono(&[
        "oracle",
        "--family",
        "complete",
        "-n",
        "3",
        "--dump-covectors",
    ]);
    assert_eq!(code(&o), 0);
    let golden = "\
+++
++-
+--
+0-
++0
---
--+
-++
-0+
--0
0++
0--
000";
    let mut expected: Vec<&str> = golden.lines().collect();
    expected.sort_unstable();
    assert_eq!(stdout(&o).lines().collect::<Vec<_>>(), expected);
}

#[test]
fn oracle_summary() {
    let o = gzono(&["oracle", "--family", "cycle", "-n", "4"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "[14, 24, 12, 1]\ncovectors: 51");
    let j = json(&gzono(&[
        "--json", "oracle", "--family", "cycle", "-n", "4",
    ]));
    assert_eq!(j["covector_count"], 51);
}

#[test]
fn chromatic_and_acyclic() {
    let o = gzono(&["--json", "chromatic", "--inline", PAW]);
    assert_eq!(
        strings(&json(&o)["chromatic_polynomial"]),
        ["0", "-2", "5", "-4", "1"]
    );
    let o = gzono(&["acyclic", "--brute", "--inline", PAW]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "12 (enumerated: 12)");
}

#[test]
fn antipode_has_one_term_per_flat() {
    let j = json(&gzono(&[
        "--json", "antipode", "--family", "cycle", "-n", "4",
    ]));
    assert_eq!(j["terms"].as_array().unwrap().len(), 12);
    let text = stdout(&gzono(&["antipode", "--family", "cycle", "-n", "4"]));
    assert_eq!(text.lines().count(), 12);
}
