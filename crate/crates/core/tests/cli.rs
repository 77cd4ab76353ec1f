use std::io::Write;
use std::process::{Command, Output, Stdio};

fn gcinterp(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_gcinterp"))
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

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn principal(n: &str) -> String {
    let out = gcinterp(&["generate", "--family", "principal", "--degree", n], "");
    assert_eq!(code(&out), 0);
    stdout(&out)
}

#[test]
fn analyze_principal_lattice() {
    let out = gcinterp(&["analyze", "-"], &principal("4"));
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["poised"], true);
    assert_eq!(report["gc"], true);
    assert_eq!(report["verdict"]["kind"], "ConfirmedMaximalLine");
    assert_eq!(report["maximal_lines"].as_array().unwrap().len(), 3);
    assert_eq!(report["witnesses"].as_array().unwrap().len(), 15);
}

#[test]
fn wrong_cardinality_is_a_precondition_violation() {
    let text = principal("4");
    let mut v: serde_json::Value = serde_json::from_str(&text).unwrap();
    v["nodes"].as_array_mut().unwrap().pop();
    let out = gcinterp(&["analyze"], &v.to_string());
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("15"), "{}", stderr(&out));
}

#[test]
fn zero_denominator_is_a_parse_error() {
    let input = r#"{"degree": 1, "nodes": [["0", "0"], ["1/0", "0"], ["0", "1"]]}"#;
    let out = gcinterp(&["analyze"], input);
    assert_eq!(code(&out), 1);
    assert!(stderr(&out).contains("parse error"), "{}", stderr(&out));
}

#[test]
fn non_poised_input_is_reported() {
    let input = r#"{"degree": 1, "nodes": [["0", "0"], ["1", "1"], ["2", "2"]]}"#;
    let out = gcinterp(&["analyze"], input);
    assert_eq!(code(&out), 0);
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["poised"], false);
    assert_eq!(report["verdict"]["kind"], "NotPoised");
}

#[test]
fn generated_files_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    for family in ["chung-yao", "principal", "berzolari-radon", "random"] {
        let path = dir.path().join(format!("{family}.json"));
        let path_str = path.to_str().unwrap();
        let out = gcinterp(
            &[
                "generate", "--family", family, "--degree", "3", "--seed", "7", "--out", path_str,
            ],
            "",
        );
        assert_eq!(code(&out), 0, "{family}: {}", stderr(&out));
        let text = std::fs::read_to_string(&path).unwrap();
        let nodes = gcinterp::cli::format::parse_node_set(&text).unwrap();
        assert_eq!(nodes.len(), 10);
        assert_eq!(gcinterp::cli::format::write_node_set(&nodes), text);
        let analyzed = gcinterp(&["analyze", path_str], "");
        assert_eq!(code(&analyzed), 0, "{family}: {}", stderr(&analyzed));
    }
}

#[test]
fn commands_are_deterministic() {
    let runs: Vec<Vec<&str>> = vec![
        vec!["generate", "--family", "chung-yao", "--seed", "4"],
        vec!["generate", "--family", "random", "--seed", "4"],
        vec!["search", "--trials", "40", "--seed", "9", "--degree", "3"],
        vec!["verify", "bezout", "--count", "12", "--seed", "2"],
    ];
    for args in runs {
        let first = gcinterp(&args, "");
        let second = gcinterp(&args, "");
        assert_eq!(code(&first), 0, "{args:?}: {}", stderr(&first));
        assert_eq!(first.stdout, second.stdout, "{args:?}");
    }
}

#[test]
fn search_report_does_not_depend_on_jobs() {
    let one = gcinterp(
        &[
            "search", "--trials", "30", "--seed", "1", "--degree", "3", "--jobs", "1",
        ],
        "",
    );
    let four = gcinterp(
        &[
            "search", "--trials", "30", "--seed", "1", "--degree", "3", "--jobs", "4",
        ],
        "",
    );
    assert_eq!(code(&one), 0);
    assert_eq!(one.stdout, four.stdout);
}

#[test]
fn render_writes_svg() {
    let out = gcinterp(&["render", "-"], &principal("2"));
    assert_eq!(code(&out), 0);
    let svg = stdout(&out);
    assert!(svg.contains("<svg ") && svg.trim_end().ends_with("</svg>"));
    assert_eq!(svg.matches("class=\"node\"").count(), 6);
}

#[test]
fn usage_errors() {
    assert_eq!(
        code(&gcinterp(&["analyze", "/nonexistent/file.json"], "")),
        1
    );
    assert_eq!(
        code(&gcinterp(&["generate", "--family", "hexagonal"], "")),
        1
    );
    assert_eq!(code(&gcinterp(&["verify", "unknown"], "")), 1);
    assert_eq!(code(&gcinterp(&[], "")), 1);
}
