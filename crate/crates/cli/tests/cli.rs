use std::collections::BTreeMap;
use std::process::{Command, Output};

use plethysm_core::hwv::DecompositionReport;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_plethysm"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

/// Diagram and multiplicity columns of the text table.
fn text_rows(text: &str) -> BTreeMap<String, u64> {
    text.lines()
        .skip(2)
        .take_while(|l| l.starts_with('('))
        .map(|l| {
            let mut cols = l.split_whitespace();
            let d = cols.next().unwrap().to_string();
            (d, cols.next().unwrap().parse().unwrap())
        })
        .collect()
}

#[test]
fn decompose_text_examples() {
    let o = run(&[
        "decompose",
        "--k",
        "3",
        "--m",
        "2",
        "--variant",
        "alt",
        "--format",
        "text",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let rows = text_rows(&stdout(&o));
    assert_eq!(rows.keys().collect::<Vec<_>>(), vec!["(3,3)", "(4,1,1)"]);

    let o = run(&["decompose", "--k", "3", "--m", "6", "--variant", "sym"]);
    let rows = text_rows(&stdout(&o));
    assert_eq!(rows.len(), 19);
    assert_eq!(rows["(12,6)"], 2);

    let o = run(&["decompose", "--k", "2", "--m", "3", "--variant", "sym"]);
    let rows = text_rows(&stdout(&o));
    assert_eq!(rows.keys().collect::<Vec<_>>(), vec!["(4,2)", "(6)"]);
}

#[test]
fn json_round_trips_and_matches_text() {
    for (k, m, v) in [("3", "4", "alt"), ("3", "6", "sym"), ("2", "5", "alt")] {
        let json = run(&[
            "decompose",
            "--k",
            k,
            "--m",
            m,
            "--variant",
            v,
            "--format",
            "json",
        ]);
        assert_eq!(json.status.code(), Some(0));
        let body = stdout(&json);
        let report: DecompositionReport = serde_json::from_str(&body).unwrap();
        assert_eq!(format!("{}\n", report.to_json_pretty()), body);

        let text = run(&["decompose", "--k", k, "--m", m, "--variant", v]);
        let from_json: BTreeMap<String, u64> = report
            .entries
            .iter()
            .map(|e| (e.diagram.to_string(), e.multiplicity))
            .collect();
        assert_eq!(text_rows(&stdout(&text)), from_json);
    }
}

#[test]
fn expanded_json_still_parses_as_report() {
    let o = run(&[
        "decompose",
        "--m",
        "2",
        "--variant",
        "sym",
        "--format",
        "json",
        "--expand",
    ]);
    let body = stdout(&o);
    let v: serde_json::Value = serde_json::from_str(&body).unwrap();
    assert_eq!(v["expansions"].as_array().unwrap().len(), 3);
    let report: DecompositionReport = serde_json::from_str(&body).unwrap();
    assert_eq!(report.entries.len(), 3);
}

#[test]
fn hwv_examples() {
    let o = run(&[
        "hwv",
        "--k",
        "3",
        "--m",
        "5",
        "--variant",
        "sym",
        "--shape",
        "9,6",
    ]);
    assert_eq!(stdout(&o), "a1*g2^2\n");
    let o = run(&[
        "hwv",
        "--k",
        "3",
        "--m",
        "1",
        "--variant",
        "alt",
        "--shape",
        "3",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "");
    let o = run(&[
        "hwv",
        "--k",
        "3",
        "--m",
        "6",
        "--variant",
        "sym",
        "--shape",
        "12,6",
    ]);
    assert_eq!(stdout(&o), "a2^3\na1^2*g2^2\n");
    let o = run(&[
        "hwv",
        "--m",
        "1",
        "--variant",
        "sym",
        "--shape",
        "3",
        "--expand",
    ]);
    assert_eq!(stdout(&o), "a1 = x[1][1]*x[1][2]*x[1][3]\n");
}

#[test]
fn kostka_examples() {
    for (shape, content, expected) in [
        ("4,2", "2,2,2", "3\n"),
        ("3", "1,1,1", "1\n"),
        ("2,2,2", "2,2,2", "1\n"),
    ] {
        let o = run(&["kostka", "--shape", shape, "--content", content]);
        assert_eq!(stdout(&o), expected);
    }
}

#[test]
fn verify_exit_codes() {
    let o = run(&["verify"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).lines().all(|l| l.starts_with("PASS ")));

    let o = run(&["verify", "--m", "1", "--force-gamma1-relation"]);
    assert_eq!(o.status.code(), Some(1));
    let failed: Vec<String> = stdout(&o)
        .lines()
        .filter(|l| l.starts_with("FAIL"))
        .map(String::from)
        .collect();
    assert_eq!(failed.len(), 1);
    assert!(failed[0].starts_with("FAIL alpha23-printed-variant"));

    let o = run(&["verify", "--m", "5"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("PASS closed-form-vs-enumeration"));
}

#[test]
fn kernel_bound_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_plethysm"))
        .args(["verify", "--m", "2"])
        .env("PLETHYSM_MAX_DIM", "1")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL basis-vs-oracle"));
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["decompose", "--k", "4", "--m", "1", "--variant", "sym"][..],
        &["decompose", "--m", "1", "--n", "2", "--variant", "sym"],
        &["decompose", "--m", "1", "--variant", "both"],
        &[
            "hwv",
            "--k",
            "2",
            "--m",
            "2",
            "--variant",
            "sym",
            "--shape",
            "2,1,1",
        ],
        &[
            "hwv",
            "--k",
            "3",
            "--m",
            "2",
            "--variant",
            "sym",
            "--shape",
            "3,4",
        ],
        &["kostka", "--shape", "2", "--content", "x"],
        &["frobnicate"],
    ] {
        let o = run(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!o.stderr.is_empty());
    }
    let o = run(&[
        "hwv",
        "--k",
        "2",
        "--m",
        "2",
        "--variant",
        "sym",
        "--shape",
        "2,1,1",
    ]);
    assert!(String::from_utf8_lossy(&o.stderr).contains("k = 2"));
}

#[test]
fn output_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let o = run(&[
        "decompose",
        "--m",
        "3",
        "--variant",
        "alt",
        "--format",
        "json",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let report: DecompositionReport =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(report.entries.len(), 4);
}

#[test]
fn oracle_json_export() {
    let o = run(&[
        "oracle",
        "--m",
        "2",
        "--n",
        "3",
        "--variant",
        "sym",
        "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["multiplicities"].as_array().unwrap().len(), 3);
    assert_eq!(
        v["multiplicities"][1],
        serde_json::json!({"diagram": [4, 2, 0], "mult": 1})
    );
}
