use std::io::Write;
use std::process::{Command, Output, Stdio};

use krcrystal::promotion::verify_weak_promotion;
use krcrystal::{
    build_affine_graph, compare_models, enumerate_patterns, enumerate_ssyt, promote, CrystalShape,
    Pattern,
};

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_krcrystal"))
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

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn shape_args<'a>(n: &'a str, m: &'a str, i: &'a str) -> Vec<&'a str> {
    vec!["--n", n, "--m", m, "--i", i]
}

fn with<'a>(head: &[&'a str], tail: &[&'a str]) -> Vec<&'a str> {
    head.iter().chain(tail).copied().collect()
}

#[test]
fn promote_worked_example() {
    let args = with(&["promote"], &shape_args("5", "3", "3"));
    let out = run(&args, "[[1,1,1],[2,0,0],[0,0,0]]");
    assert_eq!(out.status.code(), Some(0));
    let got = Pattern::from_json(stdout(&out).trim()).unwrap();
    assert_eq!(
        got.rows(),
        vec![vec![0, 1, 1], vec![1, 2, 0], vec![2, 0, 0]]
    );
}

#[test]
fn promote_trace_lines() {
    let args = with(&["promote", "--trace"], &shape_args("6", "7", "4"));
    let input = r#"{"n":6,"m":7,"i":4,"rows":[[1,0,1,1],[0,1,3,2],[1,0,2,0]]}"#;
    let out = run(&args, input);
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[1], "l^3: 5<6");
    assert_eq!(lines[2], "3 1 2");
    assert_eq!(lines[3], "1 3 2");
    assert_eq!(lines[4], "l^2: 4<5<6");
    assert_eq!(lines[6], "0 4 2");
    assert_eq!(lines[7], "l^1: 4<5<6");
}

#[test]
fn promote_matches_library_on_every_member() {
    let shape = CrystalShape::new(3, 2, 2).unwrap();
    for p in enumerate_patterns(shape) {
        let out = run(
            &with(&["promote"], &shape_args("3", "2", "2")),
            &p.to_json(),
        );
        assert_eq!(stdout(&out).trim(), promote(&p).unwrap().to_json());
    }
}

#[test]
fn dim_reports_both_counts() {
    let out = run(&with(&["dim"], &shape_args("2", "3", "2")), "");
    assert_eq!(stdout(&out).trim(), "10 10 OK");
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn apply_operators() {
    let args = with(&["apply", "--op", "f2"], &shape_args("4", "5", "2"));
    let out = run(&args, "[[0,0],[0,0],[0,0]]");
    let got = Pattern::from_json(stdout(&out).trim()).unwrap();
    assert_eq!(got.rows(), vec![vec![0, 1], vec![0, 0], vec![0, 0]]);

    let args = with(&["apply", "--op", "e2"], &shape_args("4", "5", "2"));
    assert_eq!(stdout(&run(&args, "[[0,0],[0,0],[0,0]]")).trim(), "none");

    let args = with(&["apply", "--op", "e0"], &shape_args("2", "3", "2"));
    let out = run(&args, "[[0,0]]");
    assert_eq!(out.status.code(), Some(0));
    assert_ne!(stdout(&out).trim(), "none");

    let args = with(
        &["apply", "--op", "f2", "--model", "tableau"],
        &shape_args("2", "1", "2"),
    );
    assert_eq!(
        stdout(&run(&args, r#"{"rows":[[1],[2]]}"#)).trim(),
        r#"{"rows":[[1],[3]]}"#
    );
}

#[test]
fn verify_suites() {
    for suite in ["axioms", "stembridge", "promotion", "oracle"] {
        let out = run(&with(&["verify", suite], &shape_args("2", "3", "2")), "");
        assert_eq!(out.status.code(), Some(0), "{suite}");
        assert_eq!(stdout(&out).trim(), "OK");
    }
    let out = run(
        &with(
            &["verify", "axioms", "--affine"],
            &shape_args("3", "1", "2"),
        ),
        "",
    );
    assert_eq!(out.status.code(), Some(0));
    let s = CrystalShape::new(2, 3, 2).unwrap();
    assert!(verify_weak_promotion(s).is_empty() && compare_models(s).certified());
}

#[test]
fn enumerate_matches_library() {
    let out = run(
        &with(
            &["enumerate", "--format", "text"],
            &shape_args("2", "1", "2"),
        ),
        "",
    );
    assert_eq!(stdout(&out), "0 0\n0 1\n1 0\n");
    let out = run(&with(&["enumerate"], &shape_args("3", "2", "2")), "");
    let listed: Vec<serde_json::Value> = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(
        listed.len(),
        enumerate_patterns(CrystalShape::new(3, 2, 2).unwrap()).len()
    );
    let out = run(
        &with(
            &["enumerate", "--model", "tableau", "--format", "text"],
            &shape_args("2", "3", "2"),
        ),
        "",
    );
    let s = CrystalShape::new(2, 3, 2).unwrap();
    assert_eq!(stdout(&out).lines().count(), enumerate_ssyt(s).len());
}

#[test]
fn dot_output_is_stable_and_styled() {
    let args = with(&["graph", "--affine"], &shape_args("2", "3", "2"));
    let first = stdout(&run(&args, ""));
    let second = stdout(&run(&args, ""));
    assert_eq!(first, second);
    assert!(first.starts_with("digraph"));
    assert!(first.contains("[label=\"0 0\"]"));
    assert!(first.contains("style=dashed"));
    let g = build_affine_graph(CrystalShape::new(2, 3, 2).unwrap());
    let expected = g.to_dot(Pattern::compact);
    assert_eq!(first, expected);

    let json = stdout(&run(
        &with(&["graph", "--format", "json"], &shape_args("2", "1", "1")),
        "",
    ));
    let value: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(value["vertices"].as_array().unwrap().len(), 3);
    assert_eq!(value["edges"].as_array().unwrap().len(), 2);
}

#[test]
fn usage_errors_exit_two() {
    let cases: Vec<(Vec<&str>, &str)> = vec![
        (with(&["dim"], &shape_args("2", "1", "3")), ""),
        (with(&["promote"], &shape_args("2", "1", "1")), "not json"),
        (with(&["promote"], &shape_args("2", "1", "1")), "[[2],[0]]"),
        (
            with(&["apply", "--op", "f9"], &shape_args("2", "1", "1")),
            "[[0],[0]]",
        ),
        (
            with(&["apply", "--op", "g1"], &shape_args("2", "1", "1")),
            "[[0],[0]]",
        ),
        (
            with(
                &["enumerate", "--format", "dot"],
                &shape_args("2", "1", "1"),
            ),
            "",
        ),
        (
            with(&["promote"], &shape_args("2", "1", "1")),
            r#"{"n":3,"rows":[[0],[0]]}"#,
        ),
        (vec!["dim", "--n", "2"], ""),
    ];
    for (args, input) in cases {
        let out = run(&args, input);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn input_from_file() {
    let dir = std::env::temp_dir().join(format!("krcrystal-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("pattern.json");
    std::fs::write(&path, "[[1,0],[2,1],[0,1]]").unwrap();
    let args = with(
        &["apply", "--op", "f1", "--input", path.to_str().unwrap()],
        &shape_args("4", "5", "2"),
    );
    let got = Pattern::from_json(stdout(&run(&args, "")).trim()).unwrap();
    assert_eq!(got.rows(), vec![vec![1, 0], vec![3, 0], vec![0, 1]]);
    std::fs::remove_dir_all(&dir).unwrap();
}
