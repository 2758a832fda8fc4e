use std::io::Write;
use std::process::{Command, Output};

use tempfile::NamedTempFile;

const EXAMPLE: &str = include_str!("../../core/tests/data/example.txt");

fn lscpm(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lscpm"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn file(text: &str) -> NamedTempFile {
    let mut f = NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn example_stream_forms_one_community() {
    let f = file(EXAMPLE);
    let out = lscpm(&["communities", "--k", "3", f.path().to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        "0 c 2 13\n0 d 2 13\n0 e 2 13\n0 f 3 12\n0 g 3 5\n0 g 8 12\n"
    );
}

#[test]
fn example_stream_cliques() {
    let f = file(EXAMPLE);
    let out = lscpm(&["enumerate", "--k", "3", f.path().to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "2 13 c d e\n3 5 e f g\n4 9 d e f\n8 12 e f g\n");
}

#[test]
fn empty_input_gives_empty_output() {
    let f = file("");
    let out = lscpm(&["enumerate", "--k", "3", f.path().to_str().unwrap()]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
}

#[test]
fn larger_k_refines_smaller_k() {
    let f = file(EXAMPLE);
    let out = lscpm(&[
        "compare",
        "--k1",
        "3",
        "--k2",
        "5",
        "--snapshot-times",
        "4,10",
        f.path().to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("refinement: k2 ⊆ k1"), "{text}");
    assert!(text.contains("snapshot t=4: 1/1 contained"), "{text}");
    assert!(text.contains("snapshot t=10: 2/2 contained"), "{text}");
}

#[test]
fn rejected_data_exits_with_one_and_names_the_line() {
    let f = file("0 5 a b\n1 3 b a\n");
    let out = lscpm(&["communities", "--k", "3", f.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("lines 1 and 2"), "{err}");
}

#[test]
fn missing_file_is_a_data_error() {
    let out = lscpm(&["enumerate", "--k", "3", "/nonexistent/stream.txt"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn usage_errors_exit_with_two() {
    let f = file(EXAMPLE);
    let path = f.path().to_str().unwrap();
    assert_eq!(lscpm(&["enumerate", "--k", "2", path]).status.code(), Some(2));
    assert_eq!(lscpm(&["enumerate", "--k", "3", "--bogus", path]).status.code(), Some(2));
    assert_eq!(
        lscpm(&["enumerate", "--k", "3", "--format", "instantaneous", path]).status.code(),
        Some(2)
    );
}

#[test]
fn instantaneous_input_with_delta() {
    let f = file("0 a b\n0 b c\n1 a c\n");
    let out = lscpm(&[
        "enumerate",
        "--k",
        "3",
        "--format",
        "instantaneous",
        "--delta",
        "2",
        f.path().to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "1 2 a b c\n");
}

#[test]
fn output_is_deterministic_across_modes() {
    let generated = lscpm(&[
        "generate",
        "--seed",
        "7",
        "--vertices",
        "60",
        "--instants",
        "3000",
        "--group-size",
        "6",
        "--delta",
        "40",
    ]);
    assert!(generated.status.success());
    let f = file(&stdout(&generated));
    let path = f.path().to_str().unwrap();
    let first = lscpm(&["communities", "--k", "3", path]);
    let second = lscpm(&["communities", "--k", "3", path]);
    let single = lscpm(&["--single-thread", "communities", "--k", "3", path]);
    assert!(first.status.success());
    assert!(!first.stdout.is_empty());
    assert_eq!(first.stdout, second.stdout);
    assert_eq!(first.stdout, single.stdout);
}

#[test]
fn stats_csv_tables() {
    let f = file(EXAMPLE);
    let out = lscpm(&["stats", "--k", "3", f.path().to_str().unwrap()]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("table,key,value\n"));
    assert!(text.contains("vertex_communities,e,1\n"));
    assert!(text.contains("membership_distribution,1,5\n"));
    assert!(text.contains("community_size,5,1\n"));
}

#[test]
fn real_time_stream() {
    let f = file("0.5 10 a b\n0.5 10 b c\n2.25 8 a c\n");
    let out = lscpm(&["--real-time", "enumerate", "--k", "3", f.path().to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "2.25 8 a b c\n");
}

#[test]
fn oracle_agrees_on_example() {
    let f = file(EXAMPLE);
    let out = lscpm(&["oracle", "--k", "3", f.path().to_str().unwrap()]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("cliques: 4 oracle, 4 streamed"));
}
