//! End-to-end tests of the `seqmine` binary: flag handling, output
//! formats, exit codes, and determinism.

use std::path::PathBuf;
use std::process::{Command, Output};

const DATA: &str = include_str!("../data/example.dat");
const HIER: &str = include_str!("../data/example.hier");

struct Fixture {
    data: PathBuf,
    hier: PathBuf,
    dir: PathBuf,
}

fn fixture(name: &str) -> Fixture {
    let dir = std::env::temp_dir().join(format!("seqmine-cli-{}-{name}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let data = dir.join("example.dat");
    let hier = dir.join("example.hier");
    std::fs::write(&data, DATA).unwrap();
    std::fs::write(&hier, HIER).unwrap();
    Fixture { data, hier, dir }
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_seqmine"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    assert!(
        out.status.success(),
        "exit {:?}, stderr: {}",
        out.status.code(),
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn mine_prints_header_and_frequent_sequences() {
    let fx = fixture("mine");
    let out = stdout(&run(&[
        "mine",
        "--data",
        fx.data.to_str().unwrap(),
        "--hierarchy",
        fx.hier.to_str().unwrap(),
        "--pattern",
        "[c|d]([A^|B=^]+)e",
        "--sigma",
        "2",
    ]));
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 5);
    assert!(lines[0].starts_with("# pattern=[c|d]([A^|B=^]+)e sigma=2 algorithm=dfs data-sha256="));
    assert_eq!(&lines[1..], &["A A A B\t2", "A B\t2", "A a1 A B\t2", "a1 B\t2"]);
}

#[test]
fn mine_algorithms_agree_modulo_header() {
    let fx = fixture("algos");
    let strip = |s: String| {
        s.lines()
            .filter(|l| !l.starts_with('#'))
            .collect::<Vec<_>>()
            .join("\n")
    };
    let mut outputs = Vec::new();
    for algorithm in ["naive", "count", "dfs"] {
        let out = stdout(&run(&[
            "mine",
            "--data",
            fx.data.to_str().unwrap(),
            "--hierarchy",
            fx.hier.to_str().unwrap(),
            "--pattern",
            "[c|d]([A^|B=^]+)e",
            "--sigma",
            "2",
            "--algorithm",
            algorithm,
        ]));
        assert!(out.contains(&format!("algorithm={algorithm} ")));
        outputs.push(strip(out));
    }
    assert_eq!(outputs[0], outputs[1]);
    assert_eq!(outputs[0], outputs[2]);
}

#[test]
fn mine_runs_are_deterministic() {
    let fx = fixture("determinism");
    let args = [
        "mine",
        "--data",
        fx.data.to_str().unwrap(),
        "--hierarchy",
        fx.hier.to_str().unwrap(),
        "--pattern",
        "(.){2,3}",
        "--sigma",
        "2",
        "--partial",
    ];
    assert_eq!(stdout(&run(&args)), stdout(&run(&args)));
}

#[test]
fn match_lists_generated_subsequences_with_line_numbers() {
    let fx = fixture("match");
    let out = stdout(&run(&[
        "match",
        "--input",
        fx.data.to_str().unwrap(),
        "--hierarchy",
        fx.hier.to_str().unwrap(),
        "--pattern",
        "[c|d]([A^|B=^]+)e",
    ]));
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 20);
    assert_eq!(lines[0], "A B\t1");
    assert_eq!(lines[1], "a1 B\t1");
    assert!(lines.iter().all(|l| !l.ends_with("\t2") && !l.ends_with("\t5")));
}

#[test]
fn match_respects_sigma_filter() {
    let fx = fixture("match-sigma");
    let out = stdout(&run(&[
        "match",
        "--input",
        fx.data.to_str().unwrap(),
        "--hierarchy",
        fx.hier.to_str().unwrap(),
        "--pattern",
        "[c|d]([A^|B=^]+)e",
        "--sigma",
        "2",
    ]));
    // Items with document frequency < 2 (a2) never appear.
    assert!(!out.contains("a2"));
    assert_eq!(out.lines().filter(|l| l.ends_with("\t3")).count(), 2);
}

#[test]
fn compile_prints_machine_and_writes_dot() {
    let fx = fixture("compile");
    let dot = fx.dir.join("machine.dot");
    let out = stdout(&run(&[
        "compile",
        "--hierarchy",
        fx.hier.to_str().unwrap(),
        "--data",
        fx.data.to_str().unwrap(),
        "--pattern",
        "[c|d]([A^|B=^]+)e",
        "--dot",
        dot.to_str().unwrap(),
    ]));
    assert_eq!(
        out,
        "states\t4\ninitial\t0\nfinal\t3\n\
         0\td\t-\t1\n0\tc\t-\t1\n\
         1\tA\t$-A\t2\n1\tB\tB\t2\n\
         2\tA\t$-A\t2\n2\tB\tB\t2\n2\te\t-\t3\n"
    );
    let rendered = std::fs::read_to_string(&dot).unwrap();
    assert!(rendered.starts_with("digraph fst {"));
    assert!(rendered.contains("q2 -> q3 [label=\"e:-\"]"));
}

#[test]
fn stats_prints_database_shape() {
    let fx = fixture("stats");
    let out = stdout(&run(&["stats", "--data", fx.data.to_str().unwrap()]));
    assert_eq!(
        out,
        "sequences\t6\ntotal items\t27\navg length\t4.5\nmax length\t6\ndistinct items\t9\n"
    );
}

#[test]
fn output_flag_writes_to_a_file() {
    let fx = fixture("output");
    let path = fx.dir.join("result.tsv");
    let out = run(&[
        "mine",
        "--data",
        fx.data.to_str().unwrap(),
        "--hierarchy",
        fx.hier.to_str().unwrap(),
        "--pattern",
        "[c|d]([A^|B=^]+)e",
        "--sigma",
        "2",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    assert!(written.contains("A A A B\t2"));
}

#[test]
fn usage_errors_exit_one() {
    let fx = fixture("usage");
    // σ = 0 is rejected by argument validation.
    let out = run(&[
        "mine",
        "--data",
        fx.data.to_str().unwrap(),
        "--pattern",
        "(.)",
        "--sigma",
        "0",
    ]);
    assert_eq!(out.status.code(), Some(1));
    // Missing a required flag.
    let out = run(&["mine", "--data", fx.data.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    // Unknown subcommand.
    let out = run(&["obliterate"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn data_errors_exit_two() {
    let fx = fixture("errors");
    // Unknown item in the pattern.
    let out = run(&[
        "mine",
        "--data",
        fx.data.to_str().unwrap(),
        "--hierarchy",
        fx.hier.to_str().unwrap(),
        "--pattern",
        "(nosuchitem)",
        "--sigma",
        "1",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("nosuchitem"));
    // Pattern syntax error.
    let out = run(&[
        "mine",
        "--data",
        fx.data.to_str().unwrap(),
        "--pattern",
        "((A)",
        "--sigma",
        "1",
    ]);
    assert_eq!(out.status.code(), Some(2));
    // Missing file.
    let out = run(&["stats", "--data", "/nonexistent/path.dat"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn help_lists_all_subcommands() {
    let out = run(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout);
    for sub in ["mine", "match", "compile", "stats"] {
        assert!(text.contains(sub), "{sub} missing from help");
    }
}
