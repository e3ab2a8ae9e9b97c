use std::process::{Command, Output};

use loopmu::{CyclicWord, Word};
use loopmu_cli::census::CensusLine;
use loopmu_cli::report::{BracketReport, ClassText};
use loopmu_cli::verify::VerifyReport;
use loopmu_cli::Report;

const EXAMPLE: &str = "a3.a1.A2.a3.a1.A2.a3.a1.A2.A2.A2";

fn loopmu(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_loopmu"))
        .args(args)
        .output()
        .unwrap()
}

fn json<T: serde::de::DeserializeOwned>(out: &Output) -> T {
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn compute_worked_example() {
    let r: Report = json(&loopmu(&[
        "compute",
        "--surface",
        "genus:2,boundary:1",
        "--word",
        EXAMPLE,
    ]));
    assert_eq!((r.m, r.t, r.exponent), (2, 4, 1));
    assert!(r.delta.is_empty());
    assert!(!r.is_power_of_simple);
    assert_eq!(r.mu.len(), 4);
    assert!(r.type2_raw.is_none());
}

#[test]
fn compute_a_generator() {
    let r: Report = json(&loopmu(&[
        "compute",
        "--surface",
        "genus:2,boundary:1",
        "--word",
        "a1",
    ]));
    assert_eq!(r.m, 0);
    assert!(r.mu.is_empty());
    assert!(r.is_power_of_simple);
}

#[test]
fn report_round_trips() {
    let out = loopmu(&[
        "compute",
        "--surface",
        "spheres:3",
        "--word",
        "a1.a1.a2.A1.A1",
        "--include-type2",
    ]);
    let r: Report = json(&out);
    let again: Report = serde_json::from_str(&serde_json::to_string(&r).unwrap()).unwrap();
    assert_eq!(r, again);
    assert!(!r.warnings.is_empty());
}

#[test]
fn same_invocation_same_bytes() {
    let args = [
        "compute",
        "--surface",
        "genus:2,boundary:1",
        "--word",
        EXAMPLE,
        "--format",
        "text",
    ];
    assert_eq!(loopmu(&args).stdout, loopmu(&args).stdout);
    let v = [
        "verify", "--suite", "coskew", "--trials", "30", "--seed", "9",
    ];
    assert_eq!(loopmu(&v).stdout, loopmu(&v).stdout);
}

#[test]
fn exit_codes() {
    let trivial = loopmu(&[
        "compute",
        "--surface",
        "genus:1,boundary:1",
        "--word",
        "a1.A1",
    ]);
    assert_eq!(trivial.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&trivial.stderr).contains("trivial class"));
    let bad_word = loopmu(&["compute", "--surface", "genus:1,boundary:1", "--word", "b7"]);
    assert_eq!(bad_word.status.code(), Some(1));
    let bad_surface = loopmu(&["compute", "--surface", "genus:0,boundary:1", "--word", "a1"]);
    assert_eq!(bad_surface.status.code(), Some(1));
    let rank = loopmu(&["compute", "--surface", "spheres:3", "--word", "a3"]);
    assert_eq!(rank.status.code(), Some(1));
    assert_eq!(
        loopmu(&["verify", "--suite", "nope"]).status.code(),
        Some(1)
    );
    assert_eq!(loopmu(&["--help"]).status.code(), Some(0));
}

#[test]
fn bracket_examples() {
    let r: BracketReport = json(&loopmu(&[
        "bracket",
        "--surface",
        "spheres:3",
        "--words",
        "a1",
        "a2",
    ]));
    assert!(r.bracket.is_empty());
    let same: BracketReport = json(&loopmu(&[
        "bracket",
        "--surface",
        "genus:1,boundary:1",
        "--words",
        "a1",
        "a1",
    ]));
    assert!(same.bracket.is_empty());
    let ab: BracketReport = json(&loopmu(&[
        "bracket",
        "--surface",
        "genus:1,boundary:1",
        "--words",
        "a1.a2.a2",
        "A1.a2",
    ]));
    let ba: BracketReport = json(&loopmu(&[
        "bracket",
        "--surface",
        "genus:1,boundary:1",
        "--words",
        "A1.a2",
        "a1.a2.a2",
    ]));
    assert!(!ab.bracket.is_empty());
    let negated: Vec<ClassText> = ba
        .bracket
        .iter()
        .map(|c| ClassText {
            class: c.class.clone(),
            coefficient: -c.coefficient,
        })
        .collect();
    assert_eq!(ab.bracket, negated);
}

#[test]
fn census_from_file_flags_the_worked_example() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("in.txt");
    std::fs::write(&input, format!("# one class\n{EXAMPLE}\n")).unwrap();
    let out = dir.path().join("out.jsonl");
    let o = loopmu(&[
        "census",
        "--surface",
        "genus:2,boundary:1",
        "--input",
        input.to_str().unwrap(),
        "--out",
        out.to_str().unwrap(),
    ]);
    let summary: serde_json::Value = json(&o);
    assert_eq!(summary["delta_zero_mu_nonzero"], 1);
    let text = std::fs::read_to_string(&out).unwrap();
    let line: CensusLine = serde_json::from_str(text.trim()).unwrap();
    assert!(line.delta_zero_mu_nonzero);
    assert_eq!(line.m, 2);
}

#[test]
fn census_of_short_words() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("out.jsonl");
    let o = loopmu(&[
        "census",
        "--surface",
        "genus:1,boundary:1",
        "--max-len",
        "2",
        "--out",
        out.to_str().unwrap(),
    ]);
    let summary: serde_json::Value = json(&o);
    assert_eq!(summary["classes"], 12);
    let lines: Vec<CensusLine> = std::fs::read_to_string(&out)
        .unwrap()
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(lines.len(), 12);
    assert!(lines.iter().all(|l| l.t % 2 == 0));
    let classes: Vec<CyclicWord> = lines
        .iter()
        .map(|l| CyclicWord::of(&l.word.parse::<Word>().unwrap()))
        .collect();
    assert!(classes.windows(2).all(|p| p[0] < p[1]));
}

#[test]
fn census_of_empty_file() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("empty.txt");
    std::fs::write(&input, "").unwrap();
    let out = dir.path().join("out.jsonl");
    let o = loopmu(&[
        "census",
        "--surface",
        "spheres:3",
        "--input",
        input.to_str().unwrap(),
        "--out",
        out.to_str().unwrap(),
    ]);
    let summary: serde_json::Value = json(&o);
    assert_eq!(summary["classes"], 0);
    assert_eq!(std::fs::read(&out).unwrap().len(), 0);
}

#[test]
fn census_unwritable_output() {
    let o = loopmu(&[
        "census",
        "--surface",
        "spheres:3",
        "--max-len",
        "1",
        "--out",
        "/nonexistent/dir/out.jsonl",
    ]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn verify_suites_report_passes() {
    for suite in ["coskew", "cojacobi", "factorization", "conjugacy-oracle"] {
        let r: VerifyReport = json(&loopmu(&[
            "verify", "--suite", suite, "--trials", "25", "--seed", "3",
        ]));
        assert!(r.all_passed(), "{}", r.to_text());
        assert_eq!(r.trials, 25);
    }
}
