use std::fs;
use std::process::{Command, Output};

fn epg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_epg"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

#[test]
fn analyze_monogenic() {
    let out = epg(&["analyze", "--gen", "monogenic:2,3"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("complete: true"));
    assert!(text.contains("delta: 3"));
    assert!(text.contains("alpha: 1 "));
    assert!(text.contains("pi: {1, 3, 4}"));
    assert!(text.contains("exponent: 3"));
}

#[test]
fn analyze_klein_four_and_left_zero() {
    let v4 = stdout(&epg(&["analyze", "--gen", "elementary_abelian_2:2"]));
    assert!(v4.contains("shape: star K_{1,3}"));
    assert!(v4.contains("tree: true"));
    let lz = stdout(&epg(&["analyze", "--gen", "left_zero:3"]));
    assert!(lz.contains("shape: null graph"));
    assert!(lz.contains("components: 3 "));
}

#[test]
fn analyze_reports_associativity_witness() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.txt");
    fs::write(&path, "2\n1 0\n0 0\n").unwrap();
    let out = epg(&["analyze", path.to_str().unwrap()]);
    assert_eq!(code(&out), 1);
    let err = String::from_utf8(out.stderr).unwrap();
    let nums: Vec<usize> = err
        .split(|c: char| !c.is_ascii_digit())
        .filter(|s| !s.is_empty())
        .map(|s| s.parse().unwrap())
        .collect();
    let (i, j, k) = (nums[0], nums[1], nums[2]);
    let t = [[1, 0], [0, 0]];
    assert_ne!(t[t[i][j]][k], t[i][t[j][k]]);
}

#[test]
fn analyze_reads_generated_files() {
    let dir = tempfile::tempdir().unwrap();
    for (json, name) in [(false, "m.txt"), (true, "m.json")] {
        let mut args = vec!["gen", "monogenic:2,3"];
        if json {
            args.push("--json");
        }
        let path = dir.path().join(name);
        fs::write(&path, stdout(&epg(&args))).unwrap();
        let out = epg(&["analyze", path.to_str().unwrap()]);
        assert_eq!(code(&out), 0);
        assert!(stdout(&out).contains("  a^2: index 1, period 3"));
    }
}

#[test]
fn enumerate_counts() {
    assert_eq!(
        stdout(&epg(&["enumerate", "3", "--dedup", "iso-anti"])),
        "18\n"
    );
    assert_eq!(stdout(&epg(&["enumerate", "1"])), "1\n");
    assert_eq!(
        stdout(&epg(&["enumerate", "2", "--dedup", "labeled"])),
        "8\n"
    );
    assert_eq!(
        stdout(&epg(&["enumerate", "4", "--dedup", "iso", "--jobs", "2"])),
        "188\n"
    );
    assert_eq!(code(&epg(&["enumerate", "7"])), 3);
    assert_eq!(code(&epg(&["enumerate", "3", "--dedup", "bogus"])), 1);
}

#[test]
fn enumerate_emits_tables() {
    let dir = tempfile::tempdir().unwrap();
    let out = epg(&["enumerate", "3", "--emit", dir.path().to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let files: Vec<_> = fs::read_dir(dir.path()).unwrap().collect();
    assert_eq!(files.len(), 18);
    for f in files {
        let path = f.unwrap().path();
        assert_eq!(code(&epg(&["analyze", path.to_str().unwrap()])), 0);
    }
}

#[test]
fn audit_runs_clean() {
    let out = epg(&["audit", "3"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().filter(|l| l.starts_with("PASS")).collect();
    assert_eq!(lines.len(), 16);
    assert!(lines.iter().all(|l| l.contains("corpus=18 ")));
    assert!(text.ends_with("16 checks, 0 counterexamples\n"));
    assert_eq!(code(&epg(&["audit", "1"])), 0);
}

#[test]
fn audit_selected_check_with_records() {
    let dir = tempfile::tempdir().unwrap();
    let records = dir.path().join("records.jsonl");
    let out = epg(&[
        "audit",
        "4",
        "--checks",
        "T-planarity",
        "--records",
        records.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.starts_with("PASS T-planarity"));
    assert!(text.contains("corpus=126 "));
    assert_eq!(fs::read_to_string(records).unwrap(), "");
    assert_eq!(code(&epg(&["audit", "3", "--checks", "nope"])), 1);
    assert_eq!(code(&epg(&["audit", "6"])), 3);
}

#[test]
fn export_dot() {
    let null = stdout(&epg(&["export-dot", "--gen", "left_zero:2"]));
    assert_eq!(
        null,
        "graph epg {\n  0 [label=\"0\"];\n  1 [label=\"1\"];\n}\n"
    );
    let k4 = stdout(&epg(&[
        "export-dot",
        "--gen",
        "monogenic:2,3",
        "--graph",
        "epg",
    ]));
    assert_eq!(k4.lines().filter(|l| l.contains("[label=")).count(), 4);
    assert_eq!(k4.lines().filter(|l| l.contains(" -- ")).count(), 6);
    let ex = stdout(&epg(&["export-dot", "--gen", "example_315"]));
    for (u, v) in [
        (0, 1),
        (0, 2),
        (0, 3),
        (1, 4),
        (1, 5),
        (2, 4),
        (2, 5),
        (3, 4),
        (3, 5),
    ] {
        assert!(ex.contains(&format!("  {u} -- {v};\n")));
    }
    assert_eq!(ex, stdout(&epg(&["export-dot", "--gen", "example_315"])));
    let power = stdout(&epg(&[
        "export-dot",
        "--gen",
        "left_zero:2",
        "--graph",
        "power",
    ]));
    assert!(power.starts_with("graph power {"));
}

#[test]
fn input_errors() {
    assert_eq!(code(&epg(&["analyze"])), 1);
    assert_eq!(code(&epg(&["analyze", "--gen", "monogenic:0,3"])), 1);
    assert_eq!(code(&epg(&["analyze", "/nonexistent/table.txt"])), 1);
    assert_eq!(code(&epg(&["frobnicate"])), 1);
    assert_eq!(code(&epg(&["--help"])), 0);
}
