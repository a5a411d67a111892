use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use tempfile::TempDir;

const EXAMPLE1: &str =
    "PDA v1\nK=4 F=6 Z=3 S=4\n* * 0 1\n* 0 * 2\n* 1 2 *\n0 * * 3\n1 * 3 *\n2 3 * *\n";

const BASE_6_4_2_4: &str =
    "PDA v1\nK=6 F=4 Z=2 S=4\n* * * 0 1 2\n* 0 1 * * 3\n0 * 2 * 3 *\n1 2 * 3 * *\n";

fn pdakit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pdakit"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn path(dir: &TempDir, name: &str) -> String {
    dir.path().join(name).to_str().unwrap().to_string()
}

fn write(dir: &TempDir, name: &str, text: &str) -> String {
    let p = path(dir, name);
    fs::write(&p, text).unwrap();
    p
}

#[test]
fn construct_mn_writes_example() {
    let dir = TempDir::new().unwrap();
    let out = path(&dir, "p.pda");
    let o = pdakit(&["construct", "mn", "--k", "4", "--t", "2", "--out", &out]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "(4,6,3,4) M/N=1/2 R=2/3 VALID\n");
    assert_eq!(fs::read_to_string(&out).unwrap(), EXAMPLE1);
}

#[test]
fn construct_recursive_on_six_user_base() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "p346.pda", BASE_6_4_2_4);
    let out = path(&dir, "q.pda");
    let o = pdakit(&[
        "construct",
        "recursive",
        "--in",
        &input,
        "--k2",
        "4",
        "--out",
        &out,
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("(10,12,6,20) M/N=1/2 R=5/3 VALID"));
    let text = fs::read_to_string(&out).unwrap();
    assert!(text.starts_with("PDA v1\nK=10 F=12 Z=6 S=20\n* * * 12 1 2 * * * 0\n"));
}

#[test]
fn construct_dual() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "p.pda", EXAMPLE1);
    let out = path(&dir, "d.pda");
    let o = pdakit(&["construct", "dual", "--in", &input, "--out", &out]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "(4,4,1,6) M/N=1/4 R=3/2 VALID\n");
    assert_eq!(
        fs::read_to_string(&out).unwrap(),
        "PDA v1\nK=4 F=4 Z=1 S=6\n3 1 0 *\n4 2 * 0\n5 * 2 1\n* 5 4 3\n"
    );
}

#[test]
fn dual_of_all_star_array_is_a_precondition_error() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "one.pda", "PDA v1\nK=1 F=1 Z=1 S=0\n*\n");
    let out = path(&dir, "d.pda");
    let o = pdakit(&["construct", "dual", "--in", &input, "--out", &out]);
    assert_eq!(o.status.code(), Some(1));
    assert!(!Path::new(&out).exists());
}

#[test]
fn construction_errors_exit_one() {
    let dir = TempDir::new().unwrap();
    let out = path(&dir, "p.pda");
    let o = pdakit(&["construct", "mn", "--k", "4", "--t", "4", "--out", &out]);
    assert_eq!(o.status.code(), Some(1));
    let input = write(&dir, "p.pda", EXAMPLE1);
    let o = pdakit(&[
        "construct",
        "recursive",
        "--in",
        &input,
        "--k2",
        "5",
        "--out",
        &out,
    ]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn validate_reports_conditions() {
    let dir = TempDir::new().unwrap();
    let good = write(&dir, "p.pda", EXAMPLE1);
    let o = pdakit(&["validate", "--in", &good]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "(4,6,3,4) M/N=1/2 R=2/3\nC1 OK\nC2 OK\nC3 OK\n");

    let bad = write(
        &dir,
        "corrupted.pda",
        &EXAMPLE1.replace("* * 0 1", "* * 3 1"),
    );
    let o = pdakit(&["validate", "--in", &bad]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).ends_with("C1 OK\nC2 OK\nC3 FAIL at (0,2),(3,3)\n"));
}

#[test]
fn invalid_input_to_construction_exits_two_with_witness() {
    let dir = TempDir::new().unwrap();
    let bad = write(&dir, "bad.pda", &EXAMPLE1.replace("* * 0 1", "* * 3 1"));
    let out = path(&dir, "q.pda");
    let o = pdakit(&[
        "construct",
        "recursive",
        "--in",
        &bad,
        "--k2",
        "2",
        "--out",
        &out,
    ]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("C3 FAIL at (0,2),(3,3)"));
}

#[test]
fn io_and_parse_errors_exit_three() {
    let dir = TempDir::new().unwrap();
    let o = pdakit(&["validate", "--in", &path(&dir, "missing.pda")]);
    assert_eq!(o.status.code(), Some(3));
    let junk = write(&dir, "junk.pda", "PDA v2\n");
    let o = pdakit(&["validate", "--in", &junk]);
    assert_eq!(o.status.code(), Some(3));
    let ragged = write(&dir, "ragged.pda", "PDA v1\nK=2 F=1 Z=0 S=1\n0\n");
    let o = pdakit(&["simulate", "--in", &ragged, "--files", "1", "--len", "4"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn simulate_example() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "p.pda", EXAMPLE1);
    let args = [
        "simulate",
        "--in",
        &input,
        "--files",
        "6",
        "--len",
        "600",
        "--demands",
        "0,1,2,3",
        "--seed",
        "7",
    ];
    let o = pdakit(&args);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "user0 OK\nuser1 OK\nuser2 OK\nuser3 OK\nrate=4/6 bytes=400\n"
    );
    assert_eq!(stdout(&pdakit(&args)), stdout(&o));

    let mut json = args.to_vec();
    json.push("--json");
    let o = pdakit(&json);
    let lines: Vec<String> = stdout(&o).lines().map(str::to_string).collect();
    assert_eq!(lines.len(), 4);
    assert_eq!(
        lines[3],
        r#"{"user":3,"ok":true,"rate_num":4,"rate_den":6,"bytes_sent":400}"#
    );
}

#[test]
fn simulate_default_demands_and_bad_input() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "p.pda", EXAMPLE1);
    let o = pdakit(&["simulate", "--in", &input, "--files", "2", "--len", "60"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).ends_with("rate=4/6 bytes=40\n"));

    let o = pdakit(&[
        "simulate",
        "--in",
        &input,
        "--files",
        "2",
        "--len",
        "60",
        "--demands",
        "0,1,2,0",
    ]);
    assert_eq!(o.status.code(), Some(1));
    let o = pdakit(&["simulate", "--in", &input, "--files", "0", "--len", "60"]);
    assert_eq!(o.status.code(), Some(1));

    let bad = write(&dir, "bad.pda", &EXAMPLE1.replace("* * 0 1", "* * 3 1"));
    let o = pdakit(&["simulate", "--in", &bad, "--files", "4", "--len", "60"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn table_outputs() {
    let o = pdakit(&["table", "--id", "mn_vs_ours", "--format", "md"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 10);
    assert!(text.ends_with("| 48 | 32 | 16 | 1.4118 | 0.9600 | 1202160780 | 32247603683100 |\n"));

    let o = pdakit(&["table", "--id", "table2"]);
    let text = stdout(&o);
    assert!(text
        .lines()
        .nth(1)
        .unwrap()
        .starts_with("18,12,6,2,1,9,3/4,0.450,"));
    assert_eq!(text.lines().count(), 12);

    let o = pdakit(&["table", "--id", "table3", "--format", "csv"]);
    assert!(stdout(&o)
        .lines()
        .nth(1)
        .unwrap()
        .starts_with("18,12,6,9,6,2,3/4,0.600,0.450,"));

    let dir = TempDir::new().unwrap();
    let out = path(&dir, "t.csv");
    let o = pdakit(&["table", "--id", "table2", "--row", "12,6,9", "--out", &out]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).is_empty());
    assert_eq!(fs::read_to_string(&out).unwrap().lines().count(), 2);

    let o = pdakit(&["table", "--id", "table3", "--row", "12,6,9"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn usage_errors() {
    assert_eq!(pdakit(&["table", "--id", "table9"]).status.code(), Some(1));
    assert_eq!(pdakit(&["validate"]).status.code(), Some(1));
    assert_eq!(pdakit(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(pdakit(&["--help"]).status.code(), Some(0));
    assert_eq!(pdakit(&["--version"]).status.code(), Some(0));
}
