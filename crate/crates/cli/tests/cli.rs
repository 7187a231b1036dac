use std::collections::BTreeSet;
use std::io::Write;
use std::process::{Command, Output, Stdio};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_strahler"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn records(text: &str) -> (Vec<String>, Vec<Vec<String>>) {
    let mut rdr = csv::ReaderBuilder::new().flexible(false).from_reader(text.as_bytes());
    let header = rdr.headers().unwrap().iter().map(String::from).collect();
    let rows = rdr
        .records()
        .map(|r| r.unwrap().iter().map(String::from).collect())
        .collect();
    (header, rows)
}

#[test]
fn count_worked_example() {
    assert_eq!(stdout(&["count", "7,3,1"]), "20\n");
    assert_eq!(stdout(&["count", "30,5,2,1"]), "19554505850880\n");
    assert_eq!(stdout(&["count", "30,5,2,1", "--pretty"]), "19,554,505,850,880\n");
}

#[test]
fn exit_codes() {
    // inadmissible sequence is a domain error
    assert_eq!(run(&["count", "7,4,1"]).status.code(), Some(1));
    assert_eq!(run(&["count", "3,2"]).status.code(), Some(1));
    // malformed input is a format error
    assert_eq!(run(&["count", "7,x,1"]).status.code(), Some(2));
    assert_eq!(run(&["rank", "1"]).status.code(), Some(2));
    assert_eq!(run(&["unrank", "7,3,1"]).status.code(), Some(2));
    // out-of-range index and domain limits
    assert_eq!(run(&["unrank", "7,3,1@20"]).status.code(), Some(1));
    assert_eq!(run(&["curve", "1", "4", "0.5"]).status.code(), Some(1));
    assert_eq!(run(&["entropy", "7"]).status.code(), Some(1));
    // unknown subcommand
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn table1_cells() {
    let (header, rows) = records(&stdout(&["table1"]));
    assert_eq!(header.len(), 5);
    assert_eq!(header[1], "N2=2;N3=1");
    assert_eq!(rows.len(), 10);
    assert_eq!(rows[3], ["7", "80", "20", "", ""]);
    assert_eq!(
        rows[9],
        ["30", "25367150592", "687026995200", "1580162088960", "19554505850880"]
    );
}

#[test]
fn verify_passes_and_fault_is_detected() {
    let (header, rows) = records(&stdout(&["verify", "9"]));
    let status = header.iter().position(|h| h == "status").unwrap();
    assert_eq!(rows.len(), 9);
    assert!(rows.iter().all(|r| r[status] == "PASS"));

    let out = run(&["verify", "5", "--inject-fault"]);
    assert_eq!(out.status.code(), Some(1));
    let (_, rows) = records(std::str::from_utf8(&out.stdout).unwrap());
    assert!(rows.iter().any(|r| r[status] == "FAIL"));
}

#[test]
fn curve_grid() {
    let (header, rows) = records(&stdout(&["curve", "2", "10", "0.5"]));
    assert_eq!(header, ["R", "entropy_rate"]);
    assert_eq!(rows.len(), 17);
    let value = |i: usize| rows[i][1].parse::<f64>().unwrap();
    assert_eq!(value(0), 0.0);
    assert!((value(4) - 1.0).abs() < 1e-12);
    let best = (0..rows.len()).max_by(|&a, &b| value(a).total_cmp(&value(b))).unwrap();
    assert_eq!(rows[best][0].parse::<f64>().unwrap(), 4.0);
}

#[test]
fn tkr_rows() {
    assert_eq!(stdout(&["tkr", "2", "3", "1.5", "--count"]), "7\n");
    let (header, rows) = records(&stdout(&["tkr", "5", "3", "1.25", "--sweep"]));
    assert_eq!(rows.len(), 5);
    let err = header.iter().position(|h| h == "abs_error").unwrap();
    let errors: Vec<f64> = rows[2..].iter().map(|r| r[err].parse().unwrap()).collect();
    assert!(errors.windows(2).all(|w| w[1] < w[0]), "{errors:?}");
}

#[test]
fn sequences_sum_to_catalan() {
    let (_, rows) = records(&stdout(&["sequences", "8"]));
    let total: u64 = rows.iter().map(|r| r[1].parse::<u64>().unwrap()).sum();
    assert_eq!(total, 429);
}

#[test]
fn unrank_range_and_rank_agree() {
    let trees = stdout(&["unrank", "7,3,1@0..19"]);
    let trees: Vec<&str> = trees.lines().collect();
    assert_eq!(trees.len(), 20);
    assert_eq!(trees.iter().collect::<BTreeSet<_>>().len(), 20);
    let mut args = vec!["rank"];
    args.extend(&trees);
    let ranks = stdout(&args);
    let expected: Vec<String> = (0..20).map(|i| format!("7,3,1@{i}")).collect();
    assert_eq!(ranks.lines().collect::<Vec<_>>(), expected);
}

#[test]
fn sampling_is_deterministic() {
    let a = run(&["sample", "21,8,3,1", "--count", "50", "--seed", "9"]);
    let b = run(&["sample", "21,8,3,1", "--count", "50", "--seed", "9"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let c = run(&["sample", "21,8,3,1", "--count", "50", "--seed", "10"]);
    assert_ne!(a.stdout, c.stdout);

    let text = stdout(&["sample", "--leaves", "64", "--count", "20", "--seed", "1"]);
    for line in text.lines() {
        assert_eq!(line.len(), 127);
        let rank = stdout(&["rank", line]);
        assert!(rank.starts_with("64,"), "{rank}");
    }
}

#[test]
fn encode_decode_files() {
    let dir = tempfile::tempdir().unwrap();
    let bits = dir.path().join("tree.txt");
    let msg = dir.path().join("tree.bin");
    std::fs::write(&bits, "1101000\n").unwrap();

    let out = run(&["encode", bits.to_str().unwrap(), "--out", msg.to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(std::fs::read(&msg).unwrap(), [0x02, 0x04, 0x01, 0x80]);
    assert_eq!(stdout(&["decode", msg.to_str().unwrap()]), "1101000\n");

    std::fs::write(&msg, [0x02, 0x04, 0x01, 0x81]).unwrap();
    assert_eq!(run(&["decode", msg.to_str().unwrap()]).status.code(), Some(2));
    std::fs::write(&msg, [0x02, 0x04]).unwrap();
    assert_eq!(run(&["decode", msg.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn encode_from_stdin() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_strahler"))
        .args(["encode", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(b"11100100100\n").unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    assert_eq!(out.stdout[0], 0x03);
}

#[test]
fn entropy_row() {
    let (header, rows) = records(&stdout(&["entropy", "16"]));
    assert_eq!(header, ["N", "entropy_bits", "bits_per_vertex", "residual"]);
    let bits: f64 = rows[0][1].parse().unwrap();
    // log2 of Catalan(7) = 429
    assert!((bits - 429f64.log2()).abs() < 1e-9);
}

#[test]
fn outputs_are_byte_identical_across_runs() {
    for args in [&["table1"][..], &["curve", "2", "6", "0.25"], &["verify", "6"], &["tkr", "4", "4", "1.25", "--sweep"]] {
        assert_eq!(run(args).stdout, run(args).stdout, "{args:?}");
    }
}
