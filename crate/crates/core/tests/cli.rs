use std::path::Path;
use std::process::{Command, Output};

use lyndon::format;
use tempfile::TempDir;

fn lyndon(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lyndon"))
        .args(args)
        .env("LYNDON_THREADS", "1")
        .output()
        .expect("binary runs")
}

fn ok(args: &[&str]) -> String {
    let out = lyndon(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn code(args: &[&str]) -> i32 {
    lyndon(args).status.code().unwrap()
}

fn path(dir: &TempDir, name: &str) -> String {
    dir.path().join(name).to_str().unwrap().to_string()
}

fn write(dir: &TempDir, name: &str, bytes: &[u8]) -> String {
    let p = path(dir, name);
    std::fs::write(&p, bytes).unwrap();
    p
}

#[test]
fn build_plain_northamerica() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "na.txt", b"northamerica");
    let out = path(&dir, "na.lyar");
    ok(&["build", &input, "-o", &out, "--mode", "plain"]);
    let lambda = format::decode_lyar(&std::fs::read(&out).unwrap()).unwrap();
    assert_eq!(lambda.to_vec(), vec![4, 3, 2, 1, 1, 6, 1, 3, 1, 1, 1, 1]);
}

#[test]
fn build_succinct_single_symbol() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "a.txt", b"a");
    let out = path(&dir, "a.lbps");
    ok(&["build", &input, "-o", &out, "--mode", "succinct"]);
    let bytes = std::fs::read(&out).unwrap();
    assert_eq!(&bytes[..5], b"LBPS\x01");
    assert_eq!(&bytes[13..], &[0b1100_0000]);
}

#[test]
fn query_northamerica() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "na.txt", b"northamerica");
    let bps = path(&dir, "na.lbps");
    ok(&["build", &input, "-o", &bps, "--mode", "succinct"]);
    assert_eq!(ok(&["query", &bps, "lambda", "6"]), "6\n");
    assert_eq!(ok(&["query", &bps, "pss", "11"]), "6\n");
    assert_eq!(ok(&["query", &bps, "nss", "12"]), "13\n");
    assert_eq!(ok(&["query", &bps, "parent", "9"]), "8\n");
    assert_eq!(ok(&["query", &bps, "subtree", "0"]), "13\n");
    assert_eq!(code(&["query", &bps, "lambda", "13"]), 2);
    assert_eq!(code(&["query", &bps, "lambda", "0"]), 2);
}

#[test]
fn malformed_bps_is_integrity_failure() {
    let dir = TempDir::new().unwrap();
    let bad = write(&dir, "bad.lbps", b"LBPS\x01\x01\x00\x00\x00\x00\x00\x00\x00\xF0");
    let out = lyndon(&["query", &bad, "lambda", "1"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("integrity"));
    let garbage = write(&dir, "garbage", b"hello");
    assert_eq!(code(&["query", &garbage, "lambda", "1"]), 1);
}

#[test]
fn io_failures_exit_3() {
    let dir = TempDir::new().unwrap();
    let missing = path(&dir, "missing.txt");
    let out = path(&dir, "x.lyar");
    assert_eq!(code(&["build", &missing, "-o", &out]), 3);
    let input = write(&dir, "t.txt", b"abc");
    let unwritable = path(&dir, "no/such/dir/x.lyar");
    assert_eq!(code(&["build", &input, "-o", &unwritable]), 3);
}

#[test]
fn verify_and_stats() {
    let dir = TempDir::new().unwrap();
    let input = path(&dir, "r.txt");
    ok(&["gen", "random", "-n", "20000", "--sigma", "3", "--seed", "5", "-o", &input]);
    for mode in ["plain", "succinct"] {
        let out = path(&dir, &format!("r.{mode}"));
        let stdout = ok(&["build", &input, "-o", &out, "--mode", mode, "--verify", "--stats"]);
        assert!(stdout.contains("verified 20000 positions"));
        assert!(stdout.contains("closes_written: 20001"));
        assert!(stdout.contains("char_comparisons: "));
    }
    let big = path(&dir, "big.txt");
    ok(&["gen", "fibonacci", "-n", "100001", "-o", &big]);
    let out = lyndon(&["build", &big, "-o", &path(&dir, "big.lyar"), "--verify"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("refusing to verify"));
}

#[test]
fn gen_examples_and_reproducibility() {
    assert_eq!(ok(&["gen", "fibonacci", "-n", "13"]), "abaababaabaab");
    assert_eq!(ok(&["gen", "increasing", "-n", "3", "--sigma", "3"]), "abc");
    assert_eq!(ok(&["gen", "periodic", "-n", "7", "--sigma", "3"]), "abcabca");
    assert_eq!(ok(&["gen", "random", "-n", "0"]), "");
    let a = ok(&["gen", "random", "-n", "1000", "--sigma", "26", "--seed", "9"]);
    let b = ok(&["gen", "random", "-n", "1000", "--sigma", "26", "--seed", "9"]);
    let c = ok(&["gen", "random", "-n", "1000", "--sigma", "26", "--seed", "10"]);
    assert_eq!(a, b);
    assert_ne!(a, c);
    assert_eq!(code(&["gen", "random", "-n", "5", "--sigma", "0"]), 2);
    assert_eq!(code(&["gen", "random", "-n", "5", "--sigma", "300"]), 2);
    assert_eq!(code(&["gen", "nonsense", "-n", "5"]), 2);
}

#[test]
fn outputs_are_byte_stable() {
    let dir = TempDir::new().unwrap();
    let input = path(&dir, "t.txt");
    ok(&["gen", "thue-morse", "-n", "5000", "-o", &input]);
    for mode in ["plain", "succinct"] {
        let (x, y) = (path(&dir, "x"), path(&dir, "y"));
        ok(&["build", &input, "-o", &x, "--mode", mode]);
        ok(&["build", &input, "-o", &y, "--mode", mode]);
        assert_eq!(std::fs::read(&x).unwrap(), std::fs::read(&y).unwrap());
    }
}

#[test]
fn build_then_query_matches_oracle() {
    let dir = TempDir::new().unwrap();
    let text = lyndon::gen::random(300, 3, 4);
    let input = write(&dir, "t.txt", &text);
    let bps = path(&dir, "t.lbps");
    ok(&["build", &input, "-o", &bps, "--mode", "succinct"]);
    let lam = lyndon::oracle::lyndon_array_bruteforce(&text);
    let pss = lyndon::oracle::pss_bruteforce(&text);
    let nss = lyndon::oracle::nss_bruteforce(&text);
    for i in (1..=300).step_by(37) {
        let idx = i.to_string();
        assert_eq!(ok(&["query", &bps, "lambda", &idx]).trim(), lam.get(i).to_string());
        assert_eq!(ok(&["query", &bps, "pss", &idx]).trim(), pss.get(i).to_string());
        assert_eq!(ok(&["query", &bps, "nss", &idx]).trim(), nss.get(i).to_string());
    }
}

fn csv_rows(csv: &str) -> Vec<Vec<String>> {
    csv.lines()
        .skip_while(|l| !l.starts_with("input,algo"))
        .skip(1)
        .map(|l| l.split(',').map(str::to_string).collect())
        .collect()
}

#[test]
fn bench_plain_beats_naive() {
    let dir = TempDir::new().unwrap();
    let input = path(&dir, "r.txt");
    ok(&["gen", "random", "-n", "1000000", "--sigma", "26", "--seed", "1", "-o", &input]);
    let csv = path(&dir, "report.csv");
    let table = ok(&["bench", &input, "--algos", "plain,naive", "--repetitions", "5", "--csv", &csv]);
    assert!(table.contains("MiB/s"));
    let rows = csv_rows(&std::fs::read_to_string(Path::new(&csv)).unwrap());
    assert_eq!(rows.len(), 2);
    let mibs = |algo: &str| -> f64 {
        let r = rows.iter().find(|r| r[1] == algo).unwrap();
        assert_eq!(r[2], "1000000");
        r[4].parse().unwrap()
    };
    assert!(mibs("plain") > mibs("naive"));
    let extra: f64 = rows.iter().find(|r| r[1] == "plain").unwrap()[5].parse().unwrap();
    assert!(extra < 0.01, "plain extra bytes per symbol {extra}");
}

#[test]
fn bench_edge_cases() {
    let out = ok(&["bench", "--csv", "-"]);
    assert_eq!(out, "input,algo,bytes,median_seconds,mibs,extra_bytes_per_symbol\n");
    assert_eq!(code(&["bench", "--repetitions", "2"]), 2);
    let dir = TempDir::new().unwrap();
    let big = path(&dir, "big.txt");
    ok(&["gen", "periodic", "-n", "1000001", "--sigma", "2", "-o", &big]);
    let out = lyndon(&["bench", &big, "--algos", "naive,plain", "--repetitions", "1", "--csv", "-"]);
    assert!(out.status.success());
    let stdout = String::from_utf8(out.stdout).unwrap();
    let rows = csv_rows(&stdout);
    assert_eq!(rows.len(), 1);
    assert_eq!(rows[0][1], "plain");
    assert!(String::from_utf8_lossy(&out.stderr).contains("skipping naive"));
}
