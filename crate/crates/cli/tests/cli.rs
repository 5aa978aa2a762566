use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn hashfam(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hashfam"))
        .args(args)
        .current_dir(dir)
        .env_remove("HASHFAM_TABLES")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn table1_dhf_verifies_and_fails_as_perfect() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    assert_eq!(
        hashfam(&["construct", "table1-dhf", "-o", "table1-dhf.hf"], d)
            .status
            .code(),
        Some(0)
    );

    let ok = hashfam(
        &[
            "verify",
            "table1-dhf.hf",
            "--mode",
            "dhhf",
            "-t",
            "4",
            "-p",
            "2",
        ],
        d,
    );
    assert_eq!(ok.status.code(), Some(0));
    assert!(stdout(&ok).starts_with("PASS"));

    let bad = hashfam(&["verify", "table1-dhf.hf", "--mode", "phf", "-t", "4"], d);
    assert_eq!(bad.status.code(), Some(1));
    let line = stdout(&bad);
    assert_eq!(line.lines().count(), 1);
    let cols = line
        .split("columns=[")
        .nth(1)
        .unwrap()
        .split(']')
        .next()
        .unwrap();
    assert_eq!(cols.split(',').count(), 4);
}

#[test]
fn dn2_four_rows_on_188_columns() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let c = hashfam(
        &[
            "construct",
            "dn2",
            "-n",
            "4",
            "--kappa",
            "40",
            "--w",
            "5,8",
            "-o",
            "out.hf",
        ],
        d,
    );
    assert_eq!(
        c.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&c.stderr)
    );
    let text = fs::read_to_string(d.join("out.hf")).unwrap();
    assert_eq!(text.lines().next(), Some("HF 4 188"));

    let v = hashfam(
        &[
            "verify",
            "out.hf",
            "--mode",
            "sample",
            "-t",
            "6",
            "-p",
            "6",
            "--samples",
            "20000",
            "--seed",
            "42",
        ],
        d,
    );
    assert_eq!(v.status.code(), Some(0));
}

#[test]
fn output_is_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let a = hashfam(
        &[
            "construct",
            "greedy-ca",
            "-t",
            "2",
            "-k",
            "6",
            "-v",
            "3",
            "--seed",
            "5",
        ],
        d,
    );
    let b = hashfam(
        &[
            "construct",
            "greedy-ca",
            "-t",
            "2",
            "-k",
            "6",
            "-v",
            "3",
            "--seed",
            "5",
        ],
        d,
    );
    assert_eq!(a.stdout, b.stdout);
    let dhf = hashfam(&["construct", "table1-dhf"], d);
    fs::write(d.join("dhf.hf"), &dhf.stdout).unwrap();
    let args = [
        "verify",
        "dhf.hf",
        "--mode",
        "sample",
        "-t",
        "4",
        "-p",
        "4",
        "--samples",
        "5000",
        "--seed",
        "3",
    ];
    let x = hashfam(&args, d);
    let y = hashfam(&[&["--threads", "1"], &args[..]].concat(), d);
    assert_eq!(x.status.code(), Some(1));
    assert_eq!(x.stdout, y.stdout);
}

#[test]
fn usage_and_io_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    assert_eq!(
        hashfam(&["verify", "missing.hf", "--mode", "phf", "-t", "2"], d)
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        hashfam(&["construct", "nonsense"], d).status.code(),
        Some(2)
    );
    fs::write(d.join("bad.hf"), "HF 2 2\n0 1\n").unwrap();
    assert_eq!(
        hashfam(&["verify", "bad.hf", "--mode", "phf", "-t", "2"], d)
            .status
            .code(),
        Some(2)
    );
    fs::write(d.join("ok.hf"), "HF 1 2\n0 1\n").unwrap();
    // sampling without a seed
    assert_eq!(
        hashfam(&["verify", "ok.hf", "--mode", "sample", "-t", "2"], d)
            .status
            .code(),
        Some(2)
    );
    assert_eq!(hashfam(&["--help"], d).status.code(), Some(0));
}

#[test]
fn covering_mode() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    fs::write(d.join("good.cov"), "COV 3 3 2\n0 1\n1 2\n0 2\n").unwrap();
    fs::write(d.join("bad.cov"), "COV 2 3 2\n0 1\n1 2\n").unwrap();
    assert_eq!(
        hashfam(&["verify", "good.cov", "--mode", "covering"], d)
            .status
            .code(),
        Some(0)
    );
    let bad = hashfam(&["verify", "bad.cov", "--mode", "covering"], d);
    assert_eq!(bad.status.code(), Some(1));
    assert!(stdout(&bad).contains("[0, 2]"));
}

#[test]
fn compose_and_verify_covering_array() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    assert_eq!(
        hashfam(&["construct", "table1-phf", "-o", "phf.hf"], d)
            .status
            .code(),
        Some(0)
    );
    assert_eq!(
        hashfam(
            &[
                "construct",
                "greedy-ca",
                "-t",
                "4",
                "-k",
                "4",
                "-v",
                "2",
                "--seed",
                "1",
                "-o",
                "ca.txt"
            ],
            d
        )
        .status
        .code(),
        Some(0)
    );
    let c = hashfam(
        &[
            "compose-ca",
            "phf",
            "--family",
            "phf.hf",
            "--ca",
            "ca.txt",
            "-o",
            "big.txt",
            "--verify",
        ],
        d,
    );
    assert_eq!(
        c.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&c.stderr)
    );
    assert_eq!(
        hashfam(&["verify", "big.txt", "--mode", "ca"], d)
            .status
            .code(),
        Some(0)
    );
}

#[test]
fn bounds_flags_an_impossible_claim() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    // one row, strength 2: two columns share a symbol
    fs::write(d.join("a.hf"), "HF 1 3\nW 3\n# strength 2 parts 2\n0 0 1\n").unwrap();
    let b = hashfam(&["bounds", "a.hf"], d);
    assert_eq!(b.status.code(), Some(1));
    assert!(stdout(&b).contains("singleton-cover"));
}

#[test]
fn tables_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let store = ["--store", "t.txt"];
    let imp = hashfam(&[&["tables"], &store[..], &["import-fixtures"]].concat(), d);
    assert!(stdout(&imp).contains("157"));
    let diff = hashfam(
        &[&["tables"], &store[..], &["diff", "--with-dn2-sweep"]].concat(),
        d,
    );
    assert_eq!(diff.status.code(), Some(0));
    assert!(stdout(&diff).contains("matched=7 below=0 above=0 not-attempted=147 excluded=3"));

    hashfam(
        &["construct", "dn2", "-n", "4", "--kappa", "40", "-o", "f.hf"],
        d,
    );
    let rec = hashfam(
        &[
            &["tables"],
            &store[..],
            &["record", "f.hf", "--method", "dn2"],
        ]
        .concat(),
        d,
    );
    assert!(stdout(&rec).starts_with("not an improvement"));

    let export = hashfam(&[&["tables"], &store[..], &["export"]].concat(), d);
    assert_eq!(
        stdout(&export),
        fs::read_to_string(d.join("t.txt")).unwrap()
    );
    assert_eq!(stdout(&export).lines().count(), 157);
}
