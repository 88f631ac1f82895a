use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use tempfile::TempDir;

fn run(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_shallowcut"))
        .arg("--out-dir")
        .arg(dir)
        .args(args)
        .current_dir(dir)
        .output()
        .expect("spawn shallowcut")
}

fn ok(dir: &Path, args: &[&str]) -> Output {
    let out = run(dir, args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    out
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("json on stdout")
}

#[test]
fn gen_path_five() {
    let dir = TempDir::new().unwrap();
    ok(
        dir.path(),
        &["gen", "--family", "path", "--n", "5", "-o", "p.txt"],
    );
    let text = fs::read_to_string(dir.path().join("p.txt")).unwrap();
    assert_eq!(text, "5 4 1\n0 1 1\n1 2 1\n2 3 1\n3 4 1\n");
}

#[test]
fn gen_is_deterministic() {
    let dir = TempDir::new().unwrap();
    let args = |name| {
        [
            "--seed",
            "7",
            "gen",
            "--family",
            "random-gnm",
            "--n",
            "128",
            "--m",
            "512",
            "--max-len",
            "32",
            "-o",
            name,
        ]
    };
    ok(dir.path(), &args("a.txt"));
    ok(dir.path(), &args("b.txt"));
    let a = fs::read(dir.path().join("a.txt")).unwrap();
    assert_eq!(a, fs::read(dir.path().join("b.txt")).unwrap());
    assert!(String::from_utf8(a).unwrap().starts_with("128 512 32\n"));
}

#[test]
fn gen_scc_chain() {
    let dir = TempDir::new().unwrap();
    let out = ok(
        dir.path(),
        &[
            "--json",
            "gen",
            "--family",
            "scc-chain",
            "--blocks",
            "27",
            "--block",
            "3",
            "-o",
            "c.txt",
        ],
    );
    let v = json(&out);
    assert_eq!(v["n"], 81);
    assert_eq!(v["m"], 27 * 3 + 26);
}

#[test]
fn ldd_summary_and_verify() {
    let dir = TempDir::new().unwrap();
    ok(
        dir.path(),
        &["gen", "--family", "cycle", "--n", "64", "-o", "c.txt"],
    );
    let out = ok(
        dir.path(),
        &["ldd", "c.txt", "--d", "16", "--verify", "--trials", "5"],
    );
    let stdout = String::from_utf8(out.stdout).unwrap();
    let first = stdout.lines().next().unwrap();
    assert!(
        first.starts_with("components=")
            && first.contains(" removed=")
            && first.contains(" max_weak_diam=")
    );
    assert!(dir.path().join("removal.json").exists());
    let out = ok(
        dir.path(),
        &[
            "verify", "--kind", "ldd", "c.txt", "--ldd", "ldd.json", "--d", "16",
        ],
    );
    assert_eq!(json(&out)["passed"], true);
}

#[test]
fn dag_reduce_on_scc_chain() {
    let dir = TempDir::new().unwrap();
    ok(
        dir.path(),
        &[
            "gen",
            "--family",
            "scc-chain",
            "--blocks",
            "27",
            "--block",
            "3",
            "-o",
            "c.txt",
        ],
    );
    ok(
        dir.path(),
        &[
            "dag-reduce",
            "c.txt",
            "--lambda",
            "3",
            "--h",
            "1",
            "--eps",
            "1/2",
        ],
    );
    let trace: serde_json::Value =
        serde_json::from_slice(&fs::read(dir.path().join("dag-trace.json")).unwrap()).unwrap();
    assert_eq!(trace["iterations"].as_array().unwrap().len(), 4);
}

#[test]
fn reduce_shortcut_on_path() {
    let dir = TempDir::new().unwrap();
    ok(
        dir.path(),
        &["gen", "--family", "path", "--n", "1024", "-o", "p.txt"],
    );
    ok(
        dir.path(),
        &[
            "--seed", "11", "reduce", "p.txt", "--mode", "shortcut", "--lambda", "1024", "--h",
            "16", "--reps", "1",
        ],
    );
    let v: serde_json::Value =
        serde_json::from_slice(&fs::read(dir.path().join("verification.json")).unwrap()).unwrap();
    assert_eq!(v["passed"], true);
    assert!(dir.path().join("shortcut.txt").exists());
    assert!(dir.path().join("manifest.json").exists());
}

#[test]
fn reduce_hopset_on_gnm() {
    let dir = TempDir::new().unwrap();
    ok(
        dir.path(),
        &[
            "--seed",
            "3",
            "gen",
            "--family",
            "random-gnm",
            "--n",
            "128",
            "--m",
            "512",
            "--max-len",
            "32",
            "-o",
            "g.txt",
        ],
    );
    let out = ok(
        dir.path(),
        &[
            "--json", "reduce", "g.txt", "--lambda", "64", "--h", "4", "--reps", "2",
        ],
    );
    let v = json(&out);
    assert_eq!(v["clamp_count"], 0, "{v}");
    let report: serde_json::Value =
        serde_json::from_slice(&fs::read(dir.path().join("report.json")).unwrap()).unwrap();
    assert_eq!(report["clamp_count"], 0);
}

#[test]
fn dropped_hopset_fails_verification() {
    let dir = TempDir::new().unwrap();
    ok(
        dir.path(),
        &["gen", "--family", "path", "--n", "128", "-o", "p.txt"],
    );
    let out = run(
        dir.path(),
        &[
            "reduce",
            "p.txt",
            "--lambda",
            "32",
            "--h",
            "2",
            "--reps",
            "2",
            "--drop-percent",
            "50",
        ],
    );
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn verify_exit_codes() {
    let dir = TempDir::new().unwrap();
    let d = dir.path();
    ok(d, &["gen", "--family", "path", "--n", "10", "-o", "p.txt"]);
    fs::write(d.join("empty.txt"), "").unwrap();
    let out = run(
        d,
        &[
            "verify",
            "--kind",
            "shortcut",
            "p.txt",
            "--edges",
            "empty.txt",
            "--h",
            "3",
        ],
    );
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    assert_eq!(v["passed"], false);
    assert!(v["violation_count"].as_u64().unwrap() > 0);

    fs::write(d.join("good.txt"), "0 9 1\n").unwrap();
    let out = run(
        d,
        &[
            "verify", "--kind", "shortcut", "p.txt", "--edges", "good.txt", "--h", "9",
        ],
    );
    assert_eq!(out.status.code(), Some(0));

    let out = run(
        d,
        &[
            "verify",
            "--kind",
            "hopset",
            "p.txt",
            "--edges",
            "empty.txt",
            "--h",
            "9",
        ],
    );
    assert_eq!(out.status.code(), Some(0));
    let out = run(
        d,
        &[
            "verify",
            "--kind",
            "hopset",
            "p.txt",
            "--edges",
            "empty.txt",
            "--h",
            "8",
        ],
    );
    assert_eq!(out.status.code(), Some(1));
    fs::write(d.join("short.txt"), "0 9 3\n").unwrap();
    let out = run(
        d,
        &[
            "verify",
            "--kind",
            "hopset",
            "p.txt",
            "--edges",
            "short.txt",
            "--h",
            "1",
        ],
    );
    assert_eq!(out.status.code(), Some(1));

    let out = run(d, &["verify", "--kind", "clustered", "p.txt", "--d", "0"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn malformed_input_is_a_usage_error() {
    let dir = TempDir::new().unwrap();
    let d = dir.path();
    fs::write(d.join("bad.txt"), "3 five 1\n0 1 1\n").unwrap();
    for args in [
        &["ldd", "bad.txt", "--d", "4"][..],
        &["reduce", "bad.txt", "--lambda", "8", "--h", "2"][..],
        &["verify", "--kind", "clustered", "bad.txt", "--d", "1"][..],
    ] {
        let out = run(d, args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
    }
    fs::write(d.join("count.txt"), "3 2 1\n0 1 1\n").unwrap();
    assert_eq!(
        run(d, &["ldd", "count.txt", "--d", "4"]).status.code(),
        Some(2)
    );
    assert_eq!(
        run(d, &["ldd", "missing.txt", "--d", "4"]).status.code(),
        Some(2)
    );
}

#[test]
fn bench_single_repeat_has_one_row() {
    let dir = TempDir::new().unwrap();
    ok(
        dir.path(),
        &[
            "bench", "--family", "path", "--sizes", "64", "--lambda", "16", "--h", "2", "--reps",
            "1",
        ],
    );
    let mut r = csv::Reader::from_path(dir.path().join("bench.csv")).unwrap();
    assert!(r.headers().unwrap().iter().any(|h| h == "oracle_calls"));
    assert_eq!(r.records().count(), 1);
}

#[test]
fn bench_sweep_adds_median_rows() {
    let dir = TempDir::new().unwrap();
    ok(
        dir.path(),
        &[
            "bench", "--family", "path", "--sizes", "32,64", "--repeat", "3", "--lambda", "16",
            "--h", "2", "--reps", "1", "--verify",
        ],
    );
    let mut r = csv::Reader::from_path(dir.path().join("bench.csv")).unwrap();
    let runs: Vec<String> = r.records().map(|rec| rec.unwrap()[2].to_string()).collect();
    assert_eq!(runs, ["0", "1", "2", "median", "0", "1", "2", "median"]);
}

#[test]
fn reduce_outputs_are_byte_identical() {
    let a = TempDir::new().unwrap();
    let b = TempDir::new().unwrap();
    for dir in [a.path(), b.path()] {
        ok(
            dir,
            &[
                "--seed",
                "5",
                "gen",
                "--family",
                "random-gnm",
                "--n",
                "60",
                "--m",
                "200",
                "--max-len",
                "8",
                "-o",
                "g.txt",
            ],
        );
        ok(
            dir,
            &[
                "--seed", "5", "reduce", "g.txt", "--lambda", "16", "--h", "3", "--reps", "2",
            ],
        );
    }
    for name in ["g.txt", "hopset.txt", "report.json", "verification.json"] {
        assert_eq!(
            fs::read(a.path().join(name)).unwrap(),
            fs::read(b.path().join(name)).unwrap(),
            "{name}"
        );
    }
}
