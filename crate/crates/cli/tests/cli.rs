use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_colmahon"))
        .args(args)
        .env_remove("MAHONIAN_CAP")
        .output()
        .unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn column(csv: &str, name: &str) -> Vec<String> {
    let mut lines = csv.lines();
    let header: Vec<&str> = lines.next().unwrap().split(',').collect();
    let i = header.iter().position(|h| *h == name).unwrap();
    lines
        .map(|l| l.split(',').nth(i).unwrap().to_string())
        .collect()
}

#[test]
fn stat_examples() {
    let out = run(&[
        "stat",
        "--perm",
        "3[1] 2 1[2] 4[1]",
        "--c",
        "3",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["inv_c"], "16");

    let out = run(&["stat", "--perm", "1 2 3", "--c", "1", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    for key in ["inv", "maj", "col", "cross_term", "inv_c", "tilde_inv_c"] {
        assert_eq!(v[key], "0", "{key}");
    }

    let out = run(&["stat", "--perm", "3[1] 2[1] 1[1]", "--c", "2"]);
    assert_eq!(column(&stdout(&out), "tilde_inv_c"), ["9"]);
}

#[test]
fn stat_rejects_bad_windows() {
    for perm in ["1 1", "1 x", "1[2] 2", "0 1"] {
        let out = run(&["stat", "--perm", perm, "--c", "2"]);
        assert_eq!(out.status.code(), Some(2), "{perm}");
        assert!(out.stdout.is_empty());
    }
}

#[test]
fn seq_examples() {
    let out = run(&["seq", "--name", "t", "--c", "2", "--n-max", "7"]);
    assert_eq!(
        column(&stdout(&out), "value"),
        ["1", "12", "149", "2048", "31345", "534524", "10091893"]
    );
    let out = run(&["seq", "--name", "I", "--c", "1", "--n-max", "1"]);
    assert_eq!(column(&stdout(&out), "value"), ["0"]);
    let out = run(&["seq", "--name", "iinv", "--c", "3", "--n-max", "3"]);
    assert_eq!(column(&stdout(&out), "value"), ["0", "9", "45"]);
    let out = run(&[
        "seq", "--name", "r", "--c", "3", "--n-min", "0", "--n-max", "2",
    ]);
    assert_eq!(column(&stdout(&out), "value"), ["1", "1", "4"]);
}

#[test]
fn seq_methods_agree() {
    let reference = stdout(&run(&[
        "seq", "--name", "ic", "--c", "2", "--n-min", "0", "--n-max", "5",
    ]));
    for method in [
        "recurrence",
        "summation",
        "partition_conv",
        "composition_split",
        "lattice_path",
    ] {
        let out = run(&[
            "seq", "--name", "ic", "--c", "2", "--n-min", "0", "--n-max", "5", "--method", method,
        ]);
        assert_eq!(stdout(&out), reference, "{method}");
    }
    let out = run(&[
        "seq",
        "--name",
        "ic",
        "--c",
        "3",
        "--n-min",
        "4",
        "--n-max",
        "4",
        "--k",
        "2",
        "--method",
        "knuth_netto",
    ]);
    assert_eq!(column(&stdout(&out), "value"), ["10"]);
}

#[test]
fn seq_errors() {
    let out = run(&[
        "seq",
        "--name",
        "ic",
        "--c",
        "2",
        "--n-min",
        "4",
        "--n-max",
        "4",
        "--k",
        "5",
        "--method",
        "knuth_netto",
    ]);
    assert_eq!(out.status.code(), Some(3));
    assert_eq!(
        run(&["seq", "--name", "zz", "--c", "1", "--n-max", "2"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["seq", "--name", "t", "--c", "0", "--n-max", "2"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["seq", "--name", "t", "--c", "2", "--n-min", "3", "--n-max", "2"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["seq", "--name", "t", "--c", "2", "--n-max", "2", "--k", "1"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["seq", "--name", "ic", "--c", "2", "--n-max", "2", "--method", "nope"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn dist_examples() {
    let out = run(&[
        "dist",
        "--c",
        "2",
        "--n",
        "3",
        "--class",
        "all",
        "--statistic",
        "inv_c",
        "--check",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        column(&stdout(&out), "count"),
        ["1", "3", "5", "7", "8", "8", "7", "5", "3", "1"]
    );

    let out = run(&["dist", "--c", "1", "--n", "0"]);
    assert_eq!(stdout(&out), "k,count\n0,1\n");

    let out = run(&[
        "dist",
        "--c",
        "2",
        "--n",
        "2",
        "--class",
        "derangements",
        "--statistic",
        "inv_c",
        "--check",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let moment: u64 = column(&text, "k")
        .iter()
        .zip(column(&text, "count"))
        .map(|(k, m)| k.parse::<u64>().unwrap() * m.parse::<u64>().unwrap())
        .sum();
    assert_eq!(moment, 12);
}

#[test]
fn dist_is_thread_independent_and_formats_agree() {
    let one = run(&[
        "dist",
        "--c",
        "3",
        "--n",
        "5",
        "--class",
        "involutions",
        "--threads",
        "1",
    ]);
    let many = run(&[
        "dist",
        "--c",
        "3",
        "--n",
        "5",
        "--class",
        "involutions",
        "--threads",
        "7",
    ]);
    assert_eq!(one.stdout, many.stdout);

    let csv = stdout(&one);
    let json: serde_json::Value = serde_json::from_slice(
        &run(&[
            "dist",
            "--c",
            "3",
            "--n",
            "5",
            "--class",
            "involutions",
            "--format",
            "json",
        ])
        .stdout,
    )
    .unwrap();
    let from_json: Vec<String> = json
        .as_array()
        .unwrap()
        .iter()
        .map(|row| format!("{},{}", row["k"], row["count"].as_str().unwrap()))
        .collect();
    let from_csv: Vec<&str> = csv.lines().skip(1).collect();
    assert_eq!(from_json, from_csv);
}

#[test]
fn dist_cap() {
    let out = run(&["dist", "--c", "2", "--n", "3", "--cap", "47"]);
    assert_eq!(out.status.code(), Some(3));
    let out = Command::new(env!("CARGO_BIN_EXE_colmahon"))
        .args(["dist", "--c", "2", "--n", "3"])
        .env("MAHONIAN_CAP", "10")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    let out = Command::new(env!("CARGO_BIN_EXE_colmahon"))
        .args(["dist", "--c", "2", "--n", "3"])
        .env("MAHONIAN_CAP", "lots")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn tables() {
    for (which, fixture_cells) in [("2", 63), ("4", 72)] {
        let out = run(&["table", "--which", which]);
        assert_eq!(out.status.code(), Some(0));
        let text = stdout(&out);
        let sections = column(&text, "section");
        assert_eq!(
            sections
                .iter()
                .filter(|s| *s == "fixture_vs_formula")
                .count(),
            fixture_cells
        );
        assert!(column(&text, "status").iter().all(|s| s == "match"));
    }
    let out = run(&["table", "--which", "1"]);
    assert_eq!(out.status.code(), Some(0));

    let out = run(&["table", "--which", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let notes = String::from_utf8(out.stderr.clone()).unwrap();
    assert!(notes.contains("rows are shifted"), "{notes}");
    let text = stdout(&out);
    let rows: Vec<(String, String)> = column(&text, "section")
        .into_iter()
        .zip(column(&text, "status"))
        .collect();
    assert!(rows
        .iter()
        .any(|(s, st)| s == "fixture_vs_formula" && st == "mismatch"));
    assert!(rows
        .iter()
        .filter(|(s, _)| s == "formula_vs_oracle")
        .all(|(_, st)| st == "match"));

    assert_eq!(run(&["table", "--which", "5"]).status.code(), Some(2));
}

#[test]
fn verify_small_budgets() {
    for budget in ["10000", "0"] {
        let out = run(&["verify", "--budget", budget]);
        assert_eq!(out.status.code(), Some(0), "{budget}");
        let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
        for entry in v.as_array().unwrap() {
            assert_eq!(entry["status"], "pass", "{entry}");
            assert!(
                entry["identity"].is_string()
                    && entry["params"].is_object()
                    && entry["detail"].is_string()
            );
        }
    }
    let out = run(&["verify", "--budget", "0"]);
    assert!(stdout(&out).contains("\"coverage\""));
}

#[test]
fn output_is_deterministic() {
    let args = ["table", "--which", "3", "--format", "json"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
    let args = ["verify", "--budget", "5000", "--format", "csv"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}

#[test]
fn usage() {
    assert_eq!(run(&[]).status.code(), Some(2));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
    assert_eq!(run(&["stat", "--c", "2"]).status.code(), Some(2));
}
