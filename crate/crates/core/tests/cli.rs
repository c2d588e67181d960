use std::process::Command;

use serde_json::Value;

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn ascpat(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_ascpat"))
        .args(args)
        .output()
        .expect("binary runs");
    Run {
        code: out.status.code().expect("exit code"),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

/// Second column of CSV output, header dropped.
fn csv_column(out: &str) -> String {
    out.lines()
        .skip(1)
        .map(|l| l.split(',').nth(1).unwrap())
        .collect::<Vec<_>>()
        .join(",")
}

fn json(out: &str) -> Value {
    assert_eq!(out.lines().count(), 1, "one record per run");
    serde_json::from_str(out).unwrap()
}

#[test]
fn count_series() {
    let r = ascpat(&["count", "--pattern", "101", "--n", "1..10", "--format", "csv"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert_eq!(csv_column(&r.stdout), "1,2,5,14,42,132,429,1430,4862,16796");

    let r = ascpat(&["count", "--pattern", "01", "--n", "1..5", "--format", "csv"]);
    assert_eq!(csv_column(&r.stdout), "1,1,1,1,1");

    let r = ascpat(&["count", "--pattern", "101", "--modified", "--n", "1..8", "--format", "csv"]);
    assert_eq!(csv_column(&r.stdout), "1,2,5,15,52,203,877,4140");
}

#[test]
fn count_with_filters_and_sets() {
    // 101 and 0101 avoiders coincide, so the second pattern filters nothing
    let r = ascpat(&["count", "--pattern", "101", "--pattern", "0101", "--n", "1..8", "--format", "csv"]);
    assert_eq!(csv_column(&r.stdout), "1,2,5,14,42,132,429,1430");
    let r = ascpat(&["count", "--restricted", "--n", "1..6", "--format", "csv"]);
    assert_eq!(csv_column(&r.stdout), "1,2,5,14,42,132");
    let r = ascpat(&["count", "--perm", "--pattern", "201", "--n", "4", "--format", "csv"]);
    assert_eq!(csv_column(&r.stdout), "14");
    let r = ascpat(&["count", "--n", "1..5", "--format", "csv"]);
    assert_eq!(csv_column(&r.stdout), "1,2,5,15,53");
}

#[test]
fn jsonl_record() {
    let r = ascpat(&["count", "--pattern", "000", "--n", "3..5", "--format", "jsonl"]);
    let v = json(&r.stdout);
    assert_eq!(v["version"], "1");
    assert_eq!(v["command"], "count");
    assert_eq!(v["params"]["set"], "avoiders:000");
    assert_eq!(v["result"]["complete"], true);
    let counts: Vec<u64> = v["result"]["counts"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["count"].as_u64().unwrap())
        .collect();
    assert_eq!(counts, [4, 10, 27]);
}

#[test]
fn output_is_identical_across_runs_and_threads() {
    let args = |t: &'static str| ["count", "--pattern", "210", "--n", "1..10", "--format", "jsonl", "--threads", t];
    let a = ascpat(&args("1"));
    let b = ascpat(&args("1"));
    let c = ascpat(&args("3"));
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.stdout, c.stdout);
    let w1 = ascpat(&["wilf", "--max-len", "3", "--nmax", "7", "--format", "csv"]);
    let w2 = ascpat(&["wilf", "--max-len", "3", "--nmax", "7", "--format", "csv", "--threads", "2"]);
    assert_eq!(w1.stdout, w2.stdout);
}

#[test]
fn bijections() {
    let out = |args: &[&str]| {
        let r = ascpat(args);
        assert_eq!(r.code, 0, "{}", r.stderr);
        json(&r.stdout)["result"]["output"].as_str().unwrap().to_string()
    };
    let j = ["--format", "jsonl"];
    let cases: &[(&[&str], &str)] = &[
        (&["--name", "seq101-to-perm312", "--input", "01023200"], "45378621"),
        (&["--name", "seq101-to-perm312", "--inverse", "--input", "45378621"], "01023200"),
        (&["--name", "phi", "--input", "011213232"], "641325879"),
        (&["--name", "phi-inverse", "--input", "641325879"], "011213232"),
        (&["--name", "seq102-to-ternary", "--input", "01222345567676655630"], "2100121022210020122"),
        (&["--name", "ternary-to-seq102", "--input", "2100121022210020122"], "01222345567676655630"),
        (&["--name", "modify", "--input", "010221212"], "010441312"),
        (&["--name", "unmodify", "--input", "010441312"], "010221212"),
        (&["--name", "rgf-encode", "--input", "124-36-5"], "001021"),
        (&["--name", "rgf-decode", "--input", "001021"], "124-36-5"),
        (&["--name", "perm231-to-ncpartition", "--input", "641325879"], "146-23-5-78-9"),
        (&["--name", "restricted-to-021", "--input", "0,1,2,3,2,3,4,4,3,4,6,5"], "012303440460"),
    ];
    for (args, expected) in cases {
        let mut all = vec!["bijection"];
        all.extend_from_slice(args);
        all.extend_from_slice(&j);
        assert_eq!(out(&all), *expected, "{args:?}");
    }
    let r = ascpat(&["bijection", "--name", "phi", "--input", "011213232", "--format", "jsonl"]);
    let v = json(&r.stdout);
    assert_eq!(v["result"]["statistics"]["asc(input)"], 4);
    assert_eq!(v["result"]["statistics"]["des(output)"], 4);
}

#[test]
fn table_matches_reference() {
    let r = ascpat(&["table", "--nmax", "10"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let rows: Vec<&str> = r.stdout.lines().skip(1).collect();
    assert_eq!(rows.len(), 19);
    assert!(rows.iter().all(|l| l.contains("match n<=10")), "{}", r.stdout);
}

#[test]
fn conjectures_report() {
    let r = ascpat(&["conjectures", "--id", "0123", "--nmax", "10", "--format", "jsonl"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let v = json(&r.stdout);
    let run = &v["result"]["runs"][0];
    assert_eq!(run["holds"], true);
    let counts: Vec<u64> = run["verdicts"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x["observed"]["A_0123"].as_u64().unwrap())
        .collect();
    assert_eq!(counts, [1, 2, 5, 14, 42, 131, 417, 1341, 4334, 14041]);

    let r = ascpat(&["conjectures", "--id", "0021-count", "--nmax", "9", "--format", "csv"]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.lines().skip(1).all(|l| l.contains(",holds,")));
}

#[test]
fn list_and_dist() {
    let r = ascpat(&["list", "--pattern", "012", "--n", "4", "--format", "csv"]);
    assert_eq!(
        r.stdout,
        "sequence\n0000\n0001\n0010\n0011\n0100\n0101\n0110\n0111\n"
    );
    let r = ascpat(&["dist", "--pattern", "001", "--n", "4", "--stats", "asc", "--format", "csv"]);
    assert_eq!(r.stdout, "asc,count\n0,1\n1,3\n2,3\n3,1\n");
    let r = ascpat(&["dist", "--pattern", "01", "--n", "6", "--stats", "asc,zeros", "--format", "csv"]);
    assert_eq!(r.stdout, "asc,zeros,count\n0,6,1\n");
}

#[test]
fn exit_codes() {
    let r = ascpat(&["count", "--pattern", "13", "--n", "3"]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("01"), "{}", r.stderr);

    let r = ascpat(&["count", "--pattern", "1a", "--n", "3"]);
    assert_eq!(r.code, 2);

    let r = ascpat(&["count", "--pattern", "101"]);
    assert_eq!(r.code, 2, "missing --n is a usage error");

    let r = ascpat(&["conjectures", "--id", "nope"]);
    assert_eq!(r.code, 2);

    let r = ascpat(&["bijection", "--name", "phi", "--input", "0120"]);
    assert_eq!(r.code, 1, "not restricted");
    let r = ascpat(&["bijection", "--name", "seq101-to-perm312", "--input", "0101"]);
    assert_eq!(r.code, 1);

    let r = ascpat(&["count", "--pattern", "101", "--n", "40"]);
    assert_eq!(r.code, 3);
    assert!(r.stderr.contains("--max-n"));
}

#[test]
fn spent_budget_reports_partial_counts() {
    let r = ascpat(&["count", "--pattern", "000", "--n", "1..12", "--budget-seconds", "0", "--format", "jsonl"]);
    assert_eq!(r.code, 3);
    assert_eq!(json(&r.stdout)["result"]["complete"], false);
    assert!(r.stderr.contains("partial"));
}
