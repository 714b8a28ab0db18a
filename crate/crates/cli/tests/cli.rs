use std::path::Path;
use std::process::{Command, Output};

use serde_json::{json, Value};

fn nichols(cache: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nichols"))
        .args(args)
        .env("NICHOLS_CACHE_DIR", cache)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json_of(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("valid JSON")
}

#[test]
fn dim_cartan_a1xa1() {
    let dir = tempfile::tempdir().unwrap();
    let o = nichols(dir.path(), &["dim", "-a", "1", "-b", "zeta(2)", "-e", "1", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        json_of(&o),
        json!({
            "point": {"a": "1", "b": "-1", "e": "1"},
            "ranks": [1, 2, 1, 0],
            "status": {"kind": "terminated", "degree": 3},
            "total": 4
        })
    );
}

#[test]
fn dim_n_squared() {
    let dir = tempfile::tempdir().unwrap();
    let o = nichols(dir.path(), &["dim", "-a", "1", "-b", "zeta(4)", "-e", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("status  terminated at degree 7"), "{text}");
    assert!(text.ends_with("total   16\n"), "{text}");
}

#[test]
fn dim_cap_exceeded_claims_no_total() {
    let dir = tempfile::tempdir().unwrap();
    let o = nichols(dir.path(), &["--format", "json", "dim", "-a", "1", "-b", "2", "-e", "1", "--cap", "8"]);
    assert_eq!(o.status.code(), Some(4));
    let v = json_of(&o);
    assert_eq!(v["status"], json!({"kind": "cap_exceeded", "cap": 8}));
    assert!(v.get("total").is_none());
    assert_eq!(v["ranks"].as_array().unwrap().len(), 9);
}

#[test]
fn dim_cache_hits_match_cold_runs() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["dim", "-a", "zeta(3)", "-b", "-1", "-e", "1", "--format", "csv"];
    let cold = nichols(dir.path(), &args);
    assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 1);
    let warm = nichols(dir.path(), &args);
    let uncached = nichols(dir.path(), &[&args[..], &["--no-cache"]].concat());
    assert_eq!(cold.stdout, warm.stdout);
    assert_eq!(cold.stdout, uncached.stdout);
    assert_eq!(cold.status.code(), Some(0));
    let text = stdout(&cold);
    assert!(text.starts_with("a,b,e,degree,rank,status,total\n"), "{text}");
    assert!(text.ends_with("zeta(3),-1,1,7,0,terminated,12\n"), "{text}");
}

/// Equal points written differently share one cache entry.
#[test]
fn cache_keys_are_canonical() {
    let dir = tempfile::tempdir().unwrap();
    let a = nichols(dir.path(), &["dim", "-a", "2/2", "-b", "zeta(4)^2", "-e", "zeta(3)^3"]);
    let b = nichols(dir.path(), &["dim", "-a", "1", "-b", "-1", "-e", "1"]);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 1);
}

#[test]
fn corrupt_cache_entries_are_recomputed() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["dim", "-a", "1", "-b", "-1", "-e", "1"];
    let cold = nichols(dir.path(), &args);
    for entry in std::fs::read_dir(dir.path()).unwrap() {
        std::fs::write(entry.unwrap().path(), "{").unwrap();
    }
    let again = nichols(dir.path(), &args);
    assert_eq!(cold.stdout, again.stdout);
}

#[test]
fn dim_rejects_bad_input() {
    let dir = tempfile::tempdir().unwrap();
    for args in [
        &["dim", "-a", "0", "-b", "-1", "-e", "1"][..],
        &["dim", "-a", "1", "-b", "zeta(0)", "-e", "1"],
        &["dim", "-a", "1", "-b", "x", "-e", "1"],
        &["dim", "-a", "1", "-b", "-1", "-e", "1", "--cap", "1"],
        &["dim", "-a", "1", "-b", "-1"],
        &["frobnicate"],
    ] {
        let o = nichols(dir.path(), args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(o.stdout.is_empty());
        assert!(!o.stderr.is_empty());
    }
}

#[test]
fn etable_rows() {
    let dir = tempfile::tempdir().unwrap();
    let o = nichols(dir.path(), &["etable", "-n", "7", "-k", "4", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("n,k,s,count\n"));
    assert!(text.lines().any(|l| l == "7,4,12,1"), "{text}");
    assert!(text.lines().skip(1).all(|l| l.split(',').nth(1).unwrap().parse::<u32>().unwrap() <= 4));

    let o = nichols(dir.path(), &["etable", "-n", "2", "--format", "json"]);
    assert_eq!(json_of(&o), json!([{"n": 2, "k": 0, "s": 0, "count": 1}]));

    let o = nichols(dir.path(), &["etable", "-n", "8", "-k", "5", "--format", "csv"]);
    assert!(stdout(&o).lines().any(|l| l == "8,5,13,32"));
}

#[test]
fn etable_beyond_cap_exits_4() {
    let dir = tempfile::tempdir().unwrap();
    let o = nichols(dir.path(), &["etable", "-n", "14"]);
    assert_eq!(o.status.code(), Some(4));
}

#[test]
fn ftilde_with_substitution() {
    let dir = tempfile::tempdir().unwrap();
    let o = nichols(dir.path(), &["ftilde", "1111", "1111", "--set", "e=1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "1 + 2*a*b + a*b^2\n");

    let o = nichols(dir.path(), &["ftilde", "11", "22", "--format", "json"]);
    assert_eq!(json_of(&o), json!({"x": "11", "y": "22", "set": {}, "value": "a"}));

    let o = nichols(dir.path(), &["ftilde", "12", "12", "--set", "a=1", "--set", "b=zeta(4)", "--set", "e=1"]);
    assert_eq!(stdout(&o), "1 + zeta(4)\n");
}

#[test]
fn ftilde_rejects_bad_input() {
    let dir = tempfile::tempdir().unwrap();
    for args in [
        &["ftilde", "113", "111"][..],
        &["ftilde", "11", "111"],
        &["ftilde", "11", "11", "--set", "e=1", "--set", "e=2"],
        &["ftilde", "11", "11", "--set", "b=zeta(3)"],
        &["ftilde", "11", "11", "--set", "q=1"],
    ] {
        let o = nichols(dir.path(), args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn orbits_partition() {
    let dir = tempfile::tempdir().unwrap();
    let o = nichols(dir.path(), &["orbits", "-n", "4", "--format", "json"]);
    let sizes: Vec<u64> = json_of(&o)
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v["size"].as_u64().unwrap())
        .collect();
    assert_eq!(sizes, [6, 4, 4, 1, 1]);
    let csv = stdout(&nichols(dir.path(), &["orbits", "-n", "4", "--format", "csv"]));
    assert!(csv.starts_with("size,representative,label\n"));
    assert_eq!(csv.lines().count(), 6);
}

#[test]
fn verify_small_range_passes() {
    let dir = tempfile::tempdir().unwrap();
    let o = nichols(dir.path(), &["verify", "--nmax", "5", "--cap", "6"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("0 failed"));
}

/// The missing `E_{5,13}^7` exception surfaces as a verification failure.
#[test]
fn verify_reports_failures_with_exit_3() {
    let dir = tempfile::tempdir().unwrap();
    let o = nichols(dir.path(), &["verify", "--nmax", "7", "--cap", "6", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(3));
    let text = stdout(&o);
    assert!(text.lines().any(|l| l.starts_with("E_5,") && l.contains("fail")), "{text}");
}

#[test]
fn output_is_deterministic_across_pool_sizes() {
    let dir = tempfile::tempdir().unwrap();
    let run = |jobs: &str| {
        nichols(dir.path(), &["--jobs", jobs, "--no-cache", "--format", "json", "verify", "--nmax", "6", "--cap", "6"]).stdout
    };
    let one = run("1");
    assert_eq!(one, run("4"));
    assert_eq!(one, run("4"));
}
