use std::io::Write;
use std::process::{Command, Output};

use prolongation_bounds::bounds::table::TableRow;
use prolongation_bounds::bounds::BoundReport;
use prolongation_bounds::consistency::DrResult;
use prolongation_bounds::lattice::AntichainSequence;
use prolongation_bounds::oracle::VerificationReport;

fn pbound(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pbound")).args(args).env_remove("PBOUND_BIT_CAP").output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn antichain_file(json: &str) -> tempfile::NamedTempFile {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    file.write_all(json.as_bytes()).unwrap();
    file
}

#[test]
fn bound_values() {
    for (args, want) in [
        (vec!["bound", "--r", "2", "--m", "3", "--n", "1", "--which", "c"], "9\n"),
        (vec!["bound", "--r", "1", "--m", "6", "--n", "1", "--which", "c"], "65533\n"),
        (vec!["bound", "--r", "1", "--m", "2", "--n", "1", "--which", "pierce"], "16\n"),
        (vec!["bound", "--r", "1", "--m", "2", "--n", "2", "--which", "leov-rec"], "2097152\n"),
        (vec!["bound", "--r", "2", "--m", "3", "--n", "1", "--which", "an-upper"], "12\n"),
    ] {
        let out = pbound(&args);
        assert_eq!(out.status.code(), Some(0), "{args:?}");
        assert_eq!(stdout(&out), want, "{args:?}");
    }
}

#[test]
fn bound_limits_exit_2() {
    let out = pbound(&["bound", "--r", "1", "--m", "2", "--n", "1", "--which", "leov-ack"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("A(5,"));
    let out = pbound(&["--bit-cap", "8", "bound", "--r", "2", "--m", "2", "--n", "9"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("C^9_{2,2}"));
    assert_eq!(pbound(&["bound", "--r", "x", "--m", "2", "--n", "1"]).status.code(), Some(2));
}

#[test]
fn bound_json_round_trip() {
    let out = pbound(&["bound", "--r", "2", "--m", "3", "--n", "2", "--json"]);
    let report: BoundReport = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report.value.to_string(), "1533");
    assert_eq!(report.get("C^1").map(ToString::to_string).as_deref(), Some("9"));
    let explained = stdout(&pbound(&["bound", "--r", "2", "--m", "3", "--n", "2", "--explain"]));
    assert!(explained.contains("formula_path: ackermann_recursion"));
}

#[test]
fn dr_from_file() {
    let file = antichain_file(r#"{"m":2,"n":1,"elements":[[[2,0],1],[[1,1],1],[[0,2],1]]}"#);
    let path = file.path().to_str().unwrap();
    let out = pbound(&["dr", "--file", path, "--r", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).lines().next(), Some("3"));
    let json = stdout(&pbound(&["dr", "--file", path, "--r", "2", "--json"]));
    let result: DrResult = serde_json::from_str(&json).unwrap();
    assert_eq!(result.value, 3);
    assert!(json.contains("\"D\": 3"));

    let axis = antichain_file(r#"{"m":2,"n":1,"elements":[[[3,0],1],[[0,3],1]]}"#);
    let out = pbound(&["dr", "--file", axis.path().to_str().unwrap(), "--r", "3"]);
    assert_eq!(stdout(&out).lines().next(), Some("6"));

    let bad = antichain_file(r#"{"m":2,"n":1,"elements":[[[2,0],1],[[1,0],1]]}"#);
    let out = pbound(&["dr", "--file", bad.path().to_str().unwrap(), "--r", "2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("comparable"));
}

#[test]
fn tables() {
    let csv = stdout(&pbound(&["table", "--rs", "1..3", "--ms", "2", "--ns", "1"]));
    assert_eq!(csv, "r,m,n,C\n1,2,1,2\n2,2,1,4\n3,2,1,6\n");
    let csv = stdout(&pbound(&["table", "--rs", "1..3", "--ms", "3", "--ns", "1"]));
    assert!(csv.ends_with("1,3,1,3\n2,3,1,9\n3,3,1,21\n"));
    let csv = stdout(&pbound(&["table", "--rs", "1", "--ms", "2", "--ns", "1..3"]));
    assert!(csv.ends_with("1,2,1,2\n1,2,2,4\n1,2,3,8\n"));
    let json = stdout(&pbound(&["table", "--rs", "1", "--ms", "2,6,7", "--ns", "1", "--format", "json"]));
    let rows: Vec<TableRow> = serde_json::from_str(&json).unwrap();
    assert_eq!(rows.iter().map(TableRow::cell).collect::<Vec<_>>(), ["2", "65533", ">LIMIT"]);
    assert!(stdout(&pbound(&["table", "--rs", "1", "--ms", "2", "--ns", "1", "--format", "md"])).contains("| 1 | 2 | 1 | 2 |"));
}

#[test]
fn apps_mu_lmax() {
    let text = stdout(&pbound(&["apps", "--r", "3", "--m", "1", "--n", "4", "--dim-v", "2"]));
    assert!(text.contains("component_order: 12"));
    assert!(text.contains("bezout_e_V: 192"));
    assert!(text.contains("e_W = 63"));
    let text = stdout(&pbound(&["apps", "--r", "3", "--m", "2", "--n", "2"]));
    assert!(text.contains("nullstellensatz_T: 12"));
    let text = stdout(&pbound(&["apps", "--r", "2", "--m", "6", "--n", "1", "--json"]));
    assert!(text.contains("error"));

    let out = stdout(&pbound(&["mu", "--r", "2", "--m", "2"]));
    assert_eq!(out, "((2,0),1)\n((1,1),1)\n((0,3),1)\n");
    let json = stdout(&pbound(&["mu", "--r", "1", "--m", "2", "--n", "2", "--json"]));
    let seq: AntichainSequence = serde_json::from_str(&json).unwrap();
    assert_eq!(seq.len(), 5);
    assert_eq!(stdout(&pbound(&["lmax", "--r", "2", "--m", "2"])), "3\n");
    assert_eq!(stdout(&pbound(&["lmax", "--r", "3", "--m", "2", "--growth", "arithmetic"])), "4\n");
    assert_eq!(stdout(&pbound(&["lmax", "--r", "1", "--m", "1", "--n", "5", "--growth", "doubling"])), "5\n");
}

#[test]
fn verify_suites() {
    let out = pbound(&["verify", "--suite", "macaulay", "--m", "3", "--d", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let out = pbound(&["verify", "--suite", "brute-c", "--r", "1", "--m", "2", "--n", "1", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let report: VerificationReport = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report.findings["max_D"], "2");
    let start = std::time::Instant::now();
    let out = pbound(&["verify", "--suite", "all", "--quick", "--jobs", "2"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert!(start.elapsed().as_secs() < 60);
    let out = pbound(&["verify", "--suite", "macaulay", "--m", "5", "--d", "4"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn output_is_deterministic() {
    let args = ["verify", "--suite", "all", "--quick", "--json"];
    assert_eq!(stdout(&pbound(&args)), stdout(&pbound(&args)));
    let args = ["apps", "--r", "2", "--m", "2", "--n", "2", "--dim-v", "1", "--json"];
    assert_eq!(stdout(&pbound(&args)), stdout(&pbound(&args)));
}
