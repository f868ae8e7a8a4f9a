use std::path::Path;
use std::process::{Command, Output};

fn grscover(args: &[&str], cwd: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_grscover")).args(args).current_dir(cwd).output().unwrap()
}

fn json(out: &Output) -> serde_json::Value {
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn csv_rows(path: &Path) -> Vec<Vec<String>> {
    std::fs::read_to_string(path).unwrap().lines().map(|l| l.split(',').map(String::from).collect()).collect()
}

#[test]
fn cover_on_a_codeword() {
    let dir = tempfile::tempdir().unwrap();
    let v = json(&grscover(&["cover", "--q", "7", "--n", "6", "--k", "2", "--decoder", "gs", "--y", "0,1,2,3,4,5"], dir.path()));
    assert_eq!((v["distance"].as_u64(), v["punctures"].as_u64()), (Some(0), Some(0)));
}

#[test]
fn cover_within_covering_radius() {
    let dir = tempfile::tempdir().unwrap();
    let v = json(&grscover(&["cover", "--q", "7", "--n", "6", "--k", "2", "--decoder", "bw", "--y", "6,6,6,6,6,6"], dir.path()));
    assert!(v["distance"].as_u64().unwrap() <= 4);
    assert_eq!(v["codeword"].as_array().unwrap().len(), 6);
}

#[test]
fn cover_with_explicit_points() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["cover", "--q", "11", "--n", "4", "--k", "2", "--alphas", "3,7,1,9", "--vs", "2,5,10,4", "--decoder", "map", "--seed", "3"];
    let v = json(&grscover(&args, dir.path()));
    assert!(v["distance"].as_u64().unwrap() <= 2);
}

#[test]
fn usage_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let out = grscover(&["cover", "--q", "7", "--n", "6", "--k", "2", "--y", "1,2,3"], dir.path());
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("--y"));
    for args in [
        &["cover", "--q", "9", "--n", "6", "--k", "2", "--y", "0,0,0,0,0,0"][..],
        &["cover", "--q", "7", "--n", "6", "--k", "7", "--y", "0,0,0,0,0,0"],
        &["cover", "--q", "5", "--n", "6", "--k", "2", "--y", "0,0,0,0,0,0"],
        &["punctures", "--q", "7", "--n", "6", "--k-range", "1..6", "--out", "x.csv"],
        &["punctures", "--q", "7", "--n", "6", "--trials", "0", "--out", "x.csv"],
        &["bogus"],
    ] {
        assert_eq!(grscover(args, dir.path()).status.code(), Some(2), "{args:?}");
    }
    assert_eq!(grscover(&["--help"], dir.path()).status.code(), Some(0));
}

#[test]
fn decoder_limit_exits_3() {
    let dir = tempfile::tempdir().unwrap();
    let out = grscover(&["cover", "--q", "47", "--n", "46", "--k", "10", "--decoder", "map", "--seed", "1"], dir.path());
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn unwritable_output_exits_4() {
    let dir = tempfile::tempdir().unwrap();
    let out = grscover(&["bound", "--q", "17", "--n", "14", "--k", "2", "--out", "missing/bound.csv"], dir.path());
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn sweep_row_counts() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path();
    let out = grscover(&["punctures", "--q", "7", "--n", "6", "--k-range", "1..5", "--trials", "50", "--seed", "42", "--out", "t1a.csv"], p);
    assert!(out.status.success());
    let rows = csv_rows(&p.join("t1a.csv"));
    assert_eq!(rows[0].join(","), "q,n,k,decoder,trials,seed,avg_punctures,std_punctures");
    assert_eq!(rows.len() - 1, 10);
    assert!(p.join("t1a.csv.manifest.json").exists());

    assert!(grscover(&["taumax", "--q", "47", "--n", "46", "--out", "taumax.csv"], p).status.success());
    let rows = csv_rows(&p.join("taumax.csv"));
    assert_eq!(rows[0].join(","), "q,n,k,d,tau_gs,tau_max,best_lower_bound");
    assert_eq!(rows.len() - 1, 45);

    assert!(grscover(&["bound", "--q", "17", "--n", "14", "--k", "2", "--out", "bound.csv"], p).status.success());
    let rows = csv_rows(&p.join("bound.csv"));
    let taus: Vec<&str> = rows[1..].iter().map(|r| r[4].as_str()).collect();
    assert_eq!(taus, ["7", "8", "9", "10", "11", "12"]);

    let out = grscover(&["radius", "--q", "7", "--n", "6", "--k-range", "2..3", "--trials", "40", "--out", "radius.csv"], p);
    assert!(out.status.success());
    let rows = csv_rows(&p.join("radius.csv"));
    assert_eq!(rows[0].join(","), "q,n,k,algorithm,trials,seed,avg_distance,std_distance,max_distance");
    let algs: Vec<&str> = rows[1..5].iter().map(|r| r[3].as_str()).collect();
    assert_eq!(algs, ["BW", "GS", "MAP", "BASELINE"]);
}

#[test]
fn manifest_records_parameters() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path();
    let args = ["punctures", "--q", "7", "--n", "6", "--k-range", "2..3", "--trials", "20", "--seed", "9", "--out", "a.csv"];
    assert!(grscover(&args, p).status.success());
    let m: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(p.join("a.csv.manifest.json")).unwrap()).unwrap();
    assert_eq!(m["command"], "punctures");
    assert_eq!(m["master_seed"], 9);
    assert_eq!(m["params"]["k_range"], "2..3");
    assert_eq!(m["params"]["trials"], 20);
    assert_eq!(m["outputs"][0], "a.csv");
    assert!(m["timestamp"].as_str().unwrap().ends_with('Z'));

    let first = std::fs::read(p.join("a.csv")).unwrap();
    assert!(grscover(&["replay", "--manifest", "a.csv.manifest.json"], p).status.success());
    assert_eq!(std::fs::read(p.join("a.csv")).unwrap(), first);
}

#[test]
fn conjecture_report_on_stdout() {
    let dir = tempfile::tempdir().unwrap();
    let v = json(&grscover(&["conjecture", "--q", "7", "--n", "6", "--trials", "100", "--seed", "1"], dir.path()));
    assert_eq!(v["rows"].as_array().unwrap().len(), 5);
    assert_eq!(v["rows"][0]["c2"], 0.0);
    assert!(v["c1_below_one"].as_bool().unwrap());
}
