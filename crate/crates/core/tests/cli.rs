use std::path::Path;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hsp-powers")).args(args).output().unwrap()
}

fn json(path: &Path) -> serde_json::Value {
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn analyze_a5_to_stdout() {
    let out = run(&["analyze", "--group", "A5"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["run"]["command"], "analyze");
    assert!(doc.to_string().contains("gamma"));
}

#[test]
fn analyze_s3_exits_with_condition_failure() {
    let out = run(&["analyze", "--group", "S3"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn bad_arguments_exit_with_one() {
    assert_eq!(run(&["analyze", "--group", "Q8"]).status.code(), Some(1));
    assert_eq!(run(&["no-such-command"]).status.code(), Some(1));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn commands_write_their_files() {
    let dir = tempfile::tempdir().unwrap();
    let cases: [(&[&str], &[&str]); 4] = [
        (&["weak-tv", "--group", "D5", "--n-max", "5"], &["weak_tv.csv"]),
        (&["strong-sim", "--group", "A5", "--trials", "20", "--seed", "1"], &["strong_sim.csv", "strong_sim.json"]),
        (&["wreath-census", "--group", "D5"], &["wreath_census.json"]),
        (&["plancherel-mc", "--group", "A5", "--trials", "1000"], &["plancherel_mc.csv", "plancherel_mc.json"]),
    ];
    for (i, (args, files)) in cases.iter().enumerate() {
        let out_dir = dir.path().join(i.to_string());
        let mut full = args.to_vec();
        let out_str = out_dir.to_string_lossy().into_owned();
        full.extend(["--out", &out_str]);
        let out = run(&full);
        assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
        for f in *files {
            assert!(out_dir.join(f).is_file(), "{args:?} missing {f}");
        }
    }
    let census = json(&dir.path().join("2/wreath_census.json"));
    assert_eq!(census["census"]["sum_of_squares"], 200);
}

#[test]
fn config_file_and_flags_agree() {
    let dir = tempfile::tempdir().unwrap();
    let config = dir.path().join("run.json");
    std::fs::write(&config, r#"{"group": "A5", "trials": 30, "seed": 9}"#).unwrap();
    let a = run(&["strong-sim", "--config", config.to_str().unwrap(), "--format", "csv"]);
    let b = run(&["strong-sim", "--group", "A5", "--trials", "30", "--seed", "9", "--format", "csv"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    std::fs::write(&config, r#"{"group": "A5", "bogus": 1}"#).unwrap();
    assert_eq!(run(&["analyze", "--config", config.to_str().unwrap()]).status.code(), Some(1));
}
