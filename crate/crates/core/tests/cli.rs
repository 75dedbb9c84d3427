use std::process::{Command, Output};

fn duha(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_duha"))
        .args(args)
        .env_remove("DUHA_JOBS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn f1_homology_json_passes() {
    let o = duha(&[
        "homology",
        "--preset",
        "f1-rational",
        "--max-deg",
        "8",
        "--output",
        "json",
    ]);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let comparisons = v["reports"][0]["comparisons"].as_array().unwrap();
    assert_eq!(comparisons.len(), 4 * 9);
    assert!(comparisons.iter().all(|c| c["match"] == true));
    let hh0: Vec<i64> = comparisons
        .iter()
        .filter(|c| c["quantity"] == "HH_0")
        .map(|c| c["computed"].as_i64().unwrap())
        .collect();
    assert_eq!(hh0, [1, 2, 3, 2, 3, 2, 3, 2, 3]);
    assert_eq!(v["table"]["case"]["beta"], "-6");
}

#[test]
fn dims_csv() {
    let o = duha(&[
        "dims",
        "--preset",
        "f2-root-3",
        "--max-deg",
        "8",
        "--output",
        "csv",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("theory,i,deg,sdeg,dim,predicted,match"));
    let totals: Vec<&str> = lines
        .filter(|l| l.starts_with("\"dim A\""))
        .map(|l| l.split(',').nth(4).unwrap())
        .collect();
    assert_eq!(totals, ["1", "2", "4", "6", "9", "12", "16", "20", "25"]);
}

#[test]
fn mismatch_exits_one() {
    // the non-root closed forms miss the class in degree 8
    let o = duha(&[
        "homology",
        "--preset",
        "f2-generic",
        "--max-deg",
        "8",
        "--output",
        "table",
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL HH_3 at degree 8"));
}

#[test]
fn configuration_errors_exit_two() {
    for args in [
        &["homology", "--preset", "f9"][..],
        &["homology", "--preset", "f1-rational", "--r1", "2"],
        &["homology"],
        &["homology", "--r1", "1", "--r2", "1", "--minpoly", "[1,1"],
        &[
            "homology",
            "--preset",
            "f1-rational",
            "--min-deg",
            "5",
            "--max-deg",
            "2",
        ],
        &["frobnicate"],
        &["homology", "--preset", "f1-rational", "--jobs", "0"],
    ] {
        assert_eq!(duha(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn custom_field_matches_preset() {
    let custom = duha(&[
        "cyclic",
        "--minpoly",
        "[1,0,1]",
        "--r1",
        "[0,1]",
        "--r2",
        "[0,-1]",
        "--output",
        "csv",
    ]);
    let preset = duha(&["cyclic", "--preset", "f2-root-4", "--output", "csv"]);
    assert_eq!(custom.status.code(), Some(0));
    assert_eq!(stdout(&custom), stdout(&preset));
}

#[test]
fn output_is_deterministic_across_job_counts() {
    let run = |jobs: &str| {
        stdout(&duha(&[
            "cohomology",
            "--preset",
            "f2-root-6",
            "--max-deg",
            "6",
            "--jobs",
            jobs,
        ]))
    };
    let one = run("1");
    assert_eq!(one, run("4"));
    assert_eq!(one, run("4"));
}

#[test]
fn config_file_and_flag_precedence() {
    let dir = std::env::temp_dir().join(format!("duha-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let cfg = dir.join("cfg.json");
    let out = dir.join("out.json");
    std::fs::write(
        &cfg,
        r#"{"preset": "f1-rational", "max_deg": 3, "output": "table"}"#,
    )
    .unwrap();
    let o = duha(&[
        "homology",
        "--config",
        cfg.to_str().unwrap(),
        "--max-deg",
        "5",
        "--output",
        "json",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(v["table"]["window"]["hi"], 5);
    std::fs::write(&cfg, r#"{"preset": "f1-rational", "colour": "blue"}"#).unwrap();
    assert_eq!(
        duha(&["homology", "--config", cfg.to_str().unwrap()])
            .status
            .code(),
        Some(2)
    );
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn env_var_sets_jobs() {
    let o = Command::new(env!("CARGO_BIN_EXE_duha"))
        .args(["dims", "--preset", "f1-rational", "--max-deg", "4"])
        .env("DUHA_JOBS", "0")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}
