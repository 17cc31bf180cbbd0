use std::process::{Command, Output};

fn mharm(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mharm")).args(args).output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn hilbert_series_output() {
    let out = mharm(&["hilb", "--locus", "matchings", "--n", "4"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "1,6,3\n");
    let out = mharm(&["--format", "json", "hilb", "--locus", "pm", "--n", "6"]);
    let value: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(value["coefficients"], serde_json::json!(["1", "9", "5"]));
}

#[test]
fn perfect_matchings_of_one_hundred() {
    let out = mharm(&["--format", "csv", "hilb", "--locus", "pm", "--n", "100"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("degree,dimension"));
    assert_eq!(lines.count(), 50);
}

#[test]
fn verify_passes_on_small_loci() {
    for args in [
        &["verify", "--locus", "matchings", "--n", "4"][..],
        &["verify", "--locus", "pm", "--n", "6"],
        &["verify", "--locus", "fixed", "--n", "6", "--a", "2"],
        &["--modular", "verify", "--locus", "matchings", "--n", "5"],
    ] {
        let out = mharm(args);
        assert!(out.status.success(), "{args:?}: {}", stdout(&out));
        assert!(stdout(&out).starts_with("PASS"));
    }
}

#[test]
fn exit_codes() {
    // parity violation and missing --a are usage errors
    assert_eq!(mharm(&["grfrob", "--locus", "pm", "--n", "5"]).status.code(), Some(2));
    assert_eq!(mharm(&["grfrob", "--locus", "fixed", "--n", "5"]).status.code(), Some(2));
    assert_eq!(mharm(&["verify", "--locus", "matchings", "--n", "7"]).status.code(), Some(3));
    assert_eq!(mharm(&["--oracle-max-n", "3", "verify", "--locus", "pm", "--n", "4"]).status.code(), Some(3));
    assert_eq!(mharm(&["--table-max-n", "5", "logconcave", "--n", "6", "--equivariant"]).status.code(), Some(3));
    assert_eq!(mharm(&["logconcave", "--n-max", "12"]).status.code(), Some(0));
}

#[test]
fn output_file() {
    let dir = std::env::temp_dir().join(format!("mharm-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("m6.csv");
    let out = mharm(&["--format", "csv", "--out", path.to_str().unwrap(), "grfrob", "--locus", "matchings", "--n", "6"]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("q,lambda,coeff\n0,6,1\n"));
    assert!(text.contains("2,4 2,2\n"));
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn ideal_search_reports_the_smallest_instance() {
    let out = mharm(&["ideal-check", "--search", "--n-max", "5"]);
    assert!(out.status.success());
    assert!(stdout(&out).starts_with("I^M_{3,3} vs gr I: unequal (first difference in degree 1)"), "{}", stdout(&out));
}
