use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_permdrop"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

#[test]
fn map_gamma_prints_the_image() {
    let out = run(&["map", "--via", "gamma", "571492638"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "5 7 3 2 9 1 4 8 6\n");
}

#[test]
fn map_alpha_prints_the_sign_sequence() {
    let out = run(&["map", "--via", "alpha", "--k", "7", "83475612"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "+-+++-++----++-\n");
}

#[test]
fn map_alpha_inverse_round_trips() {
    let out = run(&["map", "--via", "alpha-inv", "+-+++-++----++-"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "8 3 4 7 5 6 1 2\n");
}

#[test]
fn gf_theorem1_is_canonical() {
    let out = run(&["gf", "--formula", "theorem1", "--n", "2", "--k", "1"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "t^2 + q*t\n");
}

#[test]
fn gf_accepts_uppercase_g() {
    let lower = run(&["gf", "--formula", "g", "--n", "2", "--order", "2"]);
    let upper = run(&["gf", "--formula", "G", "--n", "2", "--order", "2"]);
    assert!(lower.status.success() && upper.status.success());
    assert_eq!(stdout(&lower), stdout(&upper));
}

#[test]
fn enum_output_feeds_back_into_stats() {
    let out = run(&["enum", "--family", "A", "--n", "4", "--k", "2"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 18); // (k+1)^(n-k) k! = 3^2 * 2
    for line in &lines {
        let stats = run(&["stats", line]);
        assert!(stats.status.success(), "stats failed on {line}");
    }
}

#[test]
fn enum_count_matches_line_count() {
    let full = run(&["enum", "--family", "S", "--n", "5", "--k", "2"]);
    let count = run(&["enum", "--family", "S", "--n", "5", "--k", "2", "--count"]);
    assert_eq!(
        stdout(&full).lines().count().to_string(),
        stdout(&count).trim()
    );
}

#[test]
fn enum_is_lexicographic_and_deterministic() {
    let a = run(&["enum", "--family", "all", "--n", "4", "--k", "4"]);
    let b = run(&["enum", "--family", "all", "--n", "4", "--k", "4"]);
    assert_eq!(out_bytes(&a), out_bytes(&b));
    let lines: Vec<String> = stdout(&a).lines().map(str::to_owned).collect();
    let mut sorted = lines.clone();
    sorted.sort();
    assert_eq!(lines, sorted);
    assert_eq!(lines.len(), 24);
}

fn out_bytes(out: &Output) -> &[u8] {
    &out.stdout
}

#[test]
fn dist_csv_has_the_documented_header() {
    let out = run(&[
        "dist", "--family", "A", "--n", "3", "--k", "1", "--stats", "inv,lmax",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("inv,lmax,count"));
    // rows sorted lexicographically by key tuple
    assert_eq!(lines.next(), Some("0,3,1"));
}

#[test]
fn verify_pass_exits_zero_with_json() {
    let out = run(&["verify", "--check", "counts", "--max-n", "4"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).expect("valid JSON");
    assert_eq!(v["status"], "pass");
    assert_eq!(v["check"], "counts");
}

#[test]
fn verify_all_emits_one_report_per_check() {
    let out = run(&["verify", "--check", "all", "--max-n", "3"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).expect("valid JSON");
    assert_eq!(v.as_array().map(Vec::len), Some(8));
}

#[test]
fn usage_and_domain_errors_exit_two() {
    // unknown flag
    assert_eq!(run(&["enum", "--bogus"]).status.code(), Some(2));
    // invalid permutation
    assert_eq!(run(&["stats", "1,1,2"]).status.code(), Some(2));
    // map domain error: alpha requires a 213-avoiding input
    assert_eq!(
        run(&["map", "--via", "alpha", "213"]).status.code(),
        Some(2)
    );
    // budget cap on verify
    assert_eq!(
        run(&["verify", "--check", "all", "--max-n", "99"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn large_values_need_separators() {
    let out = run(&["stats", "10 1 2 3 4 5 6 7 8 9"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).expect("valid JSON");
    assert_eq!(v["n"], 10);
    assert_eq!(v["maxlift"], 9);
}
