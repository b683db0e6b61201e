use std::process::{Command, Output};

fn cishift(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cishift"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(args: &[&str]) -> i32 {
    cishift(args).status.code().expect("exit code")
}

#[test]
fn analyze_contract() {
    let out = cishift(&["analyze", "28,31,36,48"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("31·(1) ⊔ 4·(7,9,12)"));
    assert_eq!(code(&["analyze", "3,4,5"]), 1);
    assert_eq!(code(&["analyze", "5"]), 0);
    assert_eq!(code(&["analyze", "3,a"]), 2);
    assert_eq!(code(&["analyze"]), 2);
}

#[test]
fn scan_csv_schema() {
    let out = cishift(&["scan", "11,16,28", "785", "900", "--format", "csv", "--jobs", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("j,m,s,k"));
    assert_eq!(lines.collect::<Vec<_>>(), ["812,29,1,4", "840,30,1,4", "868,31,1,4", "896,32,1,4"]);
    assert_eq!(code(&["scan", "1,2", "1", "100000000"]), 3);
}

#[test]
fn report_json_fields() {
    let out = cishift(&["report", "11,16,28", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["residues"], serde_json::json!([0]));
    assert_eq!(v["period"], 28);
    assert_eq!(v["threshold"], 784);
    assert_eq!(v["base_is_ci"], true);
    assert_eq!(v["eventually_empty"], false);
}

#[test]
fn compare_contract() {
    for seq in ["4,6,9", "3,4,5", "28,31,36,48"] {
        assert_eq!(code(&["compare", seq]), 0, "{seq}");
    }
    assert_eq!(code(&["compare", "3,4,5", "--bound", "8"]), 3);
}

#[test]
fn verify_paper_passes_and_prints_seed() {
    let out = cishift(&["verify-paper", "--seed", "5"]);
    assert_eq!(out.status.code(), Some(0));
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.lines().all(|l| l.starts_with("PASS ")), "{stdout}");
    assert!(stdout.contains("trap-printed-pairing"));
    assert!(String::from_utf8_lossy(&out.stderr).contains("seed: 5"));
}
