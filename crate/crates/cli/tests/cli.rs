use std::process::{Command, Output};

fn jt(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_jt"))
        .args(args)
        .output()
        .expect("failed to spawn jt")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn snf_example_matches_and_exits_zero() {
    let o = jt(&["snf", "--shape", "7,5,5,2", "-t", "4"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("match"), "{text}");
    assert!(!text.contains("MISMATCH"), "{text}");
    assert!(text.contains("n^10 + 15*n^9"), "{text}");
}

#[test]
fn json_and_text_verdicts_agree() {
    for ring in ["n", "qy", "qbracket"] {
        let json = jt(&["snf", "--shape", "3,1", "-t", "3", "--ring", ring, "--format", "json"]);
        let text = jt(&["snf", "--shape", "3,1", "-t", "3", "--ring", ring]);
        assert_eq!(json.status.code(), text.status.code());
        let v: serde_json::Value = serde_json::from_slice(&json.stdout).unwrap();
        assert_eq!(v["match"], true);
        assert_eq!(v["t"], 3);
        assert_eq!(v["kind"], ring);
        assert_eq!(v["computed"].as_array().unwrap().len(), 3);
    }
}

#[test]
fn both_methods_report_the_minors_route() {
    let o = jt(&["snf", "--shape", "2,1", "--method", "both", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["match"], true);
}

#[test]
fn empty_shape_gives_unit_diagonal() {
    let o = jt(&["snf", "--shape", "-", "-t", "3", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["computed"], serde_json::json!(["1", "1", "1"]));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(jt(&["snf", "--shape", "3,x"]).status.code(), Some(2));
    assert_eq!(jt(&["snf", "--shape", "1,3"]).status.code(), Some(2));
    assert_eq!(jt(&["snf", "--shape", "2,2,1", "-t", "2"]).status.code(), Some(2));
    assert_eq!(
        jt(&["minor", "--shape", "2,1", "-t", "2", "--rows", "1,3", "--cols", "1,2"]).status.code(),
        Some(2)
    );
    assert_eq!(
        jt(&["minor", "--shape", "2,1", "-t", "2", "--rows", "2,1", "--cols", "1,2"]).status.code(),
        Some(2)
    );
    assert_eq!(jt(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn minor_reports_skew_shape() {
    let o = jt(&[
        "minor", "--shape", "7,6,6,5,3", "-t", "5", "--rows", "3,4,5", "--cols", "1,3,5",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("skew shape: 6,5,3/2,1"), "{text}");
    assert!(text.contains("divisible by det M_3: yes"), "{text}");
}

#[test]
fn lr_examples() {
    let cases = [
        (["--outer", "2,1", "--inner", "1", "--content", "1,1"], "1"),
        (["--outer", "3,2,1", "--inner", "2,1", "--content", "2,1"], "2"),
        (["--outer", "2", "--inner", "1", "--content", "1,1"], "0"),
    ];
    for (args, expected) in cases {
        let mut full = vec!["lr"];
        full.extend(args);
        let o = jt(&full);
        assert_eq!(o.status.code(), Some(0));
        assert_eq!(stdout(&o).trim(), expected, "{args:?}");
    }
}

#[test]
fn qh_renders_specializations() {
    let o = jt(&["qh", "2", "--ring", "n"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "1/2*n^2 + 1/2*n");
    assert_eq!(stdout(&jt(&["qh", "0"])).trim(), "1");
    assert_eq!(stdout(&jt(&["qh", "-1", "--ring", "qbracket"])).trim(), "0");
}

#[test]
fn verify_sweep_is_clean_and_deterministic() {
    let args = ["verify", "--max-weight", "4", "--extra-rows", "1", "--ring", "all", "--format", "json"];
    let a = jt(&args);
    assert_eq!(a.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["failures"], serde_json::json!([]));
    assert_eq!(v["cases"], 66);

    let b = jt(&["snf", "--shape", "4,2,1", "--format", "json"]);
    let c = jt(&["snf", "--shape", "4,2,1", "--format", "json"]);
    let strip = |o: &Output| {
        let mut v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
        v.as_object_mut().unwrap().remove("ms");
        v
    };
    assert_eq!(strip(&b), strip(&c));
}

#[test]
fn out_flag_writes_file() {
    let path = std::env::temp_dir().join(format!("jt-cli-out-{}.json", std::process::id()));
    let p = path.to_str().unwrap();
    let o = jt(&["predict", "--shape", "3,1", "--format", "json", "--out", p]);
    assert_eq!(o.status.code(), Some(0));
    let written = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).ok();
    let v: serde_json::Value = serde_json::from_str(&written).unwrap();
    assert!(v.is_object() || v.is_array(), "{written}");
}
