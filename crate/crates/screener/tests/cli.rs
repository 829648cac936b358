use std::process::{Command, Output};

fn screener(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_screener")).args(args).output().unwrap()
}

#[test]
fn valid_run_exits_zero() {
    let out = screener(&["run", "--group", "alt5", "--target", "F4", "--prime", "5", "--module", "vmin"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("Alt(5) in F4, p = 5"), "{text}");
}

#[test]
fn json_to_stdout_parses() {
    let out = screener(&["run", "--group", "alt6", "--target", "E7", "--prime", "5", "--json", "-"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["schema"], "report-v1");
    assert_eq!(v["summary"]["survives"], 1);
}

#[test]
fn json_file_and_text() {
    let path = std::env::temp_dir().join(format!("screener-cli-{}.json", std::process::id()));
    let p = path.to_str().unwrap();
    let out = screener(&["run", "--group", "alt5", "--target", "F4", "--prime", "5", "--module", "vmin", "--json", p]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["config"]["group"], "Alt(5)");
    assert!(!out.stdout.is_empty());
    std::fs::remove_file(&path).unwrap();
}

#[test]
fn configuration_errors_exit_nonzero() {
    for args in [
        &["run", "--group", "alt6", "--cover", "triple", "--target", "E7", "--prime", "5"][..],
        &["run", "--group", "alt6", "--cover", "double", "--target", "E7", "--prime", "5"],
        &["run", "--group", "alt11", "--target", "E8", "--prime", "5"],
        &["run", "--group", "alt6", "--target", "G2", "--prime", "5"],
        &["run", "--group", "alt6", "--target", "E7", "--prime", "4"],
        &["run", "--group", "alt6", "--target", "E7", "--prime", "5", "--traces", "/nonexistent/t.csv"],
        &["run", "--group", "alt6", "--target", "E7"],
    ] {
        let out = screener(args);
        assert!(!out.status.success(), "{args:?} succeeded");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn audit_of_one_catalogue() {
    let out = screener(&["catalogue", "audit", "--only", "6_5"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "Alt(6) p=5: ok\n");
}

#[test]
fn trace_generation() {
    let out = screener(&["traces", "generate", "--target", "E7", "--order", "2"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().any(|l| l.starts_with("E7,2,")), "{text}");
}
