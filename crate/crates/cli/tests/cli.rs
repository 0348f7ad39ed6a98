use std::process::{Command, Output};

use vieta_cli::record::OutputRecord;

fn vieta(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_vieta")).args(args).output().expect("binary runs")
}

fn record(args: &[&str]) -> OutputRecord {
    let out = vieta(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.ends_with('\n') && text.matches('\n').count() == 1, "one line per record");
    serde_json::from_str(&text).unwrap()
}

#[test]
fn imo_example() {
    let r = record(&["imo", "-a", "30", "-b", "8", "--json"]);
    assert_eq!(r.command, "imo");
    assert_eq!(r.result["k"], "4");
    assert_eq!(r.result["root"], "2");
    assert_eq!(r.result["certificate"]["terminal"]["x"], "2");
    assert_eq!(r.result["certificate"]["terminal"]["y"], "0");
}

#[test]
fn classify_example() {
    let r = record(&["classify", "-p", "5", "-q", "3", "--json"]);
    assert_eq!(r.result["verdict"], "UnsolvableByTheorem");
    assert_eq!(r.result["theorem_id"], "TM1");
    let text = String::from_utf8(vieta(&["classify", "-p", "5", "-q", "3"]).stdout).unwrap();
    assert!(text.contains("UnsolvableByTheorem") && text.contains("TM1"));
}

#[test]
fn table1_reports_errata() {
    let r = record(&["table1", "--json"]);
    assert_eq!(r.result["rows"].as_array().unwrap().len(), 12);
    assert!(!r.errata.is_empty());
}

#[test]
fn json_round_trips() {
    for args in [
        &["imo", "-a", "30", "-b", "8", "--json"][..],
        &["reduce", "-m", "3", "-u", "3", "-v", "1", "--json"],
        &["param", "-m", "2", "-t", "-3/4", "--json"],
        &["unit", "--family", "NsqMinus4", "-n", "5", "--json"],
        &["scan", "norm", "-m", "3", "--bound", "12", "--json"],
    ] {
        let out = vieta(args);
        let text = String::from_utf8(out.stdout).unwrap();
        let r: OutputRecord = serde_json::from_str(&text).unwrap();
        assert_eq!(r.to_json_line(), text);
        assert_eq!(r.schema_version, "1");
    }
}

#[test]
fn scans_do_not_depend_on_threads() {
    for scan in [
        &["scan", "box", "-p", "3", "-q", "-1", "--bound", "500"][..],
        &["scan", "imo", "--bound", "300"],
        &["scan", "norm", "-m", "24", "--bound", "40"],
        &["scan", "final-prop", "--bound", "200"],
    ] {
        let run = |t: &str| {
            let mut args = scan.to_vec();
            args.extend(["--json", "--threads", t]);
            let out = vieta(&args);
            assert!(out.status.success(), "{args:?}");
            out.stdout
        };
        assert_eq!(run("1"), run("8"), "{scan:?}");
    }
}

#[test]
fn out_file_matches_stdout() {
    let dir = std::env::temp_dir().join(format!("vieta-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("imo.json");
    let out = vieta(&["imo", "-a", "30", "-b", "8", "--json", "--out", path.to_str().unwrap()]);
    assert_eq!(std::fs::read(&path).unwrap(), out.stdout);
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn exit_codes() {
    assert_eq!(vieta(&["classify", "-p", "3", "-q", "4"]).status.code(), Some(0));
    assert_eq!(vieta(&["classify", "-p", "x", "-q", "4"]).status.code(), Some(2));
    assert_eq!(vieta(&["descend", "-p", "3", "-q", "4", "-x", "1", "-y", "1"]).status.code(), Some(2));
    assert_eq!(vieta(&["imo", "-a", "2", "-b", "3"]).status.code(), Some(2));
    assert_eq!(vieta(&["scan", "imo", "--bound", "0"]).status.code(), Some(2));
    assert_eq!(vieta(&["reduce", "-m", "3", "-u", "3", "-v", "1", "--fourth-root"]).status.code(), Some(2));
    assert_eq!(vieta(&["param", "-t", "1"]).status.code(), Some(2));
    let err = vieta(&["unit", "--family", "Bogus", "-n", "2"]);
    assert_eq!(err.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&err.stderr).starts_with("error:"));
}

#[test]
fn text_output_is_stable() {
    let out = String::from_utf8(vieta(&["param", "--pell", "-t", "1/2"]).stdout).unwrap();
    assert_eq!(out, "param conic=x^2 - 2xy - y^2 = 1 t=1/2\n  point: (5, 2)\n");
    let out = String::from_utf8(vieta(&["table1"]).stdout).unwrap();
    assert!(out.starts_with("table1\n"));
    assert!(out.lines().all(|l| l == l.trim_end()));
}

#[test]
fn fourth_root_reduction() {
    let r = record(&["reduce", "-m", "6", "-u", "2", "-v", "1", "--fourth-root", "--json"]);
    assert_eq!(r.result["formula"], "fourth-root-unit");
    assert_eq!(r.result["bound_a_holds"], true);
    assert_eq!(r.result["bound_b_holds"], true);
}
