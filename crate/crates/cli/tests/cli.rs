use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn homhom(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_homhom"))
        .args(args)
        .env_remove("HOMHOM_BUDGET")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    if let Some(text) = stdin {
        child.stdin.take().unwrap().write_all(text.as_bytes()).unwrap();
    }
    drop(child.stdin.take());
    child.wait_with_output().unwrap()
}

fn json(args: &[&str], stdin: Option<&str>) -> Value {
    let out = homhom(args, stdin);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn lines(out: &Output) -> Vec<Value> {
    String::from_utf8(out.stdout.clone()).unwrap().lines().map(|l| serde_json::from_str(l).unwrap()).collect()
}

#[test]
fn petersen_is_c_ii_but_not_c_mh() {
    let r = json(&["classify", "--family", "petersen", "--classes", "c-ii,c-mh"], None);
    assert_eq!(r["classes"]["C-II"]["verdict"], "YES");
    assert_eq!(r["cii"]["family"]["tag"], "PETERSEN");
    assert_eq!(r["classes"]["C-MH"]["verdict"], "NO");
    assert_eq!(r["mismatch"], false);
}

#[test]
fn edgeless_graph_is_case_a() {
    let r = json(&["classify", "--g6", "E???"], None);
    assert_eq!(r["chh_case"], "(a)");
    assert_eq!(r["classes"]["C-HH"]["verdict"], "YES");
}

#[test]
fn hexagon_from_stdin() {
    let c6 = "6 6\n0 1\n1 2\n2 3\n3 4\n4 5\n0 5\n";
    let r = json(&["classify", "--oracle", "always"], Some(c6));
    assert_eq!(r["graph6"], "EhEG");
    for class in ["C-HH", "C-MI", "C-II", "C-MH", "C-IH"] {
        assert_eq!(r["classes"][class]["verdict"], "YES", "{class}");
        assert_eq!(r["classes"][class]["oracle"], true, "{class}");
    }
    assert_eq!(r["classes"]["C-HI"]["verdict"], "NO");
    assert!(r["classes"]["C-HI"]["witness"].is_object());
    // graph6 on stdin is detected too
    assert_eq!(json(&["classify", "--oracle", "always"], Some("EhEG\n")), r.clone());
}

#[test]
fn sweep_is_clean_and_deterministic() {
    let one = homhom(&["sweep", "--max-n", "5", "--jobs", "1"], None);
    let many = homhom(&["sweep", "--max-n", "5", "--jobs", "4"], None);
    assert!(one.status.success() && many.status.success());
    assert_eq!(one.stdout, many.stdout);
    let records = lines(&one);
    assert_eq!(records.len(), 1 + 2 + 4 + 11 + 34);
    assert!(records.iter().all(|r| r["mismatch"] == false && r["elapsed"].is_null()));
    let summary: Value = serde_json::from_slice(&one.stderr).unwrap();
    assert_eq!(summary["summary"]["mismatches"], 0);
    assert_eq!(summary["summary"]["graphs"], 52);
}

#[test]
fn sweep_records_witnesses_and_tags() {
    let out = homhom(&["sweep", "--max-n", "4", "--connected", "--timings"], None);
    let records = lines(&out);
    assert_eq!(records.len(), 1 + 1 + 2 + 6);
    let k4 = records.iter().find(|r| r["graph6"] == "C~").unwrap();
    assert!(k4["familyTags"].as_array().unwrap().contains(&Value::from("C-II:COMPLETE(4)x1")));
    assert!(k4["elapsed"].is_u64());
    let p3 = records.iter().find(|r| r["graph6"] == "BW").unwrap();
    let classes: Vec<&str> = p3["witnesses"].as_array().unwrap().iter().map(|w| w["class"].as_str().unwrap()).collect();
    assert!(classes.contains(&"C-HI"));
    assert!(!classes.contains(&"C-HH"));
}

#[test]
fn sweep_resumes() {
    let dir = std::env::temp_dir().join(format!("homhom-resume-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let full = dir.join("full.jsonl");
    let part = dir.join("part.jsonl");
    let full_s = full.to_str().unwrap();
    let part_s = part.to_str().unwrap();
    assert!(homhom(&["sweep", "--max-n", "5", "--out", full_s], None).status.success());
    let text = std::fs::read_to_string(&full).unwrap();
    let head: String = text.lines().take(20).map(|l| format!("{l}\n")).collect();
    std::fs::write(&part, head).unwrap();
    let out = homhom(&["sweep", "--max-n", "5", "--out", part_s, "--resume"], None);
    assert!(out.status.success());
    assert_eq!(std::fs::read_to_string(&part).unwrap(), text);
    let summary: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(summary["summary"]["graphs"], 52);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn symmetric_examples() {
    let r = json(&["symmetric", "family:complete:2", "family:cycle:6"], None);
    assert_eq!(r["symmetric"], true);
    assert_eq!(r["recognizer"], true);
    let r = json(&["symmetric", "family:complete:2", "family:path:4"], None);
    assert_eq!(r["symmetric"], true);
    let r = json(&["symmetric", "family:bcpm:4", "family:bcpm:3"], None);
    assert_eq!(r["symmetric"], false);
    assert_eq!(r["recognizer"], false);
    assert!(r["forward"]["witness"].is_object());
    assert_eq!(r["backward"]["holds"], true);
    let r = json(&["symmetric", "family:cycle:6", "family:path:4", "--class", "C-IH"], None);
    assert_eq!(r["forward"]["holds"], false);
    assert!(r["recognizer"].is_null());
}

#[test]
fn cores() {
    let r = json(&["core", "--family", "cycle", "6"], None);
    assert_eq!(r["core_graph6"], "A_");
    let bowtie = "5 6\n0 1\n0 2\n1 2\n2 3\n2 4\n3 4\n";
    let r = json(&["core"], Some(bowtie));
    assert_eq!(r["vertices"].as_array().unwrap().len(), 3);
    let r = json(&["core", "--family", "cycle", "5"], None);
    assert_eq!(r["core_graph6"], r["graph6"]);
    assert_eq!(r["retraction"], serde_json::json!([0, 1, 2, 3, 4]));
}

#[test]
fn generate_round_trips() {
    let out = homhom(&["generate", "--family", "bcpm", "3", "--format", "edges"], None);
    assert!(out.status.success());
    let edges = String::from_utf8(out.stdout).unwrap();
    assert!(edges.starts_with("6 6\n"));
    let g6 = homhom(&["generate", "--family", "bcpm", "3"], None);
    let r = json(&["classify", "--oracle", "never"], Some(&edges));
    assert_eq!(format!("{}\n", r["graph6"].as_str().unwrap()), String::from_utf8(g6.stdout.clone()).unwrap());
    let positional = homhom(&["generate", "bcpm", "3", "--format", "graph6"], None);
    assert_eq!(positional.stdout, g6.stdout);
}

#[test]
fn enumerate_counts() {
    let out = homhom(&["enumerate", "--max-n", "5", "--connected"], None);
    assert_eq!(String::from_utf8(out.stdout).unwrap().lines().count(), 1 + 1 + 2 + 6 + 21);
}

#[test]
fn exit_codes() {
    assert_eq!(homhom(&["classify", "--family", "bogus"], None).status.code(), Some(2));
    assert_eq!(homhom(&["classify", "--g6", "E???", "--classes", "C-XY"], None).status.code(), Some(2));
    assert_eq!(homhom(&["classify"], Some("3 1\n0 0\n")).status.code(), Some(2));
    assert_eq!(homhom(&["enumerate", "--max-n", "8"], None).status.code(), Some(3));
    assert_eq!(homhom(&["enumerate", "--max-n", "9", "--force"], None).status.code(), Some(3));
    assert_eq!(homhom(&["sweep", "--max-n", "8"], None).status.code(), Some(3));
    let budget = Command::new(env!("CARGO_BIN_EXE_homhom"))
        .args(["classify", "--family", "clebsch", "--oracle", "always"])
        .env_remove("HOMHOM_BUDGET")
        .output()
        .unwrap();
    assert_eq!(budget.status.code(), Some(3));
    let raised = Command::new(env!("CARGO_BIN_EXE_homhom"))
        .args(["classify", "--family", "petersen", "--oracle", "always", "--classes", "c-mh"])
        .env("HOMHOM_BUDGET", "hom:10,iso:10")
        .output()
        .unwrap();
    assert!(raised.status.success());
    let lowered = Command::new(env!("CARGO_BIN_EXE_homhom"))
        .args(["classify", "--family", "petersen", "--oracle", "always", "--classes", "c-mh"])
        .env("HOMHOM_BUDGET", "5")
        .output()
        .unwrap();
    assert_eq!(lowered.status.code(), Some(3));
}
