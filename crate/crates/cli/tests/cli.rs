use std::path::Path;
use std::process::{Command, Output};

fn revsc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_revsc"))
        .args(args)
        .output()
        .expect("run revsc")
}

fn stdout(args: &[&str]) -> String {
    let out = revsc(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn classify_fig2_witness() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("fig2.json");
    let stats = stdout(&[
        "witness",
        "--family",
        "fig2",
        "--n",
        "5",
        "--out",
        path(&file),
    ]);
    assert_eq!(stats.trim(), "sc=5 sc_reverse=8");
    let text = stdout(&["classify", path(&file)]);
    assert!(text.contains("sc: 5\n"));
    assert!(text.contains("sc_reverse: 8\n"));
    assert!(text.contains("r_trivial: yes\n"));
    for m in ["reverse-po", "simon", "trahtman"] {
        assert!(text.contains(&format!("j_trivial[{m}]: no\n")), "{text}");
    }
    let json: serde_json::Value =
        serde_json::from_str(&stdout(&["classify", path(&file), "--format", "json"])).unwrap();
    assert_eq!(json["sc_reverse"], 8);
    assert_eq!(json["j_trivial"]["simon"], false);
}

#[test]
fn reproduce_table1_matches_and_ignores_worker_count() {
    let one = stdout(&["reproduce-table1", "--max-n", "6", "--jobs", "1"]);
    let four = stdout(&["reproduce-table1", "--max-n", "6", "--jobs", "4"]);
    assert_eq!(one, four);
    let mut lines = one.lines();
    assert_eq!(
        lines.next().unwrap(),
        "n\tworst_no_dead\tworst_with_dead\tupper_bound\tlower_bound\twitness_path"
    );
    for (line, want) in lines.zip([2, 4, 7, 12, 21]) {
        let cells: Vec<&str> = line.split('\t').collect();
        assert_eq!(cells[1], want.to_string());
        assert_eq!(cells[2], want.to_string());
        assert_eq!(cells[3], want.to_string());
    }
}

#[test]
fn reproduce_table1_writes_witnesses() {
    let dir = tempfile::tempdir().unwrap();
    let table = stdout(&[
        "reproduce-table1",
        "--max-n",
        "4",
        "--witness-dir",
        path(dir.path()),
    ]);
    let last = table.lines().last().unwrap();
    let paths: Vec<&str> = last.split('\t').nth(5).unwrap().split(',').collect();
    assert_eq!(paths.len(), 2);
    for p in paths {
        let stats = stdout(&["classify", p]);
        assert!(
            stats.contains("sc: 4\n") && stats.contains("sc_reverse: 7\n"),
            "{stats}"
        );
    }
}

#[test]
fn bound_values() {
    assert_eq!(
        stdout(&["bound", "--family", "r", "--n", "7", "--k", "2"]).trim(),
        "34"
    );
    assert_eq!(
        stdout(&["bound", "--family", "j", "--n", "5", "--k", "3"]).trim(),
        "15"
    );
    assert_eq!(
        stdout(&["bound", "--family", "j", "--n", "7", "--k", "3"]).trim(),
        "unknown"
    );
}

#[test]
fn convert_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    for family in ["fig2", "fig5", "table1"] {
        let json = dir.path().join(format!("{family}.json"));
        let dot = dir.path().join(format!("{family}.dot"));
        let back = dir.path().join(format!("{family}.back.json"));
        stdout(&[
            "witness",
            "--family",
            family,
            "--n",
            "6",
            "--out",
            path(&json),
        ]);
        stdout(&["convert", path(&json), "--out", path(&dot)]);
        stdout(&["convert", path(&dot), "--to", "json", "--out", path(&back)]);
        assert_eq!(
            std::fs::read_to_string(&json).unwrap(),
            std::fs::read_to_string(&back).unwrap()
        );
    }
}

#[test]
fn regex_reports_complexities() {
    let out = revsc(&["regex", "a*b(a+b)*"]);
    assert!(out.status.success());
    assert_eq!(
        String::from_utf8_lossy(&out.stderr).trim(),
        "sc=2 sc_reverse=2"
    );
}

#[test]
fn search_appends_tsv_row() {
    let dir = tempfile::tempdir().unwrap();
    let tsv = dir.path().join("rows.tsv");
    let rec = stdout(&[
        "search",
        "--n",
        "5",
        "--k",
        "2",
        "--dead",
        "require",
        "--tsv",
        path(&tsv),
    ]);
    let json: serde_json::Value = serde_json::from_str(&rec).unwrap();
    assert_eq!(json["max_reverse_sc"], 12);
    let rows = std::fs::read_to_string(&tsv).unwrap();
    assert_eq!(rows.lines().nth(1).unwrap(), "5\t-\t12\t12\t8\t-");
}

#[test]
fn exit_codes() {
    assert_eq!(revsc(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(
        revsc(&["witness", "--family", "fig2", "--n", "2"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        revsc(&["search", "--n", "13", "--k", "2"]).status.code(),
        Some(2)
    );
    assert_eq!(
        revsc(&["reproduce-table1", "--max-n", "9"]).status.code(),
        Some(1)
    );
    assert_eq!(
        revsc(&["classify", "/nonexistent.json"]).status.code(),
        Some(2)
    );
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(
        &bad,
        r#"{"states":2,"alphabet":["a"],"initial":0,"accepting":[],"delta":[[1]]}"#,
    )
    .unwrap();
    assert_eq!(revsc(&["classify", path(&bad)]).status.code(), Some(2));
}
