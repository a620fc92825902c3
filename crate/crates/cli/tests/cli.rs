use std::fs;
use std::process::{Command, Output};

use associahedra::reference::{TABLE_F, TYPE_ROWS_MISSING};

fn assoc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_assoc"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = assoc(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn codim_one_faces_of_k6() {
    assert_eq!(
        stdout(&["faces", "--n", "6", "--k", "1"]),
        "n,k,faces\n6,1,14\n"
    );
}

#[test]
fn hexagon_triangulation_classes() {
    let csv = stdout(&["classes", "--n", "6", "--k", "3"]);
    let rows: Vec<&str> = csv.lines().skip(1).collect();
    assert_eq!(rows.len(), 2);
    let mut kappas: Vec<u64> = rows
        .iter()
        .map(|r| r.split(',').nth(5).unwrap().parse().unwrap())
        .collect();
    kappas.sort();
    assert_eq!(kappas, vec![2, 12]);
}

#[test]
fn f_table_matches_printed_rows() {
    let csv = stdout(&["tables", "--which", "f"]);
    let mut lines = csv.lines();
    let width = TABLE_F.iter().map(|(_, r)| r.len()).max().unwrap();
    let header: Vec<String> = std::iter::once("n".into())
        .chain((1..=width).map(|m| m.to_string()))
        .collect();
    assert_eq!(lines.next().unwrap(), header.join(","));
    for (&(n, printed), line) in TABLE_F.iter().zip(lines) {
        let mut cells: Vec<String> = vec![n.to_string()];
        cells.extend(printed.iter().map(u64::to_string));
        cells.resize(width + 1, String::new());
        assert_eq!(line, cells.join(","));
    }
    assert_eq!(csv.lines().count(), TABLE_F.len() + 1);
}

#[test]
fn type_table_includes_rows_missing_from_print() {
    let csv = stdout(&["tables", "--which", "dissections"]);
    for (sides, sig, count) in TYPE_ROWS_MISSING {
        assert!(csv.contains(&format!("{sides},{sig},{count}\n")), "{sig}");
    }
    assert!(csv.contains("6,<3^2:4>,21\n"));
}

#[test]
fn json_carries_schema_version() {
    let text = stdout(&["types", "--n", "5", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["schemaVersion"], 1);
    assert_eq!(v["records"].as_array().unwrap().len(), 5);
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["atlas", "--n", "8", "--format", "svg"][..],
        &["isotropy", "--n", "9", "--k", "5", "--format", "json"],
    ] {
        assert_eq!(stdout(args), stdout(args));
    }
}

#[test]
fn atlas_svg_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("atlas.svg");
    stdout(&[
        "atlas",
        "--n",
        "7",
        "--k",
        "2",
        "--format",
        "svg",
        "--out",
        path.to_str().unwrap(),
    ]);
    let svg = fs::read_to_string(&path).unwrap();
    assert!(svg.starts_with("<?xml"));
    assert_eq!(svg.matches("<g id=\"class-7.2.").count(), 6);
    assert_eq!(svg.matches("<line ").count(), 12);
}

#[test]
fn moduli_census_agrees_with_formula() {
    let csv = stdout(&["moduli", "--n", "5", "--census"]);
    for line in csv.lines().skip(1) {
        let cells: Vec<&str> = line.split(',').collect();
        assert_eq!(cells[2], cells[3], "{line}");
    }
}

#[test]
fn refusals_exit_nonzero() {
    let census = assoc(&["moduli", "--n", "7", "--census"]);
    assert!(!census.status.success());
    assert!(String::from_utf8_lossy(&census.stderr).contains("refused"));

    let svg = assoc(&["faces", "--n", "4", "--format", "svg"]);
    assert!(!svg.status.success());

    let usage = assoc(&["faces"]);
    assert!(!usage.status.success());
    assert!(String::from_utf8_lossy(&usage.stderr).contains("Usage"));

    let range = assoc(&["faces", "--n", "4", "--k", "9"]);
    assert!(!range.status.success());
}
