use std::io::Write;
use std::process::Command;

use avgorder::catalog::EMBEDDED_CATALOG;
use avgorder::cli;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("avgorder").chain(args.iter().copied());
    let code = cli::run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn field<'a>(table: &'a str, name: &str) -> &'a str {
    table
        .lines()
        .find_map(|l| l.strip_prefix(name).filter(|rest| rest.starts_with(' ')))
        .map(str::trim)
        .unwrap_or_else(|| panic!("no field {name} in\n{table}"))
}

#[test]
fn compute_prints_the_report() {
    let (code, out, _) = run(&["compute", "S(3)"]);
    assert_eq!(code, 0);
    assert_eq!(field(&out, "psi"), "13");
    assert_eq!(field(&out, "o"), "13/6 (2.16666666667)");
    assert_eq!(field(&out, "census"), "{1:1, 2:3, 3:2}");
    assert_eq!(field(&out, "solvable"), "true");

    let (_, out, _) = run(&["compute", "A(5)"]);
    assert_eq!(field(&out, "psi"), "211");
    assert_eq!(field(&out, "o"), "211/60 (3.51666666667)");

    let (_, out, _) = run(&["compute", "C(5) x SD(7,3)"]);
    assert_eq!(field(&out, "order"), "105");
    assert!(field(&out, "o").starts_with("17/1"));
}

#[test]
fn records_agree_with_the_table() {
    let (_, table, _) = run(&["compute", "D(8)"]);
    let (code, records, _) = run(&["compute", "D(8)", "--format", "records"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(records.trim()).unwrap();
    let report = &v["report"];
    assert_eq!(report["avg_order"], "19/8");
    assert!(field(&table, "o").starts_with("19/8 "));
    assert!(field(&table, "psi'").starts_with(report["psi_prime"].as_str().unwrap()));
    assert_eq!(report["psi"].as_u64().unwrap().to_string(), field(&table, "psi"));
}

#[test]
fn usage_and_parse_errors_exit_2() {
    let (code, _, err) = run(&["compute", "C(5) x Q(3)"]);
    assert_eq!(code, 2);
    assert!(err.contains("position 7"), "{err}");
    assert_eq!(run(&["frobnicate"]).0, 2);
    assert_eq!(run(&["table", "--max-n", "24"]).0, 2);
    assert_eq!(run(&["density", "--epsilon", "1/12"]).0, 2);
    assert_eq!(run(&["density", "--epsilon", "one"]).0, 2);
    assert_eq!(run(&["limit", "--n", "1"]).0, 2);
    assert_eq!(run(&["verify", "--suite", "nonsense"]).0, 2);
}

#[test]
fn size_cap_exits_3() {
    let (code, _, err) = run(&["compute", "S(10)"]);
    assert_eq!(code, 3);
    assert!(err.contains("2000000"));
}

#[test]
fn table_rows() {
    let (code, out, _) = run(&["table"]);
    assert_eq!(code, 0);
    let row = |n: &str| out.lines().find(|l| l.split_whitespace().next() == Some(n)).unwrap().to_string();
    assert!(row("2").contains("3/2"));
    assert!(row("11").contains("111/11"));
    assert!(row("18").contains("43/18"));
    assert_eq!(out.lines().count(), 24);
}

#[test]
fn search_limit_density() {
    let (code, out, _) = run(&["search", "--max-order", "5000", "--format", "records"]);
    assert_eq!(code, 0);
    let pairs: Vec<(u64, u64)> = out
        .lines()
        .map(|l| {
            let v: serde_json::Value = serde_json::from_str(l).unwrap();
            (v["order"].as_u64().unwrap(), v["avg_order"].as_u64().unwrap())
        })
        .collect();
    assert_eq!(pairs, vec![(105, 17), (357, 65), (1785, 273), (3887, 285), (4515, 413), (4641, 785)]);

    let (code, out, _) = run(&["limit", "--n", "6", "--m-max", "40", "--format", "records"]);
    assert_eq!(code, 0);
    let last: serde_json::Value = serde_json::from_str(out.lines().last().unwrap()).unwrap();
    let gap: avgorder::ExactRational = last["gap"].as_str().unwrap().parse().unwrap();
    assert!(gap < avgorder::ExactRational::ratio(1, 1_000_000));

    let (code, out, _) = run(&["density", "--epsilon", "1/24"]);
    assert_eq!(code, 0);
    assert!(out.lines().any(|l| l.starts_with("S3 ")), "{out}");
    assert!(out.contains("n0 = 48"));
}

#[test]
fn verify_selector_and_output_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.jsonl");
    let (code, out, err) = run(&["verify", "--suite", "elementary-product", "--out", path.to_str().unwrap()]);
    assert_eq!(code, 0, "{err}");
    assert!(out.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    for line in text.lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(v["suite"], "elementary-product");
        assert_eq!(v["status"], "pass");
    }
    assert!(text.lines().count() > 60);
}

#[test]
fn corrupted_fixture_fails_verification() {
    let corrupted = EMBEDDED_CATALOG.replace("psi=13 o=13/6", "psi=15 o=13/6");
    assert_ne!(corrupted, EMBEDDED_CATALOG);
    let mut file = tempfile::NamedTempFile::new().unwrap();
    file.write_all(corrupted.as_bytes()).unwrap();
    let path = file.path().to_str().unwrap();
    let (code, _, err) = run(&["verify", "--suite", "fixtures", "--catalog", path]);
    assert_eq!(code, 1);
    assert!(err.contains("FAILED fixture/S3"), "{err}");
    assert!(err.contains("psi 13, expected 15"), "{err}");

    let (code, _, _) = run(&["verify", "--suite", "fixtures"]);
    assert_eq!(code, 0);
}

#[test]
fn malformed_catalog_is_a_usage_error() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    file.write_all(b"class | C2 | 2 | C(2) |\nclass | C3 | 3 | C(3\n").unwrap();
    let (code, _, err) = run(&["table", "--max-n", "3", "--catalog", file.path().to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains("catalog line 2"), "{err}");
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_avgorder");
    let status = |args: &[&str]| Command::new(bin).args(args).output().unwrap().status.code();
    assert_eq!(status(&["compute", "A(4)"]), Some(0));
    assert_eq!(status(&["compute", "A(4"]), Some(2));
    assert_eq!(status(&["compute", "A(11)"]), Some(3));
    assert_eq!(status(&["verify", "--suite", "min-table"]), Some(0));
}

#[test]
fn full_suite_passes_on_the_embedded_catalog() {
    let (code, out, err) = run(&["verify"]);
    assert_eq!(code, 0, "{err}");
    assert!(err.contains(" 0 failed"), "{err}");
    let suites: std::collections::BTreeSet<String> = out
        .lines()
        .map(|l| serde_json::from_str::<serde_json::Value>(l).unwrap()["suite"].as_str().unwrap().to_string())
        .collect();
    assert_eq!(suites.len(), 12);
}
