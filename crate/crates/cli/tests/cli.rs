use std::process::{Command, Output};

use proptest::prelude::*;

use lcd_cli::{parse_json, parse_text, write_json, write_text, ExportRecord};
use lcd_core::{classify_lcd, BinaryMatrix, LinearCode, Strategy as Search};

fn lcd(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lcd")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn dmax_examples() {
    assert_eq!(stdout(&lcd(&["dmax", "7", "2"])), "4 (formula)\n");
    assert_eq!(stdout(&lcd(&["dmax", "3", "3"])), "1 (formula)\n");
    assert_eq!(stdout(&lcd(&["dmax", "11", "5"])), "4 (table)\n");
    let o = lcd(&["dmax", "16", "8", "--classify"]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("5, 1 code\n"));
}

#[test]
fn usage_errors_exit_with_one() {
    for args in [
        &["dmax", "3", "4"][..],
        &["dmax", "17", "3"],
        &["dmax"],
        &["classify", "6", "2", "--strategy", "diagonal"],
        &["covers", "13", "3"],
        &["frobnicate"],
        &["we", "10x1"],
    ] {
        let o = lcd(args);
        assert_eq!(o.status.code(), Some(1), "{args:?}");
        assert!(!o.stderr.is_empty());
    }
    assert_eq!(lcd(&["--help"]).status.code(), Some(0));
}

#[test]
fn covers_examples() {
    assert_eq!(stdout(&lcd(&["covers", "3", "3"])), "23\n");
    assert_eq!(stdout(&lcd(&["covers", "1", "4"])), "4\n");
    assert_eq!(stdout(&lcd(&["covers", "1", "1"])), "1\n");
    let out = stdout(&lcd(&["covers", "2", "3", "--emit-codes"]));
    let (count, body) = out.split_once("\n\n").unwrap();
    assert_eq!(count, "9");
    let recs = parse_text(body).unwrap();
    assert_eq!(recs.len(), 9);
    for r in &recs {
        let c = r.to_code().unwrap();
        assert_eq!((c.n(), c.k()), (7, 3));
        assert!(c.is_lcd());
    }
}

#[test]
fn weight_enumerator_from_file_and_inline() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.txt");
    std::fs::write(&path, "# a [7,4] Hamming code\n1000110\n0100011\n\n0010111\n0001101\n").unwrap();
    let out = stdout(&lcd(&["we", path.to_str().unwrap()]));
    assert_eq!(out, "[7, 4, 3]\n1 + 7y^3 + 7y^4 + y^7\nLCD: no\n");

    let out = stdout(&lcd(&["we", "111000", "000111"]));
    assert_eq!(out, "[6, 2, 3]\n1 + 2y^3 + y^6\nLCD: yes\n");

    std::fs::write(&path, "1000110\n\n010001\n").unwrap();
    let o = lcd(&["we", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3"));
}

#[test]
fn classify_writes_files_and_json() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("codes.txt");
    let o = lcd(&["classify", "10", "5", "--out", path.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(text, stdout(&lcd(&["classify", "10", "5"])));

    let recs = parse_text(&text).unwrap();
    let expected = classify_lcd(10, 5, 3, Search::ColumnAugmentation).unwrap();
    assert_eq!(recs.len(), 11);
    for (r, c) in recs.iter().zip(&expected.codes) {
        assert_eq!(&r.to_code().unwrap(), c);
        assert_eq!(r.d, 3);
    }

    let json = stdout(&lcd(&["classify", "10", "5", "--json", "--strategy", "rows"]));
    let from_json = parse_json(&json).unwrap();
    assert_eq!(from_json, recs);
}

#[test]
fn output_is_independent_of_jobs() {
    for args in [&["classify", "11", "5", "3"][..], &["table", "--nmax", "9", "--compare"], &["covers", "3", "3", "--emit-codes"]] {
        let one = lcd(&[&["--jobs", "1"], args].concat());
        let four = lcd(&[&["--jobs", "4"], args].concat());
        assert!(one.status.success(), "{args:?}");
        assert_eq!(one.stdout, four.stdout, "{args:?}");
    }
}

#[test]
fn table_compare_passes() {
    let o = lcd(&["table", "--nmax", "10", "--compare"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("(6,2)✓"));
    assert!(out.ends_with("all 36 cells match\n"));
}

fn arb_code() -> impl Strategy<Value = LinearCode> {
    (1usize..=20).prop_flat_map(|n| {
        proptest::collection::vec(0u64..(1u64 << n), 1..=n)
            .prop_map(move |rows| LinearCode::from_spanning(&BinaryMatrix::from_rows(n, rows).unwrap()))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn export_round_trip(codes in proptest::collection::vec(arb_code(), 1..5)) {
        let codes: Vec<LinearCode> = codes.into_iter().filter(|c| c.k() > 0).collect();
        let recs: Vec<ExportRecord> = codes.iter().map(ExportRecord::from_code).collect();
        let back = parse_text(&write_text(&recs)).unwrap();
        prop_assert_eq!(&back, &recs);
        for (r, c) in back.iter().zip(&codes) {
            prop_assert_eq!(&r.to_code().unwrap(), c);
        }
        prop_assert_eq!(parse_json(&write_json(&recs)).unwrap(), recs);
    }
}
