//! The Seifert oracle against frozen reference values computed by an
//! independent implementation (braid closures and table knots).

use knotsurf::corpus::read_records;
use knotsurf::oracle::skew_determinant;
use knotsurf::diagram::writhe_with;
use knotsurf::{parse_pd, seifert_matrix, Convention};

#[derive(serde::Deserialize)]
struct Row {
    name: String,
    pd: String,
    signature: i64,
    determinant: u64,
    writhe: i64,
}

fn rows(text: &str) -> Vec<Row> {
    csv::Reader::from_reader(text.as_bytes()).deserialize().map(|r| r.unwrap()).collect()
}

fn check(rows: &[Row]) {
    let mut failures = Vec::new();
    for r in rows {
        let m = parse_pd(&r.pd).unwrap_or_else(|e| panic!("{}: {e}", r.name));
        assert_eq!(writhe_with(&m, Convention::GEOMETRIC).unwrap(), r.writhe, "{} writhe", r.name);
        let v = seifert_matrix(&m).unwrap_or_else(|e| panic!("{}: {e}", r.name));
        assert_eq!(skew_determinant(&v), 1, "{} det(V - V^T)", r.name);
        if (v.signature(), v.determinant()) != (r.signature, r.determinant) {
            failures.push(format!("{}: got ({}, {}), want ({}, {})", r.name, v.signature(), v.determinant(), r.signature, r.determinant));
        }
    }
    assert!(failures.is_empty(), "{} mismatches:\n{}", failures.len(), failures.join("\n"));
}

#[test]
fn table_knots() {
    check(&rows(include_str!("data/table_reference.csv")));
}

#[test]
fn random_braid_closures() {
    let rows = rows(include_str!("data/braid_reference.csv"));
    assert_eq!(rows.len(), 200);
    check(&rows);
}

#[test]
fn bundled_table_matches_reference() {
    let (table, skipped) = read_records(include_str!("../data/rolfsen.csv").as_bytes()).unwrap();
    assert!(skipped.is_empty());
    let reference = rows(include_str!("data/table_reference.csv"));
    for (t, r) in table.iter().zip(&reference) {
        assert_eq!((&t.name, &t.pd, t.signature, t.determinant), (&r.name, &r.pd, Some(r.signature), Some(r.determinant)));
    }
}
