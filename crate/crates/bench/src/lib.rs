//! Shared fixtures for the benchmarks.

use knotsurf::{generate, parse_pd, tables, CombinatorialMap, Kind};

/// Table diagrams 3_1–7_7.
pub fn table_maps() -> Vec<CombinatorialMap> {
    tables::rolfsen().iter().map(|r| parse_pd(&r.pd).expect("table PD parses")).collect()
}

/// Seeded random diagrams with `n` crossings.
pub fn random_maps(n: usize, count: u64, kind: Kind) -> Vec<CombinatorialMap> {
    (0..count).map(|s| generate(n, s, kind).expect("generation succeeds")).collect()
}
