//! Built-in table diagrams: reduced alternating PD codes of the prime knots
//! 3_1 through 7_7, with their signature and determinant.

use crate::corpus::CorpusRecord;

const ROLFSEN: &str = include_str!("../data/rolfsen.csv");

/// The fourteen table knots with up to seven crossings.
pub fn rolfsen() -> Vec<CorpusRecord> {
    crate::corpus::read_records(ROLFSEN.as_bytes())
        .expect("bundled table parses")
        .0
}

/// Looks up a table knot by name, e.g. `"5_2"`.
pub fn knot(name: &str) -> Option<CorpusRecord> {
    rolfsen().into_iter().find(|r| r.name == name)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fourteen_knots() {
        let t = rolfsen();
        assert_eq!(t.len(), 14);
        assert_eq!(t[0].name, "3_1");
        assert_eq!(t[13].name, "7_7");
        assert!(t.iter().all(|r| r.signature.is_some() && r.determinant.is_some()));
        assert_eq!(knot("4_1").unwrap().determinant, Some(5));
    }
}
