//! Selection of the global crossing-type conventions against the oracle.

use super::signature_pair_with;
use crate::diagram::{checkerboard_coloring, parse_pd, CombinatorialMap, Convention};
use crate::oracle::signature_oracle;
use crate::tables::knot;

/// Right and left trefoil, figure-eight, 5_1, 5_2 and 6_1.
pub fn calibration_set() -> Vec<(String, CombinatorialMap)> {
    let table = |name: &str| parse_pd(&knot(name).expect("table knot").pd).expect("table PD parses");
    let left = table("3_1");
    let mut out = vec![("3_1 mirror".to_string(), left.mirror()), ("3_1".to_string(), left)];
    for name in ["4_1", "5_1", "5_2", "6_1"] {
        out.push((name.to_string(), table(name)));
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CalibrationOutcome {
    /// Conventions for which both checkerboard signatures match the oracle on
    /// every calibration diagram and both colorings.
    pub winners: Vec<Convention>,
}

pub fn calibrate() -> CalibrationOutcome {
    let set: Vec<_> = calibration_set()
        .into_iter()
        .map(|(_, m)| {
            let sigma = signature_oracle(&m).expect("oracle handles table knots");
            (m, sigma)
        })
        .collect();
    let winners = Convention::all()
        .filter(|&conv| {
            set.iter().all(|(m, sigma)| {
                let col = checkerboard_coloring(m).expect("planar maps are colorable");
                [col.swapped(), col].iter().all(|c| {
                    signature_pair_with(m, c, conv).is_ok_and(|(w, b)| w == *sigma && b == *sigma)
                })
            })
        })
        .collect();
    CalibrationOutcome { winners }
}
