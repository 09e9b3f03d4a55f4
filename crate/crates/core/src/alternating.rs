//! Alternation analysis and the lift of an almost alternating diagram to a
//! cellular alternating diagram on the torus.

use serde::{Deserialize, Serialize};

use crate::diagram::{
    checkerboard_coloring, classify_crossings, faces, gauss_code, genus, CheckerboardColoring,
    CombinatorialMap, GaussCode,
};
use crate::error::{Error, Result};

pub fn is_alternating(code: &GaussCode) -> bool {
    code.is_alternating()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AlternationStatus {
    Alternating,
    AlmostAlternating,
    Neither,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DealternatorReport {
    pub status: AlternationStatus,
    /// 0-based crossing ids whose change makes the diagram alternating.
    pub dealternators: Vec<usize>,
}

/// Classifies a knot diagram by brute-force single crossing changes.
pub fn dealternators(map: &CombinatorialMap) -> Result<DealternatorReport> {
    let code = gauss_code(map)?;
    if code.is_alternating() {
        return Ok(DealternatorReport { status: AlternationStatus::Alternating, dealternators: vec![] });
    }
    let found: Vec<usize> =
        (0..map.crossing_count()).filter(|&c| code.flipped(c + 1).is_alternating()).collect();
    let status = if found.is_empty() { AlternationStatus::Neither } else { AlternationStatus::AlmostAlternating };
    Ok(DealternatorReport { status, dealternators: found })
}

/// A crossing met twice by one face; removable by a twist.
pub fn is_nugatory(map: &CombinatorialMap, c: usize) -> Result<bool> {
    if c >= map.crossing_count() {
        return Err(Error::UnknownCrossing(c));
    }
    let fs = faces(map);
    let corners: Vec<usize> = (4 * c..4 * c + 4).map(|d| fs.corner_face(map, d)).collect();
    Ok((0..4).any(|i| (i + 1..4).any(|j| corners[i] == corners[j])))
}

/// The coloring of an alternating map in which every crossing is type b.
pub fn type_b_coloring(map: &CombinatorialMap) -> Result<CheckerboardColoring> {
    if !gauss_code(map)?.is_alternating() {
        return Err(Error::NotAlternating);
    }
    let col = checkerboard_coloring(map).ok_or(Error::NotColorable)?;
    for cand in [col.swapped(), col] {
        if classify_crossings(map, &cand, false)?.counts.a == 0 {
            return Ok(cand);
        }
    }
    Err(Error::NoTypeBColoring)
}

/// Lifts a planar almost alternating diagram to a cellular alternating
/// diagram on the torus by changing the dealternator `c` (0-based) on a handle.
///
/// Two realizations are tried: keeping the rotation at `c` (an ordinary
/// crossing change) and reversing it, which threads the two strands through
/// a handle. The first one meeting every postcondition is returned.
pub fn lift_to_torus(map: &CombinatorialMap, c: usize) -> Result<CombinatorialMap> {
    let g = genus(map)?;
    if g != 0 {
        return Err(Error::NotPlanar(g));
    }
    if !map.is_oriented() {
        return Err(Error::Unoriented);
    }
    let report = dealternators(map)?;
    if c >= map.crossing_count() {
        return Err(Error::UnknownCrossing(c));
    }
    if report.status != AlternationStatus::AlmostAlternating || !report.dealternators.contains(&c) {
        return Err(Error::NotDealternator(c));
    }
    if is_nugatory(map, c)? {
        return Err(Error::NugatoryDealternator(c));
    }
    let target = gauss_code(map)?.flipped(c + 1);
    let preserved = map.flip_crossing(c)?;
    let reversed = map.reverse_rotation(c).flip_crossing(c)?;
    for cand in [preserved, reversed] {
        if lift_postconditions(&cand, &target)? {
            return Ok(cand);
        }
    }
    Err(Error::LiftFailed)
}

fn lift_postconditions(cand: &CombinatorialMap, target: &GaussCode) -> Result<bool> {
    if genus(cand)? != 1 {
        return Ok(false);
    }
    let code = gauss_code(cand)?;
    if !code.is_alternating() || !code.cyclic_eq(target) {
        return Ok(false);
    }
    Ok(checkerboard_coloring(cand).is_some())
}
