use num_traits::{Signed, ToPrimitive};
use serde::{Deserialize, Serialize};

use super::{
    crosscap_bound, definiteness_of, gl_forms, knot_signature, surface_orientable, Definiteness,
    SurfacePairInvariants,
};
use crate::alternating::{dealternators, AlternationStatus};
use crate::diagram::{
    checkerboard_coloring, classify_crossings, gauss_code, genus, writhe, ClassCounts, Color,
    CombinatorialMap,
};
use crate::error::{Error, Result};
use crate::form::SymmetricIntegerForm;
use crate::oracle::seifert_matrix;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleSummary {
    pub signature: i64,
    pub determinant: u64,
    pub braid: Vec<i64>,
}

/// Everything computed for one diagram. Goeritz forms, the knot signature,
/// the determinant and the definiteness verdict are present only for planar
/// diagrams.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantReport {
    pub crossings: usize,
    pub genus: usize,
    pub gauss_code: String,
    pub writhe: i64,
    pub counts: ClassCounts,
    #[serde(flatten)]
    pub surfaces: SurfacePairInvariants,
    pub knot_signature: Option<i64>,
    pub determinant: Option<u64>,
    pub goeritz_b: Option<SymmetricIntegerForm>,
    pub goeritz_w: Option<SymmetricIntegerForm>,
    pub definiteness: Option<Definiteness>,
    pub crosscap_bound: usize,
    pub orientable_b: bool,
    pub orientable_w: bool,
    pub alternating: AlternationStatus,
    /// 1-based crossing ids.
    pub dealternators: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub oracle: Option<OracleSummary>,
}

impl InvariantReport {
    /// Report for a knot diagram with its default coloring (the face through
    /// dart 0 white). Unoriented maps are oriented from dart 0.
    pub fn compute(map: &CombinatorialMap, with_oracle: bool) -> Result<Self> {
        map.ensure_knot()?;
        let map = if map.is_oriented() { map.clone() } else { map.oriented_from(0)? };
        let map = &map;
        let coloring = checkerboard_coloring(map).ok_or(Error::NotColorable)?;
        let g = genus(map)?;
        let counts = classify_crossings(map, &coloring, true)?.counts;
        let surfaces = SurfacePairInvariants::compute(map, &coloring)?;

        let (knot_signature, determinant, goeritz_b, goeritz_w, definiteness) = if g == 0 {
            let (gb, gw) = gl_forms(map, &coloring)?;
            let det = gw.determinant().abs().to_u64().expect("determinant fits in u64");
            let verdict = definiteness_of(&gb, &gw);
            (Some(knot_signature(map, &coloring)?), Some(det), Some(gb), Some(gw), Some(verdict))
        } else {
            (None, None, None, None, None)
        };

        let alt = dealternators(map)?;
        let oracle = if with_oracle && g == 0 {
            let v = seifert_matrix(map)?;
            Some(OracleSummary { signature: v.signature(), determinant: v.determinant(), braid: v.braid })
        } else {
            None
        };

        Ok(InvariantReport {
            crossings: map.crossing_count(),
            genus: g,
            gauss_code: gauss_code(map)?.to_string(),
            writhe: writhe(map)?,
            counts,
            surfaces,
            knot_signature,
            determinant,
            goeritz_b,
            goeritz_w,
            definiteness,
            crosscap_bound: crosscap_bound(map, &coloring)?,
            orientable_b: surface_orientable(map, &coloring, Color::Black),
            orientable_w: surface_orientable(map, &coloring, Color::White),
            alternating: alt.status,
            dealternators: alt.dealternators.iter().map(|c| c + 1).collect(),
            oracle,
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("reports serialize")
    }
}
