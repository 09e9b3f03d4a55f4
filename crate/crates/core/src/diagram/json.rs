use serde::{Deserialize, Serialize};

use super::{CombinatorialMap, Dart};
use crate::error::{Error, Result};

pub const FORMAT: &str = "knotsurf-map";
pub const VERSION: u32 = 1;

/// Versioned JSON form of a map. Rotations may be arbitrary on input; they are
/// relabelled into the canonical 4k..4k+3 layout when converted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MapDocument {
    pub format: String,
    pub version: u32,
    pub darts: usize,
    pub vertex_rotation: Vec<Dart>,
    pub edge_involution: Vec<Dart>,
    pub over_pair: Vec<[Dart; 2]>,
    pub orientation: Option<Vec<Dart>>,
}

impl From<&CombinatorialMap> for MapDocument {
    fn from(m: &CombinatorialMap) -> Self {
        MapDocument {
            format: FORMAT.into(),
            version: VERSION,
            darts: m.dart_count(),
            vertex_rotation: m.darts().map(|d| m.sigma(d)).collect(),
            edge_involution: m.edge_involution().to_vec(),
            over_pair: (0..m.crossing_count()).map(|c| m.over_pair(c).into()).collect(),
            orientation: m.orientation().map(|inc| m.darts().filter(|&d| inc[d]).collect()),
        }
    }
}

impl TryFrom<&MapDocument> for CombinatorialMap {
    type Error = Error;

    fn try_from(doc: &MapDocument) -> Result<Self> {
        if doc.format != FORMAT || doc.version != VERSION {
            return Err(Error::Json(format!("unsupported document {} v{}", doc.format, doc.version)));
        }
        let n = doc.darts;
        if doc.vertex_rotation.len() != n || doc.edge_involution.len() != n {
            return Err(Error::InvalidMap("permutation lengths differ from dart count".into()));
        }
        let sigma = &doc.vertex_rotation;
        if sigma.iter().any(|&x| x >= n) {
            return Err(Error::InvalidMap("rotation entry out of range".into()));
        }

        // Relabel each rotation orbit, starting from its lowest dart.
        let mut relabel = vec![usize::MAX; n];
        let mut next = 0;
        for d in 0..n {
            if relabel[d] != usize::MAX {
                continue;
            }
            let mut x = d;
            for i in 0..4 {
                if relabel[x] != usize::MAX {
                    return Err(Error::InvalidMap(format!("rotation orbit of dart {d} has length {i}")));
                }
                relabel[x] = next + i;
                x = sigma[x];
            }
            if x != d {
                return Err(Error::InvalidMap(format!("rotation orbit of dart {d} is longer than 4")));
            }
            next += 4;
        }

        let mut alpha = vec![0; n];
        for d in 0..n {
            let e = doc.edge_involution[d];
            if e >= n {
                return Err(Error::InvalidMap("involution entry out of range".into()));
            }
            alpha[relabel[d]] = relabel[e];
        }

        let c = n / 4;
        let mut over_odd = vec![None; c];
        for &[p, q] in &doc.over_pair {
            if p >= n || q >= n {
                return Err(Error::InvalidMap("over pair entry out of range".into()));
            }
            let (p, q) = (relabel[p], relabel[q]);
            if p / 4 != q / 4 || (p + 2) % 4 != q % 4 {
                return Err(Error::InvalidMap(format!("over pair ({p}, {q}) is not an opposite pair")));
            }
            if over_odd[p / 4].replace(p % 2 == 1).is_some() {
                return Err(Error::InvalidMap(format!("crossing {} has two over pairs", p / 4)));
            }
        }
        let over_odd = over_odd
            .into_iter()
            .enumerate()
            .map(|(k, o)| o.ok_or_else(|| Error::InvalidMap(format!("crossing {k} lacks an over pair"))))
            .collect::<Result<Vec<_>>>()?;

        let incoming = match &doc.orientation {
            None => None,
            Some(list) => {
                let mut inc = vec![false; n];
                for &d in list {
                    if d >= n {
                        return Err(Error::InvalidMap("orientation entry out of range".into()));
                    }
                    inc[relabel[d]] = true;
                }
                Some(inc)
            }
        };
        CombinatorialMap::new(alpha, over_odd, incoming)
    }
}

impl CombinatorialMap {
    pub fn to_json(&self) -> String {
        serde_json::to_string(&MapDocument::from(self)).expect("map documents serialize")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: MapDocument = serde_json::from_str(text).map_err(|e| Error::Json(e.to_string()))?;
        CombinatorialMap::try_from(&doc)
    }
}
