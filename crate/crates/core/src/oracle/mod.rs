//! Independent oracle for the knot signature and determinant: the diagram
//! is braided by Vogel's moves and the Seifert matrix of the closed braid is
//! read off its canonical Seifert surface. Nothing here uses checkerboard
//! colorings or Goeritz forms.

mod braid;
mod vogel;

pub use braid::BraidWord;

use num_traits::{Signed, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::diagram::{genus, CombinatorialMap};
use crate::error::{Error, Result};
use crate::form::{determinant, symmetrized};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeifertMatrix {
    pub entries: Vec<Vec<i64>>,
    /// Seifert circles of the braided diagram.
    pub circles: usize,
    /// Genus of the Seifert surface.
    pub genus: usize,
    /// Braid word read from the diagram, as signed generator indices.
    pub braid: Vec<i64>,
}

impl SeifertMatrix {
    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn signature(&self) -> i64 {
        symmetrized(&self.entries).signature()
    }

    pub fn determinant(&self) -> u64 {
        symmetrized(&self.entries)
            .determinant()
            .abs()
            .to_u64()
            .expect("knot determinant fits in u64")
    }
}

/// Seifert matrix of an oriented planar knot diagram.
pub fn seifert_matrix(map: &CombinatorialMap) -> Result<SeifertMatrix> {
    let g = genus(map)?;
    if g != 0 {
        return Err(Error::NotPlanar(g));
    }
    map.ensure_knot()?;
    let map = if map.is_oriented() { map.clone() } else { map.oriented_from(0)? };
    let (braided, circles) = vogel::braid_form(&map)?;
    let word = braid::read_braid(&braided, &circles)?;
    let entries = braid::closed_braid_seifert(&word);
    Ok(SeifertMatrix {
        genus: entries.len() / 2,
        circles: word.strands,
        braid: word.signed(),
        entries,
    })
}

/// `sig(V + V^T)`.
pub fn signature_oracle(map: &CombinatorialMap) -> Result<i64> {
    Ok(seifert_matrix(map)?.signature())
}

/// `|det(V + V^T)|`.
pub fn determinant_oracle(map: &CombinatorialMap) -> Result<u64> {
    Ok(seifert_matrix(map)?.determinant())
}

/// `det(V - V^T)`, which is 1 for a Seifert matrix of a knot.
pub fn skew_determinant(v: &SeifertMatrix) -> i64 {
    let n = v.size();
    let skew: Vec<Vec<i64>> =
        (0..n).map(|i| (0..n).map(|j| v.entries[i][j] - v.entries[j][i]).collect()).collect();
    determinant(&skew).to_i64().expect("small determinant")
}
