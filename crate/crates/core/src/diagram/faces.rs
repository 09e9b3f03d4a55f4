use super::{CombinatorialMap, Dart};
use crate::error::{Error, Result};

/// Boundary walks of a map. The walk through dart `d` has the oriented edge
/// `d -> alpha(d)` on its left-hand boundary, i.e. the face lies to the right
/// of that edge; the corner `d -> sigma(d)` lies in the face of `sigma(d)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceSet {
    pub faces: Vec<Vec<Dart>>,
    pub face_of: Vec<usize>,
}

impl FaceSet {
    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    /// Faces on the two sides of the edge through `d`: right and left of `d -> alpha(d)`.
    pub fn edge_faces(&self, map: &CombinatorialMap, d: Dart) -> (usize, usize) {
        (self.face_of[d], self.face_of[map.alpha(d)])
    }

    /// Face containing the corner swept counterclockwise from `d` to `sigma(d)`.
    pub fn corner_face(&self, map: &CombinatorialMap, d: Dart) -> usize {
        self.face_of[map.sigma(d)]
    }

    /// Adjacency table: one entry per edge, keyed by its lower dart.
    pub fn adjacency(&self, map: &CombinatorialMap) -> Vec<(Dart, usize, usize)> {
        map.darts()
            .filter(|&d| d < map.alpha(d))
            .map(|d| {
                let (r, l) = self.edge_faces(map, d);
                (d, r, l)
            })
            .collect()
    }
}

/// Orbits of the face-walk permutation, ordered by their lowest dart.
pub fn faces(map: &CombinatorialMap) -> FaceSet {
    let n = map.dart_count();
    let mut face_of = vec![usize::MAX; n];
    let mut faces = Vec::new();
    for d in 0..n {
        if face_of[d] != usize::MAX {
            continue;
        }
        let id = faces.len();
        let mut walk = Vec::new();
        let mut x = d;
        while face_of[x] == usize::MAX {
            face_of[x] = id;
            walk.push(x);
            x = map.phi(x);
        }
        faces.push(walk);
    }
    FaceSet { faces, face_of }
}

/// Genus from `V - E + F = 2 - 2g` with `V = c`, `E = 2c`.
pub fn genus(map: &CombinatorialMap) -> Result<usize> {
    let chi = faces(map).len() as i64 - map.crossing_count() as i64;
    if chi > 2 || (2 - chi) % 2 != 0 {
        return Err(Error::InvalidMap(format!("Euler characteristic {chi} is not that of a closed orientable surface")));
    }
    Ok(((2 - chi) / 2) as usize)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::parse_pd;

    #[test]
    fn trefoil_has_five_faces() {
        let m = parse_pd("X(1,4,2,5),X(3,6,4,1),X(5,2,6,3)").unwrap();
        let f = faces(&m);
        assert_eq!(f.len(), 5);
        assert_eq!(genus(&m).unwrap(), 0);
        let mut sizes: Vec<_> = f.faces.iter().map(Vec::len).collect();
        sizes.sort();
        assert_eq!(sizes, vec![2, 2, 2, 3, 3]);
    }

    #[test]
    fn kink_has_three_faces() {
        let m = parse_pd("X(1,1,2,2)").unwrap();
        assert_eq!(faces(&m).len(), 3);
    }

    #[test]
    fn one_face_map_has_genus_one() {
        let m = CombinatorialMap::new(vec![2, 3, 0, 1], vec![false], None).unwrap();
        assert_eq!(faces(&m).len(), 1);
        assert_eq!(genus(&m).unwrap(), 1);
    }

    #[test]
    fn every_dart_in_one_face() {
        let m = parse_pd("X(8,5,1,6),X(4,1,5,2),X(2,8,3,7),X(6,4,7,3)").unwrap();
        let f = faces(&m);
        let mut all: Vec<_> = f.faces.concat();
        all.sort();
        assert_eq!(all, (0..16).collect::<Vec<_>>());
        assert_eq!(f.adjacency(&m).len(), 8);
    }
}
