//! Seifert circles and Vogel's moves, which isotope an oriented planar
//! diagram into a closed braid by Reidemeister II moves across defect faces.

use crate::diagram::{faces, genus, CombinatorialMap, Dart};
use crate::error::{Error, Result};

/// Seifert circles: each edge is named by its tail (outgoing) dart.
pub(crate) struct Circles {
    /// Circle index of every dart's edge.
    pub circle_of: Vec<usize>,
    pub count: usize,
}

/// Outgoing dart reached from the incoming dart `h` by the oriented smoothing.
pub(crate) fn smoothing_next(map: &CombinatorialMap, inc: &[bool], h: Dart) -> Dart {
    let a = map.sigma(h);
    if inc[a] {
        map.sigma_inv(h)
    } else {
        a
    }
}

pub(crate) fn seifert_circles(map: &CombinatorialMap) -> Circles {
    let inc = map.orientation().expect("oracle maps are oriented");
    let mut circle_of = vec![usize::MAX; map.dart_count()];
    let mut count = 0;
    for t in map.darts() {
        if inc[t] || circle_of[t] != usize::MAX {
            continue;
        }
        let mut x = t;
        while circle_of[x] == usize::MAX {
            let h = map.alpha(x);
            circle_of[x] = count;
            circle_of[h] = count;
            x = smoothing_next(map, inc, h);
        }
        count += 1;
    }
    Circles { circle_of, count }
}

/// A face containing two edges of different Seifert circles that both have
/// the face on the same side. Returns the two tails and whether the face is
/// on their right.
fn find_defect(map: &CombinatorialMap, circles: &Circles) -> Option<(Dart, Dart, bool)> {
    let inc = map.orientation().expect("oracle maps are oriented");
    for face in faces(map).faces {
        for right in [true, false] {
            // A dart in the face walk is the tail of an edge with the face on
            // its right, or the head of an edge with the face on its left.
            let tails: Vec<Dart> = face
                .iter()
                .filter(|&&d| inc[d] != right)
                .map(|&d| if right { d } else { map.alpha(d) })
                .collect();
            if let Some(&t1) = tails.first() {
                if let Some(&t2) = tails.iter().find(|&&t| circles.circle_of[t] != circles.circle_of[t1]) {
                    return Some((t1, t2, right));
                }
            }
        }
    }
    None
}

// Compass slots of a new crossing, counterclockwise.
const E: usize = 0;
const N: usize = 1;
const W: usize = 2;
const S: usize = 3;

/// Pushes edge `t1 -> h1` over edge `t2 -> h2` inside their common face,
/// creating two crossings.
fn reidemeister_two(map: &CombinatorialMap, t1: Dart, t2: Dart, right: bool) -> CombinatorialMap {
    let (h1, h2) = (map.alpha(t1), map.alpha(t2));
    let mut alpha = map.edge_involution().to_vec();
    let mut inc = map.orientation().expect("oracle maps are oriented").to_vec();
    let mut over_odd: Vec<bool> = (0..map.crossing_count()).map(|c| map.over_odd(c)).collect();
    let (l, u) = (map.dart_count(), map.dart_count() + 4);
    alpha.extend([0; 8]);
    inc.extend([false; 8]);
    over_odd.extend([false, false]);

    let mut join = |x: Dart, y: Dart| {
        alpha[x] = y;
        alpha[y] = x;
    };
    // The face lies east of the northbound e1 (right case) or west of it.
    let (into_l, out_l, into_u, out_u) = if right { (W, E, E, W) } else { (E, W, W, E) };
    join(t1, l + into_l);
    join(l + out_l, u + into_u);
    join(u + out_u, h1);
    join(t2, u + N);
    join(u + S, l + N);
    join(l + S, h2);
    for d in [l + into_l, l + N, u + into_u, u + N] {
        inc[d] = true;
    }
    CombinatorialMap::from_raw(alpha, over_odd, Some(inc))
}

/// Applies defect moves until the Seifert circles are coherently nested.
pub(crate) fn braid_form(map: &CombinatorialMap) -> Result<(CombinatorialMap, Circles)> {
    let mut m = map.clone();
    let cap = 4 * map.crossing_count() * map.crossing_count() + 16;
    for _ in 0..cap {
        let circles = seifert_circles(&m);
        match find_defect(&m, &circles) {
            None => return Ok((m, circles)),
            Some((t1, t2, right)) => {
                m = reidemeister_two(&m, t1, t2, right);
                if genus(&m)? != 0 || m.component_count() != 1 {
                    return Err(Error::Braiding("move broke planarity".into()));
                }
            }
        }
    }
    Err(Error::Braiding(format!("no braid form after {cap} moves")))
}
