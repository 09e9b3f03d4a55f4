//! Reading a braid word off a diagram in braid form, and the Seifert matrix
//! of a closed braid from its canonical surface.

use std::cmp::Reverse;
use std::collections::{BTreeSet, BinaryHeap};

use super::vogel::{smoothing_next, Circles};
use crate::diagram::{crossing_sign, faces, CombinatorialMap, Convention, Dart};
use crate::error::{Error, Result};

/// Letters `(level, sign)` with levels counted from 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BraidWord {
    pub strands: usize,
    pub letters: Vec<(usize, i64)>,
}

impl BraidWord {
    /// Signed generator indices: `+k` for a positive crossing at level `k`.
    pub fn signed(&self) -> Vec<i64> {
        self.letters.iter().map(|&(k, s)| s * k as i64).collect()
    }
}

pub(crate) fn read_braid(map: &CombinatorialMap, circles: &Circles) -> Result<BraidWord> {
    let inc = map.orientation().expect("oracle maps are oriented");
    let n = circles.count;
    let c = map.crossing_count();

    // Circles joined at each crossing, through its two incoming darts.
    let mut joins = Vec::with_capacity(c);
    let mut adj = vec![BTreeSet::new(); n];
    for x in 0..c {
        let (i, j) = map.incoming_pair(x)?;
        let (p, q) = (circles.circle_of[i], circles.circle_of[j]);
        if p == q {
            return Err(Error::Braiding(format!("crossing {x} joins a circle to itself")));
        }
        adj[p].insert(q);
        adj[q].insert(p);
        joins.push((p, q));
    }
    if adj.iter().any(|a| a.len() > 2) {
        return Err(Error::Braiding("Seifert circles are not a chain".into()));
    }
    let first = (0..n)
        .find(|&k| adj[k].len() <= 1)
        .ok_or_else(|| Error::Braiding("Seifert circles form a cycle".into()))?;
    let mut order = vec![first];
    while order.len() < n {
        let last = *order.last().expect("nonempty");
        let next = adj[last]
            .iter()
            .copied()
            .find(|x| !order.contains(x))
            .ok_or_else(|| Error::Braiding("Seifert circle graph is disconnected".into()))?;
        order.push(next);
    }
    let mut level = vec![0; n];
    for (k, &circle) in order.iter().enumerate() {
        level[circle] = k + 1;
    }

    // A ray from a face bounded by the first circle alone, crossing each
    // circle once in level order; each circle is read from the ray onward.
    let fs = faces(map);
    let mut face = (0..fs.len())
        .find(|&f| fs.faces[f].iter().all(|&d| circles.circle_of[d] == first))
        .ok_or_else(|| Error::Braiding("no face bounded by the first circle".into()))?;
    let mut edges = BTreeSet::new();
    for &circle in &order {
        let d = *fs.faces[face]
            .iter()
            .find(|&&d| circles.circle_of[d] == circle)
            .ok_or_else(|| Error::Braiding("ray cannot reach the next circle".into()))?;
        face = fs.face_of[map.alpha(d)];
        let tail: Dart = if inc[d] { map.alpha(d) } else { d };
        let mut t = tail;
        let mut seq = Vec::new();
        loop {
            let h = map.alpha(t);
            seq.push(map.crossing(h));
            t = smoothing_next(map, inc, h);
            if t == tail {
                break;
            }
        }
        for w in seq.windows(2) {
            edges.insert((w[0], w[1]));
        }
    }

    let mut indeg = vec![0usize; c];
    let mut succ = vec![Vec::new(); c];
    for &(a, b) in &edges {
        succ[a].push(b);
        indeg[b] += 1;
    }
    let mut heap: BinaryHeap<Reverse<usize>> = (0..c).filter(|&x| indeg[x] == 0).map(Reverse).collect();
    let mut letters = Vec::with_capacity(c);
    let geometric = Convention::GEOMETRIC;
    while let Some(Reverse(x)) = heap.pop() {
        let (p, q) = joins[x];
        letters.push((level[p].min(level[q]), crossing_sign(map, x, geometric)?));
        for &y in &succ[x] {
            indeg[y] -= 1;
            if indeg[y] == 0 {
                heap.push(Reverse(y));
            }
        }
    }
    if letters.len() != c {
        return Err(Error::Braiding("crossing orders along circles are inconsistent".into()));
    }
    Ok(BraidWord { strands: n, letters })
}

/// Seifert matrix of the closure of a braid word, from the surface made of
/// one disk per strand and one band per letter. Generators are consecutive
/// bands at the same level.
pub(crate) fn closed_braid_seifert(word: &BraidWord) -> Vec<Vec<i64>> {
    // Per level: positions and signs of its letters.
    let mut bands: Vec<Vec<(usize, i64)>> = vec![Vec::new(); word.strands];
    for (pos, &(k, s)) in word.letters.iter().enumerate() {
        bands[k].push((pos, s));
    }
    // Generator = (level, start position, end position, start sign, end sign).
    let mut gens = Vec::new();
    for k in 1..word.strands {
        for w in bands[k].windows(2) {
            gens.push((k, w[0].0, w[1].0, w[0].1, w[1].1));
        }
    }
    let m = gens.len();
    let mut v = vec![vec![0i64; m]; m];
    for (i, &(k, a, b, sa, sb)) in gens.iter().enumerate() {
        if sa == sb {
            v[i][i] = -sa;
        }
        if i + 1 < m && gens[i + 1].0 == k {
            if sb > 0 {
                v[i + 1][i] = 1;
            } else {
                v[i][i + 1] = -1;
            }
        }
        for (j, &(l, c, d, _, _)) in gens.iter().enumerate() {
            if l != k + 1 {
                continue;
            }
            if c < a && a < d && d < b {
                v[j][i] = 1;
            } else if a < c && c < b && b < d {
                v[j][i] = -1;
            }
        }
    }
    v
}
