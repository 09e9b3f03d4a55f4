//! Knot diagrams on closed oriented surfaces as 4-valent combinatorial maps.
//!
//! Crossing `k` owns darts `4k..4k+4` listed counterclockwise, so the vertex
//! rotation is implicit: `sigma(d) = 4(d/4) + (d+1) % 4`. Arbitrary rotation
//! systems are relabelled into this layout on load.

mod classify;
mod coloring;
mod faces;
mod gauss;
mod json;
mod pd;

pub use classify::{
    classify_crossings, classify_with, crossing_sign, writhe, writhe_with, AbType, ClassCounts,
    Classification, Convention, CrossingClass, Roman,
};
pub use coloring::{checkerboard_coloring, CheckerboardColoring, Color};
pub use faces::{faces, genus, FaceSet};
pub use gauss::{gauss_code, GaussCode, Pass};
pub use json::MapDocument;
pub use pd::parse_pd;

use crate::error::{Error, Result};

/// Index of a half-edge end at a crossing.
pub type Dart = usize;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CombinatorialMap {
    alpha: Vec<Dart>,
    over_odd: Vec<bool>,
    incoming: Option<Vec<bool>>,
}

impl CombinatorialMap {
    /// Builds a map from the edge involution, the per-crossing over pair
    /// (`true` = darts 1,3 carry the over strand) and optional incoming flags.
    pub fn new(alpha: Vec<Dart>, over_odd: Vec<bool>, incoming: Option<Vec<bool>>) -> Result<Self> {
        let n = alpha.len();
        if n == 0 {
            return Err(Error::EmptyDiagram);
        }
        if n % 4 != 0 {
            return Err(Error::InvalidMap(format!("{n} darts is not a multiple of 4")));
        }
        if over_odd.len() != n / 4 {
            return Err(Error::InvalidMap("over pair count differs from crossing count".into()));
        }
        for (d, &e) in alpha.iter().enumerate() {
            if e >= n || e == d || alpha[e] != d {
                return Err(Error::InvalidMap(format!("edge involution broken at dart {d}")));
            }
        }
        let map = CombinatorialMap { alpha, over_odd, incoming: None };
        if !map.is_connected() {
            return Err(Error::Disconnected);
        }
        map.with_incoming(incoming)
    }

    fn with_incoming(mut self, incoming: Option<Vec<bool>>) -> Result<Self> {
        if let Some(inc) = &incoming {
            if inc.len() != self.alpha.len() {
                return Err(Error::InvalidMap("orientation length differs from dart count".into()));
            }
            for d in self.darts() {
                if inc[d] == inc[self.opposite(d)] || inc[d] == inc[self.alpha[d]] {
                    return Err(Error::Orientation(self.crossing(d)));
                }
            }
        }
        self.incoming = incoming;
        Ok(self)
    }

    pub fn crossing_count(&self) -> usize {
        self.over_odd.len()
    }

    pub fn dart_count(&self) -> usize {
        self.alpha.len()
    }

    pub fn darts(&self) -> std::ops::Range<Dart> {
        0..self.alpha.len()
    }

    pub fn alpha(&self, d: Dart) -> Dart {
        self.alpha[d]
    }

    pub fn sigma(&self, d: Dart) -> Dart {
        4 * (d / 4) + (d + 1) % 4
    }

    pub fn sigma_inv(&self, d: Dart) -> Dart {
        4 * (d / 4) + (d + 3) % 4
    }

    pub fn opposite(&self, d: Dart) -> Dart {
        4 * (d / 4) + (d + 2) % 4
    }

    /// Face-walk permutation.
    pub fn phi(&self, d: Dart) -> Dart {
        self.sigma(self.alpha[d])
    }

    pub fn crossing(&self, d: Dart) -> usize {
        d / 4
    }

    pub fn edge_involution(&self) -> &[Dart] {
        &self.alpha
    }

    pub fn over_odd(&self, c: usize) -> bool {
        self.over_odd[c]
    }

    /// The opposite dart pair carrying the over strand at crossing `c`.
    pub fn over_pair(&self, c: usize) -> (Dart, Dart) {
        let p = 4 * c + usize::from(self.over_odd[c]);
        (p, p + 2)
    }

    pub fn is_over(&self, d: Dart) -> bool {
        (d % 2 == 1) == self.over_odd[d / 4]
    }

    pub fn is_oriented(&self) -> bool {
        self.incoming.is_some()
    }

    pub fn orientation(&self) -> Option<&[bool]> {
        self.incoming.as_deref()
    }

    pub fn is_incoming(&self, d: Dart) -> Result<bool> {
        self.incoming.as_ref().map(|v| v[d]).ok_or(Error::Unoriented)
    }

    /// The two incoming darts `(i, sigma(i))` at crossing `c`.
    pub fn incoming_pair(&self, c: usize) -> Result<(Dart, Dart)> {
        let inc = self.incoming.as_ref().ok_or(Error::Unoriented)?;
        let i = (0..4)
            .map(|k| 4 * c + k)
            .find(|&d| inc[d] && inc[self.sigma(d)])
            .expect("valid orientation has adjacent incoming darts");
        Ok((i, self.sigma(i)))
    }

    pub fn is_connected(&self) -> bool {
        let c = self.crossing_count();
        let mut seen = vec![false; c];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(x) = stack.pop() {
            for k in 0..4 {
                let y = self.alpha[4 * x + k] / 4;
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Number of link components of the straight-through traversal.
    pub fn component_count(&self) -> usize {
        let mut seen = vec![false; self.dart_count()];
        let mut count = 0;
        for d in self.darts() {
            if seen[d] {
                continue;
            }
            count += 1;
            let mut x = d;
            while !seen[x] {
                seen[x] = true;
                seen[self.opposite(x)] = true;
                x = self.alpha[self.opposite(x)];
            }
        }
        count
    }

    pub fn ensure_knot(&self) -> Result<()> {
        match self.component_count() {
            1 => Ok(()),
            k => Err(Error::MultiComponent(k)),
        }
    }

    /// Orients the knot so that dart `start` is incoming.
    pub fn oriented_from(&self, start: Dart) -> Result<Self> {
        self.ensure_knot()?;
        let mut inc = vec![false; self.dart_count()];
        let mut d = start;
        loop {
            inc[d] = true;
            d = self.alpha[self.opposite(d)];
            if d == start {
                break;
            }
        }
        self.clone().with_incoming(Some(inc))
    }

    pub fn without_orientation(&self) -> Self {
        CombinatorialMap { incoming: None, ..self.clone() }
    }

    pub fn reversed(&self) -> Self {
        let incoming = self.incoming.as_ref().map(|v| v.iter().map(|b| !b).collect());
        CombinatorialMap { incoming, ..self.clone() }
    }

    /// Crossing change at `c` (0-based).
    pub fn flip_crossing(&self, c: usize) -> Result<Self> {
        if c >= self.crossing_count() {
            return Err(Error::UnknownCrossing(c));
        }
        let mut out = self.clone();
        out.over_odd[c] = !out.over_odd[c];
        Ok(out)
    }

    /// Mirror image: every crossing changed.
    pub fn mirror(&self) -> Self {
        let mut out = self.clone();
        for b in &mut out.over_odd {
            *b = !*b;
        }
        out
    }

    /// Reverses the rotation at crossing `c` by exchanging the slots of darts
    /// `4c+1` and `4c+3`. Strands and over/under are kept.
    pub(crate) fn reverse_rotation(&self, c: usize) -> Self {
        let (p, q) = (4 * c + 1, 4 * c + 3);
        let swap = |d: Dart| if d == p { q } else if d == q { p } else { d };
        let mut alpha = vec![0; self.dart_count()];
        for d in self.darts() {
            alpha[swap(d)] = swap(self.alpha[d]);
        }
        let incoming = self.incoming.as_ref().map(|v| {
            let mut w = v.clone();
            w.swap(p, q);
            w
        });
        CombinatorialMap { alpha, over_odd: self.over_odd.clone(), incoming }
    }

    /// Incoming darts along the knot from the basepoint: the lowest incoming
    /// dart, or dart 0 read as incoming for unoriented maps.
    pub fn traversal(&self) -> Result<Vec<Dart>> {
        self.ensure_knot()?;
        let start = match &self.incoming {
            Some(inc) => self.darts().find(|&d| inc[d]).expect("oriented map has incoming darts"),
            None => 0,
        };
        let mut out = Vec::with_capacity(2 * self.crossing_count());
        let mut d = start;
        loop {
            out.push(d);
            d = self.alpha[self.opposite(d)];
            if d == start {
                break;
            }
        }
        Ok(out)
    }

    pub(crate) fn from_raw(alpha: Vec<Dart>, over_odd: Vec<bool>, incoming: Option<Vec<bool>>) -> Self {
        CombinatorialMap { alpha, over_odd, incoming }
    }
}
