//! Seeded random knot diagrams from closed braids.
//!
//! The generator is ChaCha8 (`rand_chacha` 0.3) seeded with
//! `seed_from_u64`; identical `(n, seed, kind)` give identical diagrams on
//! every platform.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::alternating::{dealternators, is_nugatory, AlternationStatus};
use crate::diagram::CombinatorialMap;
use crate::error::{Error, Result};

/// Identifies the sampling algorithm in serialized counterexamples.
pub const GENERATOR: &str = "chacha8-braid-v1";

const MAX_ATTEMPTS: usize = 10_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Kind {
    Alternating,
    AlmostAlternating,
    Random,
}

impl std::str::FromStr for Kind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "alternating" => Ok(Kind::Alternating),
            "almost_alternating" | "almost-alternating" => Ok(Kind::AlmostAlternating),
            "random" => Ok(Kind::Random),
            other => Err(Error::Input(format!("unknown diagram kind `{other}`"))),
        }
    }
}

/// Closure of a braid word on `strands` strands. Letter `+k`/`-k` is a
/// positive/negative crossing between strands `k` and `k+1` (1-based).
///
/// Each crossing has darts bottom-left, bottom-right, top-right, top-left
/// (counterclockwise); strands run upward, so the bottom darts are incoming.
pub fn braid_closure(word: &[i64], strands: usize) -> Result<CombinatorialMap> {
    if word.is_empty() {
        return Err(Error::EmptyDiagram);
    }
    let n = word.len();
    let mut alpha = vec![usize::MAX; 4 * n];
    let mut over_odd = vec![false; n];
    let mut top: Vec<Option<usize>> = vec![None; strands];
    let mut bottom: Vec<Option<usize>> = vec![None; strands];
    for (x, &g) in word.iter().enumerate() {
        let k = g.unsigned_abs() as usize;
        if g == 0 || k >= strands {
            return Err(Error::Syntax(format!("braid letter {g} out of range")));
        }
        for (pos, dart) in [(k - 1, 4 * x), (k, 4 * x + 1)] {
            match top[pos] {
                Some(t) => {
                    alpha[t] = dart;
                    alpha[dart] = t;
                }
                None => bottom[pos] = Some(dart),
            }
        }
        top[k - 1] = Some(4 * x + 3);
        top[k] = Some(4 * x + 2);
        // Positive: the strand from bottom-left to top-right is over.
        over_odd[x] = g < 0;
    }
    for pos in 0..strands {
        match (top[pos], bottom[pos]) {
            (Some(t), Some(b)) => {
                alpha[t] = b;
                alpha[b] = t;
            }
            _ => return Err(Error::Disconnected),
        }
    }
    let incoming = (0..4 * n).map(|d| d % 4 < 2).collect();
    let map = CombinatorialMap::new(alpha, over_odd, Some(incoming))?;
    map.ensure_knot()?;
    Ok(map)
}

fn random_shadow(n: usize, rng: &mut ChaCha8Rng) -> Result<CombinatorialMap> {
    // Strand counts s with s - 1 <= n and s - 1 = n (mod 2), biased small.
    let smallest = if n % 2 == 1 { 2 } else { 3 };
    let largest = (n / 2 + 2).max(smallest);
    for _ in 0..MAX_ATTEMPTS {
        let s = rng.gen_range(smallest..=largest);
        let s = if (s - 1) % 2 == n % 2 { s } else { s - 1 };
        if s < 2 || s - 1 > n {
            continue;
        }
        let word: Vec<i64> = (0..n)
            .map(|_| {
                let k = rng.gen_range(1..s) as i64;
                if rng.gen_bool(0.5) { k } else { -k }
            })
            .collect();
        if let Ok(m) = braid_closure(&word, s) {
            return Ok(m);
        }
    }
    Err(Error::Generation(MAX_ATTEMPTS))
}

/// Reassigns over/under so that passes alternate along the knot.
pub fn make_alternating(map: &CombinatorialMap) -> Result<CombinatorialMap> {
    let mut over_odd: Vec<Option<bool>> = vec![None; map.crossing_count()];
    for (i, d) in map.traversal()?.into_iter().enumerate() {
        let odd = (d % 2 == 1) == (i % 2 == 0);
        let c = map.crossing(d);
        match over_odd[c] {
            None => over_odd[c] = Some(odd),
            Some(o) => assert_eq!(o, odd, "planar shadows admit an alternating assignment"),
        }
    }
    let over_odd = over_odd.into_iter().map(|o| o.expect("every crossing visited")).collect();
    Ok(CombinatorialMap::from_raw(
        map.edge_involution().to_vec(),
        over_odd,
        map.orientation().map(<[bool]>::to_vec),
    ))
}

/// A random planar knot diagram with `n` crossings.
pub fn generate(n: usize, seed: u64, kind: Kind) -> Result<CombinatorialMap> {
    if n == 0 {
        return Err(Error::EmptyDiagram);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    match kind {
        Kind::Random => random_shadow(n, &mut rng),
        Kind::Alternating => make_alternating(&random_shadow(n, &mut rng)?),
        Kind::AlmostAlternating => {
            for _ in 0..MAX_ATTEMPTS {
                let alt = make_alternating(&random_shadow(n, &mut rng)?)?;
                let c = rng.gen_range(0..n);
                let cand = alt.flip_crossing(c)?;
                let report = dealternators(&cand)?;
                if report.status == AlternationStatus::AlmostAlternating && !is_nugatory(&cand, c)? {
                    return Ok(cand);
                }
            }
            Err(Error::Generation(MAX_ATTEMPTS))
        }
    }
}
