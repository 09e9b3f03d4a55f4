use std::fmt;
use std::str::FromStr;

use super::CombinatorialMap;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Pass {
    Over,
    Under,
}

impl Pass {
    pub fn flipped(self) -> Pass {
        match self {
            Pass::Over => Pass::Under,
            Pass::Under => Pass::Over,
        }
    }
}

/// Cyclic over/under sequence along a knot; crossing ids are 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GaussCode {
    pub sequence: Vec<(usize, Pass)>,
}

impl GaussCode {
    pub fn len(&self) -> usize {
        self.sequence.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sequence.is_empty()
    }

    /// Over and under strictly alternate around the cycle.
    pub fn is_alternating(&self) -> bool {
        let n = self.sequence.len();
        (0..n).all(|i| self.sequence[i].1 != self.sequence[(i + 1) % n].1)
    }

    /// Swaps the passes of crossing `id` (1-based).
    pub fn flipped(&self, id: usize) -> GaussCode {
        let sequence = self
            .sequence
            .iter()
            .map(|&(c, p)| if c == id { (c, p.flipped()) } else { (c, p) })
            .collect();
        GaussCode { sequence }
    }

    /// Equality up to cyclic rotation.
    pub fn cyclic_eq(&self, other: &GaussCode) -> bool {
        let n = self.sequence.len();
        if n != other.sequence.len() {
            return false;
        }
        n == 0 || (0..n).any(|r| (0..n).all(|i| self.sequence[(i + r) % n] == other.sequence[i]))
    }

    /// Checks that every crossing appears exactly once over and once under.
    pub fn is_valid(&self) -> bool {
        let c = self.sequence.len() / 2;
        let mut seen = vec![(0, 0); c + 1];
        for &(id, p) in &self.sequence {
            if id == 0 || id > c {
                return false;
            }
            match p {
                Pass::Over => seen[id].0 += 1,
                Pass::Under => seen[id].1 += 1,
            }
        }
        self.sequence.len() % 2 == 0 && seen[1..].iter().all(|&s| s == (1, 1))
    }
}

impl fmt::Display for GaussCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &(c, p) in &self.sequence {
            let tag = if p == Pass::Over { 'o' } else { 'u' };
            write!(f, "{tag}{c}")?;
        }
        Ok(())
    }
}

impl FromStr for GaussCode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut sequence = Vec::new();
        let mut chars = s.trim().chars().peekable();
        while let Some(ch) = chars.next() {
            let pass = match ch {
                'o' | 'O' => Pass::Over,
                'u' | 'U' => Pass::Under,
                _ => return Err(Error::Syntax(format!("unexpected `{ch}` in Gauss code"))),
            };
            let mut digits = String::new();
            while let Some(d) = chars.next_if(char::is_ascii_digit) {
                digits.push(d);
            }
            let id = digits.parse().map_err(|_| Error::Syntax("missing crossing id".into()))?;
            sequence.push((id, pass));
        }
        let code = GaussCode { sequence };
        if !code.is_valid() {
            return Err(Error::Syntax("each crossing must appear once over and once under".into()));
        }
        Ok(code)
    }
}

/// Gauss code of a knot map read from its basepoint.
pub fn gauss_code(map: &CombinatorialMap) -> Result<GaussCode> {
    let sequence = map
        .traversal()?
        .into_iter()
        .map(|d| (map.crossing(d) + 1, if map.is_over(d) { Pass::Over } else { Pass::Under }))
        .collect();
    Ok(GaussCode { sequence })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::parse_pd;

    #[test]
    fn trefoil_code() {
        let m = parse_pd("X(1,4,2,5),X(3,6,4,1),X(5,2,6,3)").unwrap();
        let g = gauss_code(&m).unwrap();
        assert_eq!(g.to_string(), "u1o3u2o1u3o2");
        assert!(g.is_alternating());
    }

    #[test]
    fn kink_code() {
        let m = parse_pd("X(1,1,2,2)").unwrap();
        assert_eq!(gauss_code(&m).unwrap().to_string(), "u1o1");
    }

    #[test]
    fn flipped_trefoil_code() {
        let m = parse_pd("X(1,4,2,5),X(3,6,4,1),X(5,2,6,3)").unwrap().flip_crossing(2).unwrap();
        let g = gauss_code(&m).unwrap();
        assert_eq!(g.to_string(), "u1u3u2o1o3o2");
        assert!(!g.is_alternating());
    }

    #[test]
    fn parse_and_print_round_trip() {
        let g: GaussCode = "o1u2o3u1o2u3".parse().unwrap();
        assert_eq!(g.to_string(), "o1u2o3u1o2u3");
        assert!(g.is_alternating());
        assert!(!"o1u2u3u1o2o3".parse::<GaussCode>().unwrap().is_alternating());
        assert!("o1o1".parse::<GaussCode>().is_err());
        assert!("x1".parse::<GaussCode>().is_err());
    }

    #[test]
    fn cyclic_equality() {
        let a: GaussCode = "o1u2o3u1o2u3".parse().unwrap();
        let b: GaussCode = "u1o2u3o1u2o3".parse().unwrap();
        assert!(a.cyclic_eq(&b));
        assert!(!a.cyclic_eq(&a.flipped(1)));
    }
}
